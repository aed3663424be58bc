#pragma once

// End-to-end certification: universal checks, seeded witness search and a
// JSON certificate that can be re-verified independently.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weilcert/error.hpp"
#include "weilcert/exactnum.hpp"
#include "weilcert/linalg.hpp"
#include "weilcert/parser.hpp"
#include "weilcert/weil_model.hpp"

namespace weilcert {

inline constexpr const char* kToolVersion = "weilcert 0.1.0";

/// Deterministic source of coefficient triples.
///
/// Draws 64-bit words from std::mt19937_64 (whose output sequence is fixed
/// by the C++ standard) and maps them to [lo, hi] by rejection sampling:
/// words >= floor(2^64 / n) * n are discarded, the rest are reduced mod n.
/// Triples are filled in the order A1, A2, A3, B1, B2, B3, C1, C2, C3.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  long next_int(long lo, long hi) {
    const std::uint64_t n = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t word = 0;
    do {
      word = engine_();
    } while (word >= limit);
    return lo + static_cast<long>(word % n);
  }

  model::CoefficientTriple next_triple(long lo = -10, long hi = 10) {
    std::array<Rational, 9> v;
    for (auto& r : v) r = Rational(next_int(lo, hi));
    return model::CoefficientTriple::from_flat(v);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct Certificate {
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 0;
  std::vector<std::pair<std::string, Verdict>> identity_verdicts;
  Verdict group_relations = Verdict::Fail;
  std::array<std::size_t, 4> eigenspace_dims{};
  std::size_t eigenbasis_rank = 0;
  std::array<GaussianRational, 6> diagonal_factors{};  // 0 where not proportional
  model::FpfVerdict diagonal_base_points = model::FpfVerdict::Inconclusive;
  long long chow_coefficient = 0;
  long long genus = 0;
  GaussianRational detm_at_origin;
  std::size_t detm_term_count = 0;
  bool detm_nonzero = false;
  std::optional<model::CoefficientTriple> witness;
  std::optional<std::size_t> witness_attempt;  // 1-based index in the sampler sequence
  std::optional<GaussianRational> witness_detm_value;
  std::optional<std::size_t> quadric_kernel_dim_at_witness;
  std::optional<Vector> quadric_at_witness;
  std::optional<model::FpfVerdict> fixed_point_free;
  Verdict overall = Verdict::Fail;

  bool universal_checks_pass() const {
    for (const auto& [name, v] : identity_verdicts) {
      if (v != Verdict::Pass) return false;
    }
    static const std::array<GaussianRational, 6> kFactors = {2, 4, 2, 1, 1, 1};
    return identity_verdicts.size() == 17 && group_relations == Verdict::Pass &&
           eigenspace_dims == std::array<std::size_t, 4>{6, 4, 3, 3} && eigenbasis_rank == 16 &&
           diagonal_factors == kFactors && diagonal_base_points == model::FpfVerdict::CertifiedEmpty &&
           chow_coefficient == 24 && genus == 13 && detm_at_origin.is_one() && detm_nonzero;
  }

  bool witness_checks_pass() const {
    return witness && witness_detm_value && !witness_detm_value->is_zero() &&
           quadric_kernel_dim_at_witness == std::size_t{1} &&
           fixed_point_free == model::FpfVerdict::CertifiedEmpty;
  }

  Verdict derived_overall() const {
    return universal_checks_pass() && witness_checks_pass() ? Verdict::Pass : Verdict::Fail;
  }
};

struct WitnessCheck {
  GaussianRational detm_value;
  std::size_t kernel_dim = 0;
  std::optional<Vector> quadric;
  model::FpfVerdict fpf = model::FpfVerdict::Inconclusive;

  bool accepted() const {
    return !detm_value.is_zero() && kernel_dim == 1 && fpf == model::FpfVerdict::CertifiedEmpty;
  }
};

/// Witness-local checks. det M is taken from the evaluated matrix, so this
/// does not need the symbolic determinant.
inline WitnessCheck check_witness(const model::EliminationResult& symbolic, const model::CoefficientTriple& c) {
  WitnessCheck w;
  w.detm_value = det_bareiss(evaluate(symbolic.M, c.point()));
  w.kernel_dim = model::quadric_kernel_dimension(symbolic, c);
  if (w.kernel_dim == 1) w.quadric = model::quadric_Q(symbolic, c);
  w.fpf = model::fixed_point_free_check(c).verdict;
  return w;
}

/// Runs every check and searches up to max_attempts seeded triples for a
/// witness. Without a witness the certificate is still complete, with
/// overall = Fail.
inline Certificate run_pipeline(std::uint64_t seed, std::size_t max_attempts) {
  Certificate cert;
  cert.seed = seed;
  cert.max_attempts = max_attempts;

  for (const auto& check : model::verify_identities()) {
    cert.identity_verdicts.emplace_back(check.name, check.passed ? Verdict::Pass : Verdict::Fail);
  }
  cert.group_relations = model::check_group_relations().all() ? Verdict::Pass : Verdict::Fail;

  const auto eigen = model::eigen_decomposition();
  cert.eigenspace_dims = eigen.dimensions();
  cert.eigenbasis_rank = eigen.total_rank;

  const auto diag = model::verify_diagonal();
  for (std::size_t k = 0; k < 6; ++k) cert.diagonal_factors[k] = diag.factors[k].value_or(GaussianRational());
  cert.diagonal_base_points =
      diag.base_point_free() ? model::FpfVerdict::CertifiedEmpty : model::FpfVerdict::Inconclusive;

  const auto genus = model::genus_check();
  cert.chow_coefficient = genus.chow_coefficient;
  cert.genus = genus.genus;

  const auto symbolic = model::eliminate();
  const Polynomial det = model::det_M(symbolic);
  cert.detm_at_origin = evaluate(det, model::CoefficientTriple::origin().point());
  cert.detm_term_count = det.term_count();
  cert.detm_nonzero = !det.is_zero();

  SeededSampler sampler(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const auto triple = sampler.next_triple();
    if (evaluate(det, triple.point()).is_zero()) continue;
    const auto w = check_witness(symbolic, triple);
    if (!w.accepted()) continue;
    cert.witness = triple;
    cert.witness_attempt = attempt;
    cert.witness_detm_value = evaluate(det, triple.point());
    cert.quadric_kernel_dim_at_witness = w.kernel_dim;
    cert.quadric_at_witness = w.quadric;
    cert.fixed_point_free = w.fpf;
    break;
  }
  cert.overall = cert.derived_overall();
  return cert;
}

// --- serialization ----------------------------------------------------------------------

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline model::FpfVerdict parse_fpf(const std::string& s) {
  if (s == "CertifiedEmpty") return model::FpfVerdict::CertifiedEmpty;
  if (s == "Inconclusive") return model::FpfVerdict::Inconclusive;
  throw Error("unknown fixed-point verdict '" + s + "'");
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "Pass") return Verdict::Pass;
  if (s == "Fail") return Verdict::Fail;
  throw Error("unknown verdict '" + s + "'");
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Certificate& c) {
  detail::ordered_json j;
  j["tool_version"] = c.tool_version;
  j["seed"] = c.seed;
  j["max_attempts"] = c.max_attempts;
  detail::ordered_json ids = detail::ordered_json::object();
  for (const auto& [name, v] : c.identity_verdicts) ids[name] = to_string(v);
  j["identity_verdicts"] = ids;
  j["group_relations"] = to_string(c.group_relations);
  j["eigenspace_dims"] = c.eigenspace_dims;
  j["eigenbasis_rank"] = c.eigenbasis_rank;
  detail::ordered_json factors = detail::ordered_json::array();
  for (const auto& f : c.diagonal_factors) factors.push_back(f.to_string());
  j["diagonal_factors"] = factors;
  j["diagonal_base_points"] = model::to_string(c.diagonal_base_points);
  j["chow_coefficient"] = c.chow_coefficient;
  j["genus"] = c.genus;
  j["detm_at_origin"] = c.detm_at_origin.to_string();
  j["detm_term_count"] = c.detm_term_count;
  j["detm_nonzero"] = c.detm_nonzero;
  if (c.witness) {
    detail::ordered_json w = detail::ordered_json::array();
    for (const auto& r : c.witness->flat()) w.push_back(r.to_string());
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["witness_attempt"] = c.witness_attempt ? detail::ordered_json(*c.witness_attempt) : nullptr;
  j["witness_detm_value"] =
      c.witness_detm_value ? detail::ordered_json(c.witness_detm_value->to_string()) : nullptr;
  j["quadric_kernel_dim_at_witness"] =
      c.quadric_kernel_dim_at_witness ? detail::ordered_json(*c.quadric_kernel_dim_at_witness) : nullptr;
  if (c.quadric_at_witness) {
    detail::ordered_json q = detail::ordered_json::array();
    for (const auto& v : *c.quadric_at_witness) q.push_back(v.to_string());
    j["quadric_at_witness"] = q;
  } else {
    j["quadric_at_witness"] = nullptr;
  }
  j["fixed_point_free"] =
      c.fixed_point_free ? detail::ordered_json(model::to_string(*c.fixed_point_free)) : nullptr;
  j["overall"] = to_string(c.overall);
  return j;
}

inline std::string serialize(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

inline Certificate deserialize(const std::string& text) {
  Certificate c;
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    c.tool_version = j.at("tool_version").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.max_attempts = j.at("max_attempts").get<std::size_t>();
    for (const auto& [name, v] : j.at("identity_verdicts").items()) {
      c.identity_verdicts.emplace_back(name, detail::parse_verdict(v.get<std::string>()));
    }
    c.group_relations = detail::parse_verdict(j.at("group_relations").get<std::string>());
    c.eigenspace_dims = j.at("eigenspace_dims").get<std::array<std::size_t, 4>>();
    c.eigenbasis_rank = j.at("eigenbasis_rank").get<std::size_t>();
    const auto factors = j.at("diagonal_factors").get<std::vector<std::string>>();
    if (factors.size() != 6) throw Error("diagonal_factors needs 6 entries");
    for (std::size_t k = 0; k < 6; ++k) c.diagonal_factors[k] = parse_gaussian(factors[k]);
    c.diagonal_base_points = detail::parse_fpf(j.at("diagonal_base_points").get<std::string>());
    c.chow_coefficient = j.at("chow_coefficient").get<long long>();
    c.genus = j.at("genus").get<long long>();
    c.detm_at_origin = parse_gaussian(j.at("detm_at_origin").get<std::string>());
    c.detm_term_count = j.at("detm_term_count").get<std::size_t>();
    c.detm_nonzero = j.at("detm_nonzero").get<bool>();
    if (!j.at("witness").is_null()) {
      const auto w = j.at("witness").get<std::vector<std::string>>();
      std::vector<Rational> v;
      for (const auto& s : w) v.push_back(parse_rational(s));
      c.witness = model::CoefficientTriple::from_flat(v);
    }
    if (!j.at("witness_attempt").is_null()) c.witness_attempt = j.at("witness_attempt").get<std::size_t>();
    if (!j.at("witness_detm_value").is_null()) {
      c.witness_detm_value = parse_gaussian(j.at("witness_detm_value").get<std::string>());
    }
    if (!j.at("quadric_kernel_dim_at_witness").is_null()) {
      c.quadric_kernel_dim_at_witness = j.at("quadric_kernel_dim_at_witness").get<std::size_t>();
    }
    if (!j.at("quadric_at_witness").is_null()) {
      Vector q;
      for (const auto& s : j.at("quadric_at_witness").get<std::vector<std::string>>()) q.push_back(parse_gaussian(s));
      c.quadric_at_witness = std::move(q);
    }
    if (!j.at("fixed_point_free").is_null()) {
      c.fixed_point_free = detail::parse_fpf(j.at("fixed_point_free").get<std::string>());
    }
    c.overall = detail::parse_verdict(j.at("overall").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

/// Recomputes the witness-local values of a certificate and compares them
/// with the recorded ones. Throws CertificateMismatch naming the first field
/// that differs.
inline Verdict verify_certificate(const Certificate& cert) {
  if (!cert.witness) throw CertificateMismatch("witness", "certificate records no witness");
  const auto symbolic = model::eliminate();
  const auto w = check_witness(symbolic, *cert.witness);

  if (cert.quadric_kernel_dim_at_witness != w.kernel_dim) {
    throw CertificateMismatch("quadric_kernel_dim_at_witness",
                              "recomputed " + std::to_string(w.kernel_dim));
  }
  if (cert.quadric_at_witness != w.quadric) {
    throw CertificateMismatch("quadric_at_witness", "recomputed relation differs");
  }
  if (cert.witness_detm_value != w.detm_value) {
    throw CertificateMismatch("witness_detm_value", "recomputed " + w.detm_value.to_string());
  }
  const auto full = det_bareiss(evaluate(symbolic.full, cert.witness->point()));
  if (full != w.detm_value && full != -w.detm_value) {
    throw CertificateMismatch("witness_detm_value", "9x9 determinant " + full.to_string() + " disagrees");
  }
  if (cert.fixed_point_free != w.fpf) {
    throw CertificateMismatch("fixed_point_free", std::string("recomputed ") + model::to_string(w.fpf));
  }
  if (cert.overall != cert.derived_overall()) {
    throw CertificateMismatch("overall", "recorded verdict does not follow from the recorded checks");
  }
  return Verdict::Pass;
}

}  // namespace weilcert
