// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All checks are exact; each criterion also has a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "test_support.hpp"

namespace {

using namespace weilcert;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_budget = secs <= budget_s;
  const bool ok = out.passed && in_budget;
  if (!ok) ++failures;
  std::printf("%s  %d. %-28s %7.2fs / %5.1fs  %s%s\n", ok ? "PASS" : "FAIL", id, title, secs, budget_s,
              out.detail.c_str(), in_budget ? "" : " [over budget]");
  std::fflush(stdout);
}

// Shared between criteria 4 and 8.
model::EliminationResult* symbolic = nullptr;
Polynomial* det_m = nullptr;

}  // namespace

int main() {
  run(1, "identity suite", 5.0, [] {
    const auto checks = model::verify_identities();
    std::size_t zero = 0;
    for (const auto& c : checks) zero += c.passed && c.residual.is_zero() ? 1 : 0;
    return Outcome{checks.size() == 17 && zero == 17, std::to_string(zero) + "/17 residuals are zero"};
  });

  run(2, "eigenspaces", 1.0, [] {
    const auto e = model::eigen_decomposition();  // throws if a span check fails
    const auto d = e.dimensions();
    const bool ok = d == std::array<std::size_t, 4>{6, 4, 3, 3} && e.total_rank == 16;
    return Outcome{ok, "dims (" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) +
                           "," + std::to_string(d[3]) + "), rank " + std::to_string(e.total_rank)};
  });

  run(3, "diagonal restriction", 5.0, [] {
    const auto r = model::verify_diagonal();
    const std::array<long, 6> expected = {2, 4, 2, 1, 1, 1};
    bool factors = true;
    std::string text;
    for (std::size_t k = 0; k < 6; ++k) {
      factors = factors && r.factors[k] && *r.factors[k] == GaussianRational(expected[k]);
      text += (k ? "," : "") + (r.factors[k] ? r.factors[k]->to_string() : std::string("-"));
    }
    return Outcome{factors && r.base_point_free(),
                   "factors " + text + (r.base_point_free() ? ", base-point free" : ", base point found")};
  });

  run(4, "determinant certificate", 30.0, [] {
    symbolic = new model::EliminationResult(model::eliminate());
    det_m = new Polynomial(model::det_M(*symbolic));  // throws unless det(9x9) = +-det M
    const auto at_origin = evaluate(*det_m, model::CoefficientTriple::origin().point());
    const auto full = det_bareiss(symbolic->full);
    const bool ok = at_origin.is_one() && !det_m->is_zero() && (full == *det_m || full == -*det_m);
    return Outcome{ok, "det M(0) = " + at_origin.to_string() + ", " + std::to_string(det_m->term_count()) +
                           " terms, det(9x9) = +-det M"};
  });

  run(5, "quadric uniqueness", 10.0, [] {
    if (!symbolic) return Outcome{false, "no elimination result"};
    const auto at_origin = model::quadric_kernel_dimension(*symbolic, model::CoefficientTriple::origin());
    SeededSampler sampler(5);
    int unique = 0;
    const int trials = 20;
    for (int n = 0; n < trials; ++n) {
      unique += model::quadric_kernel_dimension(*symbolic, sampler.next_triple()) == 1 ? 1 : 0;
    }
    return Outcome{at_origin == 3 && unique == trials, "origin dim " + std::to_string(at_origin) + ", " +
                                                          std::to_string(unique) + "/20 random triples dim 1"};
  });

  run(6, "genus", 1.0, [] {
    const auto g = model::genus_check();
    return Outcome{g.chow_coefficient == 24 && g.genus == 13,
                   "H^4 = " + std::to_string(g.chow_coefficient) + ", g = " + std::to_string(g.genus)};
  });

  run(7, "witness", 60.0, [] {
    const auto cert = run_pipeline(0, 100);
    if (!cert.witness) return Outcome{false, "no witness in 100 attempts"};
    const bool found = cert.witness_detm_value && !cert.witness_detm_value->is_zero() &&
                       cert.quadric_kernel_dim_at_witness == 1 &&
                       cert.fixed_point_free == model::FpfVerdict::CertifiedEmpty && cert.overall == Verdict::Pass;
    const std::string text = serialize(cert);
    const auto back = deserialize(text);
    const bool rechecked = verify_certificate(back) == Verdict::Pass;
    const bool byte_exact = serialize(back) == text;
    return Outcome{found && rechecked && byte_exact,
                   "witness [" + cert.witness->to_string() + "], det M = " + cert.witness_detm_value->to_string() +
                       (rechecked ? ", recheck ok" : ", recheck failed") +
                       (byte_exact ? ", byte-exact" : ", re-serialization differs")};
  });

  run(8, "oracle equivalences", 30.0, [] {
    testing::Gen g(2024);
    int det_ok = 0;
    const auto reg = make_registry({"u", "v", "w"});
    for (int n = 0; n < 200; ++n) {
      const auto size = static_cast<std::size_t>(g.integer(1, 5));
      if (n % 2 == 0) {
        const auto m = g.scalar_matrix(size, size);
        det_ok += det_bareiss(m) == det_cofactor(m) ? 1 : 0;
      } else {
        const auto m = g.poly_matrix(reg, std::min<std::size_t>(size, 4));
        det_ok += det_bareiss(m) == det_cofactor(m) ? 1 : 0;
      }
    }

    int commute_ok = 0;
    if (symbolic && det_m) {
      for (int n = 0; n < 50; ++n) {
        std::vector<Rational> v;
        for (int k = 0; k < 9; ++k) v.push_back(g.rational(10));
        const auto p = model::CoefficientTriple::from_flat(v).point();
        commute_ok += evaluate(*det_m, p) == det_bareiss(evaluate(symbolic->M, p)) ? 1 : 0;
      }
    }

    int hom_ok = 0;
    const auto& src = model::affine_registry();
    const auto dst = make_registry({"u", "v"});
    for (int n = 0; n < 200; ++n) {
      const auto p = g.polynomial(src, 4, 3);
      const auto q = g.polynomial(src, 4, 3);
      std::map<std::string, Polynomial> b;
      for (const auto& name : src->names()) b.emplace(name, g.polynomial(dst, 2, 2));
      const auto pt = g.point(src);
      const bool sub = substitute(p * q, b) == substitute(p, b) * substitute(q, b) &&
                       substitute(p + q, b) == substitute(p, b) + substitute(q, b);
      const bool ev = evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt) &&
                      evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt);
      hom_ok += sub && ev ? 1 : 0;
    }
    return Outcome{det_ok == 200 && commute_ok == 50 && hom_ok == 200,
                   "det " + std::to_string(det_ok) + "/200, eval-det " + std::to_string(commute_ok) +
                       "/50, homomorphism " + std::to_string(hom_ok) + "/200"};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  delete symbolic;
  delete det_m;
  return failures == 0 ? 0 : 1;
}
