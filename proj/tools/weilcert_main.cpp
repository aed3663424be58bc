// Command-line front end: one subcommand per check, plus certificate
// generation and re-verification.
//
// Exit codes: 0 when every requested verdict passes, 1 when a check fails,
// 2 on usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weilcert/weilcert.hpp"

namespace {

using weilcert::GaussianRational;
using weilcert::Rational;
using weilcert::Verdict;
using json = nlohmann::ordered_json;
namespace model = weilcert::model;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

model::CoefficientTriple parse_triple(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(weilcert::parse_rational(item));
    } catch (const weilcert::Error& e) {
      throw UsageError("bad coefficient '" + item + "': " + e.what());
    }
  }
  if (values.size() != 9) {
    throw UsageError("--at needs 9 comma-separated rationals (A1,A2,A3,B1,B2,B3,C1,C2,C3), got " +
                     std::to_string(values.size()));
  }
  return model::CoefficientTriple::from_flat(values);
}

json triple_json(const model::CoefficientTriple& t) {
  json arr = json::array();
  for (const auto& r : t.flat()) arr.push_back(r.to_string());
  return arr;
}

json vector_json(const weilcert::Vector& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(z.to_string());
  return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int verify_identities(bool as_json) {
  const auto checks = model::verify_identities();
  const auto ids = model::all_identities();
  bool ok = true;
  json verdicts = json::object();
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const auto& c = checks[k];
    ok = ok && c.passed;
    verdicts[c.name] = c.passed ? "Pass" : "Fail";
    if (!as_json) {
      std::cout << (c.passed ? "Pass" : "Fail") << "  " << c.name << ": " << ids[k].lhs.to_string() << " = "
                << ids[k].rhs.to_string();
      if (!c.passed) std::cout << "  (residual " << c.residual.to_string() << ")";
      std::cout << "\n";
    }
  }
  if (as_json) emit({{"identity_verdicts", verdicts}});
  return ok ? kOk : kCheckFailed;
}

int verify_eigenspaces(bool as_json) {
  const auto groups = model::check_group_relations();
  model::EigenDecomposition e;
  try {
    e = model::eigen_decomposition();
  } catch (const weilcert::EigenbasisMismatch& err) {
    std::cerr << err.what() << "\n";
    return kCheckFailed;
  }
  const bool ok = groups.all() && e.dimensions() == std::array<std::size_t, 4>{6, 4, 3, 3} &&
                  e.total_rank == 16 && e.invariant_part_tau_fixed;
  if (as_json) {
    emit({{"group_relations", groups.all() ? "Pass" : "Fail"},
          {"eigenspace_dims", e.dimensions()},
          {"eigenbasis_rank", e.total_rank}});
  } else {
    std::cout << "group relations sigma^4 = tau^2 = 1, tau sigma tau = sigma^-1: "
              << (groups.all() ? "Pass" : "Fail") << "\n";
    for (const auto& space : e.spaces) {
      std::cout << "V(" << space.label << ") dim " << space.computed_dimension << ":";
      for (std::size_t k = 0; k < space.names.size(); ++k) {
        std::cout << (k ? ", " : " ") << space.names[k] << " = " << space.generators[k].to_string();
      }
      std::cout << "\n";
    }
    std::cout << "rank of all generators: " << e.total_rank << "\n";
    std::cout << "V(1) fixed by tau: " << (e.invariant_part_tau_fixed ? "yes" : "no") << "\n";
    std::cout << (ok ? "Pass" : "Fail") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

int verify_diagonal(bool as_json) {
  const auto d = model::verify_diagonal();
  if (as_json) {
    json factors = json::array();
    for (const auto& f : d.factors) factors.push_back(f ? f->to_string() : "0");
    emit({{"diagonal_factors", factors},
          {"diagonal_base_points", d.base_point_free() ? "CertifiedEmpty" : "Inconclusive"}});
  } else {
    for (std::size_t k = 0; k < 6; ++k) {
      std::cout << "a" << k + 1 << "|diag = " << d.restricted[k].to_string() << " = "
                << (d.factors[k] ? d.factors[k]->to_string() : "?") << " * (" << d.reference[k].to_string()
                << ")\n";
    }
    std::cout << "base points: " << (d.base_point_free() ? "none (CertifiedEmpty)" : "Inconclusive") << "\n";
    std::cout << (d.passed() ? "Pass" : "Fail") << "\n";
  }
  return d.passed() ? kOk : kCheckFailed;
}

int verify_genus(bool as_json) {
  const auto g = model::genus_check();
  if (as_json) {
    emit({{"chow_coefficient", g.chow_coefficient}, {"genus", g.genus}});
  } else {
    std::cout << "H^4 = " << g.chow_coefficient << " * h1 h2 h3 h4\n";
    std::cout << "H^3 h_j =";
    for (auto v : g.factor_degrees) std::cout << " " << v;
    std::cout << "\n2g - 2 = " << g.chow_coefficient << ", genus = " << g.genus << "\n";
    std::cout << (g.passed() ? "Pass" : "Fail") << "\n";
  }
  return g.passed() ? kOk : kCheckFailed;
}

int detm(bool symbolic, const std::string& at, bool as_json) {
  if (symbolic == !at.empty()) throw UsageError("detm needs exactly one of --symbolic or --at");
  const auto elim = model::eliminate();
  if (symbolic) {
    const auto det = model::det_M(elim);
    const auto origin = evaluate(det, model::CoefficientTriple::origin().point());
    if (as_json) {
      emit({{"detm_at_origin", origin.to_string()},
            {"detm_term_count", det.term_count()},
            {"detm_nonzero", !det.is_zero()},
            {"detm", det.to_string()}});
    } else {
      std::cout << det.to_string() << "\n";
    }
    return det.is_zero() ? kCheckFailed : kOk;
  }
  const auto triple = parse_triple(at);
  const auto det = model::det_M(elim);
  const auto rep = model::independence_certificate(det, elim, triple);
  if (as_json) {
    emit({{"witness", triple_json(triple)}, {"witness_detm_value", rep.value.to_string()}});
  } else {
    std::cout << rep.value.to_string() << "\n";
  }
  return rep.verdict == Verdict::Pass ? kOk : kCheckFailed;
}

int quadric(const std::string& at, bool as_json) {
  const auto triple = parse_triple(at);
  const auto elim = model::eliminate();
  const std::size_t dim = model::quadric_kernel_dimension(elim, triple);
  json j = {{"witness", triple_json(triple)}, {"quadric_kernel_dim_at_witness", dim}};
  int rc = kOk;
  try {
    const auto q = model::quadric_Q(elim, triple);
    j["quadric_at_witness"] = vector_json(q);
    if (!as_json) {
      std::cout << "kernel dimension 1\n";
      for (std::size_t k = 0; k < q.size(); ++k) {
        std::cout << "  " << elim.quadric_row_labels[k] << ": " << q[k].to_string() << "\n";
      }
    }
  } catch (const weilcert::KernelNotUnique& e) {
    j["quadric_at_witness"] = nullptr;
    if (!as_json) std::cout << "KernelNotUnique: kernel dimension " << e.dimension() << "\n";
    rc = kCheckFailed;
  }
  if (as_json) emit(j);
  return rc;
}

int fpf(const std::string& at, bool as_json) {
  const auto triple = parse_triple(at);
  const auto rep = model::fixed_point_free_check(triple);
  if (as_json) {
    emit({{"witness", triple_json(triple)}, {"fixed_point_free", model::to_string(rep.verdict)}});
  } else {
    for (std::size_t k = 0; k < 3; ++k) {
      std::cout << "f" << k + 1 << "|diag = " << rep.restricted[k].to_string() << "\n";
    }
    std::cout << "Res_t(f1, f2) = " << rep.r12.affine.to_string() << "\n";
    std::cout << "Res_t(f1, f3) = " << rep.r13.affine.to_string() << "\n";
    std::cout << model::to_string(rep.verdict) << "\n";
  }
  return rep.verdict == model::FpfVerdict::CertifiedEmpty ? kOk : kCheckFailed;
}

int certify(std::uint64_t seed, std::size_t max_attempts, const std::string& out, bool as_json) {
  const auto cert = weilcert::run_pipeline(seed, max_attempts);
  const std::string text = weilcert::serialize(cert);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
  }
  if (as_json || out.empty()) {
    std::cout << text;
  } else {
    std::cout << "wrote " << out << "\n";
    if (cert.witness) {
      std::cout << "witness (attempt " << *cert.witness_attempt << "): " << cert.witness->to_string() << "\n";
      std::cout << "det M at witness: " << cert.witness_detm_value->to_string() << "\n";
    }
    std::cout << "overall: " << weilcert::to_string(cert.overall) << "\n";
  }
  if (!cert.witness) std::cerr << weilcert::WitnessNotFound(max_attempts).what() << "\n";
  return cert.overall == Verdict::Pass ? kOk : kCheckFailed;
}

int recheck(const std::string& path, bool as_json) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  weilcert::Certificate cert;
  try {
    cert = weilcert::deserialize(buf.str());
  } catch (const weilcert::Error& e) {
    throw UsageError(e.what());
  }
  try {
    weilcert::verify_certificate(cert);
  } catch (const weilcert::CertificateMismatch& e) {
    if (as_json) {
      emit({{"overall", "Fail"}, {"mismatch", e.field()}});
    } else {
      std::cout << "Mismatch: " << e.what() << "\n";
    }
    return kCheckFailed;
  }
  if (as_json) {
    emit({{"overall", "Pass"}});
  } else {
    std::cout << "Pass\n";
  }
  return kOk;
}

int parse(const std::string& expr, const std::string& vars, bool as_json) {
  std::vector<std::string> names;
  if (vars.empty()) {
    names = model::affine_registry()->names();
    for (const auto& n : model::eigen_registry()->names()) names.push_back(n);
    for (const auto& n : model::coefficient_names()) names.push_back(n);
  } else {
    std::stringstream ss(vars);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
  }
  weilcert::Polynomial p;
  try {
    p = weilcert::parse_poly(expr, weilcert::make_registry(names));
  } catch (const weilcert::Error& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    emit({{"polynomial", p.to_string()}, {"term_count", p.term_count()}});
  } else {
    std::cout << p.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the eigenspace identities and the determinant certificate"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print results using the certificate field schema");

  auto* verify = app.add_subcommand("verify", "Run one family of universal checks");
  std::string what;
  verify->add_option("what", what, "identities | eigenspaces | diagonal | genus")
      ->required()
      ->check(CLI::IsMember({"identities", "eigenspaces", "diagonal", "genus"}));

  auto* detm_cmd = app.add_subcommand("detm", "Determinant of the 6x6 matrix M");
  bool symbolic = false;
  std::string at;
  detm_cmd->add_flag("--symbolic", symbolic, "Print det M as a polynomial in A1..C3");
  detm_cmd->add_option("--at", at, "Evaluate at A1,A2,A3,B1,B2,B3,C1,C2,C3");

  auto* quadric_cmd = app.add_subcommand("quadric", "Relation among the b-products at a triple");
  quadric_cmd->add_option("--at", at, "A1,A2,A3,B1,B2,B3,C1,C2,C3")->required();

  auto* fpf_cmd = app.add_subcommand("fpf", "Fixed-point-freeness via the diagonal");
  fpf_cmd->add_option("--at", at, "A1,A2,A3,B1,B2,B3,C1,C2,C3")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Run the full pipeline and emit a certificate");
  std::uint64_t seed = 0;
  std::size_t max_attempts = 100;
  std::string out;
  certify_cmd->add_option("--seed", seed, "Sampler seed")->required();
  certify_cmd->add_option("--max-attempts", max_attempts, "Number of triples to try");
  certify_cmd->add_option("--out", out, "Certificate file (stdout when omitted)");

  auto* recheck_cmd = app.add_subcommand("recheck", "Re-verify a certificate file");
  std::string cert_path;
  recheck_cmd->add_option("--cert", cert_path, "Certificate file")->required();

  auto* parse_cmd = app.add_subcommand("parse", "Parse and normalize a polynomial expression");
  std::string expr;
  std::string vars;
  parse_cmd->add_option("--expr", expr, "Expression")->required();
  parse_cmd->add_option("--vars", vars, "Comma-separated variable names (default: all known names)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      if (what == "identities") return verify_identities(as_json);
      if (what == "eigenspaces") return verify_eigenspaces(as_json);
      if (what == "diagonal") return verify_diagonal(as_json);
      return verify_genus(as_json);
    }
    if (*detm_cmd) return detm(symbolic, at, as_json);
    if (*quadric_cmd) return quadric(at, as_json);
    if (*fpf_cmd) return fpf(at, as_json);
    if (*certify_cmd) return certify(seed, max_attempts, out, as_json);
    if (*recheck_cmd) return recheck(cert_path, as_json);
    if (*parse_cmd) return parse(expr, vars, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const weilcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
