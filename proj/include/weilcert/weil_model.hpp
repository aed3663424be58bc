#pragma once

// Multilinear forms on (P^1)^4 under the cyclic permutation of the factors.
//
// All identity checks run in the affine chart (s, t, x, y): a multilinear
// form f is identified with f / (s0 t0 x0 y0). The permutation sigma acts on
// polynomials by the substitution s -> t, t -> x, x -> y, y -> s, which is
// the convention under which c1 = s - i t - x + i y has eigenvalue i.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/exactnum.hpp"
#include "weilcert/linalg.hpp"
#include "weilcert/multipoly.hpp"
#include "weilcert/resultant.hpp"

namespace weilcert {

enum class Verdict { Pass, Fail };

inline const char* to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Fail"; }

namespace model {

// --- registries ------------------------------------------------------------

inline const RegistryPtr& affine_registry() {
  static const RegistryPtr reg = make_registry({"s", "t", "x", "y"});
  return reg;
}

/// The two coordinates s, t of the diagonal {(s, t, s, t)}.
inline const RegistryPtr& diagonal_registry() {
  static const RegistryPtr reg = make_registry({"s", "t"});
  return reg;
}

/// Formal eigenvector names.
inline const RegistryPtr& eigen_registry() {
  static const RegistryPtr reg = make_registry(
      {"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "d1", "d2", "d3"});
  return reg;
}

inline const std::vector<std::string>& coefficient_names() {
  static const std::vector<std::string> names = {"A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"};
  return names;
}

inline const RegistryPtr& coefficient_registry() {
  static const RegistryPtr reg = make_registry(coefficient_names());
  return reg;
}

/// a- and b-variables together with the coefficients of the linear
/// equations used for elimination.
inline const RegistryPtr& elimination_registry() {
  static const RegistryPtr reg = [] {
    std::vector<std::string> names = {"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4"};
    names.insert(names.end(), coefficient_names().begin(), coefficient_names().end());
    return make_registry(std::move(names));
  }();
  return reg;
}

// --- the space V and its named generators ------------------------------------

/// The 16 multilinear monomials; bit k of the index selects the k-th of s, t, x, y.
inline const std::vector<Polynomial>& multilinear_monomials() {
  static const std::vector<Polynomial> monos = [] {
    std::vector<Polynomial> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
      Monomial m(4);
      for (std::size_t k = 0; k < 4; ++k) m[k] = (mask >> k) & 1U;
      out.push_back(Polynomial::monomial(affine_registry(), m));
    }
    return out;
  }();
  return monos;
}

/// Definitions of a1..a6, b1..b4, c1..c3, d1..d3 as polynomials in s, t, x, y.
inline const std::map<std::string, Polynomial>& generator_definitions() {
  static const std::map<std::string, Polynomial> defs = [] {
    const auto& reg = affine_registry();
    const Polynomial s = Polynomial::variable(reg, "s");
    const Polynomial t = Polynomial::variable(reg, "t");
    const Polynomial x = Polynomial::variable(reg, "x");
    const Polynomial y = Polynomial::variable(reg, "y");
    const Polynomial one(reg, GaussianRational(1));
    const GaussianRational i = GaussianRational::i();
    std::map<std::string, Polynomial> d;
    d.emplace("a1", s + t + x + y);
    d.emplace("a2", s * t + t * x + x * y + y * s);
    d.emplace("a3", t * x * y + s * x * y + s * t * y + s * t * x);
    d.emplace("a4", s * x + t * y);
    d.emplace("a5", s * t * x * y);
    d.emplace("a6", one);
    d.emplace("b1", s - t + x - y);
    d.emplace("b2", s * t - t * x + x * y - y * s);
    d.emplace("b3", t * x * y - s * x * y + s * t * y - s * t * x);
    d.emplace("b4", s * x - t * y);
    d.emplace("c1", s - i * t - x + i * y);
    d.emplace("c2", s * t - i * (t * x) - x * y + i * (y * s));
    d.emplace("c3", t * x * y - i * (s * x * y) - s * t * y + i * (s * t * x));
    d.emplace("d1", s + i * t - x - i * y);
    d.emplace("d2", s * t + i * (t * x) - x * y - i * (y * s));
    d.emplace("d3", t * x * y + i * (s * x * y) - s * t * y - i * (s * t * x));
    return d;
  }();
  return defs;
}

inline const Polynomial& generator(std::string_view name) {
  auto it = generator_definitions().find(std::string(name));
  if (it == generator_definitions().end()) throw UnknownVariable(std::string(name));
  return it->second;
}

/// Coordinates of a multilinear polynomial in the monomial basis.
inline Vector coordinates(const Polynomial& p) {
  Vector v(16);
  const Polynomial q = rebase(p, affine_registry());
  for (const auto& [m, c] : q.terms()) {
    unsigned mask = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (m[k] > 1) throw Error("polynomial is not multilinear: " + p.to_string());
      mask |= m[k] << k;
    }
    v[mask] = c;
  }
  return v;
}

/// 16 x k matrix whose columns are the coordinates of the given polynomials.
inline ScalarMatrix coordinate_matrix(std::span<const Polynomial> polys) {
  ScalarMatrix m(16, polys.size(), GaussianRational());
  for (std::size_t j = 0; j < polys.size(); ++j) {
    const Vector v = coordinates(polys[j]);
    for (std::size_t r = 0; r < 16; ++r) m(r, j) = v[r];
  }
  return m;
}

// --- group action ----------------------------------------------------------------

/// A permutation of the factors of (P^1)^4, acting on polynomials in
/// s, t, x, y by the variable substitution var_k -> var_{images[k]}.
class GroupElement {
 public:
  explicit GroupElement(std::array<std::size_t, 4> images) : images_(images) {}

  static GroupElement identity() { return GroupElement({0, 1, 2, 3}); }
  /// s -> t, t -> x, x -> y, y -> s.
  static GroupElement sigma() { return GroupElement({1, 2, 3, 0}); }
  /// s <-> x.
  static GroupElement tau() { return GroupElement({2, 1, 0, 3}); }

  const std::array<std::size_t, 4>& images() const noexcept { return images_; }

  Polynomial apply(const Polynomial& p) const {
    const auto& reg = affine_registry();
    std::map<std::string, Polynomial> bindings;
    for (std::size_t k = 0; k < 4; ++k) {
      bindings.emplace(reg->name(k), Polynomial::variable(reg, reg->name(images_[k])));
    }
    return substitute(rebase(p, reg), bindings);
  }

  /// (g * h).apply(p) == g.apply(h.apply(p)).
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    std::array<std::size_t, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = g.images_[h.images_[k]];
    return GroupElement(out);
  }

  GroupElement inverse() const {
    std::array<std::size_t, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) out[images_[k]] = k;
    return GroupElement(out);
  }

  GroupElement power(unsigned n) const {
    GroupElement r = identity();
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  /// Equality as substitution maps, tested on all 16 monomials of V.
  bool acts_like(const GroupElement& other) const {
    for (const auto& m : multilinear_monomials()) {
      if (apply(m) != other.apply(m)) return false;
    }
    return true;
  }

 private:
  std::array<std::size_t, 4> images_;
};

inline Polynomial apply_group(const GroupElement& g, const Polynomial& p) { return g.apply(p); }

struct GroupRelations {
  bool sigma_order_four = false;
  bool tau_involution = false;
  bool dihedral = false;  // tau sigma tau = sigma^{-1}

  bool all() const { return sigma_order_four && tau_involution && dihedral; }
};

inline GroupRelations check_group_relations() {
  const auto id = GroupElement::identity();
  const auto sigma = GroupElement::sigma();
  const auto tau = GroupElement::tau();
  GroupRelations r;
  r.sigma_order_four = sigma.power(4).acts_like(id) && !sigma.power(2).acts_like(id);
  r.tau_involution = (tau * tau).acts_like(id) && !tau.acts_like(id);
  r.dihedral = (tau * sigma * tau).acts_like(sigma.inverse());
  return r;
}

// --- eigenspaces -----------------------------------------------------------------

struct Eigenspace {
  std::string label;
  GaussianRational eigenvalue;
  std::vector<std::string> names;
  std::vector<Polynomial> generators;
  std::size_t computed_dimension = 0;
};

struct EigenDecomposition {
  std::array<Eigenspace, 4> spaces;
  std::size_t total_rank = 0;       // rank of all 16 generators together
  bool invariant_part_tau_fixed = false;

  std::array<std::size_t, 4> dimensions() const {
    return {spaces[0].computed_dimension, spaces[1].computed_dimension, spaces[2].computed_dimension,
            spaces[3].computed_dimension};
  }
};

/// Matrix of sigma on V in the monomial basis.
inline ScalarMatrix sigma_matrix() {
  std::vector<Polynomial> images;
  for (const auto& m : multilinear_monomials()) images.push_back(GroupElement::sigma().apply(m));
  return coordinate_matrix(images);
}

/// Computes each eigenspace of sigma as an exact kernel and checks that it is
/// spanned by the named generators.
inline EigenDecomposition eigen_decomposition() {
  const GaussianRational i = GaussianRational::i();
  struct EigenTarget {
    const char* label;
    GaussianRational value;
    std::vector<std::string> names;
  };
  const std::array<EigenTarget, 4> targets = {{
      {"1", GaussianRational(1), {"a1", "a2", "a3", "a4", "a5", "a6"}},
      {"-1", GaussianRational(-1), {"b1", "b2", "b3", "b4"}},
      {"i", i, {"c1", "c2", "c3"}},
      {"-i", -i, {"d1", "d2", "d3"}},
  }};

  const ScalarMatrix sigma = sigma_matrix();
  EigenDecomposition out;
  std::vector<Polynomial> everything;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& target = targets[k];
    ScalarMatrix shifted = sigma;
    for (std::size_t d = 0; d < 16; ++d) shifted(d, d) -= target.value;
    const std::size_t dim = kernel_basis(shifted).size();

    std::vector<Polynomial> gens;
    for (const auto& n : target.names) gens.push_back(generator(n));
    const ScalarMatrix g = coordinate_matrix(gens);
    // Every generator is an eigenvector, and together they fill the kernel.
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::vector<GaussianRational> col(16);
      for (std::size_t r = 0; r < 16; ++r) col[r] = g(r, j);
      for (const auto& e : multiply(shifted, col)) {
        if (!e.is_zero()) throw EigenbasisMismatch(target.label);
      }
    }
    if (rank(g) != gens.size() || gens.size() != dim) throw EigenbasisMismatch(target.label);

    out.spaces[k] = Eigenspace{target.label, target.value, target.names, gens, dim};
    everything.insert(everything.end(), gens.begin(), gens.end());
  }
  out.total_rank = rank(coordinate_matrix(everything));
  out.invariant_part_tau_fixed = true;
  for (const auto& g : out.spaces[0].generators) {
    out.invariant_part_tau_fixed = out.invariant_part_tau_fixed && GroupElement::tau().apply(g) == g;
  }
  return out;
}

// --- polynomial identities ---------------------------------------------------------

/// lhs = rhs in the formal eigenvector variables.
struct Identity {
  std::string name;
  Polynomial lhs;
  Polynomial rhs;
};

struct IdentityCheck {
  std::string name;
  bool passed = false;
  Polynomial residual;
};

namespace detail {

struct FormalVars {
  Polynomial a1, a2, a3, a4, a5, a6, b1, b2, b3, b4, c1, c2, c3, d1, d2, d3;
  Polynomial zero;

  FormalVars()
      : a1(v("a1")), a2(v("a2")), a3(v("a3")), a4(v("a4")), a5(v("a5")), a6(v("a6")),
        b1(v("b1")), b2(v("b2")), b3(v("b3")), b4(v("b4")),
        c1(v("c1")), c2(v("c2")), c3(v("c3")),
        d1(v("d1")), d2(v("d2")), d3(v("d3")),
        zero(eigen_registry()) {}

  static Polynomial v(const char* name) { return Polynomial::variable(eigen_registry(), name); }
};

}  // namespace detail

/// The cubic relation among a1..a6.
inline std::vector<Identity> cubic_identities() {
  const detail::FormalVars f;
  return {{"cubic",
           f.a1 * f.a1 * f.a5 - f.a1 * f.a3 * f.a4 + f.a2 * f.a4 * f.a4 - 4 * f.a2 * f.a5 * f.a6 +
               f.a3 * f.a3 * f.a6,
           f.zero}};
}

/// Products of V(-1) generators that lie in Sym^2 V(1).
inline std::vector<Identity> segre_b_identities() {
  const detail::FormalVars f;
  return {
      {"b1^2", f.b1 * f.b1, f.a1 * f.a1 - 4 * f.a2 * f.a6},
      {"b2^2", f.b2 * f.b2, f.a2 * f.a2 - 4 * (f.a1 * f.a3 - f.a2 * f.a4) + 16 * f.a5 * f.a6},
      {"b3^2", f.b3 * f.b3, f.a3 * f.a3 - 4 * f.a2 * f.a5},
      {"b1*b3", f.b1 * f.b3, f.a1 * f.a3 - 2 * f.a2 * f.a4},
      {"b1*b4", f.b1 * f.b4, f.a1 * f.a4 - 2 * f.a3 * f.a6},
      {"b3*b4", f.b3 * f.b4, -(f.a3 * f.a4) + 2 * f.a1 * f.a5},
      {"b4^2", f.b4 * f.b4, f.a4 * f.a4 - 4 * f.a5 * f.a6},
  };
}

/// Combinations of V(i) x V(-i) products, in display order.
inline std::vector<Identity> segre_cd_identities() {
  const detail::FormalVars f;
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half = Rational(1, 2);
  const GaussianRational inv_1mi = (GaussianRational(1) - i).inverse();
  const GaussianRational inv_1pi = (GaussianRational(1) + i).inverse();
  return {
      {"c1*d1", f.c1 * f.d1, f.a1 * f.a1 - 2 * f.a2 * f.a6 - 4 * f.a4 * f.a6},
      {"c3*d3", f.c3 * f.d3, f.a3 * f.a3 - 2 * f.a2 * f.a5 - 4 * f.a4 * f.a5},
      {"c2*d2", f.c2 * f.d2, f.a2 * f.a2 - 2 * f.a1 * f.a3 + 2 * f.a2 * f.a4},
      {"(c1*d3 + c3*d1)/2", half * (f.c1 * f.d3 + f.c3 * f.d1),
       -(f.a1 * f.a3) + f.a2 * f.a4 + 8 * f.a5 * f.a6},
      {"i/2*(c1*d3 - c3*d1)", (i * half) * (f.c1 * f.d3 - f.c3 * f.d1), f.b2 * f.b4},
      {"(c1*d2 - i*c2*d1)/(1-i)", inv_1mi * (f.c1 * f.d2 - i * (f.c2 * f.d1)),
       f.a1 * f.a2 - 4 * f.a3 * f.a6},
      {"(c1*d2 + i*c2*d1)/(1+i)", inv_1pi * (f.c1 * f.d2 + i * (f.c2 * f.d1)), f.b1 * f.b2},
      {"(c2*d3 + i*c3*d2)/(1+i)", inv_1pi * (f.c2 * f.d3 + i * (f.c3 * f.d2)),
       -(f.a2 * f.a3) + 4 * f.a1 * f.a5},
      {"-i/(1+i)*(c2*d3 - i*c3*d2)", (-i * inv_1pi) * (f.c2 * f.d3 - i * (f.c3 * f.d2)), f.b2 * f.b3},
  };
}

inline std::vector<Identity> all_identities() {
  std::vector<Identity> out = cubic_identities();
  for (auto& id : segre_b_identities()) out.push_back(std::move(id));
  for (auto& id : segre_cd_identities()) out.push_back(std::move(id));
  return out;
}

/// Expresses a polynomial in formal eigenvector variables in s, t, x, y.
inline Polynomial expand_generators(const Polynomial& formal) {
  return substitute(formal, generator_definitions());
}

inline IdentityCheck check_identity(const Identity& id) {
  Polynomial residual = expand_generators(id.lhs - id.rhs);
  const bool ok = residual.is_zero();
  return {id.name, ok, std::move(residual)};
}

inline std::vector<IdentityCheck> check_all(const std::vector<Identity>& ids) {
  std::vector<IdentityCheck> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(check_identity(id));
  return out;
}

inline std::vector<IdentityCheck> verify_cubic_relation() { return check_all(cubic_identities()); }
inline std::vector<IdentityCheck> verify_segre_b() { return check_all(segre_b_identities()); }
inline std::vector<IdentityCheck> verify_segre_cd() { return check_all(segre_cd_identities()); }
inline std::vector<IdentityCheck> verify_identities() { return check_all(all_identities()); }

inline void require_passed(std::span<const IdentityCheck> checks) {
  for (const auto& c : checks) {
    if (!c.passed) throw IdentityFailed(c.name, c.residual.to_string());
  }
}

/// All cubic relations among a1..a6, as a basis of the kernel of the
/// evaluation map from cubic monomials in a1..a6 to polynomials in s, t, x, y.
inline std::vector<Polynomial> cubic_relation_basis() {
  const auto& ereg = eigen_registry();
  std::vector<Monomial> cubics;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i; j < 6; ++j) {
      for (std::size_t k = j; k < 6; ++k) {
        Monomial m(ereg->size());
        ++m[i];
        ++m[j];
        ++m[k];
        cubics.push_back(m);
      }
    }
  }
  // Expanded images; each has multidegree at most (3,3,3,3) in s, t, x, y.
  std::vector<Polynomial> images;
  for (const auto& m : cubics) images.push_back(expand_generators(Polynomial::monomial(ereg, m)));
  std::map<std::vector<std::uint32_t>, std::size_t> row_of;
  for (const auto& p : images) {
    for (const auto& [m, c] : p.terms()) row_of.emplace(m.exponents(), row_of.size());
  }
  ScalarMatrix mat(row_of.size(), cubics.size(), GaussianRational());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& [m, c] : images[j].terms()) mat(row_of[m.exponents()], j) = c;
  }
  std::vector<Polynomial> relations;
  for (const auto& v : kernel_basis(mat)) {
    Polynomial rel(ereg);
    for (std::size_t j = 0; j < cubics.size(); ++j) rel.add_term(cubics[j], v[j]);
    relations.push_back(std::move(rel));
  }
  return relations;
}

// --- restriction to the diagonal -------------------------------------------------------

/// Restriction to the fixed locus of sigma^2, x = s and y = t.
inline Polynomial restrict_to_diagonal(const Polynomial& p) {
  const auto& d = diagonal_registry();
  const Polynomial s = Polynomial::variable(d, "s");
  const Polynomial t = Polynomial::variable(d, "t");
  return substitute(rebase(p, affine_registry()), {{"s", s}, {"t", t}, {"x", s}, {"y", t}});
}

/// Affine forms of the restricted a1..a6, each up to a constant factor.
inline std::array<Polynomial, 6> diagonal_reference_forms() {
  const auto& d = diagonal_registry();
  const Polynomial s = Polynomial::variable(d, "s");
  const Polynomial t = Polynomial::variable(d, "t");
  return {s + t, s * t, s * t * (s + t), s * s + t * t, s * s * t * t, Polynomial(d, GaussianRational(1))};
}

/// c with p == c * q, if it exists and is nonzero.
inline std::optional<GaussianRational> proportionality_factor(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero() || p.term_count() != q.term_count()) return std::nullopt;
  const GaussianRational c = p.terms().begin()->second / q.terms().begin()->second;
  if (p == c * q) return c;
  return std::nullopt;
}

inline BidegreeForm diagonal_form(const Polynomial& restricted) {
  return BidegreeForm(rebase(restricted, diagonal_registry()), 0, 1, 2, 2);
}

/// Common zeros of bidegree forms via pairwise t-block resultants.
inline CommonZeroAnalysis analyze_common_zeros(std::span<const BidegreeForm> forms,
                                               std::vector<BinaryForm>* resultants = nullptr) {
  std::vector<BinaryForm> rs;
  for (std::size_t a = 0; a < forms.size(); ++a) {
    for (std::size_t b = a + 1; b < forms.size(); ++b) rs.push_back(t_block_resultant(forms[a], forms[b]));
  }
  auto analysis = common_zero_analysis(rs);
  if (resultants) *resultants = std::move(rs);
  return analysis;
}

struct DiagonalReport {
  std::array<Polynomial, 6> restricted;
  std::array<Polynomial, 6> reference;
  std::array<std::optional<GaussianRational>, 6> factors;
  CommonZeroAnalysis base_points;

  bool proportional() const {
    for (const auto& f : factors) {
      if (!f) return false;
    }
    return true;
  }
  bool base_point_free() const { return base_points.certified_empty; }
  bool passed() const { return proportional() && base_point_free(); }
};

inline DiagonalReport verify_diagonal() {
  DiagonalReport r;
  r.reference = diagonal_reference_forms();
  std::vector<BidegreeForm> forms;
  for (std::size_t k = 0; k < 6; ++k) {
    r.restricted[k] = restrict_to_diagonal(generator("a" + std::to_string(k + 1)));
    r.factors[k] = proportionality_factor(r.restricted[k], r.reference[k]);
    forms.push_back(diagonal_form(r.restricted[k]));
  }
  r.base_points = analyze_common_zeros(forms);
  return r;
}

/// Throwing form of verify_diagonal.
inline DiagonalReport require_diagonal() {
  DiagonalReport r = verify_diagonal();
  for (std::size_t k = 0; k < 6; ++k) {
    if (!r.factors[k]) {
      throw IdentityFailed("a" + std::to_string(k + 1) + "|diagonal", r.restricted[k].to_string());
    }
  }
  if (!r.base_point_free()) throw BasePointFound();
  return r;
}

// --- elimination ---------------------------------------------------------------------

/// Coefficients of the three linear equations
///   a4 = A1 a1 + A2 a2 + A3 a3,  a5 = B1 a1 + ...,  a6 = C1 a1 + ...
struct CoefficientTriple {
  std::array<Rational, 3> A;
  std::array<Rational, 3> B;
  std::array<Rational, 3> C;

  static CoefficientTriple origin() { return {}; }

  static CoefficientTriple from_flat(std::span<const Rational> v) {
    if (v.size() != 9) throw Error("a coefficient triple needs 9 values");
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}};
  }

  std::array<Rational, 9> flat() const { return {A[0], A[1], A[2], B[0], B[1], B[2], C[0], C[1], C[2]}; }

  Point point() const {
    Point p;
    const auto v = flat();
    for (std::size_t k = 0; k < 9; ++k) p.emplace(coefficient_names()[k], GaussianRational(v[k]));
    return p;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& r : flat()) out += (out.empty() ? "" : ",") + r.to_string();
    return out;
  }

  friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
};

struct EliminationResult {
  std::vector<Monomial> alpha;             // a1^2, a2^2, a3^2, a1a2, a1a3, a2a3
  std::vector<std::string> alpha_labels;
  std::vector<std::string> gamma_labels;   // six c*d combinations
  std::vector<std::string> b_triple_labels;  // b1b2, b2b3, b2b4
  std::vector<std::string> quadric_row_labels;  // the seven b-products
  PolyMatrix M;                 // 6 x 6, gamma = M alpha
  PolyMatrix full;              // 9 x 9 over (alpha, b1b2, b2b3, b2b4)
  PolyMatrix quadric_relation;  // 7 x 6, b-products in the alpha basis
};

namespace detail {

inline Monomial elimination_monomial(std::initializer_list<const char*> vars) {
  const auto& reg = elimination_registry();
  Monomial m(reg->size());
  for (const char* v : vars) ++m[reg->require(v)];
  return m;
}

inline std::map<std::string, Polynomial> linear_equations() {
  const auto& reg = elimination_registry();
  auto v = [&](const std::string& n) { return Polynomial::variable(reg, n); };
  std::map<std::string, Polynomial> eq;
  const std::array<std::pair<const char*, const char*>, 3> rows = {
      {{"a4", "A"}, {"a5", "B"}, {"a6", "C"}}};
  for (const auto& [target, letter] : rows) {
    Polynomial rhs(reg);
    for (int k = 1; k <= 3; ++k) rhs += v(std::string(letter) + std::to_string(k)) * v("a" + std::to_string(k));
    eq.emplace(target, rhs);
  }
  return eq;
}

/// Row of coefficients (over the coefficient registry) of `formal` after
/// eliminating a4, a5, a6, in the given basis.
inline std::vector<Polynomial> eliminate_row(const Polynomial& formal, std::span<const Monomial> basis,
                                             const std::string& label) {
  const auto& reg = elimination_registry();
  const Polynomial p = substitute(rebase(formal, reg), linear_equations());
  std::vector<std::size_t> vars;
  for (const char* n : {"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4"}) {
    vars.push_back(reg->require(n));
  }
  auto cv = coefficient_vector(p, basis, vars);
  if (!cv.remainder.is_zero()) throw NonzeroRemainder(label + ": " + cv.remainder.to_string());
  std::vector<Polynomial> row;
  for (const auto& c : cv.coefficients) row.push_back(rebase(c, coefficient_registry()));
  return row;
}

inline const Identity& find_identity(const std::vector<Identity>& ids, std::string_view name) {
  for (const auto& id : ids) {
    if (id.name == name) return id;
  }
  throw Error("no identity named " + std::string(name));
}

}  // namespace detail

/// Symbolic elimination of a4, a5, a6 over Q[A1..C3].
inline EliminationResult eliminate() {
  EliminationResult r;
  r.alpha = {detail::elimination_monomial({"a1", "a1"}), detail::elimination_monomial({"a2", "a2"}),
             detail::elimination_monomial({"a3", "a3"}), detail::elimination_monomial({"a1", "a2"}),
             detail::elimination_monomial({"a1", "a3"}), detail::elimination_monomial({"a2", "a3"})};
  r.alpha_labels = {"a1^2", "a2^2", "a3^2", "a1*a2", "a1*a3", "a2*a3"};
  r.b_triple_labels = {"b1*b2", "b2*b3", "b2*b4"};
  std::vector<Monomial> basis9 = r.alpha;
  basis9.push_back(detail::elimination_monomial({"b1", "b2"}));
  basis9.push_back(detail::elimination_monomial({"b2", "b3"}));
  basis9.push_back(detail::elimination_monomial({"b2", "b4"}));

  const auto cd = segre_cd_identities();
  r.gamma_labels = {"c1*d1",
                    "c2*d2",
                    "c3*d3",
                    "(c1*d2 - i*c2*d1)/(1-i)",
                    "(c1*d3 + c3*d1)/2",
                    "(c2*d3 + i*c3*d2)/(1+i)"};
  const std::array<const char*, 3> b_rows = {"(c1*d2 + i*c2*d1)/(1+i)", "-i/(1+i)*(c2*d3 - i*c3*d2)",
                                             "i/2*(c1*d3 - c3*d1)"};

  const Polynomial zero(coefficient_registry());
  r.M = PolyMatrix(6, 6, zero);
  r.full = PolyMatrix(9, 9, zero);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto row = detail::eliminate_row(detail::find_identity(cd, r.gamma_labels[i]).rhs, basis9,
                                           r.gamma_labels[i]);
    for (std::size_t j = 0; j < 9; ++j) {
      r.full(i, j) = row[j];
      if (j < 6) {
        r.M(i, j) = row[j];
      } else if (!row[j].is_zero()) {
        throw NonzeroRemainder(r.gamma_labels[i] + " involves " + r.b_triple_labels[j - 6]);
      }
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto row = detail::eliminate_row(detail::find_identity(cd, b_rows[i]).rhs, basis9, b_rows[i]);
    for (std::size_t j = 0; j < 9; ++j) r.full(6 + i, j) = row[j];
  }

  const auto bb = segre_b_identities();
  r.quadric_relation = PolyMatrix(7, 6, zero);
  for (std::size_t i = 0; i < bb.size(); ++i) {
    r.quadric_row_labels.push_back(bb[i].name);
    const auto row = detail::eliminate_row(bb[i].rhs, r.alpha, bb[i].name);
    for (std::size_t j = 0; j < 6; ++j) r.quadric_relation(i, j) = row[j];
  }
  return r;
}

inline PolyMatrix specialize(const PolyMatrix& m, const Point& point) {
  PolyMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = weilcert::specialize(m(r, c), point);
  }
  return out;
}

/// Elimination at a numeric triple; all matrix entries are constants.
inline EliminationResult eliminate(const CoefficientTriple& coeffs) {
  EliminationResult r = eliminate();
  const Point p = coeffs.point();
  r.M = specialize(r.M, p);
  r.full = specialize(r.full, p);
  r.quadric_relation = specialize(r.quadric_relation, p);
  return r;
}

/// det M; also checks det(full) = +-det M as polynomials.
inline Polynomial det_M(const EliminationResult& r) {
  Polynomial d = det_bareiss(r.M);
  const Polynomial full = det_bareiss(r.full);
  if (full != d && full != -d) {
    throw IdentityFailed("det(9x9) = +-det M", (full - d).to_string());
  }
  return d;
}

inline ScalarMatrix quadric_relation_at(const EliminationResult& r, const CoefficientTriple& coeffs) {
  return evaluate(r.quadric_relation, coeffs.point());
}

/// Dimension of the space of linear relations among the seven b-products.
inline std::size_t quadric_kernel_dimension(const EliminationResult& r, const CoefficientTriple& coeffs) {
  return kernel_basis(quadric_relation_at(r, coeffs).transposed()).size();
}

/// The unique (up to scale) relation v with sum_k v_k * row_k = 0.
inline Vector quadric_Q(const EliminationResult& r, const CoefficientTriple& coeffs) {
  auto kernel = kernel_basis(quadric_relation_at(r, coeffs).transposed());
  if (kernel.size() != 1) throw KernelNotUnique(kernel.size());
  return std::move(kernel.front());
}

// --- intersection numbers ---------------------------------------------------------

/// Z[h1..h4] / (h1^2, ..., h4^2): the Chow ring of (P^1)^4.
class ChowRing {
 public:
  using Element = std::map<unsigned, long long>;  // square-free monomial mask -> coefficient

  static Element generator(unsigned k) { return {{1U << k, 1}}; }
  static Element hyperplane() {
    Element h;
    for (unsigned k = 0; k < 4; ++k) h[1U << k] = 1;
    return h;
  }
  static Element one() { return {{0U, 1}}; }

  static Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        if ((ma & mb) != 0) continue;
        out[ma | mb] += ca * cb;
      }
    }
    return out;
  }

  static Element power(const Element& a, unsigned n) {
    Element r = one();
    for (unsigned k = 0; k < n; ++k) r = multiply(r, a);
    return r;
  }

  /// Degree of a top class: coefficient of h1 h2 h3 h4.
  static long long degree(const Element& a) {
    auto it = a.find(0xFU);
    return it == a.end() ? 0 : it->second;
  }
};

struct GenusReport {
  long long chow_coefficient = 0;                  // H^4
  std::array<long long, 4> factor_degrees{};       // H^3 h_j
  long long genus = 0;

  bool passed() const { return chow_coefficient == 24 && genus == 13; }
};

/// A complete intersection of three divisors of class H = h1+..+h4 has
/// canonical class H restricted to it (adjunction, K = -2H), so
/// 2g - 2 = H^4.
inline GenusReport genus_check() {
  GenusReport r;
  const auto h = ChowRing::hyperplane();
  const auto h3 = ChowRing::power(h, 3);
  r.chow_coefficient = ChowRing::degree(ChowRing::multiply(h3, h));
  for (unsigned j = 0; j < 4; ++j) {
    r.factor_degrees[j] = ChowRing::degree(ChowRing::multiply(h3, ChowRing::generator(j)));
  }
  r.genus = (r.chow_coefficient + 2) / 2;
  return r;
}

// --- fixed points of sigma ----------------------------------------------------------

enum class FpfVerdict { CertifiedEmpty, Inconclusive };

inline const char* to_string(FpfVerdict v) {
  return v == FpfVerdict::CertifiedEmpty ? "CertifiedEmpty" : "Inconclusive";
}

/// f1 = a4 - (A.a), f2 = a5 - (B.a), f3 = a6 - (C.a) in the formal variables.
inline std::array<Polynomial, 3> defining_forms(const CoefficientTriple& coeffs) {
  const auto& reg = eigen_registry();
  auto v = [&](int k) { return Polynomial::variable(reg, "a" + std::to_string(k)); };
  auto form = [&](int target, const std::array<Rational, 3>& c) {
    return v(target) - (GaussianRational(c[0]) * v(1) + GaussianRational(c[1]) * v(2) +
                        GaussianRational(c[2]) * v(3));
  };
  return {form(4, coeffs.A), form(5, coeffs.B), form(6, coeffs.C)};
}

struct FixedPointReport {
  FpfVerdict verdict = FpfVerdict::Inconclusive;
  std::array<Polynomial, 3> restricted;
  BinaryForm r12;
  BinaryForm r13;
  CommonZeroAnalysis analysis;
};

/// Sigma has a fixed point on {f1 = f2 = f3 = 0} only where sigma^2 does,
/// i.e. on the diagonal. Restricts the forms there and certifies that they
/// have no common zero on P^1 x P^1 via t-block resultants.
inline FixedPointReport fixed_point_free_check(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3) {
  FixedPointReport rep;
  std::map<std::string, Polynomial> to_diagonal;
  for (int k = 1; k <= 6; ++k) {
    const std::string name = "a" + std::to_string(k);
    to_diagonal.emplace(name, restrict_to_diagonal(generator(name)));
  }
  const std::array<const Polynomial*, 3> fs = {&f1, &f2, &f3};
  std::vector<BidegreeForm> forms;
  for (std::size_t k = 0; k < 3; ++k) {
    rep.restricted[k] = rebase(substitute(rebase(*fs[k], eigen_registry()), to_diagonal), diagonal_registry());
    forms.push_back(diagonal_form(rep.restricted[k]));
  }
  rep.r12 = t_block_resultant(forms[0], forms[1]);
  rep.r13 = t_block_resultant(forms[0], forms[2]);
  const std::array<BinaryForm, 2> rs = {rep.r12, rep.r13};
  rep.analysis = common_zero_analysis(rs);
  const bool degenerate = std::any_of(rep.restricted.begin(), rep.restricted.end(),
                                      [](const Polynomial& p) { return p.is_zero(); });
  rep.verdict = (!degenerate && rep.analysis.certified_empty) ? FpfVerdict::CertifiedEmpty
                                                              : FpfVerdict::Inconclusive;
  return rep;
}

inline FixedPointReport fixed_point_free_check(const CoefficientTriple& coeffs) {
  const auto f = defining_forms(coeffs);
  return fixed_point_free_check(f[0], f[1], f[2]);
}

// --- independence of the c_i d_j ----------------------------------------------------

struct IndependenceReport {
  Verdict verdict = Verdict::Fail;
  GaussianRational value;        // det M polynomial evaluated at the triple
  GaussianRational scalar_det;   // determinant of the evaluated M
  GaussianRational full_det;     // determinant of the evaluated 9 x 9 matrix
};

inline IndependenceReport independence_certificate(const Polynomial& det_m, const EliminationResult& symbolic,
                                                   const CoefficientTriple& coeffs) {
  IndependenceReport r;
  const Point p = coeffs.point();
  r.value = evaluate(det_m, p);
  r.scalar_det = det_bareiss(evaluate(symbolic.M, p));
  r.full_det = det_bareiss(evaluate(symbolic.full, p));
  const bool consistent = r.value == r.scalar_det && (r.full_det == r.value || r.full_det == -r.value);
  r.verdict = (consistent && !r.value.is_zero()) ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace model
}  // namespace weilcert
