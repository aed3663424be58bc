#pragma once

// Sylvester resultants and common-zero analysis for forms on P^1 x P^1.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/linalg.hpp"
#include "weilcert/multipoly.hpp"

namespace weilcert {

/// Sylvester resultant with explicit formal degrees. A leading coefficient
/// that vanishes is kept in the matrix, so the result is the resultant of
/// the homogenizations of f and g of those degrees.
inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var,
                                      std::size_t deg_f, std::size_t deg_g) {
  if (!same_registry(f.registry(), g.registry())) throw RegistryMismatch();
  const RegistryPtr& reg = f.registry();
  if (deg_f == 0 || deg_g == 0) throw DegreeZero(reg->name(var));
  if (f.degree_in(var) > deg_f || g.degree_in(var) > deg_g) {
    throw Error("formal degree below actual degree in " + reg->name(var));
  }
  const auto fc = coefficients_in(f, var, deg_f + 1);
  const auto gc = coefficients_in(g, var, deg_g + 1);
  const std::size_t n = deg_f + deg_g;
  PolyMatrix s(n, n, Polynomial(reg));
  for (std::size_t r = 0; r < deg_g; ++r) {
    for (std::size_t k = 0; k <= deg_f; ++k) s(r, r + k) = fc[deg_f - k];
  }
  for (std::size_t r = 0; r < deg_f; ++r) {
    for (std::size_t k = 0; k <= deg_g; ++k) s(deg_g + r, r + k) = gc[deg_g - k];
  }
  return det_bareiss(std::move(s));
}

inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  const std::size_t k = f.registry()->require(var);
  const std::size_t df = f.degree_in(k);
  const std::size_t dg = g.degree_in(k);
  if (df == 0 || dg == 0) throw DegreeZero(std::string(var));
  return sylvester_resultant(f, g, k, df, dg);
}

namespace detail {

using Dense = std::vector<GaussianRational>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Dense remainder(Dense a, const Dense& b) {
  trim(a);
  const GaussianRational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const GaussianRational f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace detail

/// Monic gcd of univariate dense polynomials (lowest degree first).
inline std::vector<GaussianRational> univariate_gcd(std::vector<GaussianRational> a,
                                                    std::vector<GaussianRational> b) {
  detail::trim(a);
  detail::trim(b);
  while (!b.empty()) {
    auto r = detail::remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const GaussianRational inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

/// A binary form of the given degree on P^1, stored dehomogenized at the
/// first coordinate. Roots at infinity show up as a degree drop.
struct BinaryForm {
  Polynomial affine;
  std::size_t var = 0;
  std::size_t degree = 0;

  bool is_zero() const { return affine.is_zero(); }
  bool vanishes_at_infinity() const { return affine.is_zero() || affine.degree_in(var) < degree; }
};

/// Dehomogenized bihomogeneous form of bidegree (s_degree, t_degree) on
/// P^1 x P^1 with affine coordinates s = s1/s0 and t = t1/t0.
struct BidegreeForm {
  Polynomial poly;
  std::size_t s_var = 0;
  std::size_t t_var = 1;
  std::size_t s_degree = 0;
  std::size_t t_degree = 0;

  BidegreeForm(Polynomial p, std::size_t s, std::size_t t, std::size_t ds, std::size_t dt)
      : poly(std::move(p)), s_var(s), t_var(t), s_degree(ds), t_degree(dt) {
    for (const auto& [m, c] : poly.terms()) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k != s_var && k != t_var && m[k] != 0) throw Error("bidegree form involves a foreign variable");
      }
      if (m[s_var] > s_degree || m[t_var] > t_degree) throw Error("term exceeds the declared bidegree");
    }
  }
};

/// Resultant over the t-block; a binary form in s of degree
/// dt(g) ds(f) + dt(f) ds(g).
inline BinaryForm t_block_resultant(const BidegreeForm& f, const BidegreeForm& g) {
  return {sylvester_resultant(f.poly, g.poly, f.t_var, f.t_degree, g.t_degree), f.s_var,
          g.t_degree * f.s_degree + f.t_degree * g.s_degree};
}

struct CommonZeroAnalysis {
  bool certified_empty = false;
  std::size_t informative_forms = 0;  // nonzero forms that entered the gcd
  std::vector<GaussianRational> affine_gcd;
  bool common_root_at_infinity = false;
};

/// Certifies that binary forms have no common projective root: the gcd of
/// the affine parts is constant and not all of them drop degree. Zero forms
/// carry no information and are skipped.
inline CommonZeroAnalysis common_zero_analysis(std::span<const BinaryForm> forms) {
  CommonZeroAnalysis out;
  bool all_infinite = true;
  std::vector<GaussianRational> g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    ++out.informative_forms;
    all_infinite = all_infinite && f.vanishes_at_infinity();
    g = out.informative_forms == 1 ? univariate_gcd(dense_coefficients(f.affine, f.var), {})
                                   : univariate_gcd(std::move(g), dense_coefficients(f.affine, f.var));
  }
  if (out.informative_forms == 0) return out;
  out.affine_gcd = g;
  out.common_root_at_infinity = all_infinite;
  out.certified_empty = g.size() == 1 && !all_infinite;
  return out;
}

}  // namespace weilcert
