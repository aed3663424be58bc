#pragma once

// Sparse multivariate polynomials over Q(i).
//
// Every polynomial carries a shared VariableRegistry; monomials are dense
// exponent vectors indexed by the registry. Terms are kept in a std::map
// ordered by descending graded-lexicographic order, so iteration (and the
// canonical rendering) is deterministic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/exactnum.hpp"

namespace weilcert {

class VariableRegistry {
 public:
  explicit VariableRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t k = 0; k < names_.size(); ++k) {
      if (!index_.emplace(names_[k], k).second) {
        throw Error("duplicate variable name '" + names_[k] + "'");
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require(std::string_view name) const {
    auto k = index_of(name);
    if (!k) throw UnknownVariable(std::string(name));
    return *k;
  }

  friend bool operator==(const VariableRegistry& a, const VariableRegistry& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

inline RegistryPtr make_registry(std::vector<std::string> names) {
  return std::make_shared<const VariableRegistry>(std::move(names));
}

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  return a == b || (a && b && *a == *b);
}

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
  std::uint32_t& operator[](std::size_t k) { return exps_[k]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] > other.exps_[k]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.exps_[k] = a.exps_[k] + b.exps_[k];
    return r;
  }
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.exps_[k] = a.exps_[k] - b.exps_[k];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Strict "a comes before b": higher total degree first, then lexicographic
/// on exponents in registry order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}
  Polynomial(RegistryPtr reg, const GaussianRational& c) : reg_(std::move(reg)) {
    if (!c.is_zero()) terms_.emplace(Monomial(reg_->size()), c);
  }

  static Polynomial variable(RegistryPtr reg, std::string_view name) {
    const std::size_t k = reg->require(name);
    Monomial m(reg->size());
    m[k] = 1;
    Polynomial p(std::move(reg));
    p.terms_.emplace(std::move(m), GaussianRational(1));
    return p;
  }

  static Polynomial monomial(RegistryPtr reg, Monomial m, const GaussianRational& c = 1) {
    Polynomial p(std::move(reg));
    p.add_term(std::move(m), c);
    return p;
  }

  const RegistryPtr& registry() const noexcept { return reg_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  GaussianRational constant_term() const {
    if (!reg_) return {};
    auto it = terms_.find(Monomial(reg_->size()));
    return it == terms_.end() ? GaussianRational() : it->second;
  }
  GaussianRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  std::uint32_t degree_in(std::string_view var) const { return degree_in(reg_->require(var)); }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.total_degree(); }

  /// Indices of the variables that occur with positive exponent.
  std::vector<std::size_t> support() const {
    std::vector<bool> used(reg_ ? reg_->size() : 0, false);
    for (const auto& [m, c] : terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) used[k] = used[k] || m[k] > 0;
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k]) out.push_back(k);
    }
    return out;
  }

  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.checked_registry(b));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
  friend Polynomial operator*(const GaussianRational& s, Polynomial a) { return a *= s; }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return same_registry(a.reg_, b.reg_) && a.terms_ == b.terms_;
  }

  /// Canonical text: terms in monomial order, "c*v^e*..." with exactnum
  /// coefficients; parses back to the same polynomial.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  const RegistryPtr& checked_registry(const Polynomial& o) const {
    if (!reg_) return o.reg_;
    if (o.reg_ && !same_registry(reg_, o.reg_)) throw RegistryMismatch();
    return reg_;
  }
  void adopt(const Polynomial& o) {
    if (!reg_) {
      reg_ = o.reg_;
      return;
    }
    if (o.reg_ && !same_registry(reg_, o.reg_)) throw RegistryMismatch();
  }

  RegistryPtr reg_;
  TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial poly_neg(const Polynomial& p) { return -p; }

inline Polynomial pow(const Polynomial& base, unsigned exp) {
  Polynomial result(base.registry(), GaussianRational(1));
  Polynomial b = base;
  while (exp != 0) {
    if (exp & 1U) result = result * b;
    exp >>= 1U;
    if (exp != 0) b = b * b;
  }
  return result;
}

namespace detail {

inline std::string render_monomial(const Monomial& m, const VariableRegistry& reg) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += reg.name(k);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = detail::render_monomial(m, *reg_);
    // Split c into a sign and a magnitude when it lies on an axis.
    bool negative = false;
    std::string mag;
    if (c.is_real() || c.re().is_zero()) {
      const Rational& r = c.is_real() ? c.re() : c.im();
      negative = r.sign() < 0;
      const Rational a = r.abs();
      const std::string unit = c.is_real() ? "" : "i";
      if (a.is_one()) {
        mag = c.is_real() ? (mono.empty() ? "1" : "") : unit;
      } else {
        mag = a.to_string() + (unit.empty() ? "" : "*" + unit);
      }
    } else {
      mag = "(" + c.to_string() + ")";
    }
    std::string term = mag;
    if (!mono.empty()) term += (mag.empty() ? "" : "*") + mono;
    if (first) {
      out += (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

/// Exact quotient p / q, or nullopt when q does not divide p.
inline std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return Polynomial(q.registry());
  if (p.registry() && !same_registry(p.registry(), q.registry())) throw RegistryMismatch();
  const auto& [lead_m, lead_c] = *q.terms().begin();
  const GaussianRational lead_inv = lead_c.inverse();
  Polynomial rem = p;
  Polynomial quot(q.registry());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().begin();
    if (!lead_m.divides(rm)) return std::nullopt;
    const Monomial tm = rm / lead_m;
    const GaussianRational tc = rc * lead_inv;
    quot.add_term(tm, tc);
    for (const auto& [qm, qc] : q.terms()) rem.add_term(tm * qm, -(tc * qc));
  }
  return quot;
}

/// Substitution homomorphism x_k -> bindings[x_k]. Unbound variables are
/// carried over by name into the target registry (the common registry of the
/// images, or p's own registry when there are no bindings).
inline Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
  const RegistryPtr& src = p.registry();
  RegistryPtr dst;
  for (const auto& [name, img] : bindings) {
    if (src && !src->index_of(name)) throw UnknownVariable(name);
    if (!img.registry()) continue;
    if (!dst) {
      dst = img.registry();
    } else if (!same_registry(dst, img.registry())) {
      throw RegistryMismatch();
    }
  }
  if (!src) return p;
  if (!dst) dst = src;

  // Image of every source variable that actually occurs.
  std::vector<std::optional<Polynomial>> image(src->size());
  for (std::size_t k : p.support()) {
    auto it = bindings.find(src->name(k));
    if (it != bindings.end()) {
      image[k] = it->second.registry() ? it->second : Polynomial(dst) + it->second;
    } else {
      image[k] = Polynomial::variable(dst, src->name(k));
    }
  }

  std::vector<std::vector<Polynomial>> powers(src->size());
  auto power_of = [&](std::size_t k, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(dst, GaussianRational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[k]);
    return cache[e];
  };

  Polynomial out(dst);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(dst, c);
    for (std::size_t k = 0; k < m.size() && !term.is_zero(); ++k) {
      if (m[k] > 0) term = term * power_of(k, m[k]);
    }
    out += term;
  }
  return out;
}

/// Moves p into another registry by variable name.
inline Polynomial rebase(const Polynomial& p, const RegistryPtr& dst) {
  Polynomial out(dst);
  if (!p.registry()) return out + p;
  std::vector<std::size_t> map(p.registry()->size(), 0);
  for (std::size_t k : p.support()) map[k] = dst->require(p.registry()->name(k));
  for (const auto& [m, c] : p.terms()) {
    Monomial dm(dst->size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] > 0) dm[map[k]] = m[k];
    }
    out.add_term(dm, c);
  }
  return out;
}

using Point = std::map<std::string, GaussianRational>;

inline GaussianRational evaluate(const Polynomial& p, const Point& point) {
  if (p.is_zero()) return {};
  const auto& reg = *p.registry();
  std::vector<std::vector<GaussianRational>> powers(reg.size());
  for (std::size_t k : p.support()) {
    auto it = point.find(reg.name(k));
    if (it == point.end()) throw UnboundVariable(reg.name(k));
    powers[k].push_back(GaussianRational(1));
    powers[k].push_back(it->second);
  }
  GaussianRational out;
  for (const auto& [m, c] : p.terms()) {
    GaussianRational v = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      auto& cache = powers[k];
      while (cache.size() <= m[k]) cache.push_back(cache.back() * cache[1]);
      v *= cache[m[k]];
    }
    out += v;
  }
  return out;
}

/// Partial evaluation: variables bound in `point` are replaced by their
/// values, the rest stay symbolic. The registry is unchanged.
inline Polynomial specialize(const Polynomial& p, const Point& point) {
  if (p.is_zero()) return p;
  const auto& reg = *p.registry();
  std::vector<std::optional<GaussianRational>> value(reg.size());
  for (const auto& [name, v] : point) {
    if (auto k = reg.index_of(name)) value[*k] = v;
  }
  Polynomial out(p.registry());
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    GaussianRational coef = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] > 0 && value[k]) {
        coef *= pow(*value[k], m[k]);
        rest[k] = 0;
      }
    }
    out.add_term(rest, coef);
  }
  return out;
}

struct CoefficientVector {
  std::vector<Polynomial> coefficients;
  Polynomial remainder;
};

/// Writes p = sum coefficients[j] * basis[j] + remainder, where basis
/// monomials only involve the variables in `vars`, each coefficient is free
/// of `vars`, and the remainder has no term whose vars-part is a basis
/// monomial. With `vars` covering the whole registry the coefficients are
/// constants.
inline CoefficientVector coefficient_vector(const Polynomial& p, std::span<const Monomial> basis,
                                            std::span<const std::size_t> vars) {
  CoefficientVector out{std::vector<Polynomial>(basis.size(), Polynomial(p.registry())),
                        Polynomial(p.registry())};
  for (const auto& [m, c] : p.terms()) {
    Monomial head(m.size());
    Monomial rest = m;
    for (std::size_t k : vars) {
      head[k] = m[k];
      rest[k] = 0;
    }
    auto it = std::find(basis.begin(), basis.end(), head);
    if (it == basis.end()) {
      out.remainder.add_term(m, c);
    } else {
      out.coefficients[static_cast<std::size_t>(it - basis.begin())].add_term(rest, c);
    }
  }
  return out;
}

inline CoefficientVector coefficient_vector(const Polynomial& p, std::span<const Monomial> basis) {
  std::vector<std::size_t> all(p.registry() ? p.registry()->size() : 0);
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return coefficient_vector(p, basis, all);
}

/// Coefficients of p viewed as a univariate polynomial in `var`; entry e is
/// the coefficient of var^e. The result has at least `min_len` entries.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var, std::size_t min_len = 0) {
  std::vector<Polynomial> out(std::max<std::size_t>(min_len, p.degree_in(var) + 1),
                              Polynomial(p.registry()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].add_term(rest, c);
  }
  return out;
}

/// Dense univariate coefficient list (lowest degree first) of a polynomial
/// that involves only `var`.
inline std::vector<GaussianRational> dense_coefficients(const Polynomial& p, std::size_t var) {
  std::vector<GaussianRational> out(p.is_zero() ? 0 : p.degree_in(var) + 1);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k != var && m[k] != 0) throw Error("polynomial is not univariate in " + p.registry()->name(var));
    }
    out[m[var]] += c;
  }
  return out;
}

}  // namespace weilcert
