#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "crlevi/errors.hpp"
#include "crlevi/scalar.hpp"

namespace crlevi {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded lexicographic order, largest monomial first: higher total degree
/// wins, ties broken by the first differing exponent.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients in a
/// fixed number of commuting variables. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponents, GaussianRational, GradedLexGreater>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const GaussianRational& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw IndexOutOfRange("variable index " + std::to_string(index) + " >= " + std::to_string(nvars));
    Exponents e(nvars, 0);
    e[index] = 1;
    Poly p(nvars);
    p.add_term(e, 1);
    return p;
  }
  static Poly monomial(const Exponents& e, const GaussianRational& c) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  unsigned degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const GaussianRational& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent length " + std::to_string(e.size()) + " for " + std::to_string(nvars_) + " variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GaussianRational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  Poly& operator+=(const Poly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  Poly operator-() const {
    Poly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
  friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same(b);
    Poly p(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned n) const {
    Poly result = constant(nvars_, 1);
    Poly base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  /// Formal partial derivative with respect to variable `index`.
  Poly derivative(std::size_t index) const {
    if (index >= nvars_) throw IndexOutOfRange("derivative index " + std::to_string(index) + " >= " + std::to_string(nvars_));
    Poly d(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents de = e;
      de[index] -= 1;
      d.add_term(de, c * GaussianRational(static_cast<long>(e[index])));
    }
    return d;
  }

  GaussianRational eval(std::span<const GaussianRational> values) const {
    if (values.size() != nvars_) throw DimensionMismatch("eval with " + std::to_string(values.size()) + " values for " + std::to_string(nvars_) + " variables");
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
      GaussianRational t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (unsigned p = 0; p < e[k]; ++p) t *= values[k];
      sum += t;
    }
    return sum;
  }

  /// Composition: replaces variable k by images[k]. All images share one
  /// variable count, which becomes the variable count of the result.
  Poly substitute(std::span<const Poly> images) const {
    if (images.size() != nvars_) throw DimensionMismatch("substitute needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    Poly out(target);
    std::vector<std::vector<Poly>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(target, c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(constant(target, 1));
        while (cache.size() <= e[k]) cache.push_back(cache.back() * images[k]);
        t *= cache[e[k]];
      }
      out += t;
    }
    return out;
  }

  /// Applies `f` to every coefficient, dropping terms that become zero.
  Poly map_coefficients(const std::function<GaussianRational(const GaussianRational&)>& f) const {
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) p.add_term(e, f(c));
    return p;
  }

  /// Reorders variables: variable k of this polynomial becomes variable perm[k].
  Poly permute_variables(std::span<const std::size_t> perm, std::size_t target_nvars) const {
    Poly p(target_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents pe(target_nvars, 0);
      for (std::size_t k = 0; k < e.size(); ++k) pe[perm[k]] += e[k];
      p.add_term(pe, c);
    }
    return p;
  }

  bool has_real_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

 private:
  void require_same(const Poly& o) const {
    if (nvars_ != o.nvars_)
      throw DimensionMismatch("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) + " variables");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Printing

/// Maps a variable index to its printed name.
using VariableNames = std::function<std::string(std::size_t)>;

inline VariableNames real_variable_names() {
  return [](std::size_t k) { return "x" + std::to_string(k + 1); };
}

namespace detail {

inline std::string coefficient_factor(const GaussianRational& c) {
  // c is nonzero and has a positive leading part once the sign is factored out.
  if (c.is_real()) {
    const Rational& r = c.re();
    return r.get_den() == 1 ? r.get_str() : "(" + r.get_str() + ")";
  }
  if (sgn(c.re()) == 0) {
    const Rational& s = c.im();
    if (s == 1) return "i";
    return (s.get_den() == 1 ? s.get_str() : "(" + s.get_str() + ")") + "*i";
  }
  return "(" + c.to_string() + ")";
}

// Whether the coefficient is printed with a leading minus sign.
inline bool negative_lead(const GaussianRational& c) {
  if (sgn(c.re()) != 0) return sgn(c.re()) < 0 && c.is_real();
  return sgn(c.im()) < 0;
}

}  // namespace detail

/// Canonical text: terms in graded-lex order, `*` products, `^` powers.
inline std::string format_poly(const Poly& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c0] : p.terms()) {
    bool neg = detail::negative_lead(c0);
    GaussianRational c = neg ? -c0 : c0;
    if (neg)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::vector<std::string> factors;
    bool constant = total_degree(e) == 0;
    if (!(c == GaussianRational(1)) || constant) factors.push_back(detail::coefficient_factor(c));
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      factors.push_back(e[k] == 1 ? names(k) : names(k) + "^" + std::to_string(e[k]));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wirtinger polynomials: variables z1..zm followed by zbar1..zbarm.

/// Polynomial in the independent formal variables z_1..z_m, zbar_1..zbar_m.
class WPoly {
 public:
  WPoly() = default;
  explicit WPoly(std::size_t m) : m_(m), p_(2 * m) {}
  WPoly(std::size_t m, Poly p) : m_(m), p_(std::move(p)) {
    if (p_.nvars() != 2 * m_) throw DimensionMismatch("WPoly needs 2m variables");
  }

  static WPoly constant(std::size_t m, const GaussianRational& c) { return {m, Poly::constant(2 * m, c)}; }
  /// z_mu, 1-based.
  static WPoly z(std::size_t m, std::size_t mu) {
    check_index(m, mu);
    return {m, Poly::variable(2 * m, mu - 1)};
  }
  /// zbar_mu, 1-based.
  static WPoly zbar(std::size_t m, std::size_t mu) {
    check_index(m, mu);
    return {m, Poly::variable(2 * m, m + mu - 1)};
  }

  std::size_t m() const { return m_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  unsigned degree() const { return p_.degree(); }

  WPoly& operator+=(const WPoly& o) { return p_ += same(o).p_, *this; }
  WPoly& operator-=(const WPoly& o) { return p_ -= same(o).p_, *this; }
  WPoly& operator*=(const WPoly& o) { return p_ *= same(o).p_, *this; }
  WPoly& operator*=(const GaussianRational& s) { return p_ *= s, *this; }
  WPoly operator-() const { return {m_, -p_}; }
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(WPoly a, const WPoly& b) { return a *= b; }
  friend WPoly operator*(WPoly a, const GaussianRational& s) { return a *= s; }
  friend WPoly operator*(const GaussianRational& s, WPoly a) { return a *= s; }
  WPoly pow(unsigned n) const { return {m_, p_.pow(n)}; }

  friend bool operator==(const WPoly& a, const WPoly& b) { return a.m_ == b.m_ && a.p_ == b.p_; }

  static void check_index(std::size_t m, std::size_t mu) {
    if (mu < 1 || mu > m) throw IndexOutOfRange("index " + std::to_string(mu) + " outside 1.." + std::to_string(m));
  }

 private:
  const WPoly& same(const WPoly& o) const {
    if (o.m_ != m_) throw DimensionMismatch("WPoly dimensions differ");
    return o;
  }

  std::size_t m_ = 0;
  Poly p_;
};

/// Ordered point (z_1..z_m) of C^m.
using PointC = std::vector<GaussianRational>;

inline VariableNames wirtinger_names(std::size_t m) {
  return [m](std::size_t k) { return k < m ? "z" + std::to_string(k + 1) : "zbar" + std::to_string(k - m + 1); };
}

inline std::string to_string(const WPoly& p) { return format_poly(p.poly(), wirtinger_names(p.m())); }

/// d/dz_mu with z and zbar treated as independent variables (1-based mu).
inline WPoly wirtinger_d(const WPoly& p, std::size_t mu) {
  WPoly::check_index(p.m(), mu);
  return {p.m(), p.poly().derivative(mu - 1)};
}

/// d/dzbar_nu (1-based nu).
inline WPoly wirtinger_dbar(const WPoly& p, std::size_t nu) {
  WPoly::check_index(p.m(), nu);
  return {p.m(), p.poly().derivative(p.m() + nu - 1)};
}

/// Conjugates coefficients and swaps z with zbar exponents.
inline WPoly conj_poly(const WPoly& p) {
  const std::size_t m = p.m();
  Poly out(2 * m);
  for (const auto& [e, c] : p.poly().terms()) {
    Exponents s(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
      s[k] = e[m + k];
      s[m + k] = e[k];
    }
    out.add_term(s, c.conj());
  }
  return {m, out};
}

/// True iff p takes real values when zbar is evaluated at conj(z).
inline bool is_real_valued(const WPoly& p) { return conj_poly(p) == p; }

/// Holomorphic polynomials involve no zbar variable.
inline bool is_holomorphic(const WPoly& p) {
  const std::size_t m = p.m();
  for (const auto& [e, c] : p.poly().terms())
    for (std::size_t k = 0; k < m; ++k)
      if (e[m + k] != 0) return false;
  return true;
}

/// Substitutes z_mu <- x_mu and zbar_mu <- conj(x_mu).
inline GaussianRational eval(const WPoly& p, const PointC& x) {
  if (x.size() != p.m()) throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, polynomial lives in C^" + std::to_string(p.m()));
  std::vector<GaussianRational> values(x.begin(), x.end());
  for (const auto& v : x) values.push_back(v.conj());
  return p.poly().eval(values);
}

/// Substitutes a holomorphic map: z_mu <- phi[mu], zbar_mu <- conj(phi[mu]).
inline WPoly compose_holomorphic(const WPoly& p, std::span<const WPoly> phi) {
  std::vector<Poly> images;
  images.reserve(2 * phi.size());
  for (const auto& f : phi) images.push_back(f.poly());
  for (const auto& f : phi) images.push_back(conj_poly(f).poly());
  const std::size_t target = phi.empty() ? 0 : phi.front().m();
  return {target, p.poly().substitute(images)};
}

/// Real-coordinate view: z_mu = x_mu + i y_mu. The result is a polynomial in
/// 2m variables ordered x_1..x_m, y_1..y_m.
inline Poly to_real_coordinates(const WPoly& p) {
  const std::size_t m = p.m();
  std::vector<Poly> images;
  for (std::size_t k = 0; k < m; ++k)
    images.push_back(Poly::variable(2 * m, k) + GaussianRational::i() * Poly::variable(2 * m, m + k));
  for (std::size_t k = 0; k < m; ++k)
    images.push_back(Poly::variable(2 * m, k) - GaussianRational::i() * Poly::variable(2 * m, m + k));
  return p.poly().substitute(images);
}

}  // namespace crlevi
