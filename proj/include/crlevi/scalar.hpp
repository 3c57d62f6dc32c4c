#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "crlevi/errors.hpp"

namespace crlevi {

/// Arbitrary precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& r) { return sgn(r); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Parses `[+-]nat[/nat]`; returns nullopt when `s` is not of that form.
inline std::optional<Rational> try_parse_rational(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

}  // namespace detail

/// Parses a rational literal such as `-3/4` or `7`.
inline Rational parse_rational(std::string_view s) {
  auto r = detail::try_parse_rational(s);
  if (!r) throw ValidationError("not a rational number: \"" + std::string(s) + "\"");
  return *r;
}

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}             // NOLINT
  GaussianRational(int re) : re_(re) {}              // NOLINT
  GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: `a/b`, `c/d*i`, `a/b+c/d*i`; `i` stands for `1*i`.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
      Rational mag = abs(im_);
      if (sgn(im_) < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      out += mag == 1 ? std::string("i") : mag.get_str() + "*i";
    }
    return out;
  }

  /// Inverse of to_string(); also accepts non-canonical signs such as `+3`.
  static GaussianRational parse(std::string_view s) {
    auto fail = [&] {
      return ValidationError("not a Gaussian rational: \"" + std::string(s) + "\"");
    };
    if (s.empty()) throw fail();
    if (s.back() != 'i') return GaussianRational(parse_rational(s));

    // Split off the imaginary part at the last sign that is not the first char.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    std::string_view re_part = split == std::string_view::npos ? "" : s.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
    im_part.remove_suffix(1);  // the 'i'
    Rational im;
    bool negative = false;
    if (!im_part.empty() && (im_part.front() == '+' || im_part.front() == '-')) {
      negative = im_part.front() == '-';
      im_part.remove_prefix(1);
    }
    if (im_part.empty()) {
      im = 1;
    } else {
      if (im_part.back() != '*') throw fail();
      im_part.remove_suffix(1);
      if (im_part.empty() || im_part.front() == '+' || im_part.front() == '-') throw fail();
      auto v = detail::try_parse_rational(im_part);
      if (!v) throw fail();
      im = *v;
    }
    if (negative) im = -im;
    Rational re;
    if (!re_part.empty()) {
      auto v = detail::try_parse_rational(re_part);
      if (!v) throw fail();
      re = *v;
    }
    return {re, im};
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::string to_string(const GaussianRational& g) { return g.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
  return os << g.to_string();
}

inline GaussianRational conj(const GaussianRational& g) { return g.conj(); }

}  // namespace crlevi
