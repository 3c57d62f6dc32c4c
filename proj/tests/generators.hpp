#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crlevi/matrix.hpp"
#include "crlevi/poly.hpp"

namespace gen {

using namespace crlevi;

// Small seeded generators for property tests. Values stay small so exact
// arithmetic remains cheap.
class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span = 5, long max_den = 4) {
    Rational r(integer(-span, span), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long span = 5, long max_den = 4) {
    Rational r;
    do r = rational(span, max_den);
    while (sgn(r) == 0);
    return r;
  }
  GaussianRational gaussian(long span = 3, long max_den = 3) { return {rational(span, max_den), rational(span, max_den)}; }

  HermitianMatrix hermitian(std::size_t n, long span = 3) {
    CMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      a(r, r) = GaussianRational(rational(span, 2));
      for (std::size_t c = r + 1; c < n; ++c) {
        a(r, c) = coin() ? GaussianRational() : gaussian(span, 2);
        a(c, r) = a(r, c).conj();
      }
    }
    return HermitianMatrix(std::move(a));
  }

  // Hermitian matrix with a prescribed rank deficiency pattern: P* D P with
  // D diagonal containing zeros, exercising singular cases.
  HermitianMatrix degenerate_hermitian(std::size_t n) {
    CMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r) d(r, r) = GaussianRational(Rational(integer(-2, 2)));
    CMatrix p = invertible(n);
    return HermitianMatrix(p.adjoint() * d * p);
  }

  CMatrix matrix(std::size_t rows, std::size_t cols, long span = 3) {
    CMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = coin() ? gaussian(span, 2) : GaussianRational();
    return a;
  }

  // Unit lower triangular times unit upper triangular with a random row
  // permutation: always invertible.
  CMatrix invertible(std::size_t n) {
    CMatrix l = CMatrix::identity(n), u = CMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) {
        l(r, c) = gaussian(2, 2);
        u(c, r) = gaussian(2, 2);
      }
    for (std::size_t r = 0; r < n; ++r) u(r, r) = GaussianRational(nonzero_rational(3, 2), rational(2, 2));
    CMatrix a = l * u;
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng_);
    return select_rows(a, perm);
  }

  Poly poly(std::size_t nvars, unsigned max_degree = 3, std::size_t terms = 4, bool real_coeffs = false) {
    Poly p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
      Exponents e(nvars, 0);
      unsigned budget = static_cast<unsigned>(integer(0, max_degree));
      for (unsigned b = 0; b < budget; ++b) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
      p += Poly::monomial(e, real_coeffs ? GaussianRational(rational(4, 3)) : gaussian(3, 3));
    }
    return p;
  }

  WPoly wpoly(std::size_t m, unsigned max_degree = 3, std::size_t terms = 4) { return {m, poly(2 * m, max_degree, terms)}; }

  WPoly real_wpoly(std::size_t m, unsigned max_degree = 3, std::size_t terms = 3) {
    WPoly p = wpoly(m, max_degree, terms);
    return (p + conj_poly(p)) * GaussianRational(Rational(1, 2));
  }

  PointC point(std::size_t m, long span = 2) {
    PointC x;
    for (std::size_t k = 0; k < m; ++k) x.push_back(gaussian(span, 2));
    return x;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
