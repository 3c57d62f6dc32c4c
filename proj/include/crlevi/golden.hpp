#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "crlevi/almost_structures.hpp"
#include "crlevi/embedded_cr.hpp"
#include "crlevi/homogeneous_cr.hpp"
#include "crlevi/inertia.hpp"
#include "crlevi/parser.hpp"

namespace crlevi {

struct GoldenResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace golden {

inline GaussianRational small_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline ParamLevi su24() {
  auto pb = su24_reference_bases();
  return param_levi(builtin_su24_flag(), pb.t10, pb.quotient);
}

inline ParamLevi so16() {
  auto pb = so16_reference_bases();
  return param_levi(builtin_so16_quadric(), pb.t10, pb.quotient);
}

inline std::vector<std::pair<std::string, std::function<bool()>>> checks() {
  std::vector<std::pair<std::string, std::function<bool()>>> out;

  out.emplace_back("su24: q is a subalgebra and dim(q cap sigma q) = dim q - 3", [] {
    CRAlgebra A = builtin_su24_flag();
    auto c = check_cr_algebra(A);
    return c.is_subalgebra && c.q_cap_conj_basis.size() + 3 == A.q_basis().size();
  });
  out.emplace_back("su24: type (3,8)", [] { return cr_type(builtin_su24_flag()) == CRType{3, 8}; });
  out.emplace_back("su24: Levi matrix shape", [] {
    ParamLevi L = su24();
    bool ok = L.n == 3 && L.entry_string(0, 0) == "0" && L.entry_string(0, 1) == "i*w1" && L.entry_string(0, 2) == "i*w2";
    ok = ok && L.entry_string(1, 1) == L.entry_string(2, 2) && L.entry_string(1, 1) == "-t2";
    ok = ok && L.entry_string(1, 2) == "0" && L.params[L.param_index("t2")].kind == LeviParam::Kind::Real;
    return ok;
  });
  out.emplace_back("su24: Levi form vanishes on the 3-plane w1 = w2 = t2 = 0", [] {
    ParamLevi L = su24();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
      HermitianMatrix h = specialize(L, {{"w1", 0}, {"w2", 0}, {"t2", 0}, {"w3", small_gaussian(rng)}, {"t1", GaussianRational(small_rational(rng))}});
      if (!h.matrix().is_zero()) return false;
    }
    return true;
  });
  out.emplace_back("su24: nondegenerate scalar Levi forms are indefinite", [] {
    ParamLevi L = su24();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
      Signature s = inertia(specialize(L, {{"w1", small_gaussian(rng)}, {"w2", small_gaussian(rng)}, {"w3", small_gaussian(rng)},
                                           {"t1", GaussianRational(small_rational(rng))}, {"t2", GaussianRational(small_rational(rng))}}));
      if (s.n_zero == 0 && (s.n_pos == 0 || s.n_neg == 0)) return false;
    }
    return true;
  });
  out.emplace_back("so16: basis satisfies z_ij = -z_(8-j)(8-i)", [] {
    CRAlgebra A = builtin_so16_quadric();
    for (const auto& x : A.q_basis())
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
          if (!(x(i, j) == -x(6 - j, 6 - i))) return false;
    return true;
  });
  out.emplace_back("so16: type (4,3)", [] { return cr_type(builtin_so16_quadric()) == CRType{4, 3}; });
  out.emplace_back("so16: Levi matrix equals the reference form up to a diagonal unit congruence", [] {
    ParamLevi L = so16();
    const GaussianRational i = GaussianRational::i();
    CMatrix d = CMatrix::identity(4);
    d(3, 3) = -i;
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
      GaussianRational w = small_gaussian(rng), tt(small_rational(rng));
      CMatrix p(4, 4);
      p(0, 3) = w, p(1, 3) = tt, p(2, 3) = w.conj(), p(3, 0) = w.conj(), p(3, 1) = tt, p(3, 2) = w;
      if (!(specialize(L, {{"w", w}, {"t", tt}}).matrix() == d.adjoint() * (-p) * d)) return false;
    }
    return true;
  });
  out.emplace_back("so16: signature (+,-,0,0) at w=1,t=0 and w=0,t=1", [] {
    ParamLevi L = so16();
    return inertia(specialize(L, {{"w", 1}, {"t", 0}})) == Signature{1, 2, 1} && inertia(specialize(L, {{"w", 0}, {"t", 1}})) == Signature{1, 2, 1};
  });
  out.emplace_back("so16: every nonzero scalar Levi form has signature (+,-,0,0)", [] {
    ParamLevi L = so16();
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
      GaussianRational w = small_gaussian(rng), tt(small_rational(rng));
      if (w.is_zero() && tt.is_zero()) continue;
      if (!(inertia(specialize(L, {{"w", w}, {"t", tt}})) == Signature{1, 2, 1})) return false;
    }
    return inertia(specialize(L, {{"w", 0}, {"t", 0}})) == Signature{0, 4, 0};
  });
  out.emplace_back("change of base: Levi value of aX + bJX is (a^2 + b^2) times that of X", [] {
    EmbeddedCR M(3, {parse_wpoly("(z3 - zbar3)*(-1/2)*i - z1*zbar1 + z2*zbar2", 3)});
    PointData pd = analyze_point(M, {0, 0, 0});
    ConormalCovector xi{{1}};
    AlmostCRFrame h = rigid_hypersurface_frame(parse_wpoly("z1*zbar1", 1), {0, 0, 0});
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
      std::vector<GaussianRational> z{small_gaussian(rng), small_gaussian(rng)};
      Rational a = small_rational(rng), b = small_rational(rng);
      GaussianRational f(a, b);
      std::vector<GaussianRational> fz{f * z[0], f * z[1]};
      if (levi_value(M, pd, xi, fz) != f.norm() * levi_value(M, pd, xi, z)) return false;
      std::vector<Rational> one{1}, e1{1, 0}, ab{a, b};
      std::vector<GaussianRational> x0{0, 0, 0};
      if (abstract_levi(h, x0, one, ab) != (a * a + b * b) * abstract_levi(h, x0, one, e1)) return false;
    }
    return true;
  });
  out.emplace_back("sphere in C^3: signature (2,0,0)", [] {
    EmbeddedCR s(3, {parse_wpoly("z1*zbar1 + z2*zbar2 + z3*zbar3 - 1", 3)});
    PointData pd = analyze_point(s, {1, 0, 0});
    return levi_signature(s, pd, {{1}}) == Signature{2, 0, 0};
  });
  out.emplace_back("Heisenberg frame satisfies (cr2) and (cr3)", [] {
    auto r = partial_integrability(rigid_hypersurface_frame(parse_wpoly("z1*zbar1 + z2*zbar2", 2), {0, 0, 0, 0, 0}));
    return r.cr2 && r.cr3;
  });
  return out;
}

}  // namespace golden

/// Runs the built-in goldens; errors count as failures.
inline std::vector<GoldenResult> run_golden_suite() {
  std::vector<GoldenResult> out;
  for (const auto& [name, check] : golden::checks()) {
    GoldenResult r{name, false, ""};
    try {
      r.ok = check();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace crlevi
