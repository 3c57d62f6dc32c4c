#include <gtest/gtest.h>

#include "crlevi/homogeneous_cr.hpp"
#include "crlevi/inertia.hpp"
#include "generators.hpp"

using namespace crlevi;

namespace {

const GaussianRational I = GaussianRational::i();

CMatrix diag(std::initializer_list<GaussianRational> d) {
  CMatrix m(d.size(), d.size());
  std::size_t k = 0;
  for (const auto& x : d) m(k, k) = x, ++k;
  return m;
}

CMatrix from_rows(std::vector<std::vector<GaussianRational>> rows) {
  CMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<std::vector<std::string>> entry_strings(const ParamLevi& L) {
  std::vector<std::vector<std::string>> out(L.n, std::vector<std::string>(L.n));
  for (std::size_t a = 0; a < L.n; ++a)
    for (std::size_t b = 0; b < L.n; ++b) out[a][b] = L.entry_string(a, b);
  return out;
}

ParamLevi su24_levi() {
  auto pb = su24_reference_bases();
  return param_levi(builtin_su24_flag(), pb.t10, pb.quotient);
}

ParamLevi so16_levi() {
  auto pb = so16_reference_bases();
  return param_levi(builtin_so16_quadric(), pb.t10, pb.quotient);
}

// sl_2 with sigma(X) = -X*: the real form su(2).
Conjugation su2_sigma() { return Conjugation(Conjugation::Flavor::NegStarConj, CMatrix::identity(2)); }

// Stabiliser of the null line <e1> for the form z1 conj(z3) + |z2|^2 + z3 conj(z1).
CRAlgebra sphere_algebra() {
  CMatrix b(3, 3);
  b(0, 2) = b(2, 0) = b(1, 1) = 1;
  std::vector<CMatrix> q;
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t c = 1; c <= 3; ++c)
      if (r != c && c != 1) q.push_back(elementary(3, r, c));
  q.push_back(elementary(3, 1, 1) - elementary(3, 2, 2));
  q.push_back(elementary(3, 2, 2) - elementary(3, 3, 3));
  return CRAlgebra(3, std::move(q), Conjugation(Conjugation::Flavor::NegStarConj, b));
}

}  // namespace

TEST(Conjugation, InvolutiveAndAntilinear) {
  gen::Source src(101);
  CRAlgebra A = builtin_su24_flag();
  for (int t = 0; t < 30; ++t) {
    CMatrix x = src.matrix(6, 6);
    const auto& s = A.sigma();
    EXPECT_EQ(s(s(x)), x);
    EXPECT_EQ(s(I * x), -(I * s(x)));
    CMatrix y = src.matrix(6, 6);
    EXPECT_EQ(s(bracket(x, y)), bracket(s(x), s(y)));
  }
  EXPECT_THROW(Conjugation(Conjugation::Flavor::Entrywise, CMatrix(2, 2)), ValidationError);
}

TEST(CRAlgebra, Validation) {
  EXPECT_THROW(CRAlgebra(2, {elementary(2, 1, 1)}, su2_sigma()), ValidationError);
  EXPECT_THROW(CRAlgebra(2, {elementary(3, 1, 2)}, su2_sigma()), ValidationError);
  EXPECT_THROW(CRAlgebra(2, {elementary(2, 1, 2)}, su2_sigma(), CRAlgebra::Ambient::SO), ValidationError);
  // entrywise sigma squares to conjugation by S conj(S), not the identity here
  CMatrix s = from_rows({{0, 1}, {1, 0}});
  CMatrix bad = from_rows({{1, 1}, {0, 1}});
  CMatrix h = elementary(2, 1, 1) - elementary(2, 2, 2);
  EXPECT_THROW(CRAlgebra(2, {h}, Conjugation(Conjugation::Flavor::Entrywise, bad)), ValidationError);
  EXPECT_NO_THROW(CRAlgebra(2, {elementary(2, 1, 2)}, Conjugation(Conjugation::Flavor::Entrywise, s)));
}

TEST(CheckCRAlgebra, Sl2Examples) {
  CMatrix h = elementary(2, 1, 1) - elementary(2, 2, 2);
  CRAlgebra borel(2, {h, elementary(2, 1, 2)}, Conjugation(Conjugation::Flavor::Entrywise, CMatrix::identity(2)));
  auto c = check_cr_algebra(borel);
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_EQ(c.q_cap_conj_basis.size(), 2u);
  EXPECT_EQ(cr_type(borel), (CRType{0, 1}));

  CRAlgebra split(2, {elementary(2, 1, 2), elementary(2, 2, 1)}, su2_sigma());
  EXPECT_FALSE(check_cr_algebra(split).is_subalgebra);
  EXPECT_THROW(cr_type(split), NotSubalgebra);
  EXPECT_THROW(param_levi(split), NotSubalgebra);

  CRAlgebra dep(2, {elementary(2, 1, 2), elementary(2, 1, 2, 3)}, su2_sigma());
  EXPECT_THROW(check_cr_algebra(dep), DependentBasis);

  // Borel of sl_2 for su(2): the Riemann sphere, complex, so k = 0
  CRAlgebra p1(2, {h, elementary(2, 1, 2)}, su2_sigma());
  EXPECT_EQ(cr_type(p1), (CRType{1, 0}));
  ParamLevi L = param_levi(p1);
  EXPECT_TRUE(L.params.empty());
  EXPECT_EQ(specialize(L, {}).matrix(), CMatrix(1, 1));
}

TEST(CRType, WholeAlgebraIsComplex) {
  std::vector<CMatrix> q;
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t c = 1; c <= 3; ++c)
      if (r != c) q.push_back(elementary(3, r, c));
  q.push_back(elementary(3, 1, 1) - elementary(3, 2, 2));
  q.push_back(elementary(3, 2, 2) - elementary(3, 3, 3));
  CRAlgebra A(3, q, Conjugation(Conjugation::Flavor::NegStarConj, CMatrix::identity(3)));
  EXPECT_EQ(cr_type(A), (CRType{0, 0}));
}

TEST(HomogeneousLevi, AbelianGivesZero) {
  // sigma swaps e2 and e3 entrywise, so sigma(E12) = E13 commutes with E12
  CMatrix s = from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CRAlgebra A(3, {elementary(3, 1, 2)}, Conjugation(Conjugation::Flavor::Entrywise, s));
  EXPECT_EQ(cr_type(A), (CRType{1, 6}));
  ParamLevi L = param_levi(A);
  ASSERT_EQ(L.params.size(), 6u);
  EXPECT_EQ(L.params[0].name, "p1");
  for (const auto& p : L.params) EXPECT_EQ(p.kind, LeviParam::Kind::Real);
  EXPECT_EQ(L.entry_string(0, 0), "0");
}

TEST(HomogeneousLevi, SphereIsDefinite) {
  CRAlgebra A = sphere_algebra();
  EXPECT_EQ(cr_type(A), (CRType{1, 1}));
  ParamLevi L = param_levi(A);
  ASSERT_EQ(L.params.size(), 1u);
  EXPECT_NE(L.entry_string(0, 0), "0");
  EXPECT_EQ(inertia(specialize(L, {{"p1", 1}})).n_zero, 0u);
  EXPECT_EQ(inertia(specialize(L, {{"p1", 0}})), (Signature{0, 1, 0}));
}

TEST(Su24, StructureAndType) {
  CRAlgebra A = builtin_su24_flag();
  EXPECT_EQ(A.q_basis().size(), 24u);
  EXPECT_EQ(A.g_dim(), 35u);
  auto c = check_cr_algebra(A);
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_EQ(c.q_cap_conj_basis.size(), 21u);
  EXPECT_EQ(cr_type(A), (CRType{3, 8}));
  // sigma fixes the Hermitian form: X* B + B X = 0 on fixed points X = (Y + sigma Y)
  CMatrix b = A.sigma().s();
  for (const auto& y : A.q_basis()) {
    CMatrix x = y + A.sigma()(y);
    EXPECT_TRUE((x.adjoint() * b + b * x).is_zero());
  }
}

TEST(Su24, FrozenLeviMatrix) {
  ParamLevi L = su24_levi();
  std::vector<std::string> names;
  for (const auto& p : L.params) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"w1", "w1bar", "w2", "w2bar", "w3", "w3bar", "t1", "t2"}));
  EXPECT_EQ(L.params[6].kind, LeviParam::Kind::Real);
  EXPECT_EQ(L.params[1].kind, LeviParam::Kind::ConjugateOf);
  EXPECT_EQ(entry_strings(L), (std::vector<std::vector<std::string>>{
                                  {"0", "i*w1", "i*w2"}, {"-i*w1bar", "-t2", "0"}, {"-i*w2bar", "0", "-t2"}}));
  EXPECT_FALSE(L.uses_param(L.param_index("t1")));
  EXPECT_FALSE(L.uses_param(L.param_index("w3")));
}

TEST(Su24, MatchesReferenceMatrixUpToConvention) {
  // reference: [[0,w1,w2],[conj w1,t2,0],[conj w2,0,t2]]; ours = D*(-P)D, D = diag(1,-i,-i)
  ParamLevi L = su24_levi();
  gen::Source src(103);
  CMatrix d = diag({1, -I, -I});
  for (int t = 0; t < 50; ++t) {
    GaussianRational w1 = src.gaussian(), w2 = src.gaussian(), w3 = src.gaussian();
    GaussianRational t1(src.rational()), t2(src.rational());
    HermitianMatrix ours = specialize(L, {{"w1", w1}, {"w2", w2}, {"w3", w3}, {"t1", t1}, {"t2", t2}});
    CMatrix ref = from_rows({{0, w1, w2}, {w1.conj(), t2, 0}, {w2.conj(), 0, t2}});
    EXPECT_EQ(ours.matrix(), d.adjoint() * (-ref) * d);
  }
}

TEST(Su24, ZeroOnDegeneratePlane) {
  ParamLevi L = su24_levi();
  gen::Source src(107);
  for (int t = 0; t < 20; ++t) {
    HermitianMatrix h = specialize(L, {{"w1", 0}, {"w2", 0}, {"w3", src.gaussian()}, {"t1", GaussianRational(src.rational())}, {"t2", 0}});
    EXPECT_TRUE(h.matrix().is_zero());
  }
}

TEST(Su24, NondegenerateFormsAreIndefinite) {
  ParamLevi L = su24_levi();
  gen::Source src(109);
  int nondegenerate = 0;
  for (int t = 0; t < 1200; ++t) {
    std::map<std::string, GaussianRational> v{{"w1", src.gaussian()}, {"w2", src.gaussian()}, {"w3", src.gaussian()},
                                              {"t1", GaussianRational(src.rational())}, {"t2", GaussianRational(src.rational())}};
    Signature s = inertia(specialize(L, v));
    if (s.n_zero != 0) continue;
    ++nondegenerate;
    EXPECT_GE(s.n_pos, 1u);
    EXPECT_GE(s.n_neg, 1u);
  }
  EXPECT_GT(nondegenerate, 500);
}

TEST(So16, StructureAndType) {
  CRAlgebra A = builtin_so16_quadric();
  EXPECT_EQ(A.q_basis().size(), 14u);
  EXPECT_EQ(A.g_dim(), 21u);
  const CMatrix& k = *A.bilinear();
  for (const auto& x : A.q_basis()) EXPECT_TRUE((x.transpose() * k + k * x).is_zero());
  auto c = check_cr_algebra(A);
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_EQ(c.q_cap_conj_basis.size(), 10u);
  EXPECT_EQ(cr_type(A), (CRType{4, 3}));
}

TEST(So16, FrozenLeviMatrix) {
  ParamLevi L = so16_levi();
  EXPECT_EQ(L.params.size(), 3u);
  EXPECT_EQ(L.params[L.param_index("t")].kind, LeviParam::Kind::Real);
  EXPECT_EQ(entry_strings(L), (std::vector<std::vector<std::string>>{{"0", "0", "0", "i*w"},
                                                                       {"0", "0", "0", "i*t"},
                                                                       {"0", "0", "0", "i*wbar"},
                                                                       {"-i*wbar", "-i*t", "-i*w", "0"}}));
  // reference: [[0,0,0,w],[0,0,0,t],[0,0,0,conj w],[conj w,t,w,0]]; ours = D*(-P)D, D = diag(1,1,1,-i)
  gen::Source src(113);
  CMatrix d = diag({1, 1, 1, -I});
  for (int t = 0; t < 50; ++t) {
    GaussianRational w = src.gaussian(), tt(src.rational());
    CMatrix ref(4, 4);
    ref(0, 3) = w, ref(1, 3) = tt, ref(2, 3) = w.conj();
    ref(3, 0) = w.conj(), ref(3, 1) = tt, ref(3, 2) = w;
    EXPECT_EQ(specialize(L, {{"w", w}, {"t", tt}}).matrix(), d.adjoint() * (-ref) * d);
  }
}

TEST(So16, SignatureClaims) {
  ParamLevi L = so16_levi();
  EXPECT_EQ(inertia(specialize(L, {{"w", 1}, {"t", 0}})), (Signature{1, 2, 1}));
  EXPECT_EQ(inertia(specialize(L, {{"w", 0}, {"t", 1}})), (Signature{1, 2, 1}));
  EXPECT_EQ(inertia(specialize(L, {{"w", 0}, {"t", 0}})), (Signature{0, 4, 0}));
  gen::Source src(127);
  for (int t = 0; t < 200; ++t) {
    GaussianRational w = src.gaussian(), tt(src.rational());
    if (w.is_zero() && tt.is_zero()) continue;
    EXPECT_EQ(inertia(specialize(L, {{"w", w}, {"t", tt}})), (Signature{1, 2, 1}));
  }
}

TEST(HomogeneousLevi, Specialization) {
  ParamLevi L = so16_levi();
  EXPECT_THROW(specialize(L, {{"w", 1}}), MissingParameter);
  EXPECT_THROW(specialize(L, {{"w", 1}, {"t", I}}), NonRealValueForRealParam);
  EXPECT_THROW(specialize(L, {{"w", 1}, {"t", 0}, {"zz", 0}}), ValidationError);
  EXPECT_THROW(specialize(L, {{"w", 1}, {"wbar", 2}, {"t", 0}}), ValidationError);
  GaussianRational w(1, 2);
  EXPECT_EQ(specialize(L, {{"wbar", w.conj()}, {"t", 3}}), specialize(L, {{"w", w}, {"t", 3}}));
  EXPECT_EQ(specialize(L, {{"w", w}, {"wbar", w.conj()}, {"t", 3}}), specialize(L, {{"w", w}, {"t", 3}}));
}

TEST(HomogeneousLevi, QuotientKindsAndErrors) {
  CRAlgebra A = builtin_so16_quadric();
  auto pb = so16_reference_bases();
  using detail::so7;
  // explicit conjugate partner
  ParamLevi L = param_levi(A, pb.t10, QuotientSpec{{"u", "t", "ubar2"}, {so7(3, 1), so7(4, 1), so7(5, 1)}});
  EXPECT_EQ(L.params[L.param_index("ubar2")].kind, LeviParam::Kind::ConjugateOf);
  EXPECT_EQ(L.params[L.param_index("u")].partner, L.param_index("ubar2"));
  // i*t is anti-invariant: neither real nor part of a pair
  EXPECT_THROW(param_levi(A, pb.t10, QuotientSpec{{"w", "t"}, {so7(3, 1), I * so7(4, 1)}}), BadComplement);
  // element of q is not a complement
  EXPECT_THROW(param_levi(A, pb.t10, QuotientSpec{{"w", "t"}, {so7(3, 1), so7(2, 1)}}), BadComplement);
  EXPECT_THROW(param_levi(A, pb.t10, QuotientSpec{{"w"}, {so7(3, 1)}}), BadComplement);
  // T^{1,0} checks
  auto t10 = pb.t10;
  t10.pop_back();
  EXPECT_THROW(param_levi(A, t10, pb.quotient), BadComplement);
  t10 = pb.t10;
  t10[0] = so7(2, 3);  // lies in q, not in sigma(q)
  EXPECT_THROW(param_levi(A, t10, pb.quotient), BadComplement);
  t10 = pb.t10;
  t10[1] = t10[0];
  EXPECT_THROW(param_levi(A, t10, pb.quotient), BadComplement);
}

TEST(HomogeneousLevi, PropertyHermitianSymmetry) {
  for (const CRAlgebra& A : {builtin_su24_flag(), builtin_so16_quadric(), sphere_algebra()}) {
    ParamLevi L = param_levi(A);
    for (std::size_t a = 0; a < L.n; ++a)
      for (std::size_t b = 0; b < L.n; ++b) EXPECT_EQ(L.entry(b, a), L.conjugate_form(L.entry(a, b)));
  }
}

TEST(HomogeneousLevi, PropertyWellDefined) {
  gen::Source src(131);
  for (int which = 0; which < 2; ++which) {
    CRAlgebra A = which == 0 ? builtin_su24_flag() : builtin_so16_quadric();
    ReferenceBases pb = which == 0 ? su24_reference_bases() : so16_reference_bases();
    ParamLevi base = param_levi(A, pb.t10, pb.quotient);
    auto cap = check_cr_algebra(A).q_cap_conj_basis;
    std::vector<CMatrix> sum = detail::concat(A.q_basis(), A.conj_q_basis());
    for (int t = 0; t < 6; ++t) {
      auto t10 = pb.t10;
      for (auto& z : t10) z += src.gaussian() * cap[static_cast<std::size_t>(src.integer(0, static_cast<long>(cap.size()) - 1))];
      auto quotient = pb.quotient;
      for (auto& e : quotient.matrices) e += src.gaussian() * sum[static_cast<std::size_t>(src.integer(0, static_cast<long>(sum.size()) - 1))];
      EXPECT_EQ(param_levi(A, t10, pb.quotient).entries, base.entries);
      ParamLevi moved = param_levi(A, pb.t10, quotient);
      // perturbing the complement leaves coordinates unchanged once kinds are preserved
      ASSERT_EQ(moved.params.size(), base.params.size());
      for (std::size_t j = 0; j < base.params.size(); ++j) EXPECT_EQ(moved.params[j].kind, base.params[j].kind);
      EXPECT_EQ(moved.entries, base.entries);
    }
  }
}

TEST(HomogeneousLevi, PropertyCongruenceUnderBasisChange) {
  gen::Source src(137);
  for (int which = 0; which < 2; ++which) {
    CRAlgebra A = which == 0 ? builtin_su24_flag() : builtin_so16_quadric();
    ReferenceBases pb = which == 0 ? su24_reference_bases() : so16_reference_bases();
    ParamLevi L = param_levi(A, pb.t10, pb.quotient);
    for (int t = 0; t < 8; ++t) {
      CMatrix p = src.invertible(L.n);
      std::vector<CMatrix> t10;
      for (std::size_t b = 0; b < L.n; ++b) {
        CMatrix z(A.size(), A.size());
        for (std::size_t a = 0; a < L.n; ++a) z += pb.t10[a] * p(a, b);
        t10.push_back(std::move(z));
      }
      ParamLevi L2 = param_levi(A, t10, pb.quotient);
      std::map<std::string, GaussianRational> v;
      for (const auto& par : L.params) {
        if (par.kind == LeviParam::Kind::Real) v[par.name] = GaussianRational(src.rational());
        if (par.kind == LeviParam::Kind::Complex) v[par.name] = src.gaussian();
      }
      HermitianMatrix h = specialize(L, v), h2 = specialize(L2, v);
      EXPECT_EQ(h2, h.congruent(p.conj()));
      EXPECT_EQ(inertia(h2), inertia(h));
    }
  }
}
