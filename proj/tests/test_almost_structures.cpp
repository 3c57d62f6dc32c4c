#include <gtest/gtest.h>

#include "crlevi/almost_structures.hpp"
#include "crlevi/embedded_cr.hpp"
#include "crlevi/parser.hpp"
#include "generators.hpp"

using namespace crlevi;

namespace {

PolyVectorField field(std::initializer_list<const char*> comps) {
  const std::size_t d = comps.size();
  std::vector<Poly> v;
  for (const char* c : comps) v.push_back(parse_real_poly(c, d));
  return PolyVectorField(v);
}

PolyMatrix pmatrix(std::size_t nvars, std::initializer_list<std::initializer_list<const char*>> rows) {
  PolyMatrix m;
  for (const auto& r : rows) {
    std::vector<Poly> row;
    for (const char* e : r) row.push_back(parse_real_poly(e, nvars));
    m.push_back(std::move(row));
  }
  return m;
}

PolyOneForm form(std::initializer_list<const char*> coeffs) {
  PolyOneForm f;
  for (const char* c : coeffs) f.coeffs.push_back(parse_real_poly(c, coeffs.size()));
  return f;
}

AlmostComplex standard_j() { return AlmostComplex(pmatrix(4, {{"0", "-1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "-1"}, {"0", "0", "1", "0"}})); }

// T^{0,1} spanned by d/dzbar_1 and d/dzbar_2 + zbar_1 d/dz_1, in coordinates (x1,x2,x3,x4) = (x1,y1,x2,y2).
AlmostComplex twisted_j() {
  return AlmostComplex(pmatrix(4, {{"0", "-1", "-2*x2", "-2*x1"}, {"1", "0", "-2*x1", "2*x2"}, {"0", "0", "0", "-1"}, {"0", "0", "1", "0"}}));
}

AlmostCRFrame heisenberg3() {
  return AlmostCRFrame({field({"1", "0", "2*x2"}), field({"0", "1", "-2*x1"})}, {form({"-2*x2", "2*x1", "1"})},
                       pmatrix(3, {{"0", "-1"}, {"1", "0"}}), {0, 0, 0});
}

AlmostCRFrame heisenberg5(PolyMatrix jmat) {
  return AlmostCRFrame({field({"1", "0", "0", "0", "2*x2"}), field({"0", "1", "0", "0", "-2*x1"}), field({"0", "0", "1", "0", "2*x4"}),
                        field({"0", "0", "0", "1", "-2*x3"})},
                       {form({"-2*x2", "2*x1", "-2*x4", "2*x3", "1"})}, std::move(jmat), {0, 0, 0, 0, 0});
}

PolyVectorField coord(std::size_t d, std::size_t i) { return PolyVectorField::coordinate(d, i); }

}  // namespace

TEST(LieBracket, Examples) {
  EXPECT_TRUE(lie_bracket(coord(2, 0), coord(2, 1)).is_zero());
  EXPECT_EQ(lie_bracket(field({"x2", "0"}), field({"0", "1"})), field({"-1", "0"}));
  EXPECT_EQ(lie_bracket(field({"1", "0", "2*x2"}), field({"0", "1", "-2*x1"})), field({"0", "0", "-4"}));
  EXPECT_THROW(lie_bracket(coord(2, 0), coord(3, 0)), DimensionMismatch);
}

TEST(LieBracket, PropertyAntisymmetryAndJacobi) {
  gen::Source src(131);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 3;
    auto rnd = [&] {
      std::vector<Poly> c;
      for (std::size_t k = 0; k < d; ++k) c.push_back(src.poly(d, 2, 2, true));
      return PolyVectorField(c);
    };
    PolyVectorField x = rnd(), y = rnd(), z = rnd();
    EXPECT_EQ(lie_bracket(x, y), PolyVectorField::zero(d) - lie_bracket(y, x));
    EXPECT_TRUE((lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y))).is_zero());
  }
}

TEST(AlmostComplex, Validation) {
  EXPECT_THROW(AlmostComplex(pmatrix(2, {{"1", "0"}, {"0", "1"}})), ValidationError);
  EXPECT_THROW(AlmostComplex(pmatrix(2, {{"0", "-1"}, {"1", "x1"}})), ValidationError);
  EXPECT_THROW(AlmostComplex(pmatrix(1, {{"0"}})), ValidationError);
  EXPECT_NO_THROW(twisted_j());
}

TEST(Nijenhuis, ConstantStructureIsIntegrable) {
  AlmostComplex j = standard_j();
  EXPECT_TRUE(is_integrable(j));
  EXPECT_TRUE(nijenhuis(j, field({"x1*x3", "x2^2", "1", "x4"}), field({"x2", "0", "x1*x4", "3"})).is_zero());
}

TEST(Nijenhuis, TransportedStructures) {
  const std::size_t d = 4;
  auto vars = [&](std::initializer_list<const char*> comps) {
    std::vector<Poly> v;
    for (const char* c : comps) v.push_back(parse_real_poly(c, d));
    return v;
  };
  // a holomorphic shear (z1, z2) -> (z1, z2 + z1^2) fixes the standard structure
  AlmostComplex holo = transport_structure(standard_j(), vars({"x1", "x2", "x3 + x1^2 - x2^2", "x4 + 2*x1*x2"}),
                                           vars({"x1", "x2", "x3 - x1^2 + x2^2", "x4 - 2*x1*x2"}));
  EXPECT_EQ(holo.matrix(), standard_j().matrix());
  // a non-holomorphic shear gives a non-constant integrable structure
  AlmostComplex shear = transport_structure(standard_j(), vars({"x1", "x2", "x3 + x1^2", "x4"}), vars({"x1", "x2", "x3 - x1^2", "x4"}));
  EXPECT_EQ(shear.matrix(), pmatrix(4, {{"0", "-1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "-2*x1", "0", "-1"}, {"-2*x1", "0", "1", "0"}}));
  EXPECT_TRUE(is_integrable(shear));
  EXPECT_THROW(transport_structure(standard_j(), vars({"x1", "x2", "x3 + x1^2", "x4"}), vars({"x1", "x2", "x3", "x4"})), NotAnInverse);
}

TEST(Nijenhuis, TwistedStructureGolden) {
  AlmostComplex j = twisted_j();
  EXPECT_FALSE(is_integrable(j));
  EXPECT_TRUE(nijenhuis(j, coord(4, 0), coord(4, 1)).is_zero());
  EXPECT_EQ(nijenhuis(j, coord(4, 0), coord(4, 2)), field({"4", "0", "0", "0"}));
  EXPECT_EQ(nijenhuis(j, coord(4, 0), coord(4, 3)), field({"0", "-4", "0", "0"}));
  EXPECT_EQ(nijenhuis(j, coord(4, 1), coord(4, 2)), field({"0", "-4", "0", "0"}));
  EXPECT_EQ(nijenhuis(j, coord(4, 1), coord(4, 3)), field({"-4", "0", "0", "0"}));
  EXPECT_EQ(nijenhuis(j, coord(4, 2), coord(4, 3)), field({"-8*x2", "8*x1", "0", "0"}));
}

TEST(Nijenhuis, PropertyTensorial) {
  gen::Source src(137);
  AlmostComplex j = twisted_j();
  const std::size_t d = 4;
  for (int t = 0; t < 25; ++t) {
    auto rnd = [&] {
      std::vector<Poly> c;
      for (std::size_t k = 0; k < d; ++k) c.push_back(src.poly(d, 2, 2, true));
      return PolyVectorField(c);
    };
    PolyVectorField x = rnd(), y = rnd();
    Poly f = src.poly(d, 2, 3, true);
    PolyVectorField n = nijenhuis(j, x, y);
    EXPECT_EQ(nijenhuis(j, f * x, y), f * n);
    EXPECT_EQ(nijenhuis(j, y, x), PolyVectorField::zero(d) - n);
    EXPECT_EQ(nijenhuis(j, j(x), j(y)), PolyVectorField::zero(d) - n);
  }
}

TEST(AlmostCRFrame, Validation) {
  auto jm = pmatrix(3, {{"0", "-1"}, {"1", "0"}});
  // theta does not annihilate the second field
  EXPECT_THROW(AlmostCRFrame({field({"1", "0", "2*x2"}), field({"0", "1", "2*x1"})}, {form({"-2*x2", "2*x1", "1"})}, jm, {0, 0, 0}), InvalidFrame);
  EXPECT_THROW(AlmostCRFrame({field({"1", "0", "2*x2"}), field({"0", "1", "-2*x1"})}, {form({"-2*x2", "2*x1", "1"})},
                             pmatrix(3, {{"1", "0"}, {"0", "1"}}), {0, 0, 0}),
               InvalidFrame);
  EXPECT_THROW(AlmostCRFrame({field({"x1", "0", "0"}), field({"0", "1", "0"})}, {form({"0", "0", "1"})}, jm, {0, 0, 0}), InvalidFrame);
  EXPECT_THROW(AlmostCRFrame({field({"1", "0", "0"}), field({"0", "1", "0"})}, {}, jm, {0, 0, 0}), InvalidFrame);
}

TEST(PartialIntegrability, Goldens) {
  auto h = partial_integrability(heisenberg3());
  EXPECT_TRUE(h.cr2);
  EXPECT_TRUE(h.cr3);
  EXPECT_FALSE(h.pointwise);

  auto std5 = partial_integrability(heisenberg5(pmatrix(5, {{"0", "-1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "-1"}, {"0", "0", "1", "0"}})));
  EXPECT_TRUE(std5.cr2);
  EXPECT_TRUE(std5.cr3);

  // J X1 = X2, J Y1 = -Y2 does not preserve the bracket form: (cr2) already fails
  auto swapped = partial_integrability(heisenberg5(pmatrix(5, {{"0", "0", "-1", "0"}, {"0", "0", "0", "1"}, {"1", "0", "0", "0"}, {"0", "-1", "0", "0"}})));
  EXPECT_FALSE(swapped.cr2);
  EXPECT_FALSE(swapped.cr3);

  // compatible with the bracket form but varying with x3: (cr2) holds, (cr3) fails
  auto varying = partial_integrability(heisenberg5(pmatrix(5, {{"x3", "-1", "0", "0"}, {"x3^2 + 1", "-x3", "0", "0"}, {"0", "0", "0", "-1"}, {"0", "0", "1", "0"}})));
  EXPECT_TRUE(varying.cr2);
  EXPECT_FALSE(varying.cr3);

  // k = 0: the coordinate frame with the standard or the twisted structure
  std::vector<PolyVectorField> coords{coord(4, 0), coord(4, 1), coord(4, 2), coord(4, 3)};
  auto flat = partial_integrability(AlmostCRFrame(coords, {}, standard_j().matrix(), {0, 0, 0, 0}));
  EXPECT_TRUE(flat.cr2);
  EXPECT_TRUE(flat.cr3);
  auto twisted = partial_integrability(AlmostCRFrame(coords, {}, twisted_j().matrix(), {0, 0, 0, 0}));
  EXPECT_TRUE(twisted.cr2);
  EXPECT_FALSE(twisted.cr3);
}

TEST(PartialIntegrability, PointwiseMode) {
  // the swapped structure fails (cr2) by a constant, so it fails at any sample
  auto jm = pmatrix(5, {{"0", "0", "-1", "0"}, {"0", "0", "0", "1"}, {"1", "0", "0", "0"}, {"0", "-1", "0", "0"}});
  AlmostCRFrame f({field({"1", "0", "0", "0", "2*x2"}), field({"0", "1", "0", "0", "-2*x1"}), field({"0", "0", "1", "0", "2*x4"}),
                   field({"0", "0", "0", "1", "-2*x3"})},
                  {form({"-2*x2", "2*x1", "-2*x4", "2*x3", "1"})}, jm, {0, 0, 0, 0, 0},
                  std::vector<std::vector<GaussianRational>>{{0, 0, 0, 0, 0}, {1, 2, 0, 1, 3}});
  auto r = partial_integrability(f);
  EXPECT_TRUE(r.pointwise);
  EXPECT_FALSE(r.cr2);
  // the varying structure has a (cr3) defect with a constant component, so one sample suffices
  auto varying = pmatrix(5, {{"x3", "-1", "0", "0"}, {"x3^2 + 1", "-x3", "0", "0"}, {"0", "0", "0", "-1"}, {"0", "0", "1", "0"}});
  auto frame5 = heisenberg5(varying).frame();
  auto theta5 = heisenberg5(varying).theta();
  auto at_origin = partial_integrability(AlmostCRFrame(frame5, theta5, varying, {0, 0, 0, 0, 0}, std::vector<std::vector<GaussianRational>>{{0, 0, 0, 0, 0}}));
  EXPECT_TRUE(at_origin.cr2);
  EXPECT_FALSE(at_origin.cr3);
}

TEST(AbstractLevi, HeisenbergGolden) {
  AlmostCRFrame h = heisenberg3();
  std::vector<Rational> xi{1};
  EXPECT_EQ(abstract_levi(h, std::vector<GaussianRational>{0, 0, 0}, xi, std::vector<Rational>{1, 0}), 4);
  EXPECT_EQ(abstract_levi(h, std::vector<GaussianRational>{0, 0, 0}, xi, std::vector<Rational>{0, 1}), 4);
  gen::Source src(139);
  for (int t = 0; t < 30; ++t) {
    Rational a = src.rational(), b = src.rational();
    std::vector<GaussianRational> x{src.rational(), src.rational(), src.rational()};
    EXPECT_EQ(abstract_levi(h, x, xi, std::vector<Rational>{a, b}), Rational(4 * (a * a + b * b)));
  }
  EXPECT_THROW(abstract_levi(h, std::vector<GaussianRational>{0, 0}, xi, std::vector<Rational>{1, 0}), DimensionMismatch);
}

TEST(AbstractLevi, LeviFlatFrame) {
  std::vector<PolyVectorField> coords{coord(3, 0), coord(3, 1)};
  AlmostCRFrame flat(coords, {form({"0", "0", "1"})}, pmatrix(3, {{"0", "-1"}, {"1", "0"}}), {0, 0, 0});
  EXPECT_EQ(abstract_levi(flat, std::vector<GaussianRational>{1, 2, 3}, std::vector<Rational>{1}, std::vector<Rational>{3, -1}), 0);
  auto r = partial_integrability(flat);
  EXPECT_TRUE(r.cr2 && r.cr3);
}

TEST(RigidHypersurface, HeisenbergFrameAndAgreementWithEmbedded) {
  AlmostCRFrame h = rigid_hypersurface_frame(parse_wpoly("z1*zbar1", 1), {0, 0, 0});
  EXPECT_EQ(h.frame()[0], field({"1", "0", "2*x2"}));
  EXPECT_EQ(h.frame()[1], field({"0", "1", "-2*x1"}));
  EXPECT_EQ(h.theta()[0].coeffs, form({"-2*x2", "2*x1", "1"}).coeffs);

  gen::Source src(149);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(src.integer(1, 2));
    const std::size_t m = n + 1;
    WPoly f = src.real_wpoly(n, 3, 3);
    std::vector<GaussianRational> base;
    PointC zp;
    for (std::size_t mu = 0; mu < n; ++mu) {
      GaussianRational z = src.gaussian(1, 2);
      zp.push_back(z);
      base.emplace_back(z.re());
      base.emplace_back(z.im());
    }
    Rational xm = src.rational();
    base.emplace_back(xm);
    AlmostCRFrame frame = rigid_hypersurface_frame(f, base);
    auto pi = partial_integrability(frame);
    EXPECT_TRUE(pi.cr2);
    EXPECT_TRUE(pi.cr3);

    // the same hypersurface embedded: rho = Im z_m - f
    std::vector<Poly> lift;
    for (std::size_t k = 0; k < n; ++k) lift.push_back(Poly::variable(2 * m, k));
    for (std::size_t k = 0; k < n; ++k) lift.push_back(Poly::variable(2 * m, m + k));
    WPoly f_big(m, f.poly().substitute(lift));
    WPoly rho = (WPoly::z(m, m) - WPoly::zbar(m, m)) * GaussianRational(Rational(0), Rational(-1, 2)) - f_big;
    EmbeddedCR M(m, {rho});
    PointC x = zp;
    x.emplace_back(xm, eval(f, zp).re());
    PointData pd = analyze_point(M, x);

    std::vector<Rational> coeffs;
    CMatrix w(m, 1);
    for (std::size_t mu = 1; mu <= n; ++mu) {
      Rational a = src.rational(), b = src.rational();
      coeffs.push_back(a);
      coeffs.push_back(b);
      GaussianRational c(a, b);
      w(mu - 1, 0) += c;
      w(m - 1, 0) += c * GaussianRational(Rational(0), Rational(2)) * eval(wirtinger_d(f, mu), zp);
    }
    auto zc = solve(pd.basis, w);
    ASSERT_TRUE(zc.has_value());
    std::vector<GaussianRational> z(zc->data().begin(), zc->data().end());
    ConormalCovector one{{Rational(1)}};
    Rational embedded = bracket_levi_oracle(M, pd, one, z);
    EXPECT_EQ(embedded, levi_value(M, pd, one, z));
    Rational abstract = abstract_levi(frame, base, std::vector<Rational>{1}, coeffs);
    EXPECT_EQ(abstract, Rational(-4 * embedded)) << "case " << t;
    ++checked;
  }
  EXPECT_EQ(checked, 30);
}
