#include "canonlat/hyperbolic.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace canonlat;

namespace {

// Reflection in B̃, written out directly.
RatMatrix reflection_oracle(const RatMatrix& Bt, const RatVector& v) {
  const Rational vv = v.dot(Bt * v);
  return RatMatrix::Identity(Bt.rows(), Bt.rows()) - (Rational(2) / vv) * v * (Bt * v).transpose();
}

RatMatrix coxeter_oracle(const HyperbolicModel& m) {
  RatMatrix c = RatMatrix::Identity(m.dim(), m.dim());
  for (Index k = 0; k < m.n; ++k) c = (c * reflection_oracle(m.Btilde, m.lift(m.lat.simple(k)))).eval();
  return c;
}

// a′ + 2/(α_0,α_0)·(α_0 − a + Σ e_i α_(i,j)) in the coordinates
// (arms…, α_0, a, a′).
RatVector formula_oracle(const HyperbolicModel& m) {
  const Symbol& s = m.lat.symbol();
  const Index dim = m.dim();
  RatVector v = RatVector::Zero(dim);
  const Rational scale = Rational(2) / Rational(2 * s.kappa);  // (α_0, α_0) = 2κ
  Index pos = 0;
  for (int arm = s.t - 1; arm >= 0; --arm)
    for (int j = s.p[arm] - 1; j >= 1; --j) v(pos++) = scale * s.e(arm);
  v(dim - 3) = scale;
  v(dim - 2) = -scale;
  v(dim - 1) = 1;
  return v;
}

const std::vector<Symbol>& tubular() {
  static const std::vector<Symbol> s = {make_symbol({2, 2, 2, 2}), make_symbol({3, 3, 3}), make_symbol({4, 4, 2}),
                                        make_symbol({6, 3, 2}), make_symbol(1, {3, 3}, {1, 2}, {1, 2}),
                                        make_symbol(1, {2}, {4}, {2})};
  return s;
}

}  // namespace

TEST(Hyperbolic, RequiresTubular) {
  EXPECT_THROW(build_hyperbolic(CanonicalLattice(make_symbol({2}))), Error);
  EXPECT_THROW(build_hyperbolic(CanonicalLattice(make_symbol({2, 3, 7}))), Error);
}

TEST(Hyperbolic, FormExtendsBAndHasOneDimensionalRadical) {
  for (const auto& s : tubular()) {
    const HyperbolicModel m = build_hyperbolic(CanonicalLattice(s));
    EXPECT_EQ(m.dim(), m.n + 1);
    EXPECT_EQ(RatMatrix(m.inclusion.transpose() * m.Btilde * m.inclusion), to_rational(m.lat.B()));
    EXPECT_EQ(oracle::rank(m.Btilde), m.dim() - 1);
    EXPECT_EQ(m.form(m.a(), m.a_prime()), 1);
    EXPECT_EQ(m.form(m.a_prime(), m.a_prime()), 0);
  }
}

TEST(Hyperbolic, CoxeterMatchesOracleAndFormula) {
  for (const auto& s : tubular()) {
    const HyperbolicModel m = build_hyperbolic(CanonicalLattice(s));
    const HypElem c = hyp_coxeter(m);
    EXPECT_EQ(c, coxeter_oracle(m));
    EXPECT_EQ(RatVector(c * m.a_prime()), formula_oracle(m)) << describe(s);
    EXPECT_EQ(expected_coxeter_image_of_a_prime(m), formula_oracle(m));
    EXPECT_TRUE(is_hyp_isometry(m, c));
    EXPECT_EQ(project_to_W(m, c), coxeter_element(m.lat));
  }
}

TEST(Hyperbolic, IsotropicReflectionThrows) {
  const HyperbolicModel m = build_hyperbolic(CanonicalLattice(make_symbol({2, 2, 2, 2})));
  EXPECT_THROW(hyp_reflection(m, m.a_prime()), Error);
  EXPECT_THROW(hyp_reflection(m, m.a()), Error);
}

TEST(Hyperbolic, ProjectionNeedsInvariantV) {
  const HyperbolicModel m = build_hyperbolic(CanonicalLattice(make_symbol({2, 2, 2, 2})));
  HypElem g = RatMatrix::Identity(m.dim(), m.dim());
  g(0, m.dim() - 1) = 0;
  g(m.dim() - 1, 0) = 1;  // sends V outside itself
  EXPECT_THROW(project_to_W(m, g), Error);
}

TEST(Hyperbolic, CentralExtension) {
  for (const auto& s : tubular()) {
    const HyperbolicModel m = build_hyperbolic(CanonicalLattice(s));
    const CentralExtensionReport r = central_extension_report(m, 7, 40);
    EXPECT_TRUE(r.all_pass()) << describe(s);
    EXPECT_EQ(r.p, weight_lcm(s));
    // (c̃^p − I)² = 0 but c̃^p ≠ I, recomputed here.
    const RatMatrix I = RatMatrix::Identity(m.dim(), m.dim());
    const RatMatrix N = matrix_power(coxeter_oracle(m), static_cast<unsigned>(r.p)) - I;
    EXPECT_FALSE(N.isZero());
    EXPECT_TRUE(RatMatrix(N * N).isZero());
    EXPECT_EQ(m.dim() - oracle::rank(coxeter_oracle(m) - I), 2);
  }
}

TEST(Hyperbolic, CoxeterLengthCertificate) {
  for (const auto& s : tubular()) {
    const HyperbolicModel m = build_hyperbolic(CanonicalLattice(s));
    const CoxeterLengthCertificate cert = certify_coxeter_length(m);
    EXPECT_EQ(cert.hyp_codim, m.n - 1);
    EXPECT_TRUE(cert.hyperbolic_exact);
    EXPECT_TRUE(cert.lifts_have_codim);
    EXPECT_TRUE(cert.base_exact);
  }
}

TEST(Hyperbolic, EpsilonTwoUsesEquivalentModel) {
  const HyperbolicModel m = build_hyperbolic(CanonicalLattice(make_symbol(2, {2, 2}, {1, 1}, {1, 1})));
  EXPECT_EQ(m.lat.symbol().epsilon, 1);
  EXPECT_TRUE(central_extension_report(m, 7, 20).all_pass());
}

TEST(GenericExtension, SmallExample) {
  RatMatrix B(2, 2);
  B << 2, 0, 0, 0;
  const GenericExtension e = extend_generic(B, {});
  EXPECT_EQ(e.ext_dim, 3);
  EXPECT_TRUE(extension_invariants_hold(e));
  EXPECT_EQ(oracle::rank(e.B_ext), 3);
  EXPECT_EQ(RatMatrix(e.inclusion.transpose() * e.B_ext * e.inclusion), B);
}

TEST(GenericExtension, RejectsNonRadicalG) {
  RatMatrix B(2, 2);
  B << 2, 0, 0, 0;
  RatVector g(2);
  g << 1, 0;
  EXPECT_THROW(extend_generic(B, {g}), Error);
}

TEST(GenericExtension, MonomorphismIntoTheFullExtension) {
  for (const auto& s : tubular()) {
    const HyperbolicModel m = build_hyperbolic(CanonicalLattice(s));
    const GenericExtension small = as_generic_extension(m);
    EXPECT_TRUE(extension_invariants_hold(small));
    const GenericExtension full = extend_generic(to_rational(m.lat.B()), {});
    const RatMatrix phi = extension_mono(small, full);
    EXPECT_EQ(oracle::rank(phi), small.ext_dim);
    EXPECT_EQ(RatMatrix(phi.transpose() * full.B_ext * phi), small.B_ext);
    EXPECT_EQ(RatMatrix(phi * small.inclusion), full.inclusion);
    EXPECT_THROW(extension_mono(full, small), Error);
  }
}
