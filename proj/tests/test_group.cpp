#include "canonlat/group.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace canonlat;

namespace {

const std::vector<Symbol>& symbols() {
  static const std::vector<Symbol> s = {make_symbol({2}), make_symbol({2, 2, 2, 2}), make_symbol({2, 3, 7}),
                                        make_symbol(1, {3, 3}, {1, 2}, {1, 1}), make_symbol(2, {2, 2}, {2, 2}, {1, 1})};
  return s;
}

// s_α(x) = x − (2(x,α)/(α,α)) α with B the symmetrized form, computed
// entrywise over the rationals.
RatVector reflect_oracle(const IntMatrix& B, const RootVec& alpha, const RootVec& x) {
  const Rational num = 2 * Rational(x.dot(B * alpha));
  const Rational den = Rational(alpha.dot(B * alpha));
  return x.cast<Rational>() - (num / den) * alpha.cast<Rational>();
}

}  // namespace

TEST(Reflection, MatchesFormulaAndIsInvolution) {
  for (const auto& s : symbols()) {
    const CanonicalLattice lat(s);
    const RootEnumeration roots = roots_up_to_depth(lat, 2, 500);
    for (const auto& alpha : roots.roots) {
      const GroupElem r = reflection(lat, alpha);
      EXPECT_EQ(IntMatrix(r * r), identity<Integer>(lat.n()));
      EXPECT_EQ(RootVec(r * alpha), RootVec(-alpha));
      EXPECT_TRUE(is_isometry(lat, r));
      EXPECT_EQ(fix_codim(r), 1);
      for (Index k = 0; k < lat.n(); ++k) {
        EXPECT_EQ(to_rational(RootVec(r * lat.simple(k))), reflect_oracle(lat.B(), alpha, lat.simple(k)));
        EXPECT_EQ(reflect(lat, alpha, lat.simple(k)), RootVec(r * lat.simple(k)));
      }
    }
  }
}

TEST(Reflection, RejectsNonPseudoRoots) {
  const CanonicalLattice lat(make_symbol({2}));
  EXPECT_THROW(reflection(lat, radical_a(lat)), Error);
  RootVec twice = 2 * lat.simple(0);
  EXPECT_THROW(reflection(lat, twice), Error);
}

TEST(Roots, EnumerationIsNormalizedAndClosed) {
  for (const auto& s : symbols()) {
    const CanonicalLattice lat(s);
    const RootEnumeration e = roots_up_to_depth(lat, 3, 5000);
    ASSERT_EQ(e.roots.size(), e.depth.size());
    std::set<std::vector<long>> seen;
    for (std::size_t i = 0; i < e.roots.size(); ++i) {
      EXPECT_TRUE(is_normalized(e.roots[i]));
      EXPECT_TRUE(is_pseudo_root(lat, e.roots[i]));
      std::vector<long> key;
      for (Index k = 0; k < lat.n(); ++k) key.push_back(e.roots[i](k).convert_to<long>());
      EXPECT_TRUE(seen.insert(key).second) << "duplicate root";
    }
    for (Index k = 0; k < lat.n(); ++k) EXPECT_EQ(e.roots[static_cast<std::size_t>(k)], lat.simple(k));
  }
}

TEST(Roots, NormalizeAndConjugate) {
  RootVec v(3);
  v << 0, -2, 1;
  EXPECT_EQ(normalize_root(v), RootVec(-v));
  EXPECT_TRUE(is_normalized(normalize_root(v)));
  const CanonicalLattice lat(make_symbol({2}));
  const GroupElem c = coxeter_element(lat);
  for (Index k = 0; k < lat.n(); ++k) {
    const RootVec beta = conj_reflection(lat, c, lat.simple(k));
    EXPECT_EQ(reflection(lat, beta) * c, c * reflection(lat, lat.simple(k)));
  }
}

TEST(LengthBounds, ReflectionsAndProducts) {
  const CanonicalLattice lat(make_symbol({2, 3}));
  const std::vector<RootVec> simple = [&] {
    std::vector<RootVec> out;
    for (Index k = 0; k < lat.n(); ++k) out.push_back(lat.simple(k));
    return out;
  }();
  const LengthBounds one = reflection_length_bounds(lat, reflection(lat, simple[1]), simple);
  EXPECT_TRUE(one.exact());
  EXPECT_EQ(one.lower, 1);
  const LengthBounds id = reflection_length_bounds(lat, identity<Integer>(lat.n()), simple);
  EXPECT_EQ(id.lower, 0);
  EXPECT_TRUE(id.exact());
  const GroupElem g = reflection_product(lat, {simple[0], simple[2], simple[3]});
  const LengthBounds three = reflection_length_bounds(lat, g, simple);
  EXPECT_EQ(three.lower, fix_codim(g));
  ASSERT_TRUE(three.upper.has_value());
  EXPECT_LE(*three.upper, 3);
  EXPECT_EQ(reflection_product(lat, three.witness), g);
  EXPECT_EQ((*three.upper - three.parity) % 2, 0);
}

TEST(Coxeter, ProductOfSimpleReflections) {
  for (const auto& s : symbols()) {
    const CanonicalLattice lat(s);
    GroupElem c = identity<Integer>(lat.n());
    for (Index k = 0; k < lat.n(); ++k) c = (c * reflection(lat, lat.simple(k))).eval();
    EXPECT_EQ(c, coxeter_element(lat));
    EXPECT_TRUE(is_isometry(lat, c));
  }
}
