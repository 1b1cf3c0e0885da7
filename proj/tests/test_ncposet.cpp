#include "canonlat/ncposet.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

using namespace canonlat;

TEST(Datum, SyntheticFixturePasses) {
  const DatumReport r = check_datum(synthetic_datum());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.c1);
  EXPECT_TRUE(r.c2);
  EXPECT_EQ(r.unverifiable, 0u);
  // A_1 = {1,2,3}, A_2 = {*}; every a ∈ A_1 lies below the top.
  EXPECT_EQ(r.poset.elements.size(), 4u);
  const auto sets = prefix_sets(synthetic_datum());
  EXPECT_EQ(sets[1].size(), 3u);
  EXPECT_EQ(sets[2].size(), 3u);
}

TEST(Datum, ViolatorIsRejectedWithCounterexample) {
  const DatumReport r = check_datum(violating_datum());
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.c2);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("(C2)"), std::string::npos);
  try {
    require_datum(violating_datum());
    FAIL() << "expected AxiomViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolated);
  }
}

TEST(Datum, WrongTupleLengthBreaksC1) {
  ExceptionalDatum d = synthetic_datum();
  d.top.push_back({"1"});
  EXPECT_FALSE(check_datum(d).c1);
}

TEST(Datum, ThetaBetweenIsomorphicFixtures) {
  // Relabel 1,2,3 → a,b,c; θ must be the relabelling on A_1.
  ExceptionalDatum F = synthetic_datum();
  const std::map<std::string, std::string> rename = {{"1", "a"}, {"2", "b"}, {"3", "c"}};
  for (auto& t : F.top)
    for (auto& e : t) e = rename.at(e);
  F.mu = [](const KeyTuple& p) { return p.size() == 1 ? "F" + p[0] : std::string("top"); };
  // Cyclic shift of positions is a common action on both sides.
  auto rotate = [](const KeyTuple& t, int, int) { return KeyTuple{t[1], t[0]}; };
  std::map<std::pair<int, std::string>, std::string> theta;
  const ThetaReport r = check_theta(
      synthetic_datum(), F, [&](const ElemKey& e) { return rename.at(e); }, rotate, rotate, &theta);
  EXPECT_TRUE(r.rho_injective);
  EXPECT_TRUE(r.images_match);
  EXPECT_TRUE(r.well_defined && r.injective && r.surjective && r.order_preserving);
  EXPECT_EQ(theta.at({1, "2"}), "Fb");
  EXPECT_EQ(theta.at({2, "*"}), "top");
}

TEST(Datum, NonInjectiveRhoIsReported) {
  const ThetaReport r = check_theta(
      synthetic_datum(), synthetic_datum(), [](const ElemKey&) { return std::string("1"); },
      [](const KeyTuple& t, int, int) { return t; }, [](const KeyTuple& t, int, int) { return t; });
  EXPECT_FALSE(r.rho_injective);
  EXPECT_FALSE(r.ok());
}

TEST(Cox, TrivialCases) {
  const CanonicalLattice lat(make_symbol({2}));
  EXPECT_EQ(cox_map(lat, standard_sequence(lat)), coxeter_element(lat));
  EXPECT_EQ(cox_map(lat, {}), identity<Integer>(lat.n()));
  ExcSequence bad = {lat.simple(1), lat.simple(0)};
  EXPECT_THROW(cox_map(lat, bad), Error);
}

TEST(Cox, LengthTwoPrefixIsEnumerated) {
  const CanonicalLattice lat(make_symbol({2}));
  const ExcSequence seq = {lat.simple(0), lat.simple(1)};  // (α_(1,1), α_0)
  const GroupElem w = cox_map(lat, seq);
  EXPECT_EQ(w, IntMatrix(reflection(lat, lat.simple(0)) * reflection(lat, lat.simple(1))));
  const Poset p = nc_enumerate(lat, standard_factorization(lat), 4, 100000);
  bool found = false;
  for (const auto& e : p.elements) found = found || (e.length == 2 && e.elem == to_rational(w));
  EXPECT_TRUE(found);
}

TEST(NcPoset, InvariantsOnTruncation) {
  const CanonicalLattice lat(make_symbol({2}));
  const Poset p = nc_enumerate(lat, standard_factorization(lat), 4, 100000);
  EXPECT_TRUE(p.antisymmetric);
  EXPECT_TRUE(p.graded);
  EXPECT_TRUE(p.grading_consistent);
  EXPECT_EQ(p.elements.front().elem, identity<Rational>(lat.n()));
  EXPECT_EQ(p.elements.front().length, 0);
  std::size_t top = p.elements.size();
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    if (p.elements[i].elem == to_rational(coxeter_element(lat))) top = i;
  ASSERT_LT(top, p.elements.size());
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    EXPECT_TRUE(p.leq[0][i]);
    EXPECT_TRUE(p.leq[i][top]);
    EXPECT_TRUE(p.leq[i][i]);
  }
  for (const auto& [u, v] : p.covers) EXPECT_EQ(p.elements[v].length, p.elements[u].length + 1);
  // Every simple reflection is a length-one element at this depth.
  for (Index k = 0; k < lat.n(); ++k) {
    bool found = false;
    for (const auto& e : p.elements) found = found || (e.length == 1 && e.elem == to_rational(reflection(lat, lat.simple(k))));
    EXPECT_TRUE(found) << k;
  }
  // Sorted by length.
  for (std::size_t i = 1; i < p.elements.size(); ++i) EXPECT_LE(p.elements[i - 1].length, p.elements[i].length);
}

TEST(NcPoset, HyperbolicEnumeration) {
  const HyperbolicModel m = build_hyperbolic(CanonicalLattice(make_symbol({2, 2, 2, 2})));
  const Poset p = nc_enumerate(m.lat, standard_factorization(m.lat), 2, 100000, &m);
  EXPECT_TRUE(p.antisymmetric);
  EXPECT_TRUE(p.graded);
  EXPECT_EQ(p.elements.front().elem.rows(), m.dim());
}

TEST(NcPoset, Rendering) {
  const CanonicalLattice lat(make_symbol({2}));
  const Poset p = nc_enumerate(lat, standard_factorization(lat), 2, 1000);
  const std::string dot = poset_dot(p);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("l=0"), std::string::npos);
  const auto j = nlohmann::json::parse(poset_json(p));
  EXPECT_EQ(j["elements"].size(), p.elements.size());
  EXPECT_EQ(j["covers"].size(), p.covers.size());
  EXPECT_EQ(short_hash(p.elements[0].elem).size(), 8u);
  EXPECT_EQ(short_hash(p.elements[0].elem), short_hash(identity<Rational>(lat.n())));
  EXPECT_EQ(poset_dot(nc_enumerate(lat, standard_factorization(lat), 2, 1000)), dot);
}

TEST(NcPoset, RootKeysRoundTrip) {
  RootVec v(4);
  v << 1, -20, 0, 3;
  EXPECT_EQ(parse_root_key(root_key(v)), v);
  EXPECT_THROW(parse_root_key("1,2"), Error);
}

TEST(Theta, LatticeLevelOnSmallestSymbol) {
  const LatticeThetaReport r = lattice_theta_check(CanonicalLattice(make_symbol({2})), 3);
  EXPECT_TRUE(r.e_side.ok());
  EXPECT_TRUE(r.f_side.ok());
  EXPECT_TRUE(r.theta.ok()) << (r.theta.problems.empty() ? "" : r.theta.problems.front());
  EXPECT_TRUE(r.cox_commutes);
  EXPECT_GT(r.cox_checked, 0u);
}

TEST(Theta, LatticeLevelOnTubular) {
  const LatticeThetaReport r = lattice_theta_check(CanonicalLattice(make_symbol({2, 2, 2, 2})), 2);
  EXPECT_TRUE(r.ok());
}
