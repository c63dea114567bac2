#include <random>

#include "doctest.h"
#include "hallrad/permgroup.hpp"
#include "oracle.hpp"

using namespace hallrad;

namespace {

PermGroup make(size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(Perm::from_cycles(degree, c));
  return PermGroup(degree, std::move(gens));
}

PermGroup alt5() { return make(5, {"(0 1 2 3 4)", "(0 1 2)"}); }
PermGroup sym4() { return make(4, {"(0 1)", "(0 1 2 3)"}); }
PermGroup sym5() { return make(5, {"(0 1)", "(0 1 2 3 4)"}); }

}  // namespace

TEST_CASE("order matches brute-force closure") {
  struct Fixture {
    PermGroup g;
    uint64_t expect;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({alt5(), 60});
  fixtures.push_back({sym4(), 24});
  fixtures.push_back({sym5(), 120});
  fixtures.push_back({make(4, {}), 1});
  fixtures.push_back({make(6, {"(0 1 2 3 4 5)"}), 6});
  fixtures.push_back({make(8, {"(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"}), 16});  // D8
  fixtures.push_back({make(7, {"(0 1 2 3 4 5 6)", "(0 1)"}), 5040});           // S7
  for (const auto& f : fixtures) {
    auto bf = oracle::closure(f.g.degree(), f.g.generators());
    CHECK(f.g.order() == Order{f.expect});
    CHECK(bf.size() == f.expect);
  }
}

TEST_CASE("membership agrees with brute force") {
  PermGroup g = alt5();
  auto bf = oracle::closure(5, g.generators());
  CHECK(g.contains(Perm::from_cycles(5, "(0 1 2)")));
  CHECK_FALSE(g.contains(Perm::from_cycles(5, "(0 1)")));
  CHECK(make(4, {}).contains(Perm::identity(4)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Point> img{0, 1, 2, 3, 4};
    std::shuffle(img.begin(), img.end(), rng);
    Perm p{img};
    CHECK(g.contains(p) == oracle::contains(bf, p));
  }
  CHECK_THROWS_AS(g.contains(Perm::identity(4)), error);
}

TEST_CASE("orbit-stabilizer") {
  PermGroup g = alt5();
  PermGroup h = g.point_stabilizer(0);
  CHECK(h.order() == Order{12});
  CHECK(g.orbit(0).size() == 5);
  CHECK(h.is_subgroup_of(g));
  // Alt(4) inside: stabilizer is solvable, index 5
  CHECK(g.order() == h.order() * 5);

  PermGroup t = make(4, {});
  CHECK(t.point_stabilizer(0).order() == Order{1});

  // orbit-stabilizer on a transitive group for every point
  PermGroup s4 = sym4();
  for (Point p = 0; p < 4; ++p)
    CHECK(s4.order() == s4.point_stabilizer(p).order() * Order{s4.orbit(p).size()});
}

TEST_CASE("pointwise stabilizer") {
  PermGroup g = sym5();
  std::vector<Point> pts{0, 1};
  PermGroup h = g.pointwise_stabilizer(pts);
  CHECK(h.order() == Order{6});  // Sym({2,3,4})
  for (const Perm& x : h.generators()) {
    CHECK(x[0] == 0);
    CHECK(x[1] == 1);
  }
}

TEST_CASE("normal closure") {
  PermGroup s4 = sym4();
  PermGroup v4 = s4.normal_closure({Perm::from_cycles(4, "(0 1)(2 3)")});
  CHECK(v4.order() == Order{4});
  auto bf = oracle::normal_closure(4, oracle::closure(4, s4.generators()),
                                   {Perm::from_cycles(4, "(0 1)(2 3)")});
  CHECK(bf.size() == 4);
  for (const Perm& x : v4.generators()) CHECK(oracle::contains(bf, x));

  PermGroup a5 = alt5();
  CHECK(a5.normal_closure({Perm::from_cycles(5, "(0 1 2)")}).order() == Order{60});
  CHECK(a5.normal_closure({}).order() == Order{1});
  CHECK_THROWS_AS(a5.normal_closure({Perm::from_cycles(5, "(0 1)")}), error);
}

TEST_CASE("derived series and solvability") {
  auto series = sym4().derived_series();
  REQUIRE(series.size() == 4);
  CHECK(series[0].order() == Order{24});
  CHECK(series[1].order() == Order{12});
  CHECK(series[2].order() == Order{4});
  CHECK(series[3].order() == Order{1});

  // consecutive terms: normal with abelian quotient (commutators of lifts land
  // in the next term)
  for (size_t i = 0; i + 1 < series.size(); ++i) {
    CHECK(is_normal_in(series[i + 1], series[i]));
    for (const Perm& a : series[i].generators())
      for (const Perm& b : series[i].generators())
        CHECK(series[i + 1].contains(a.inverse() * b.inverse() * a * b));
  }

  CHECK(alt5().derived_series().size() == 1);
  CHECK(make(6, {"(0 1 2 3 4 5)"}).derived_series().size() == 2);

  CHECK(make(4, {"(0 1 2)", "(0 1)(2 3)"}).is_solvable());  // Alt(4)
  CHECK_FALSE(alt5().is_solvable());
}

TEST_CASE("solvability agrees with brute force on small fixtures") {
  std::vector<PermGroup> fixtures{
      alt5(), sym4(), sym5(), make(6, {"(0 1 2 3 4 5)"}),
      make(5, {"(0 1 2 3 4)", "(1 4)(2 3)"}),  // D5
      make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"}),  // F21
  };
  for (const auto& g : fixtures) {
    auto bf = oracle::closure(g.degree(), g.generators());
    CHECK(g.is_solvable() == oracle::is_solvable(g.degree(), bf));
  }
}

TEST_CASE("primitivity and blocks") {
  CHECK(alt5().is_primitive());
  CHECK(sym4().is_primitive());
  CHECK_FALSE(make(4, {"(0 1 2 3)"}).is_primitive());           // C4: block {0,2}
  CHECK_FALSE(make(8, {"(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"}).is_primitive());  // D8
  CHECK_FALSE(make(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}).is_primitive());           // D6
  CHECK_THROWS_AS(make(4, {"(0 1)"}).is_primitive(), error);
}

TEST_CASE("minimal normal subgroups") {
  auto s4 = sym4();
  auto mns = minimal_normal_subgroups(s4, element_cap());
  REQUIRE(mns.subgroups.size() == 1);
  CHECK(mns.subgroups[0].order() == Order{4});
  CHECK_FALSE(mns.probabilistic);

  // C6 has two: C2 and C3
  auto c6 = make(6, {"(0 1 2 3 4 5)"});
  auto m2 = minimal_normal_subgroups(c6, element_cap());
  REQUIRE(m2.subgroups.size() == 2);
  Order o1 = m2.subgroups[0].order(), o2 = m2.subgroups[1].order();
  CHECK(((o1 == 2 && o2 == 3) || (o1 == 3 && o2 == 2)));

  // simple group: itself
  auto m3 = minimal_normal_subgroups(alt5(), element_cap());
  REQUIRE(m3.subgroups.size() == 1);
  CHECK(m3.subgroups[0].order() == Order{60});

  // brute-force cross-check on Sym(4) and D6
  for (auto& g : {sym4(), make(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"})}) {
    auto bf = oracle::minimal_normal_subgroups(g.degree(),
                                               oracle::closure(g.degree(), g.generators()));
    auto got = minimal_normal_subgroups(g, element_cap());
    REQUIRE(got.subgroups.size() == bf.size());
  }
}

TEST_CASE("socle") {
  auto s = socle(sym4(), element_cap());
  CHECK(s.socle.order() == Order{4});
  auto t = socle(alt5(), element_cap());
  CHECK(t.socle.order() == Order{60});
}

TEST_CASE("conjugating element search") {
  PermGroup g = alt5();
  PermGroup h1 = g.point_stabilizer(0);
  PermGroup h2 = g.point_stabilizer(3);
  auto w = conjugating_element(g, h1, h2, element_cap());
  REQUIRE(w.has_value());
  for (const Perm& s : h1.generators()) CHECK(h2.contains(conjugate(s, *w)));

  auto id = conjugating_element(g, h1, h1, element_cap());
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  // subgroups of different order are never conjugate
  CHECK_FALSE(conjugating_element(g, h1, g, element_cap()).has_value());
}

TEST_CASE("random elements are members") {
  PermGroup g = sym5();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) CHECK(g.contains(g.random_element(rng)));
}

TEST_CASE("element enumeration respects cap") {
  CHECK(alt5().elements(60).size() == 60);
  CHECK_THROWS_AS(alt5().elements(59), cap_exceeded);
}
