#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dseries/weights.hpp"

using namespace dseries;

namespace {

Weight W(const char* text) { return Weight::parse(text); }

Weight random_weight(std::mt19937& rng, int rank, bool half) {
  std::uniform_int_distribution<int> coord(-4, 4);
  std::vector<std::int64_t> twice;
  for (int i = 0; i < rank; ++i) twice.push_back(2 * coord(rng) + (half ? 1 : 0));
  return Weight::from_twice(twice);
}

}  // namespace

TEST_CASE("weights parse and print in half-integer notation") {
  CHECK(W("5/2,3/2,1/2").str() == "5/2,3/2,1/2");
  CHECK(W("-1/2, 0, 3").str() == "-1/2,0,3");
  CHECK(W("4/2").str() == "2");
  CHECK(W("").size() == 0);
  CHECK(W("5/2,1").twice_vector() == std::vector<std::int64_t>{5, 2});
  CHECK(format_half(-3) == "-3/2");
  CHECK(format_half(8) == "4");
  CHECK(parse_half("-7/2") == -7);
}

TEST_CASE("malformed weights are rejected") {
  CHECK_THROWS_AS(W("1/3"), PreconditionError);
  CHECK_THROWS_AS(W("1/4"), PreconditionError);
  CHECK_THROWS_AS(W("x"), PreconditionError);
  CHECK_THROWS_AS(W("1,,2"), PreconditionError);
  CHECK_THROWS_AS(W("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_half("3/2/1"), PreconditionError);
}

TEST_CASE("weight arithmetic is exact") {
  CHECK(W("1/2,1/2").norm_sq_x4() == 2);
  CHECK(W("3,1").norm_sq_x4() == 40);
  CHECK((W("5/2,3/2") + W("1/2,-1/2")).str() == "3,1");
  CHECK((-W("1/2,0")).str() == "-1/2,0");
  CHECK(W("3,1").halved().str() == "3/2,1/2");
  CHECK(W("3/2,1/2").doubled().str() == "3,1");
  CHECK_THROWS_AS(W("1/2").halved(), PreconditionError);
  CHECK(W("1,2").concat(W("3")).str() == "1,2,3");
  CHECK(W("1,2,3").slice(1, 3).str() == "2,3");
  CHECK(W("2,0").is_integral());
  CHECK(W("1/2,3/2").all_half_odd());
  CHECK_FALSE(W("1/2,1").all_half_odd());
  CHECK(dot_x4(W("1/2,1"), W("1,1")) == 6);
  CHECK(W("3/2,-1/2").sum_twice() == 2);
}

TEST_CASE("rho for each classical type") {
  CHECK(RootDatum(Family::A, 3).rho().str() == "1,0,-1");
  CHECK(RootDatum(Family::B, 3).rho().str() == "5/2,3/2,1/2");
  CHECK(RootDatum(Family::C, 2).rho().str() == "2,1");
  CHECK(RootDatum(Family::C, 4).rho().str() == "4,3,2,1");
  CHECK(RootDatum(Family::D, 4).rho().str() == "3,2,1,0");
}

TEST_CASE("root systems have the expected sizes") {
  CHECK(RootDatum(Family::A, 3).positive_roots().size() == 3);
  CHECK(RootDatum(Family::B, 3).positive_roots().size() == 9);
  CHECK(RootDatum(Family::C, 3).positive_roots().size() == 9);
  CHECK(RootDatum(Family::D, 4).positive_roots().size() == 12);
  CHECK(RootDatum(Family::A, 3).weyl_order() == 6);
  CHECK(RootDatum(Family::B, 3).weyl_order() == 48);
  CHECK(RootDatum(Family::C, 2).weyl_order() == 8);
  CHECK(RootDatum(Family::D, 4).weyl_order() == 192);
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootDatum d(f, 4);
    std::size_t count = 0;
    d.for_each_weyl_element([&](const WeylElement&) { ++count; });
    CHECK(count == d.weyl_order());
    CHECK(d.simple_roots().size() == (f == Family::A ? 3u : 4u));
  }
}

TEST_CASE("dominant representatives") {
  CHECK(RootDatum(Family::B, 3).dominant(W("-1/2,2,-1")).str() == "2,1,1/2");
  CHECK(RootDatum(Family::C, 2).dominant(W("-1,-3")).str() == "3,1");
  CHECK(RootDatum(Family::D, 3).dominant(W("1,-2,3")).str() == "3,2,-1");
  CHECK(RootDatum(Family::D, 3).dominant(W("1,-2,-3")).str() == "3,2,1");
  CHECK(RootDatum(Family::A, 3).dominant(W("1,3,2")).str() == "3,2,1");
  CHECK(RootDatum(Family::B, 2).is_dominant(W("2,1")));
  CHECK_FALSE(RootDatum(Family::B, 2).is_dominant(W("1,2")));
  CHECK(RootDatum(Family::D, 2).is_dominant(W("2,-1")));
  CHECK_FALSE(RootDatum(Family::C, 2).is_dominant(W("2,-1")));
}

TEST_CASE("regularity and lattice membership") {
  CHECK(RootDatum(Family::B, 3).is_regular(W("2,1,1/2")));
  CHECK_FALSE(RootDatum(Family::B, 3).is_regular(W("2,1,0")));
  CHECK(RootDatum(Family::D, 3).is_regular(W("2,1,0")));
  CHECK_FALSE(RootDatum(Family::D, 3).is_regular(W("1,1,0")));
  CHECK_FALSE(RootDatum(Family::D, 3).is_regular(W("2,1,-1")));
  CHECK_FALSE(RootDatum(Family::C, 2).is_lattice_weight(W("1/2,1/2")));
  CHECK(RootDatum(Family::B, 2).is_lattice_weight(W("1/2,1/2")));
  CHECK_FALSE(RootDatum(Family::B, 2).is_lattice_weight(W("1/2,1")));
  CHECK(RootDatum(Family::D, 3).is_lattice_weight(W("1/2,1/2,-1/2")));
  CHECK(RootDatum(Family::A, 2).is_lattice_weight(W("1/2,-1/2")));
}

TEST_CASE("positive cone membership") {
  const RootDatum c2(Family::C, 2);
  CHECK(c2.in_positive_cone(W("1,1")));
  CHECK_FALSE(c2.in_positive_cone(W("1,0")));
  CHECK_FALSE(c2.in_positive_cone(W("0,-2")));
  CHECK(RootDatum(Family::B, 2).in_positive_cone(W("1,0")));
  const auto coeffs = RootDatum(Family::B, 2).simple_root_coefficients(W("1,1"));
  REQUIRE(coeffs);
  CHECK(*coeffs == std::vector<std::int64_t>{1, 2});
  CHECK_FALSE(RootDatum(Family::B, 2).simple_root_coefficients(W("1/2,1/2")));
}

TEST_CASE("property: Weyl elements act consistently") {
  std::mt19937 rng(20240611);
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int rank = 2; rank <= 4; ++rank) {
      const RootDatum d(f, rank);
      for (int trial = 0; trial < 40; ++trial) {
        const Weight v = random_weight(rng, rank, trial % 3 == 0);
        const Weight dom = d.dominant(v);
        CHECK(d.is_dominant(dom));
        CHECK(dom.norm_sq_x4() == v.norm_sq_x4());
        const WeylElement w = d.dominating_element(v);
        CHECK(w.apply(v) == dom);
        CHECK(w.inverse().apply(dom) == v);
        CHECK(w.compose(w.inverse()).is_identity());
        const auto back = d.find_element(dom, v);
        REQUIRE(back);
        CHECK(back->apply(dom) == v);
        const auto form = d.to_dominant(v);
        CHECK(form.weight == dom);
        CHECK((form.sign == 1 || form.sign == -1));
        CHECK(d.longest_element(d.longest_element(v)) == v);
      }
    }
  }
}

TEST_CASE("property: orbit points are distinct and complete") {
  const RootDatum b3(Family::B, 3);
  std::size_t count = 0;
  b3.for_each_orbit_point(W("2,1,0"), [&](const Weight& w) {
    ++count;
    CHECK(b3.dominant(w).str() == "2,1,0");
  });
  CHECK(count == 24);  // |W| / |stabilizer of (2,1,0)| = 48 / 2
}

TEST_CASE("families parse by letter") {
  CHECK(parse_family("C") == Family::C);
  CHECK(family_name(Family::D) == "D");
  CHECK_THROWS_AS(parse_family("E"), PreconditionError);
}
