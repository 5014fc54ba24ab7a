#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dseries/characters.hpp"
#include "samples.hpp"

using namespace dseries;

namespace {

Weight W(const char* text) { return Weight::parse(text); }

using samples::from_vec;
using samples::letter;
using samples::random_highest;
using samples::to_vec;

}  // namespace

TEST_CASE("Weyl dimensions of the signature-table K-types") {
  const RootDatum b3(Family::B, 3), b4(Family::B, 4), c4(Family::C, 4), d3(Family::D, 3), d5(Family::D, 5);
  CHECK(weyl_dimension(b3, W("0,0,0")) == 1);
  CHECK(weyl_dimension(b3, W("1,1,0")) == 21);
  CHECK(weyl_dimension(b3, W("1,1,1")) == 35);
  CHECK(weyl_dimension(b4, W("1,1,0,0")) == 36);
  CHECK(weyl_dimension(b4, W("2,0,0,0")) == 44);
  CHECK(weyl_dimension(b4, W("2,2,0,0")) == 495);
  CHECK(weyl_dimension(b4, W("3,1,0,0")) == 910);
  CHECK(weyl_dimension(c4, W("1,0,0,0")) == 8);
  CHECK(weyl_dimension(c4, W("1,1,1,0")) == 48);
  CHECK(weyl_dimension(d3, W("1,1,0")) == 15);
  CHECK(weyl_dimension(d3, W("2,0,0")) == 20);
  CHECK(weyl_dimension(d3, W("2,1,1")) == 45);
  CHECK(weyl_dimension(d5, W("1,0,0,0,0")) == 10);
  CHECK(weyl_dimension(d5, W("1,1,1,0,0")) == 120);
  CHECK(weyl_dimension(d5, W("2,1,0,0,0")) == 320);
  CHECK(weyl_dimension(d5, W("3,0,0,0,0")) == 210);
  CHECK(weyl_dimension(d5, W("2,1,1,1,0")) == 1728);
}

TEST_CASE("familiar dimensions") {
  CHECK(weyl_dimension(RootDatum(Family::B, 3), W("1/2,1/2,1/2")) == 8);
  CHECK(weyl_dimension(RootDatum(Family::D, 4), W("1/2,1/2,1/2,-1/2")) == 8);
  CHECK(weyl_dimension(RootDatum(Family::A, 3), W("1,0,0")) == 3);
  CHECK(weyl_dimension(RootDatum(Family::A, 3), W("0,0,-1")) == 3);
  CHECK(weyl_dimension(RootDatum(Family::C, 3), W("1,1,0")) == 14);
  CHECK(weyl_dimension(RootDatum(Family::C, 2), W("2,0")) == 10);
}

TEST_CASE("non-dominant or off-lattice highest weights are rejected") {
  CHECK_THROWS_AS(weyl_dimension(RootDatum(Family::C, 2), W("0,1")), PreconditionError);
  CHECK_THROWS_AS(weyl_dimension(RootDatum(Family::C, 2), W("1/2,1/2")), PreconditionError);
  CHECK_THROWS_AS(tensor_decompose(RootDatum(Family::B, 2), W("1,0"), W("1/2,1")), PreconditionError);
}

TEST_CASE("weight multiplicities agree with Kostant's formula") {
  for (auto [f, rank, hw] : {std::tuple{Family::B, 3, "1,1,0"}, {Family::C, 3, "2,1,0"}, {Family::D, 3, "2,1,1"},
                             {Family::B, 2, "3/2,1/2"}, {Family::A, 3, "2,0,-1"}, {Family::C, 2, "2,2"}}) {
    const RootDatum d(f, rank);
    const oracle::System sys(letter(f), rank);
    const WeightSystem ws(d, W(hw));
    const auto reference = sys.character(to_vec(W(hw)));
    std::int64_t total = 0;
    for (const auto& [v, m] : reference) {
      CHECK(ws.multiplicity(from_vec(v)) == m);
      total += m;
    }
    CHECK(ws.total_dimension() == total);
    CHECK(weyl_dimension(d, W(hw)) == total);
  }
}

TEST_CASE("small tensor products") {
  const RootDatum c2(Family::C, 2);
  const auto terms = tensor_decompose(c2, W("1,0"), W("1,0"));
  REQUIRE(terms.size() == 3);
  CHECK(terms[0] == TensorTerm{W("2,0"), 1, 10});
  CHECK(terms[1] == TensorTerm{W("1,1"), 1, 5});
  CHECK(terms[2] == TensorTerm{W("0,0"), 1, 1});
  CHECK(tensor_multiplicity(c2, W("1,0"), W("1,0"), W("1,1")) == 1);
  CHECK(tensor_multiplicity(c2, W("1,0"), W("1,0"), W("1,0")) == 0);
  CHECK(prv_component(c2, W("2,1"), W("1,0")).str() == "1,1");
  CHECK(prv_component(RootDatum(Family::D, 3), W("1,0,0"), W("1/2,1/2,1/2")).str() == "1/2,1/2,-1/2");
  CHECK(prv_component(RootDatum(Family::A, 3), W("1,0,0"), W("1,0,0")).str() == "1,1,0");
}

TEST_CASE("property: random tensor pairs against the brute-force oracle") {
  std::mt19937 rng(7);
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int trial = 0; trial < 100; ++trial) {
      const int rank = samples::small_rank(f, trial);
      const RootDatum d(f, rank);
      const oracle::System sys(letter(f), rank);
      const Weight a = random_highest(rng, f, rank);
      const Weight b = random_highest(rng, f, rank);
      CAPTURE(d.name());
      CAPTURE(a.str());
      CAPTURE(b.str());
      const auto terms = tensor_decompose(d, a, b);

      std::int64_t dim_sum = 0;
      for (const auto& t : terms) {
        dim_sum += t.multiplicity * t.dimension;
        CHECK(t.dimension == weyl_dimension(d, t.highest));
        CHECK(t.multiplicity > 0);
      }
      CHECK(dim_sum == weyl_dimension(d, a) * weyl_dimension(d, b));

      const auto reference = sys.decompose(to_vec(a), to_vec(b));
      REQUIRE(reference.size() == terms.size());
      for (const auto& t : terms) {
        const auto it = reference.find(to_vec(t.highest));
        REQUIRE(it != reference.end());
        CHECK(it->second == t.multiplicity);
      }

      const Weight prv = prv_component(d, a, b);
      const auto prv_term = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.highest == prv; });
      REQUIRE(prv_term != terms.end());
      CHECK(prv_term->multiplicity == 1);
      const auto prv_norm = (prv + d.rho()).norm_sq_x4();
      for (const auto& t : terms) {
        if (t.highest == prv) continue;
        CHECK((t.highest + d.rho()).norm_sq_x4() > prv_norm);
        if (f != Family::A) CHECK(d.in_positive_cone(t.highest - prv));
      }

      auto swapped = tensor_decompose(d, b, a);
      CHECK(swapped == terms);
      for (const auto& t : terms) CHECK(tensor_multiplicity(d, a, b, t.highest) == t.multiplicity);
    }
  }
}

TEST_CASE("property: PRV bounds on larger pairs") {
  std::mt19937 rng(11);
  for (auto f : {Family::B, Family::C, Family::D}) {
    const RootDatum d(f, 4);
    for (int trial = 0; trial < 12; ++trial) {
      const Weight a = random_highest(rng, f, 4);
      const Weight b = random_highest(rng, f, 4);
      if (weyl_dimension(d, a) > 4000 || weyl_dimension(d, b) > 4000) continue;
      const auto terms = tensor_decompose(d, a, b);
      const Weight prv = prv_component(d, a, b);
      std::int64_t dim_sum = 0;
      int prv_mult = 0;
      for (const auto& t : terms) {
        dim_sum += t.multiplicity * t.dimension;
        if (t.highest == prv) {
          prv_mult = static_cast<int>(t.multiplicity);
        } else {
          CHECK((t.highest + d.rho()).norm_sq_x4() > (prv + d.rho()).norm_sq_x4());
        }
        CHECK(d.in_positive_cone(t.highest - prv));
      }
      CHECK(prv_mult == 1);
      CHECK(dim_sum == weyl_dimension(d, a) * weyl_dimension(d, b));
    }
  }
}
