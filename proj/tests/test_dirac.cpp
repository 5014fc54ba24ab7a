#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dseries/characters.hpp"
#include "dseries/dirac.hpp"

using namespace dseries;

namespace {

Weight W(const char* text) { return Weight::parse(text); }

std::vector<UnipotentFamily> families_up_to(int max_rank) {
  std::vector<UnipotentFamily> out;
  for (int n = 2; n <= max_rank; ++n) {
    out.push_back(UnipotentFamily::c_even(n));
    out.push_back(UnipotentFamily::c_odd(n));
  }
  for (int a = 1; a <= max_rank; ++a) {
    for (int b = a; a + b <= max_rank; ++b) {
      out.push_back(UnipotentFamily::type_b(a, b));
      out.push_back(UnipotentFamily::d_even(a, b));
      out.push_back(UnipotentFamily::d_odd(a, b));
    }
  }
  return out;
}

bool expected_nonzero(const UnipotentFamily& f) {
  switch (f.kind()) {
    case FamilyKind::CEven: return f.rank() % 2 == 0;
    case FamilyKind::COdd: return f.rank() % 2 == 1;
    case FamilyKind::DEven: return f.a() % 2 == 0;
    case FamilyKind::DOdd: return f.a() % 2 == 1;
    default: return true;
  }
}

GlBlock block(int size, const char* xi) { return GlBlock{size, parse_half(xi)}; }

}  // namespace

TEST_CASE("spin norms") {
  CHECK(spin_norm_sq_x4(RootDatum(Family::C, 2), W("2,0")) == 40);
  CHECK(spin_norm_sq_x4(RootDatum(Family::B, 3), W("0,0,0")) == 140);
  CHECK(spin_norm_sq_x4(RootDatum(Family::C, 2), W("0,0")) == 80);
}

TEST_CASE("C_even(2)") {
  const auto r = dirac_unipotent(UnipotentFamily::c_even(2));
  CHECK(r.nonzero);
  REQUIRE(r.spin_lkts.size() == 1);
  CHECK(r.spin_lkts[0].ktype == W("2,0"));
  CHECK(r.spin_lkts[0].multiplicity == 1);
  REQUIRE(r.tau);
  CHECK(*r.tau == W("1,0"));
  CHECK(r.multiplicity == std::optional<std::int64_t>(2));
  CHECK(r.checks.target_norm_x4 == 40);
  CHECK(r.checks.full_tensor_sum == std::optional<std::int64_t>(1));
}

TEST_CASE("small families") {
  CHECK_FALSE(dirac_unipotent(UnipotentFamily::c_odd(2)).nonzero);
  CHECK(hd_multiplicity(UnipotentFamily::c_odd(3), MultiplicityMethod::Tensor) == 2);
  CHECK(hd_multiplicity(UnipotentFamily::type_b(1, 1), MultiplicityMethod::Tensor) == 2);
  const auto b12 = dirac_unipotent(UnipotentFamily::type_b(1, 2));
  REQUIRE(b12.spin_lkts.size() == 1);
  CHECK(b12.spin_lkts[0].ktype == W("2,2,0"));
  CHECK(b12.checks.target_norm_x4 == 56);
  CHECK_THROWS_AS(dirac_unipotent(UnipotentFamily::spin_b(2)), PreconditionError);
}

TEST_CASE("a tensor check confirms the C_even(2) pairing") {
  const RootDatum c2(Family::C, 2);
  CHECK(tensor_multiplicity(c2, W("2,0"), c2.rho(), W("1,0")) == 1);
}

TEST_CASE("property: multiplicity one and the selection rule up to rank 6") {
  for (const auto& fam : families_up_to(6)) {
    CAPTURE(fam.name());
    const auto r = dirac_unipotent(fam);
    const RootDatum d = fam.datum();
    CHECK(r.checks.min_spin_norm_x4 >= r.checks.target_norm_x4);
    CHECK(r.nonzero == (r.checks.min_spin_norm_x4 == r.checks.target_norm_x4));
    CHECK(r.nonzero == expected_nonzero(fam));
    CHECK(r.checks.search_bound >= default_search_bound(fam));
    const std::int64_t scale = std::int64_t{1} << (d.rank() / 2);
    if (r.nonzero) {
      REQUIRE(r.spin_lkts.size() == 1);
      CHECK(r.spin_lkts[0].multiplicity == 1);
      CHECK(r.spin_lkts[0].spin_norm_x4 == r.checks.target_norm_x4);
      CHECK(r.spin_lkts[0].delta == d.dominant(r.spin_lkts[0].ktype - d.rho()));
      REQUIRE(r.tau);
      CHECK(*r.tau == r.two_lambda - d.rho());
      CHECK(d.is_dominant(*r.tau));
      CHECK(tensor_multiplicity(d, r.spin_lkts[0].ktype, d.rho(), *r.tau) == 1);
      CHECK(r.checks.full_tensor_sum == std::optional<std::int64_t>(1));
      CHECK(r.multiplicity == std::optional<std::int64_t>(scale));
      CHECK(r.checks.by_count == scale);
      CHECK(r.checks.by_tensor == scale);
    } else {
      // minimizers still exist; their spin norm just exceeds |2 lambda|
      CHECK_FALSE(r.spin_lkts.empty());
      for (const auto& s : r.spin_lkts) CHECK(s.spin_norm_x4 == r.checks.min_spin_norm_x4);
      CHECK(r.checks.min_spin_norm_x4 > r.checks.target_norm_x4);
      CHECK_FALSE(r.tau);
      CHECK(r.checks.by_count == 0);
      CHECK(r.checks.by_tensor == 0);
    }
    CHECK(hd_multiplicity(fam, MultiplicityMethod::Count) == hd_multiplicity(fam, MultiplicityMethod::Tensor));
  }
}

TEST_CASE("property: parity vanishing for the zero members") {
  for (const auto& fam : families_up_to(6)) {
    if (fam.kind() == FamilyKind::B) continue;
    CAPTURE(fam.name());
    if (expected_nonzero(fam)) {
      CHECK_THROWS_AS(parity_vanishing(fam, 6), PreconditionError);
    } else {
      CHECK(parity_vanishing(fam, 6));
    }
  }
  CHECK_THROWS_AS(parity_vanishing(UnipotentFamily::type_b(1, 2), 6), PreconditionError);
  // exactly one of the D pair survives
  CHECK(dirac_unipotent(UnipotentFamily::d_even(1, 2)).nonzero != dirac_unipotent(UnipotentFamily::d_odd(1, 2)).nonzero);
}

TEST_CASE("property: positivity of the constituents above delta") {
  for (const auto& fam : families_up_to(5)) {
    if (!expected_nonzero(fam)) continue;
    CAPTURE(fam.name());
    const auto rep = positivity_check(fam, 4);
    CHECK(rep.constituents > 0);
    CHECK(rep.violations.empty());
    const auto r = dirac_unipotent(fam);
    REQUIRE(r.spin_lkts.size() == 1);
    CHECK(rep.delta == r.spin_lkts[0].delta);
  }
}

TEST_CASE("induced from GL(2) x Sp(4)") {
  InductionData data;
  data.group = Family::C;
  data.blocks = {block(2, "5")};
  data.core = UnipotentFamily::c_even(2);
  CHECK(data.rank() == 4);
  CHECK(data.two_lambda() == W("6,4,3,1"));
  CHECK(data.describe() == "GL(2)[xi=5] x C_even(2)");
  const auto r = dirac_induced(data);
  CHECK(r.nonzero);
  CHECK(r.multiplicity == std::optional<std::int64_t>(4));
  CHECK(r.checks.full_tensor_sum == std::optional<std::int64_t>(1));
  const RootDatum c4(Family::C, 4);
  REQUIRE(r.tau);
  REQUIRE(r.tau_extremal);
  CHECK(*r.tau == c4.dominant(r.two_lambda) - c4.rho());
  CHECK(c4.dominant(*r.tau_extremal) == *r.tau);

  data.core = UnipotentFamily::c_odd(2);
  const auto zero = dirac_induced(data);
  CHECK_FALSE(zero.nonzero);
  CHECK_FALSE(zero.multiplicity);
}

TEST_CASE("induction preconditions") {
  InductionData data;
  data.group = Family::C;
  data.core = UnipotentFamily::c_even(2);
  data.blocks = {block(2, "1/2")};
  CHECK_THROWS_AS(dirac_induced(data), PreconditionError);  // 2 lambda not integral
  data.blocks = {block(2, "2")};
  CHECK_THROWS_AS(dirac_induced(data), PreconditionError);  // 2 lambda = (3,1,3,1) singular
  data.blocks = {block(1, "4")};
  data.core.reset();
  data.core_rank = 1;
  CHECK_THROWS_AS(dirac_induced(data), PreconditionError);  // lambda = (2,1) integral
}

TEST_CASE("property: induction with no GL blocks is the unipotent computation") {
  for (const auto& fam : families_up_to(5)) {
    InductionData data;
    data.group = fam.datum().family();
    data.core = fam;
    CHECK(dirac_induced(data) == dirac_unipotent(fam));
  }
}

TEST_CASE("property: induced nonvanishing follows the core") {
  for (const auto& core : families_up_to(4)) {
    CAPTURE(core.name());
    for (int xi : {9, 11}) {
      InductionData data;
      data.group = core.datum().family();
      data.core = core;
      data.blocks = {GlBlock{1, 2 * xi}};
      const auto r = dirac_induced(data);
      CHECK(r.nonzero == expected_nonzero(core));
      if (r.nonzero) {
        CHECK(r.multiplicity == std::optional<std::int64_t>(std::int64_t{1} << (data.rank() / 2)));
      }
    }
  }
}
