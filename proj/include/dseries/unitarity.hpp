#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseries/dirac.hpp"
#include "dseries/weights.hpp"

namespace dseries {

// Consecutive coordinates low, low+1, ..., high (doubled).
struct CoordinateString {
  std::int64_t low_twice = 0;
  std::int64_t high_twice = 0;

  int length() const { return static_cast<int>((high_twice - low_twice) / 2 + 1); }
  bool half_integral() const { return low_twice % 2 != 0; }
  bool operator==(const CoordinateString&) const = default;
  auto operator<=>(const CoordinateString&) const = default;
};

// Strings of a dominant spherical parameter, extracted smallest coordinate first.
// kappa0 = (1/2, ..., K0 - 1/2); sigma0 = (1, ..., N0) in types B, C and (0, ..., N0 - 1) in type D.
struct StringDecomp {
  int kappa0_length = 0;
  int sigma0_length = 0;
  std::vector<CoordinateString> kappa;  // half-integer strings other than kappa0
  std::vector<CoordinateString> sigma;  // integer strings other than sigma0
  bool nested = true;                   // consecutive strings are separated by >= 2 or contained

  bool has_extra_strings() const { return !kappa.empty() || !sigma.empty(); }
  std::size_t coordinate_count() const;
  bool operator==(const StringDecomp&) const = default;
};

// lambda is dominant and not integral. Coordinates are taken in absolute value (type D).
StringDecomp decompose_strings(const Weight& lambda, const RootDatum& datum);

struct UnitarityVerdict {
  bool unitary = false;
  std::optional<InductionData> certificate;  // set iff unitary
  std::string orbit;                         // orbit of the unipotent core, e.g. "[2,2,1]"
  std::vector<Weight> witness;               // cx-relevant K-types with indefinite form; set iff not unitary
  std::string case_tag;
  bool operator==(const UnitarityVerdict&) const = default;
};

// J(lambda, lambda) for dominant regular lambda with 2 lambda integral (types B, C, D).
UnitarityVerdict spherical_unitarity(const Weight& lambda, const RootDatum& datum);

// J(lambda_L, lambda_R) whose lowest K-type has every coordinate in {0, 1}.
UnitarityVerdict relevant_unitarity(const Weight& lambda_left, const Weight& lambda_right, const RootDatum& datum);

// Any Hermitian J(lambda_L, lambda_R) with 2 lambda_L regular integral.
UnitarityVerdict full_unitarity(const Weight& lambda_left, const Weight& lambda_right, const RootDatum& datum);

// Partition label of the nilpotent orbit attached to the core of an induction certificate.
std::string core_orbit(const InductionData& data);

}  // namespace dseries
