#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dseries/weights.hpp"

namespace dseries {

enum class FamilyKind { B, CEven, COdd, DEven, DOdd, ATrivialInduced, SpinB, SpinDPlus, SpinDMinus };

// A unipotent representation with half-integral infinitesimal character.
class UnipotentFamily {
 public:
  static UnipotentFamily type_b(int a, int b);
  static UnipotentFamily c_even(int n);
  static UnipotentFamily c_odd(int n);
  static UnipotentFamily d_even(int a, int b);
  static UnipotentFamily d_odd(int a, int b);
  static UnipotentFamily a_induced(int a, int b);
  static UnipotentFamily spin_b(int n);
  static UnipotentFamily spin_d(int n, bool plus);
  // "B:1,2", "C_even:3", "D_odd:1,2", "A:1,2", "SpinB:3", "SpinD+:4", "SpinD-:4"
  static UnipotentFamily parse(std::string_view text);

  FamilyKind kind() const { return kind_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int rank() const { return rank_; }
  RootDatum datum() const;
  std::string name() const;
  bool has_spectrum() const;
  bool operator==(const UnipotentFamily&) const = default;

 private:
  UnipotentFamily(FamilyKind kind, int a, int b, int rank) : kind_(kind), a_(a), b_(b), rank_(rank) {}
  FamilyKind kind_;
  int a_;
  int b_;
  int rank_;
};

// Dominant 2*lambda.
Weight two_lambda(const UnipotentFamily& family);

// Left parameter lambda_L in its standard (non-dominant) form.
Weight left_parameter(const UnipotentFamily& family);

// K-types with every coordinate at most `bound`, ordered by (norm, lexicographic).
std::vector<Weight> kspectrum(const UnipotentFamily& family, int bound);
bool in_spectrum(const UnipotentFamily& family, const Weight& ktype);
// Parity of the coordinate sum shared by all K-types, if the family has one.
std::optional<int> spectrum_sum_parity(const UnipotentFamily& family);

// Entries of 2*lambda from the printed type D formula read literally, for comparison
// against two_lambda (it does not produce a weight of the right rank).
std::vector<std::int64_t> printed_d_two_lambda(int a, int b);

}  // namespace dseries
