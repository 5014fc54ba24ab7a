#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dseries/weights.hpp"

namespace dseries {

// Weyl dimension of the irreducible module with the given dominant highest weight.
std::int64_t weyl_dimension(const RootDatum& datum, const Weight& highest);

// Dominant weights of V(highest) with multiplicities (Freudenthal recursion).
class WeightSystem {
 public:
  WeightSystem(const RootDatum& datum, const Weight& highest);

  const RootDatum& datum() const { return datum_; }
  const Weight& highest() const { return highest_; }

  // multiplicity of an arbitrary weight (0 if not a weight)
  std::int64_t multiplicity(const Weight& weight) const;
  const std::vector<std::pair<Weight, std::int64_t>>& dominant_multiplicities() const { return dominant_; }

  // Visit every weight with its multiplicity.
  template <class Visit>
  void for_each_weight(Visit&& visit) const {
    for (const auto& [mu, m] : dominant_) {
      datum_.for_each_orbit_point(mu, [&](const Weight& w) { visit(w, m); });
    }
  }

  std::int64_t total_dimension() const;

 private:
  RootDatum datum_;
  Weight highest_;
  std::vector<std::pair<Weight, std::int64_t>> dominant_;
  std::unordered_map<Weight, std::int64_t, WeightHash> lookup_;
};

std::int64_t weight_multiplicity(const RootDatum& datum, const Weight& highest, const Weight& weight);

struct TensorTerm {
  Weight highest;
  std::int64_t multiplicity = 0;
  std::int64_t dimension = 0;
  bool operator==(const TensorTerm&) const = default;
};

// V(a) (x) V(b), sorted by highest weight descending (lexicographic).
std::vector<TensorTerm> tensor_decompose(const RootDatum& datum, const Weight& a, const Weight& b);

// [V(a) (x) V(b) : V(target)] by an alternating sum over W.
std::int64_t tensor_multiplicity(const RootDatum& datum, const Weight& a, const WeightSystem& b,
                                 const Weight& target);
std::int64_t tensor_multiplicity(const RootDatum& datum, const Weight& a, const Weight& b,
                                 const Weight& target);

// {a + w0 b}: the extreme component of V(a) (x) V(b).
Weight prv_component(const RootDatum& datum, const Weight& a, const Weight& b);

// Throws PreconditionError unless hw is a dominant lattice weight of the datum.
void require_highest_weight(const RootDatum& datum, const Weight& hw);

}  // namespace dseries
