#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseries/weights.hpp"

namespace dseries {

using Partition = std::vector<int>;

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);
// column lengths of the Young diagram
Partition transpose(const Partition& rows);
bool is_valid_partition(Family family, const Partition& rows);

// Very even orbits in type D come in two classes.
enum class VeryEvenClass { I, II };

class NilpotentOrbit {
 public:
  NilpotentOrbit(Family family, Partition rows, std::optional<VeryEvenClass> tag = std::nullopt);

  Family family() const { return family_; }
  const Partition& rows() const { return rows_; }
  int rank() const { return rank_; }
  RootDatum datum() const { return RootDatum(family_, rank_); }
  bool is_very_even() const;
  std::optional<VeryEvenClass> very_even_class() const { return tag_; }
  std::string label() const;

 private:
  Family family_;
  Partition rows_;
  int rank_;
  std::optional<VeryEvenClass> tag_;
};

// Parameter (left, right) up to simultaneous Weyl action: left is dominant and
// right is put in a canonical form under the stabilizer of left.
struct UnipotentParameter {
  Weight left;
  Weight right;
  std::vector<int> eta;  // one sign per pair block that admits a choice
  bool operator==(const UnipotentParameter&) const = default;
};

struct ParameterSet {
  std::vector<UnipotentParameter> parameters;  // SO / Sp count
  int orthogonal_multiplier = 1;               // extra factor for the full orthogonal group
};

Weight infinitesimal_character(const NilpotentOrbit& orbit);
ParameterSet enumerate_parameters(const NilpotentOrbit& orbit);
std::int64_t component_group_order(const NilpotentOrbit& orbit);
bool is_special(const NilpotentOrbit& orbit);
// nullopt for non-special orbits
std::optional<bool> is_stably_trivial(const NilpotentOrbit& orbit);
bool is_triangular(const NilpotentOrbit& orbit);
// Spherical parameter with pair block `pair_index` (1-based, same indexing as eta)
// replaced by the symmetric string of its common column length.
UnipotentParameter alt_parameter(const NilpotentOrbit& orbit, int pair_index);

// Bring (left, right) to the canonical form described above.
UnipotentParameter canonical_parameter(const RootDatum& datum, const Weight& left, const Weight& right,
                                       std::vector<int> eta = {});

// All valid partitions of size `size` for the family.
std::vector<Partition> partitions_of(Family family, int size);

}  // namespace dseries
