#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dseries/unitarity.hpp"
#include "dseries/weights.hpp"

namespace dseries {

// Signature symbol "1", "s", "1+s", "1+2s": p copies of the positive and q of the negative class.
struct Signature {
  int positive = 0;
  int negative = 0;
  bool operator==(const Signature&) const = default;
};
Signature parse_signature(std::string_view text);

struct FixtureRow {
  std::string sig;
  Signature signature;
  Weight atlas_hw;  // length 2 * rank as printed by atlas
  Weight highest;   // atlas_hw[i] + atlas_hw[i + rank]
  std::int64_t dimension = 0;
};

// One signature table with the parameter that produced it.
struct Fixture {
  std::string name;
  Family family = Family::B;
  int rank = 0;
  Weight lambda_left;
  Weight lambda_right;
  std::vector<Weight> witness;  // K-types where the form is expected to be indefinite
  std::vector<FixtureRow> rows;
};

Fixture parse_fixture(std::string_view text, const std::string& name);
Fixture load_fixture(const std::filesystem::path& path);
// All *.fix files in the directory, sorted by file name.
std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir);

// Form restricted to the given K-types is indefinite according to the table.
bool indefinite_on(const Fixture& fixture, const std::vector<Weight>& ktypes);

struct FixtureReport {
  std::string name;
  bool dimensions_match = true;
  bool verdict_matches = true;     // table shows indefiniteness and the verdict is NonUnitary
  bool witness_matches = true;     // verdict witness equals the expected set
  bool witness_indefinite = true;  // the table confirms indefiniteness on the reported witness
  UnitarityVerdict verdict;
  std::vector<std::string> problems;

  bool ok() const { return dimensions_match && verdict_matches && witness_matches && witness_indefinite; }
};

FixtureReport replay_fixture(const Fixture& fixture);

}  // namespace dseries
