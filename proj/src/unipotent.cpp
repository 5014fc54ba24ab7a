#include "dseries/unipotent.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dseries {

namespace {

std::map<int, int> multiplicities(const Partition& rows) {
  std::map<int, int> m;
  for (int r : rows) ++m[r];
  return m;
}

// Run of doubled coordinates from `from` down to `to` in steps of 2 (inclusive, empty if from < to).
void append_run(std::vector<std::int64_t>& out, std::int64_t from, std::int64_t to) {
  for (std::int64_t v = from; v >= to; v -= 2) out.push_back(v);
}

struct PairBlock {
  int upper = 0;  // larger column
  int lower = 0;  // smaller column
  std::vector<std::int64_t> spherical;
  std::vector<std::int64_t> twisted;  // right-hand side for eta = -1
  bool has_choice = false;
};

struct Layout {
  std::vector<std::int64_t> fixed;  // coordinates that never depend on eta
  std::vector<PairBlock> pairs;
};

PairBlock make_pair(int upper, int lower) {
  PairBlock b;
  b.upper = upper;
  b.lower = lower;
  append_run(b.spherical, upper, -(lower - 2));
  append_run(b.twisted, upper, lower + 2);
  append_run(b.twisted, lower - 2, -lower);
  b.has_choice = lower > 0;
  return b;
}

Layout layout_of(const NilpotentOrbit& orbit) {
  Partition cols = transpose(orbit.rows());
  Layout lay;
  const Family f = orbit.family();
  if (f == Family::A) {
    for (int m : cols) append_run(lay.fixed, m - 1, -(m - 1));
    return lay;
  }
  const bool want_odd = f != Family::D;
  if ((cols.size() % 2 == 1) != want_odd) cols.push_back(0);
  // equal columns at (2j, 2j+1) for B, D and at (2j-1, 2j) for C are set aside
  const std::size_t offset = f == Family::C ? 1 : 0;
  Partition rest;
  for (std::size_t i = 0; i < cols.size();) {
    if (i >= offset && (i - offset) % 2 == 0 && i + 1 < cols.size() && cols[i] == cols[i + 1]) {
      append_run(lay.fixed, cols[i] - 1, -(cols[i] - 1));
      i += 2;
      continue;
    }
    rest.push_back(cols[i]);
    ++i;
  }
  switch (f) {
    case Family::B:
      append_run(lay.fixed, rest[0] - 2, 1);
      for (std::size_t i = 1; i + 1 < rest.size(); i += 2) lay.pairs.push_back(make_pair(rest[i], rest[i + 1]));
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < rest.size(); i += 2) lay.pairs.push_back(make_pair(rest[i], rest[i + 1]));
      append_run(lay.fixed, rest.back(), 2);
      break;
    case Family::D:
      if (!rest.empty()) {
        append_run(lay.fixed, rest.front() - 2, -rest.back());
        for (std::size_t i = 1; i + 2 < rest.size(); i += 2) lay.pairs.push_back(make_pair(rest[i], rest[i + 1]));
      }
      break;
    case Family::A: break;
  }
  return lay;
}

Weight to_weight(const std::vector<std::int64_t>& twice, const NilpotentOrbit& orbit) {
  Weight w = Weight::from_twice(twice);
  require(w.size() == static_cast<std::size_t>(orbit.rank()), "internal: parameter length mismatch");
  if (orbit.very_even_class() == VeryEvenClass::II) w.set_twice(w.size() - 1, -w.twice(w.size() - 1));
  return w;
}

UnipotentParameter build(const NilpotentOrbit& orbit, const Layout& lay, const std::vector<int>& eta) {
  std::vector<std::int64_t> left = lay.fixed;
  std::vector<std::int64_t> right = lay.fixed;
  for (std::size_t i = 0; i < lay.pairs.size(); ++i) {
    const auto& p = lay.pairs[i];
    left.insert(left.end(), p.spherical.begin(), p.spherical.end());
    const auto& r = eta[i] == -1 ? p.twisted : p.spherical;
    right.insert(right.end(), r.begin(), r.end());
  }
  return canonical_parameter(orbit.datum(), to_weight(left, orbit), to_weight(right, orbit), eta);
}

bool all_parts_even_with_even_multiplicity(const Partition& rows) {
  if (rows.empty()) return false;
  for (auto [part, mult] : multiplicities(rows))
    if (part % 2 != 0 || mult % 2 != 0) return false;
  return true;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  Weight w = Weight::parse(text);
  Partition p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(w.twice(i) % 2 == 0 && w.twice(i) > 0, "partition parts must be positive integers");
    p.push_back(w.twice(i) / 2);
  }
  require(std::is_sorted(p.rbegin(), p.rend()), "partition parts must be weakly decreasing");
  return p;
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Partition transpose(const Partition& rows) {
  Partition cols;
  if (rows.empty()) return cols;
  for (int i = 0; i < rows.front(); ++i) {
    int count = 0;
    for (int r : rows)
      if (r > i) ++count;
    cols.push_back(count);
  }
  return cols;
}

bool is_valid_partition(Family family, const Partition& rows) {
  if (rows.empty()) return false;
  if (!std::is_sorted(rows.rbegin(), rows.rend()) || rows.back() <= 0) return false;
  int size = 0;
  for (int r : rows) size += r;
  const auto mult = multiplicities(rows);
  auto parity_parts_even = [&](int parity) {
    for (auto [part, m] : mult)
      if (part % 2 == parity && m % 2 != 0) return false;
    return true;
  };
  switch (family) {
    case Family::A: return true;
    case Family::B: return size % 2 == 1 && parity_parts_even(0);
    case Family::C: return size % 2 == 0 && parity_parts_even(1);
    case Family::D: return size % 2 == 0 && parity_parts_even(0);
  }
  return false;
}

NilpotentOrbit::NilpotentOrbit(Family family, Partition rows, std::optional<VeryEvenClass> tag)
    : family_(family), rows_(std::move(rows)), tag_(tag) {
  require(is_valid_partition(family_, rows_),
          "partition " + format_partition(rows_) + " is not valid for type " + family_name(family_));
  int size = 0;
  for (int r : rows_) size += r;
  rank_ = family_ == Family::A ? size : (family_ == Family::B ? (size - 1) / 2 : size / 2);
  require(rank_ >= 1, "orbit has rank 0");
  if (is_very_even()) {
    if (!tag_) tag_ = VeryEvenClass::I;
  } else {
    require(!tag_, "only very even orbits carry a class tag");
  }
}

bool NilpotentOrbit::is_very_even() const {
  return family_ == Family::D && all_parts_even_with_even_multiplicity(rows_);
}

std::string NilpotentOrbit::label() const {
  std::string out = family_name(family_) + std::to_string(rank_) + "[" + format_partition(rows_) + "]";
  if (tag_) out += *tag_ == VeryEvenClass::I ? "I" : "II";
  return out;
}

UnipotentParameter canonical_parameter(const RootDatum& datum, const Weight& left, const Weight& right,
                                       std::vector<int> eta) {
  const WeylElement w = datum.dominating_element(left);
  const Weight dom_left = w.apply(left);
  Weight dom_right = w.apply(right);
  const std::size_t n = dom_left.size();
  // within each block of equal entries of the dominant left side, the stabilizer acts on the right side
  const bool signed_group = datum.family() != Family::A;
  auto key = [&](std::size_t i) -> std::int64_t {
    return signed_group ? std::abs(std::int64_t{dom_left.twice(i)}) : dom_left.twice(i);
  };
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start;
    while (end < n && key(end) == key(start)) ++end;
    Weight block = dom_right.slice(start, end);
    if (signed_group && key(start) == 0) {
      // zero block: signed permutations (even sign changes in type D)
      const Family fam = datum.family() == Family::D ? Family::D : Family::B;
      block = RootDatum(fam, static_cast<int>(end - start)).dominant(block);
    } else {
      // a negative last entry (type D) twists the permutation action by a sign on that slot
      const bool twisted = dom_left.twice(end - 1) < 0;
      if (twisted) block.set_twice(block.size() - 1, -block.twice(block.size() - 1));
      std::vector<std::int64_t> vals = block.twice_vector();
      std::sort(vals.rbegin(), vals.rend());
      block = Weight::from_twice(vals);
      if (twisted) block.set_twice(block.size() - 1, -block.twice(block.size() - 1));
    }
    for (std::size_t i = start; i < end; ++i) dom_right.set_twice(i, block.twice(i - start));
    start = end;
  }
  return {dom_left, dom_right, std::move(eta)};
}

Weight infinitesimal_character(const NilpotentOrbit& orbit) {
  const Layout lay = layout_of(orbit);
  return build(orbit, lay, std::vector<int>(lay.pairs.size(), 1)).left;
}

ParameterSet enumerate_parameters(const NilpotentOrbit& orbit) {
  const Layout lay = layout_of(orbit);
  ParameterSet out;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < lay.pairs.size(); ++i)
    if (lay.pairs[i].has_choice) free.push_back(i);
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<int> eta(lay.pairs.size(), 1);
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((mask >> k) & 1u) eta[free[k]] = -1;
    out.parameters.push_back(build(orbit, lay, eta));
  }
  switch (orbit.family()) {
    case Family::B: out.orthogonal_multiplier = 2; break;
    case Family::D: out.orthogonal_multiplier = orbit.is_very_even() ? 1 : 2; break;
    default: out.orthogonal_multiplier = 1; break;
  }
  return out;
}

std::int64_t component_group_order(const NilpotentOrbit& orbit) {
  const auto mult = multiplicities(orbit.rows());
  int odd = 0;
  int even = 0;
  for (auto [part, m] : mult) (part % 2 ? odd : even) += 1;
  switch (orbit.family()) {
    case Family::A: return 1;
    case Family::B:
    case Family::D: return std::int64_t{1} << std::max(odd - 1, 0);
    case Family::C: return std::int64_t{1} << even;
  }
  return 1;
}

bool is_special(const NilpotentOrbit& orbit) {
  const Partition dual = transpose(orbit.rows());
  switch (orbit.family()) {
    case Family::A: return true;
    case Family::B: return is_valid_partition(Family::B, dual);
    case Family::C:
    case Family::D: return is_valid_partition(Family::C, dual);
  }
  return false;
}

std::optional<bool> is_stably_trivial(const NilpotentOrbit& orbit) {
  if (!is_special(orbit)) return std::nullopt;
  const auto mult = multiplicities(orbit.rows());
  switch (orbit.family()) {
    case Family::A: return true;
    case Family::B: {
      const int largest = orbit.rows().front();
      for (auto [part, m] : mult)
        if (part % 2 == 1 && part != largest && m % 2 != 0) return false;
      return true;
    }
    case Family::C:
    case Family::D:
      for (auto [part, m] : mult)
        if (part % 2 == 0 && m % 2 != 0) return false;
      return true;
  }
  return false;
}

bool is_triangular(const NilpotentOrbit& orbit) {
  const Partition& rows = orbit.rows();
  Partition expected;
  switch (orbit.family()) {
    case Family::A: return false;
    case Family::B: {
      const int top = rows.front();
      if (top % 2 == 0) return false;
      expected.push_back(top);
      for (int v = top - 2; v >= 1; v -= 2) expected.insert(expected.end(), {v, v});
      break;
    }
    case Family::C:
    case Family::D: {
      const int top = rows.front();
      if ((top % 2 == 0) != (orbit.family() == Family::C)) return false;
      for (int v = top; v >= 1; v -= 2) expected.insert(expected.end(), {v, v});
      break;
    }
  }
  return rows == expected;
}

UnipotentParameter alt_parameter(const NilpotentOrbit& orbit, int pair_index) {
  require(orbit.family() != Family::A, "type A orbits have no pair blocks");
  Layout lay = layout_of(orbit);
  require(pair_index >= 1 && static_cast<std::size_t>(pair_index) <= lay.pairs.size(), "pair index out of range");
  PairBlock& p = lay.pairs[static_cast<std::size_t>(pair_index - 1)];
  const bool wanted_parity_even = orbit.family() != Family::C;
  require(p.upper == p.lower && (p.upper % 2 == 0) == wanted_parity_even,
          "pair block does not have equal columns of the required parity");
  p.spherical.clear();
  append_run(p.spherical, p.upper - 1, -(p.upper - 1));
  p.twisted = p.spherical;
  return build(orbit, lay, std::vector<int>(lay.pairs.size(), 1));
}

std::vector<Partition> partitions_of(Family family, int size) {
  std::vector<Partition> out;
  Partition current;
  auto recurse = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      if (is_valid_partition(family, current)) out.push_back(current);
      return;
    }
    for (int k = std::min(remaining, largest); k >= 1; --k) {
      current.push_back(k);
      self(self, remaining - k, k);
      current.pop_back();
    }
  };
  recurse(recurse, size, size);
  return out;
}

}  // namespace dseries
