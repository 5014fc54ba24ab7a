#include "dseries/unitarity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dseries/unipotent.hpp"

namespace dseries {

namespace {

using Values = std::vector<std::int64_t>;  // doubled coordinates, ascending

// ---- string extraction on a multiset of non-negative doubled coordinates ----

StringDecomp decompose_values(Family family, const Values& values) {
  std::map<std::int64_t, int> count;
  for (auto v : values) ++count[v];
  auto take_run = [&](std::int64_t start) {
    std::int64_t v = start;
    while (true) {
      auto it = count.find(v);
      if (it == count.end()) break;
      if (--it->second == 0) count.erase(it);
      v += 2;
    }
    return CoordinateString{start, v - 2};
  };
  auto smallest_with_parity = [&](int parity) -> std::optional<std::int64_t> {
    for (const auto& [v, c] : count)
      if (((v % 2) + 2) % 2 == parity) return v;
    return std::nullopt;
  };

  StringDecomp d;
  std::vector<CoordinateString> half_runs;
  std::vector<CoordinateString> int_runs;
  if (count.count(1)) {
    const auto s = take_run(1);
    d.kappa0_length = s.length();
    half_runs.push_back(s);
  }
  while (auto v = smallest_with_parity(1)) {
    d.kappa.push_back(take_run(*v));
    half_runs.push_back(d.kappa.back());
  }
  const std::int64_t sigma0_start = family == Family::D ? 0 : 2;
  if (count.count(sigma0_start)) {
    const auto s = take_run(sigma0_start);
    d.sigma0_length = s.length();
    int_runs.push_back(s);
  }
  while (auto v = smallest_with_parity(0)) {
    d.sigma.push_back(take_run(*v));
    int_runs.push_back(d.sigma.back());
  }

  auto nested_chain = [](const std::vector<CoordinateString>& runs) {
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
      const auto& cur = runs[i];
      const auto& next = runs[i + 1];
      const bool separated = next.low_twice - cur.high_twice >= 4;
      const bool contained = cur.low_twice <= next.low_twice && next.high_twice <= cur.high_twice;
      if (!separated && !contained) return false;
    }
    return true;
  };
  d.nested = nested_chain(half_runs) && nested_chain(int_runs);
  return d;
}

Values absolute_values(const Weight& w, std::size_t begin, std::size_t end) {
  Values out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(std::abs(static_cast<std::int64_t>(w.twice(i))));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- witness K-types ----

Weight ones(std::size_t count, std::size_t rank) {
  std::vector<std::int64_t> c(rank, 0);
  for (std::size_t i = 0; i < std::min(count, rank); ++i) c[i] = 1;
  return Weight::from_integers(c);
}

Weight two_zero(std::size_t rank) {
  std::vector<std::int64_t> c(rank, 0);
  if (rank) c[0] = 2;
  return Weight::from_integers(c);
}

Weight two_one(std::size_t rank) {
  std::vector<std::int64_t> c(rank, 0);
  if (rank) c[0] = 2;
  if (rank > 1) c[1] = 1;
  return Weight::from_integers(c);
}

void normalize_witness(std::vector<Weight>& w) {
  std::sort(w.begin(), w.end(), [](const Weight& x, const Weight& y) {
    const auto nx = x.norm_sq_x4();
    const auto ny = y.norm_sq_x4();
    return nx != ny ? nx < ny : x < y;
  });
  w.erase(std::unique(w.begin(), w.end()), w.end());
}

UnitarityVerdict non_unitary(std::vector<Weight> witness, std::string tag) {
  UnitarityVerdict v;
  v.unitary = false;
  normalize_witness(witness);
  v.witness = std::move(witness);
  v.case_tag = std::move(tag);
  return v;
}

UnitarityVerdict unitary(InductionData cert, std::string tag) {
  UnitarityVerdict v;
  v.unitary = true;
  v.orbit = core_orbit(cert);
  v.certificate = std::move(cert);
  v.case_tag = std::move(tag);
  return v;
}

InductionData trivial_core(Family family, int rank) {
  InductionData d;
  d.group = family;
  d.core_rank = rank;
  return d;
}

InductionData family_core(Family family, const UnipotentFamily& core) {
  InductionData d;
  d.group = family;
  d.core = core;
  return d;
}

// ---- spherical analysis ----

UnitarityVerdict spherical_values(Family family, std::size_t rank, const Values& values, int depth);

// Push the string with the highest top upward in half steps until the string pattern changes.
UnitarityVerdict deform_extra_string(Family family, std::size_t rank, const Values& values, const StringDecomp& d,
                                     int depth) {
  if (depth > 4 * static_cast<int>(kMaxRank) + 8) throw std::logic_error("string deformation does not terminate");
  std::vector<CoordinateString> extras = d.kappa;
  extras.insert(extras.end(), d.sigma.begin(), d.sigma.end());
  const CoordinateString moving = *std::max_element(extras.begin(), extras.end(), [](const auto& x, const auto& y) {
    return x.high_twice != y.high_twice ? x.high_twice < y.high_twice : x.length() < y.length();
  });

  Values rest = values;
  for (std::int64_t v = moving.low_twice; v <= moving.high_twice; v += 2) rest.erase(std::find(rest.begin(), rest.end(), v));
  const StringDecomp rest_strings = decompose_values(family, rest);
  const std::int64_t rest_top = rest.empty() ? -10 : rest.back();

  auto canonical = [](StringDecomp s) {
    std::sort(s.kappa.begin(), s.kappa.end());
    std::sort(s.sigma.begin(), s.sigma.end());
    s.nested = true;
    return s;
  };
  const std::string tag_a = family_name(family) + ": a string deforms to infinity, Casimir on trivial and adjoint";

  for (std::int64_t shift = 1;; ++shift) {
    const CoordinateString moved{moving.low_twice + shift, moving.high_twice + shift};
    if (moved.low_twice > rest_top + 2) return non_unitary({ones(0, rank), ones(2, rank)}, tag_a);

    Values merged = rest;
    for (std::int64_t v = moved.low_twice; v <= moved.high_twice; v += 2) merged.push_back(v);
    std::sort(merged.begin(), merged.end());
    StringDecomp expected = rest_strings;
    (moved.half_integral() ? expected.kappa : expected.sigma).push_back(moved);
    if (canonical(decompose_values(family, merged)) == canonical(expected)) continue;

    const UnitarityVerdict next = spherical_values(family, rank, merged, depth + 1);
    if (next.unitary) {
      return non_unitary({ones(2, rank), two_zero(rank)},
                         family_name(family) + ": deformation reaches a unipotent parameter, GL(2) factor on (1,1) and (2,0)");
    }
    return non_unitary(next.witness, next.case_tag);
  }
}

UnitarityVerdict spherical_values(Family family, std::size_t rank, const Values& values, int depth) {
  if (values.empty()) return unitary(trivial_core(family, 0), "empty parameter");
  const StringDecomp d = decompose_values(family, values);
  const int k0 = d.kappa0_length;
  const int n0 = d.sigma0_length;
  const std::string fam = family_name(family);

  switch (family) {
    case Family::B: {
      if (k0 == 0) return non_unitary({ones(0, rank), ones(2, rank)}, "B: no kappa0, Casimir on trivial and adjoint");
      if (d.has_extra_strings()) return deform_extra_string(family, rank, values, d, depth);
      if (n0 == 0) return unitary(trivial_core(family, k0), "B: kappa0 alone (trivial representation)");
      if (n0 <= k0) return unitary(family_core(family, UnipotentFamily::type_b(n0, k0)), "B: kappa0 + sigma0 with N0 <= K0");
      const auto base = static_cast<std::size_t>(2 * k0);
      return non_unitary({ones(base, rank), ones(n0 == k0 + 1 ? base + 1 : base + 2, rank)},
                         "B: kappa0 + sigma0 with N0 > K0");
    }
    case Family::C: {
      if (!d.has_extra_strings() && (k0 == 0 || n0 == 0)) {
        if (k0 > 0) return unitary(family_core(family, UnipotentFamily::c_even(k0)), "C: kappa0 alone (even oscillator)");
        return unitary(trivial_core(family, n0), "C: sigma0 alone (trivial representation)");
      }
      bool adjacent = false;
      for (auto x : values)
        for (auto y : values)
          if (x % 2 == 0 && y % 2 != 0 && std::abs(x - y) == 1) adjacent = true;
      if (adjacent) return non_unitary({ones(0, rank), ones(2, rank)}, "C: an integer and a half-integer differ by 1/2");
      return non_unitary({ones(0, rank), two_zero(rank)}, "C: strings separated by at least 1, deform to infinity");
    }
    case Family::D: {
      if (n0 == 0) return non_unitary({ones(0, rank), ones(2, rank)}, "D: no sigma0, Casimir on trivial and adjoint");
      if (d.has_extra_strings()) return deform_extra_string(family, rank, values, d, depth);
      if (n0 >= k0) {
        if (k0 == 0) return unitary(trivial_core(family, n0), "D: sigma0 alone (trivial representation)");
        return unitary(family_core(family, UnipotentFamily::d_even(k0, n0)), "D: kappa0 + sigma0 with N0 >= K0");
      }
      std::vector<Weight> w{ones(static_cast<std::size_t>(2 * n0), rank)};
      if ((k0 - n0) % 2 == 0) w.push_back(ones(static_cast<std::size_t>(2 * n0 + 2), rank));
      return non_unitary(std::move(w), "D: kappa0 + sigma0 with K0 > N0");
    }
    case Family::A: break;
  }
  throw PreconditionError("string analysis applies to types B, C, D");
}

// Prepend a fixed block of coordinates to every witness of the spherical part.
std::vector<Weight> lift(const std::vector<Weight>& witness, const std::vector<std::int64_t>& prefix_twice,
                         const RootDatum& datum) {
  std::vector<Weight> out;
  for (const auto& w : witness) out.push_back(datum.dominant(Weight::from_twice(prefix_twice).concat(w)));
  return out;
}

// ---- level analysis ----

struct LevelBlock {
  std::int64_t level = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// At most one run of consecutive integers and one of half-integers, each symmetric about level/2.
std::optional<std::vector<CoordinateString>> unitary_character_runs(const Values& coords, std::int64_t level) {
  std::vector<CoordinateString> runs;
  for (int parity : {1, 0}) {
    Values part;
    for (auto v : coords)
      if (((v % 2) + 2) % 2 == parity) part.push_back(v);
    if (part.empty()) continue;
    std::sort(part.begin(), part.end());
    for (std::size_t i = 0; i + 1 < part.size(); ++i)
      if (part[i + 1] - part[i] != 2) return std::nullopt;
    if (part.front() + part.back() != 2 * level) return std::nullopt;
    runs.push_back({part.front(), part.back()});
  }
  return runs;
}

UnitarityVerdict relevant_part(Family family, const Values& level_one, const Values& spherical,
                               std::vector<GlBlock> outer_blocks) {
  const std::size_t sph_rank = spherical.size();
  const std::size_t rank = level_one.size() + sph_rank;
  const RootDatum datum(family, static_cast<int>(rank));
  const UnitarityVerdict sph = spherical_values(family, sph_rank, spherical, 0);
  const StringDecomp d = decompose_values(family, spherical);
  const std::string fam = family_name(family);

  auto with_blocks = [&](InductionData cert, std::vector<GlBlock> level_blocks) {
    cert.blocks = outer_blocks;
    cert.blocks.insert(cert.blocks.end(), level_blocks.begin(), level_blocks.end());
    return cert;
  };
  auto lifted = [&](const std::vector<std::int64_t>& prefix, const std::string& tag) {
    return non_unitary(lift(sph.witness, prefix, datum), tag + " [" + sph.case_tag + "]");
  };

  if (level_one.empty()) {
    if (!sph.unitary) return sph;
    UnitarityVerdict v = sph;
    v.certificate = with_blocks(*sph.certificate, {});
    return v;
  }

  // xi is the level: 2 lambda = xi + 2 rho(GL)
  const GlBlock half_block{1, 2};  // lambda = 1/2
  const GlBlock pair_block{2, 2};  // lambda = (1, 0)
  const bool is_half = level_one == Values{1};
  const bool is_pair = level_one == Values{0, 2};
  const bool is_both = level_one == Values{0, 1, 2};

  if (is_half && family == Family::B) {
    if (spherical.empty()) return unitary(with_blocks(trivial_core(family, 0), {half_block}), "B: (1/2 \\ -1/2) alone");
    return non_unitary({ones(1, rank), ones(3, rank)}, "B: spherical part without kappa0 beside (1/2 \\ -1/2)");
  }
  if (is_half && family == Family::C) {
    if (spherical.empty()) {
      return unitary(with_blocks(family_core(family, UnipotentFamily::c_odd(1)), {}), "C: (1/2 \\ -1/2) alone (odd oscillator)");
    }
    if (d.kappa0_length == 0 && d.sigma0_length == 0 && d.sigma.empty() && d.kappa.size() == 1 && d.kappa[0].low_twice == 3) {
      const int k1 = d.kappa[0].length() + 1;
      return unitary(with_blocks(family_core(family, UnipotentFamily::c_odd(k1)), {}),
                     "C: (1/2 \\ -1/2) + kappa1 from 3/2 (odd oscillator)");
    }
    if (sph.unitary) {
      return unitary(with_blocks(*sph.certificate, {half_block}), "C: (1/2 \\ -1/2) + sigma0, induced from the trivial representation");
    }
    return lifted({2}, "C: non-unitary spherical part lifted past (1/2 \\ -1/2)");
  }
  if (is_half && family == Family::D) {
    if (spherical.empty()) return unitary(with_blocks(trivial_core(family, 0), {half_block}), "D: (1/2 \\ -1/2) alone");
    if (d.sigma0_length == 0) return lifted({2}, "D: no sigma0 beside (1/2 \\ -1/2)");
    const int n0 = d.sigma0_length;
    for (const auto& k : d.kappa) {
      if (k.low_twice >= 5) {
        return non_unitary({two_one(rank), ones(3, rank)}, "D: a kappa string starts at 5/2 or above beside (1/2 \\ -1/2)");
      }
    }
    if (!d.sigma.empty()) return lifted({2}, "D: extra sigma strings beside (1/2 \\ -1/2)");
    if (d.kappa.empty()) {
      return unitary(with_blocks(family_core(family, UnipotentFamily::d_odd(1, n0)), {}), "D: (1/2 \\ -1/2) + sigma0");
    }
    const int k1 = d.kappa[0].length() + 1;
    if (d.kappa.size() == 1 && d.kappa[0].low_twice == 3) {
      if (n0 >= k1) {
        return unitary(with_blocks(family_core(family, UnipotentFamily::d_odd(k1, n0)), {}),
                       "D: (1/2 \\ -1/2) + kappa1 from 3/2 + sigma0 with N0 >= K1");
      }
      std::vector<Weight> w{ones(static_cast<std::size_t>(2 * n0), rank)};
      if ((k1 - n0) % 2 == 0) w.push_back(ones(static_cast<std::size_t>(2 * n0 + 2), rank));
      return non_unitary(std::move(w), "D: (1/2 \\ -1/2) + kappa1 from 3/2 + sigma0 with N0 < K1");
    }
    return lifted({2}, "D: spherical part lifted past (1/2 \\ -1/2)");
  }
  if (is_pair && family == Family::D) {
    if (spherical.empty()) return unitary(with_blocks(trivial_core(family, 0), {pair_block}), "D: (1,0 \\ 0,-1) alone");
    return non_unitary({ones(2, rank), ones(4, rank)}, "D: spherical part without sigma0 beside (1,0 \\ 0,-1)");
  }
  if (is_both && family == Family::D) {
    if (spherical.empty()) {
      return unitary(with_blocks(trivial_core(family, 0), {half_block, pair_block}), "D: (1/2 \\ -1/2) and (1,0 \\ 0,-1)");
    }
    return non_unitary({ones(3, rank), ones(5, rank)}, "D: spherical part beside (1/2 \\ -1/2) and (1,0 \\ 0,-1)");
  }
  throw PreconditionError("level-one block " + Weight::from_twice(level_one).str() + " is not regular for type " + fam);
}

struct PreparedParameter {
  Weight left;
  Weight mu;
  bool flipped = false;
  std::vector<LevelBlock> levels;  // descending level
};

PreparedParameter prepare(const Weight& lambda_left, const Weight& lambda_right, const RootDatum& datum) {
  const auto n = static_cast<std::size_t>(datum.rank());
  require(lambda_left.size() == n && lambda_right.size() == n, "parameter length does not match rank");
  require(datum.is_regular(lambda_left), "2*lambda_L = " + lambda_left.doubled().str() + " is not regular");
  const Weight mu = lambda_left - lambda_right;
  require(mu.is_integral(), "lambda_L - lambda_R = " + mu.str() + " is not integral");
  require(datum.is_lattice_weight(mu), "lambda_L - lambda_R is not a K-type weight");

  // Hermitian: some w with w lambda_L = -lambda_R and w lambda_R = -lambda_L
  const auto w = datum.find_element(lambda_left, -lambda_right);
  require(w && w->apply(lambda_right) == -lambda_left, "parameter (" + lambda_left.str() + " \\ " + lambda_right.str() +
                                                          ") is not Hermitian");

  const WeylElement to_dom = datum.dominating_element(mu);
  PreparedParameter p;
  p.left = to_dom.apply(lambda_left);
  p.mu = to_dom.apply(mu);
  if (datum.family() == Family::D && p.mu.twice(n - 1) < 0) {
    // outer automorphism
    p.left.set_twice(n - 1, -p.left.twice(n - 1));
    p.mu.set_twice(n - 1, -p.mu.twice(n - 1));
    p.flipped = true;
  }
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && p.mu.twice(j) == p.mu.twice(i)) ++j;
    p.levels.push_back({p.mu.twice(i) / 2, i, j});
    i = j;
  }
  return p;
}

UnitarityVerdict classify(const PreparedParameter& p, const RootDatum& datum) {
  const Family family = datum.family();
  const auto n = static_cast<std::size_t>(datum.rank());
  std::vector<GlBlock> blocks;
  std::vector<std::int64_t> prefix;
  Values level_one;
  Values spherical;

  for (const auto& block : p.levels) {
    const bool gl_level = family == Family::A || block.level >= 1;
    if (!gl_level) {
      spherical = absolute_values(p.left, block.begin, block.end);
      continue;
    }
    Values coords;
    for (std::size_t i = block.begin; i < block.end; ++i) coords.push_back(p.left.twice(i));
    const auto runs = unitary_character_runs(coords, block.level);
    if (!runs) {
      Weight bumped = p.mu;
      bumped.set_twice(block.begin, bumped.twice(block.begin) + 2);
      bumped.set_twice(block.end - 1, bumped.twice(block.end - 1) - 2);
      std::vector<Weight> w{p.mu, bumped};
      if (p.flipped)
        for (auto& x : w) x.set_twice(n - 1, -x.twice(n - 1));
      return non_unitary(std::move(w), "level " + std::to_string(block.level) +
                                           " block is not induced from unitary characters (Casimir on mu and mu + e_i - e_j)");
    }
    if (family != Family::A && block.level == 1) {
      level_one = coords;
      std::sort(level_one.begin(), level_one.end());
      continue;
    }
    for (const auto& r : *runs) blocks.push_back({r.length(), 2 * block.level});
    for (std::size_t i = block.begin; i < block.end; ++i) prefix.push_back(p.mu.twice(i));
  }

  if (family == Family::A) {
    InductionData cert;
    cert.group = Family::A;
    cert.blocks = blocks;
    return unitary(std::move(cert), "A: stack of unitary characters");
  }

  UnitarityVerdict v = relevant_part(family, level_one, spherical, blocks);
  if (!v.unitary) {
    std::vector<Weight> w;
    for (const auto& x : v.witness) {
      Weight full = Weight::from_twice(prefix).concat(x);
      if (p.flipped) full.set_twice(n - 1, -full.twice(n - 1));
      w.push_back(full);
    }
    normalize_witness(w);
    v.witness = std::move(w);
  }
  return v;
}

}  // namespace

std::size_t StringDecomp::coordinate_count() const {
  std::size_t total = static_cast<std::size_t>(kappa0_length + sigma0_length);
  for (const auto& s : kappa) total += static_cast<std::size_t>(s.length());
  for (const auto& s : sigma) total += static_cast<std::size_t>(s.length());
  return total;
}

StringDecomp decompose_strings(const Weight& lambda, const RootDatum& datum) {
  require(datum.family() != Family::A, "string decomposition applies to types B, C, D");
  require(lambda.size() == static_cast<std::size_t>(datum.rank()), "parameter length does not match rank");
  require(datum.is_dominant(lambda), "lambda = " + lambda.str() + " is not dominant");
  require(!lambda.is_integral(), "lambda = " + lambda.str() + " is integral, not half-integral");
  return decompose_values(datum.family(), absolute_values(lambda, 0, lambda.size()));
}

UnitarityVerdict spherical_unitarity(const Weight& lambda, const RootDatum& datum) {
  require(datum.family() != Family::A, "spherical unitarity applies to types B, C, D");
  require(lambda.size() == static_cast<std::size_t>(datum.rank()), "parameter length does not match rank");
  require(datum.is_dominant(lambda), "lambda = " + lambda.str() + " is not dominant");
  require(datum.is_regular(lambda), "lambda = " + lambda.str() + " is not regular");
  return spherical_values(datum.family(), lambda.size(), absolute_values(lambda, 0, lambda.size()), 0);
}

UnitarityVerdict relevant_unitarity(const Weight& lambda_left, const Weight& lambda_right, const RootDatum& datum) {
  require(datum.family() != Family::A, "relevant unitarity applies to types B, C, D");
  const PreparedParameter p = prepare(lambda_left, lambda_right, datum);
  for (const auto& b : p.levels)
    require(b.level <= 1, "lowest K-type " + p.mu.str() + " has coordinates above 1");
  return classify(p, datum);
}

UnitarityVerdict full_unitarity(const Weight& lambda_left, const Weight& lambda_right, const RootDatum& datum) {
  return classify(prepare(lambda_left, lambda_right, datum), datum);
}

std::string core_orbit(const InductionData& data) {
  Partition rows;
  auto repeat = [&](int part, int times) {
    for (int i = 0; i < times; ++i) rows.push_back(part);
  };
  if (data.core) {
    const UnipotentFamily& f = *data.core;
    switch (f.kind()) {
      case FamilyKind::B:
        repeat(2, 2 * f.a());
        repeat(1, 2 * f.b() - 2 * f.a() + 1);
        break;
      case FamilyKind::CEven:
      case FamilyKind::COdd:
        repeat(2, 1);
        repeat(1, 2 * f.rank() - 2);
        break;
      case FamilyKind::DEven:
      case FamilyKind::DOdd:
        repeat(3, 1);
        repeat(2, 2 * f.a() - 2);
        repeat(1, 2 * f.b() - 2 * f.a() + 1);
        break;
      default: return f.name();
    }
  } else {
    switch (data.group) {
      case Family::A: return "";
      case Family::B: repeat(1, 2 * data.core_rank + 1); break;
      case Family::C:
      case Family::D: repeat(1, 2 * data.core_rank); break;
    }
  }
  return "[" + format_partition(rows) + "]";
}

}  // namespace dseries
