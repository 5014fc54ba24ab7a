#include "dseries/characters.hpp"

#include <algorithm>
#include <numeric>

namespace dseries {

namespace {

using Int128 = __int128;

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Dominant representative of v and the determinant of the Weyl element used,
// without allocating; returns false when v is singular.
bool regular_dominant(Family family, const Weight& v, Weight& out, int& sign) {
  const std::size_t n = v.size();
  std::array<std::int64_t, kMaxRank> key{};
  int negatives = 0;
  bool has_zero = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t c = v.twice(i);
    if (family == Family::A) {
      key[i] = c;
    } else {
      key[i] = c < 0 ? -c : c;
      if (c < 0) ++negatives;
      if (c == 0) has_zero = true;
    }
  }
  // insertion sort descending, counting transpositions
  int swaps = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j > 0 && key[j - 1] < key[j]; --j) {
      std::swap(key[j - 1], key[j]);
      ++swaps;
    }
  }
  for (std::size_t i = 1; i < n; ++i)
    if (key[i - 1] == key[i]) return false;
  out = Weight(n);
  for (std::size_t i = 0; i < n; ++i) out.set_twice(i, key[i]);
  sign = swaps % 2 == 0 ? 1 : -1;
  switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (has_zero) return false;
      if (negatives % 2 == 1) sign = -sign;
      break;
    case Family::D:
      if (negatives % 2 == 1 && !has_zero) out.set_twice(n - 1, -key[n - 1]);
      break;
  }
  return true;
}

// Dominant lattice weights mu <= highest, ordered by height of (highest - mu).
std::vector<std::pair<std::int64_t, Weight>> dominant_weights_below(const RootDatum& datum, const Weight& highest) {
  const std::size_t n = highest.size();
  const Family family = datum.family();
  const std::int64_t parity = ((highest.twice(0) % 2) + 2) % 2;
  std::int64_t top = highest.twice(0);
  std::int64_t bottom = 0;
  if (family == Family::A) {
    bottom = highest.twice(n - 1);
  } else {
    top = highest.max_abs_twice();
    bottom = family == Family::D ? -top : 0;
  }
  std::vector<std::pair<std::int64_t, Weight>> found;
  Weight current(n);
  // depth-first over descending sequences
  auto recurse = [&](auto&& self, std::size_t i, std::int64_t upper) -> void {
    if (i == n) {
      auto coeffs = datum.simple_root_coefficients(highest - current);
      if (!coeffs) return;
      if (!std::all_of(coeffs->begin(), coeffs->end(), [](std::int64_t c) { return c >= 0; })) return;
      found.emplace_back(std::accumulate(coeffs->begin(), coeffs->end(), std::int64_t{0}), current);
      return;
    }
    std::int64_t lower = bottom;
    if (family != Family::A) {
      if (family == Family::D && i == n - 1 && n >= 2) {
        lower = -upper;
      } else {
        lower = 0;
      }
    }
    for (std::int64_t v = upper; v >= lower; --v) {
      if (((v % 2) + 2) % 2 != parity) continue;
      current.set_twice(i, v);
      self(self, i + 1, family == Family::D && i == n - 1 ? v : v);
    }
  };
  std::int64_t first_upper = top;
  if (family == Family::D && n == 1) {
    // D1 has no roots: the only weight is the highest one
    found.emplace_back(0, highest);
    return found;
  }
  recurse(recurse, 0, first_upper);
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return found;
}

}  // namespace

void require_highest_weight(const RootDatum& datum, const Weight& hw) {
  require(hw.size() == static_cast<std::size_t>(datum.rank()), "weight length does not match rank");
  require(datum.is_lattice_weight(hw), "weight " + hw.str() + " is not a lattice weight of " + datum.name());
  require(datum.is_dominant(hw), "weight " + hw.str() + " is not dominant for " + datum.name());
}

std::int64_t weyl_dimension(const RootDatum& datum, const Weight& highest) {
  require_highest_weight(datum, highest);
  const Weight shifted = highest + datum.rho();
  Int128 num = 1;
  Int128 den = 1;
  for (const auto& alpha : datum.positive_roots()) {
    num *= dot_x4(shifted, alpha);
    den *= dot_x4(datum.rho(), alpha);
    const Int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("Weyl dimension is not an integer");
  if (num > INT64_MAX) throw std::overflow_error("dimension exceeds 64 bits");
  return static_cast<std::int64_t>(num);
}

WeightSystem::WeightSystem(const RootDatum& datum, const Weight& highest) : datum_(datum), highest_(highest) {
  require_highest_weight(datum, highest);
  const Weight shifted_top = highest + datum.rho();
  const std::int64_t top_norm = shifted_top.norm_sq_x4();
  for (const auto& [height, mu] : dominant_weights_below(datum, highest)) {
    std::int64_t mult = 0;
    if (height == 0) {
      mult = 1;
    } else {
      std::int64_t acc = 0;
      for (const auto& alpha : datum.positive_roots()) {
        Weight nu = mu;
        for (;;) {
          nu += alpha;
          auto it = lookup_.find(datum.dominant(nu));
          if (it == lookup_.end()) break;
          acc += it->second * dot_x4(nu, alpha);
        }
      }
      const std::int64_t gap = top_norm - (mu + datum.rho()).norm_sq_x4();
      if (gap <= 0 || (2 * acc) % gap != 0) throw std::logic_error("Freudenthal recursion broke down");
      mult = 2 * acc / gap;
    }
    if (mult <= 0) throw std::logic_error("dominant weight with non-positive multiplicity");
    dominant_.emplace_back(mu, mult);
    lookup_.emplace(mu, mult);
  }
}

std::int64_t WeightSystem::multiplicity(const Weight& weight) const {
  if (weight.size() != highest_.size()) return 0;
  if (!datum_.is_lattice_weight(weight)) return 0;
  auto it = lookup_.find(datum_.dominant(weight));
  return it == lookup_.end() ? 0 : it->second;
}

std::int64_t WeightSystem::total_dimension() const {
  std::int64_t total = 0;
  for_each_weight([&](const Weight&, std::int64_t m) { total += m; });
  return total;
}

std::int64_t weight_multiplicity(const RootDatum& datum, const Weight& highest, const Weight& weight) {
  return WeightSystem(datum, highest).multiplicity(weight);
}

std::vector<TensorTerm> tensor_decompose(const RootDatum& datum, const Weight& a, const Weight& b) {
  require_highest_weight(datum, a);
  require_highest_weight(datum, b);
  // iterate over the weights of the smaller factor
  const bool swap = weyl_dimension(datum, b) > weyl_dimension(datum, a);
  const Weight& big = swap ? b : a;
  const Weight& small = swap ? a : b;
  const WeightSystem small_weights(datum, small);
  const Weight shift = big + datum.rho();
  std::unordered_map<Weight, std::int64_t, WeightHash> acc;
  Weight dom;
  int sign = 1;
  small_weights.for_each_weight([&](const Weight& mu, std::int64_t m) {
    if (regular_dominant(datum.family(), shift + mu, dom, sign)) acc[dom - datum.rho()] += sign * m;
  });
  std::vector<TensorTerm> out;
  for (const auto& [hw, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("negative tensor multiplicity");
    out.push_back({hw, m, weyl_dimension(datum, hw)});
  }
  std::sort(out.begin(), out.end(), [](const TensorTerm& x, const TensorTerm& y) { return x.highest > y.highest; });
  return out;
}

std::int64_t tensor_multiplicity(const RootDatum& datum, const Weight& a, const WeightSystem& b,
                                 const Weight& target) {
  require_highest_weight(datum, a);
  require_highest_weight(datum, target);
  const Weight shifted_target = target + datum.rho();
  const Weight shifted_a = a + datum.rho();
  std::int64_t total = 0;
  datum.for_each_weyl_element([&](const WeylElement& w) {
    const std::int64_t m = b.multiplicity(w.apply(shifted_target) - shifted_a);
    if (m != 0) total += w.determinant() * m;
  });
  return total;
}

std::int64_t tensor_multiplicity(const RootDatum& datum, const Weight& a, const Weight& b, const Weight& target) {
  return tensor_multiplicity(datum, a, WeightSystem(datum, b), target);
}

Weight prv_component(const RootDatum& datum, const Weight& a, const Weight& b) {
  require_highest_weight(datum, a);
  require_highest_weight(datum, b);
  return datum.dominant(a + datum.longest_element(b));
}

}  // namespace dseries
