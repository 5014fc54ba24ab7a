#pragma once

// Brute-force characters for tests. Shares no code with the library: its own root lists,
// its own Weyl group (signed permutations) and Kostant's multiplicity formula in place of
// Freudenthal. Vectors are doubled coordinates. Meant for rank <= 3.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Character = std::map<Vec, std::int64_t>;

struct SignedPermutation {
  std::vector<int> perm;   // output slot i takes input coordinate perm[i]
  std::vector<int> signs;  // then multiplied by signs[i]
  int det = 1;

  Vec apply(const Vec& v) const {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = signs[i] * v[static_cast<std::size_t>(perm[i])];
    return out;
  }
};

class System {
 public:
  System(char type, int rank) : type_(type), rank_(rank) {
    const auto n = static_cast<std::size_t>(rank);
    auto unit = [&](std::size_t i, int c) {
      Vec v(n, 0);
      v[i] = 2 * c;
      return v;
    };
    auto add = [](Vec a, const Vec& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      return a;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        roots_.push_back(add(unit(i, 1), unit(j, -1)));
        if (type != 'A') roots_.push_back(add(unit(i, 1), unit(j, 1)));
      }
      if (type == 'B') roots_.push_back(unit(i, 1));
      if (type == 'C') roots_.push_back(unit(i, 2));
    }
    rho_.assign(n, 0);
    for (const auto& r : roots_)
      for (std::size_t i = 0; i < n; ++i) rho_[i] += r[i];
    for (auto& x : rho_) x /= 2;
    build_weyl_group();
  }

  int rank() const { return rank_; }
  const Vec& rho() const { return rho_; }
  const std::vector<SignedPermutation>& weyl() const { return weyl_; }

  bool dominant(const Vec& v) const {
    for (const auto& r : simple()) {
      if (dot(v, r) < 0) return false;
    }
    return true;
  }

  // Kostant partition function: ways to write v as a sum of positive roots.
  std::int64_t partitions(const Vec& v) const { return partitions_from(0, v); }

  std::int64_t multiplicity(const Vec& highest, const Vec& weight) const {
    Vec hr = plus(highest, rho_);
    Vec wr = plus(weight, rho_);
    std::int64_t total = 0;
    for (const auto& w : weyl_) {
      Vec d = w.apply(hr);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= wr[i];
      total += w.det * partitions(d);
    }
    return total;
  }

  Character character(const Vec& highest) const {
    const auto cached = characters_.find(highest);
    if (cached != characters_.end()) return cached->second;
    int box = 0;
    for (int x : highest) box = std::max(box, std::abs(x));
    Character out;
    Vec mu(static_cast<std::size_t>(rank_));
    enumerate_box(mu, 0, box, highest, out);
    characters_.emplace(highest, out);
    return out;
  }

  // Multiply characters and peel off lexicographically largest weights.
  std::map<Vec, std::int64_t> decompose(const Vec& a, const Vec& b) const {
    Character product;
    const Character ca = character(a);
    const Character cb = character(b);
    for (const auto& [u, mu] : ca)
      for (const auto& [v, mv] : cb) product[plus(u, v)] += mu * mv;
    std::map<Vec, std::int64_t> out;
    while (!product.empty()) {
      const auto top = std::prev(product.end());
      if (top->second == 0) {
        product.erase(top);
        continue;
      }
      const Vec highest = top->first;
      const std::int64_t m = top->second;
      if (m < 0 || !dominant(highest)) throw std::logic_error("oracle: peeling produced a non-highest weight");
      out[highest] += m;
      for (const auto& [w, mw] : character(highest)) {
        product[w] -= m * mw;
        if (product[w] == 0) product.erase(w);
      }
    }
    return out;
  }

  static std::int64_t dot(const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
    return s;
  }

 private:
  static Vec plus(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }

  std::vector<Vec> simple() const {
    // every simple root is a positive root; dominance against all positive roots is equivalent
    return roots_;
  }

  void build_weyl_group() {
    const auto n = static_cast<std::size_t>(rank_);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
      const int perm_sign = inversions % 2 ? -1 : 1;
      const int sign_patterns = type_ == 'A' ? 1 : 1 << n;
      for (int mask = 0; mask < sign_patterns; ++mask) {
        const int flips = __builtin_popcount(static_cast<unsigned>(mask));
        if (type_ == 'D' && flips % 2) continue;
        SignedPermutation w;
        w.perm = perm;
        w.signs.assign(n, 1);
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1 << i)) w.signs[i] = -1;
        w.det = perm_sign * (flips % 2 ? -1 : 1);
        weyl_.push_back(std::move(w));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::int64_t partitions_from(std::size_t k, const Vec& v) const {
    if (dot(v, rho_) < 0) return 0;
    if (k == roots_.size()) return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }) ? 1 : 0;
    const auto key = std::make_pair(k, v);
    const auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    std::int64_t total = 0;
    Vec rest = v;
    while (dot(rest, rho_) >= 0) {
      total += partitions_from(k + 1, rest);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= roots_[k][i];
    }
    memo_.emplace(key, total);
    return total;
  }

  void enumerate_box(Vec& mu, std::size_t at, int box, const Vec& highest, Character& out) const {
    if (at == mu.size()) {
      const std::int64_t m = multiplicity(highest, mu);
      if (m != 0) out[mu] = m;
      return;
    }
    // same coset of 2Z as the highest weight coordinate: whole or half-odd throughout
    const int parity = std::abs(highest[at]) % 2;
    for (int x = -box; x <= box; ++x) {
      if (std::abs(x) % 2 != parity) continue;
      mu[at] = x;
      enumerate_box(mu, at + 1, box, highest, out);
    }
  }

  char type_;
  int rank_;
  std::vector<Vec> roots_;
  Vec rho_;
  std::vector<SignedPermutation> weyl_;
  mutable std::map<std::pair<std::size_t, Vec>, std::int64_t> memo_;
  mutable std::map<Vec, Character> characters_;
};

}  // namespace oracle
