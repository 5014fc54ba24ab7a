#include "dseries/weights.hpp"

#include <ostream>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace dseries {

namespace {

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 28;

std::int32_t checked_coord(std::int64_t value) {
  if (value >= kCoordLimit || value <= -kCoordLimit) {
    throw PreconditionError("coordinate out of supported range");
  }
  return static_cast<std::int32_t>(value);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw PreconditionError("malformed number '" + std::string(s) + "'");
  }
  return value;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

// ---------------------------------------------------------------- Weight

Weight::Weight(std::size_t rank) {
  require(rank <= kMaxRank, "rank exceeds supported maximum");
  size_ = static_cast<std::uint8_t>(rank);
}

Weight Weight::from_twice(const std::vector<std::int64_t>& twice) {
  Weight w(twice.size());
  for (std::size_t i = 0; i < twice.size(); ++i) w.coords_[i] = checked_coord(twice[i]);
  return w;
}

Weight Weight::from_integers(std::initializer_list<std::int64_t> values) {
  return from_integers(std::vector<std::int64_t>(values));
}

Weight Weight::from_integers(const std::vector<std::int64_t>& values) {
  Weight w(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) w.coords_[i] = checked_coord(2 * values[i]);
  return w;
}

Weight Weight::parse(std::string_view text) {
  text = trim(text);
  std::vector<std::int64_t> twice;
  if (text.empty()) return Weight(0);
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    twice.push_back(parse_half(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  require(twice.size() <= kMaxRank, "rank exceeds supported maximum");
  return from_twice(twice);
}

void Weight::set_twice(std::size_t i, std::int64_t value) { coords_[i] = checked_coord(value); }

std::vector<std::int64_t> Weight::twice_vector() const {
  return std::vector<std::int64_t>(coords_.begin(), coords_.begin() + size_);
}

bool Weight::is_integral() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (coords_[i] % 2 != 0) return false;
  return true;
}

bool Weight::all_half_odd() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (coords_[i] % 2 == 0) return false;
  return true;
}

std::int64_t Weight::norm_sq_x4() const { return dot_x4(*this, *this); }

std::int64_t Weight::max_abs_twice() const {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < size_; ++i) m = std::max<std::int64_t>(m, std::abs(coords_[i]));
  return m;
}

std::int64_t Weight::sum_twice() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) s += coords_[i];
  return s;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (std::size_t i = 0; i < size_; ++i) w.coords_[i] = -coords_[i];
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  require(size_ == other.size_, "rank mismatch");
  for (std::size_t i = 0; i < size_; ++i)
    coords_[i] = checked_coord(std::int64_t{coords_[i]} + other.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require(size_ == other.size_, "rank mismatch");
  for (std::size_t i = 0; i < size_; ++i)
    coords_[i] = checked_coord(std::int64_t{coords_[i]} - other.coords_[i]);
  return *this;
}

Weight Weight::doubled() const {
  Weight w = *this;
  for (std::size_t i = 0; i < size_; ++i) w.coords_[i] = checked_coord(2 * std::int64_t{coords_[i]});
  return w;
}

Weight Weight::halved() const {
  Weight w = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    require(coords_[i] % 2 == 0, "halving leaves (1/2)Z");
    w.coords_[i] = coords_[i] / 2;
  }
  return w;
}

Weight Weight::concat(const Weight& tail) const {
  Weight w(size_ + tail.size_);
  std::copy_n(coords_.begin(), size_, w.coords_.begin());
  std::copy_n(tail.coords_.begin(), tail.size_, w.coords_.begin() + size_);
  return w;
}

Weight Weight::slice(std::size_t begin, std::size_t end) const {
  Weight w(end - begin);
  std::copy(coords_.begin() + begin, coords_.begin() + end, w.coords_.begin());
  return w;
}

bool Weight::operator==(const Weight& other) const {
  return size_ == other.size_ && std::equal(coords_.begin(), coords_.begin() + size_, other.coords_.begin());
}

std::strong_ordering Weight::operator<=>(const Weight& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (std::size_t i = 0; i < size_; ++i)
    if (auto c = coords_[i] <=> other.coords_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const Weight& w) { return out << "(" << w.str() << ")"; }

std::string Weight::str() const {
  std::string out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += format_half(coords_[i]);
  }
  return out;
}

std::size_t Weight::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint32_t>(coords_[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::int64_t dot_x4(const Weight& a, const Weight& b) {
  require(a.size() == b.size(), "rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t{a.twice(i)} * b.twice(i);
  return s;
}

std::string format_half(std::int64_t twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::int64_t parse_half(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return 2 * parse_int(text);
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 1) return 2 * num;
  if (den == 2) return num;
  throw PreconditionError("denominator must be 1 or 2 in '" + std::string(text) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  text = trim(text);
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  throw PreconditionError("unknown root system type '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- WeylElement

Weight WeylElement::apply(const Weight& v) const {
  Weight out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.set_twice(i, sign[i] * std::int64_t{v.twice(perm[i])});
  return out;
}

int WeylElement::determinant() const {
  int d = permutation_sign(perm);
  for (int s : sign) d *= s;
  return d;
}

WeylElement WeylElement::inverse() const {
  WeylElement inv{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) {
    inv.perm[perm[i]] = static_cast<int>(i);
    inv.sign[perm[i]] = sign[i];
  }
  return inv;
}

WeylElement WeylElement::compose(const WeylElement& right) const {
  // (this o right) v: out_i = sign_i * (right v)_{perm_i} = sign_i * rsign_{perm_i} * v_{rperm_{perm_i}}
  WeylElement out{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.perm[i] = right.perm[perm[i]];
    out.sign[i] = sign[i] * right.sign[perm[i]];
  }
  return out;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i) || sign[i] != 1) return false;
  return true;
}

// ---------------------------------------------------------------- RootDatum

RootDatum::RootDatum(Family family, int rank) : family_(family), rank_(rank) {
  require(rank >= 1, "rank must be at least 1");
  require(static_cast<std::size_t>(rank) <= kMaxRank, "rank exceeds supported maximum");
  const auto n = static_cast<std::size_t>(rank);
  auto unit = [n](std::size_t i, int c) {
    Weight w(n);
    w.set_twice(i, 2 * c);
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      positive_.push_back(unit(i, 1) + unit(j, -1));
      if (family != Family::A) positive_.push_back(unit(i, 1) + unit(j, 1));
    }
    if (family == Family::B) positive_.push_back(unit(i, 1));
    if (family == Family::C) positive_.push_back(unit(i, 2));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) simple_.push_back(unit(i, 1) + unit(i + 1, -1));
  switch (family) {
    case Family::A: break;
    case Family::B: simple_.push_back(unit(n - 1, 1)); break;
    case Family::C: simple_.push_back(unit(n - 1, 2)); break;
    case Family::D:
      if (n >= 2) simple_.push_back(unit(n - 2, 1) + unit(n - 1, 1));
      break;
  }
  rho_ = Weight(n);
  for (const auto& a : positive_) rho_ += a;
  for (std::size_t i = 0; i < n; ++i) rho_.set_twice(i, rho_.twice(i) / 2);
}

std::string RootDatum::name() const { return family_name(family_) + std::to_string(rank_); }

bool RootDatum::is_dominant(const Weight& v) const {
  require(v.size() == static_cast<std::size_t>(rank_), "rank mismatch");
  for (const auto& a : simple_)
    if (dot_x4(v, a) < 0) return false;
  return true;
}

bool RootDatum::is_regular(const Weight& v) const {
  require(v.size() == static_cast<std::size_t>(rank_), "rank mismatch");
  for (const auto& a : positive_)
    if (dot_x4(v, a) == 0) return false;
  return true;
}

bool RootDatum::is_lattice_weight(const Weight& v) const {
  if (v.size() != static_cast<std::size_t>(rank_)) return false;
  switch (family_) {
    case Family::C: return v.is_integral();
    case Family::A:
      for (std::size_t i = 1; i < v.size(); ++i)
        if ((v.twice(i) - v.twice(0)) % 2 != 0) return false;
      return true;
    case Family::B:
    case Family::D: return v.is_integral() || v.all_half_odd();
  }
  return false;
}

WeylElement RootDatum::dominating_element(const Weight& v) const {
  require(v.size() == static_cast<std::size_t>(rank_), "rank mismatch");
  const std::size_t n = v.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> key(n);
  for (std::size_t i = 0; i < n; ++i)
    key[i] = family_ == Family::A ? v.twice(i) : std::abs(std::int64_t{v.twice(i)});
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });
  WeylElement w{order, std::vector<int>(n, 1)};
  if (family_ == Family::A) return w;
  int negatives = 0;
  std::optional<std::size_t> zero_slot;
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = v.twice(order[i]);
    if (c < 0) {
      w.sign[i] = -1;
      ++negatives;
    }
    if (c == 0) zero_slot = i;
  }
  if (family_ == Family::D && negatives % 2 == 1) {
    // W(D) needs an even number of sign changes
    const std::size_t slot = zero_slot.value_or(n - 1);
    w.sign[slot] = -w.sign[slot];
  }
  return w;
}

DominantForm RootDatum::to_dominant(const Weight& v) const {
  const WeylElement w = dominating_element(v);
  return {w.apply(v), w.determinant()};
}

Weight RootDatum::dominant(const Weight& v) const { return to_dominant(v).weight; }

Weight RootDatum::longest_element(const Weight& v) const {
  const std::size_t n = v.size();
  Weight out(n);
  switch (family_) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) out.set_twice(i, v.twice(n - 1 - i));
      return out;
    case Family::B:
    case Family::C: return -v;
    case Family::D:
      out = -v;
      if (rank_ % 2 == 1) out.set_twice(n - 1, v.twice(n - 1));
      return out;
  }
  return out;
}

std::optional<std::vector<std::int64_t>> RootDatum::simple_root_coefficients(const Weight& d) const {
  require(d.size() == static_cast<std::size_t>(rank_), "rank mismatch");
  const std::size_t n = d.size();
  // partial sums, doubled
  std::vector<std::int64_t> s(n);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) s[i] = (acc += d.twice(i));
  std::vector<std::int64_t> twice_c;
  switch (family_) {
    case Family::A:
      if (s[n - 1] != 0) return std::nullopt;
      twice_c.assign(s.begin(), s.end() - 1);
      break;
    case Family::B: twice_c = s; break;
    case Family::C:
      twice_c.assign(s.begin(), s.end());
      if (s[n - 1] % 2 != 0) return std::nullopt;
      twice_c[n - 1] = s[n - 1] / 2;
      break;
    case Family::D:
      if (n == 1) {
        if (s[0] != 0) return std::nullopt;
        break;
      }
      if (s[n - 1] % 2 != 0) return std::nullopt;
      twice_c.assign(s.begin(), s.end() - 2);
      twice_c.push_back(s[n - 2] - s[n - 1] / 2);
      twice_c.push_back(s[n - 1] / 2);
      break;
  }
  std::vector<std::int64_t> c;
  for (auto t : twice_c) {
    if (t % 2 != 0) return std::nullopt;
    c.push_back(t / 2);
  }
  // coefficients determine d only up to the root lattice; confirm exactly
  Weight back(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Weight term = simple_[i];
    for (std::size_t k = 0; k < n; ++k) term.set_twice(k, term.twice(k) * c[i]);
    back += term;
  }
  if (!(back == d)) return std::nullopt;
  return c;
}

bool RootDatum::in_positive_cone(const Weight& d) const {
  auto c = simple_root_coefficients(d);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
}

std::optional<WeylElement> RootDatum::find_element(const Weight& from, const Weight& to) const {
  const WeylElement a = dominating_element(from);
  const WeylElement b = dominating_element(to);
  if (!(a.apply(from) == b.apply(to))) return std::nullopt;
  return b.inverse().compose(a);
}

std::size_t RootDatum::weyl_order() const {
  std::size_t fact = 1;
  for (int i = 2; i <= rank_; ++i) fact *= static_cast<std::size_t>(i);
  switch (family_) {
    case Family::A: return fact;
    case Family::B:
    case Family::C: return fact << rank_;
    case Family::D: return fact << (rank_ - 1);
  }
  return fact;
}

void RootDatum::for_each_weyl_element(const std::function<void(const WeylElement&)>& visit) const {
  const auto n = static_cast<std::size_t>(rank_);
  WeylElement w{std::vector<int>(n), std::vector<int>(n, 1)};
  std::iota(w.perm.begin(), w.perm.end(), 0);
  const std::uint32_t masks = family_ == Family::A ? 1u : (1u << n);
  do {
    for (std::uint32_t m = 0; m < masks; ++m) {
      if (family_ == Family::D && (__builtin_popcount(m) % 2) != 0) continue;
      for (std::size_t i = 0; i < n; ++i) w.sign[i] = (m >> i) & 1u ? -1 : 1;
      visit(w);
    }
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

void RootDatum::for_each_orbit_point(const Weight& dominant_weight,
                                     const std::function<void(const Weight&)>& visit) const {
  const std::size_t n = dominant_weight.size();
  std::vector<std::int64_t> base(n);
  for (std::size_t i = 0; i < n; ++i)
    base[i] = family_ == Family::A ? dominant_weight.twice(i) : std::abs(std::int64_t{dominant_weight.twice(i)});
  std::sort(base.begin(), base.end());
  bool has_zero = std::find(base.begin(), base.end(), 0) != base.end();
  int required_parity = (dominant_weight.twice(n - 1) < 0) ? 1 : 0;
  Weight w(n);
  do {
    if (family_ == Family::A) {
      for (std::size_t i = 0; i < n; ++i) w.set_twice(i, base[i]);
      visit(w);
      continue;
    }
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < n; ++i)
      if (base[i] != 0) nonzero.push_back(i);
    const std::uint32_t masks = 1u << nonzero.size();
    for (std::uint32_t m = 0; m < masks; ++m) {
      if (family_ == Family::D && !has_zero && (__builtin_popcount(m) % 2) != required_parity) continue;
      for (std::size_t i = 0; i < n; ++i) w.set_twice(i, base[i]);
      for (std::size_t k = 0; k < nonzero.size(); ++k)
        if ((m >> k) & 1u) w.set_twice(nonzero[k], -base[nonzero[k]]);
      visit(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
}

}  // namespace dseries
