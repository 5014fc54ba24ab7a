#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dseries {

// Thrown when an input violates a documented precondition (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxRank = 16;

// Vector with coordinates in (1/2)Z, stored doubled so all arithmetic is exact.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  static Weight from_twice(const std::vector<std::int64_t>& twice);
  static Weight from_integers(std::initializer_list<std::int64_t> values);
  static Weight from_integers(const std::vector<std::int64_t>& values);
  static Weight parse(std::string_view text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // 2 * (coordinate i)
  std::int32_t twice(std::size_t i) const { return coords_[i]; }
  void set_twice(std::size_t i, std::int64_t value);
  std::vector<std::int64_t> twice_vector() const;

  bool is_integral() const;
  // every coordinate lies in 1/2 + Z
  bool all_half_odd() const;
  // 2v integral (always) and v not integral
  bool is_half_integral() const { return !is_integral(); }

  std::int64_t norm_sq_x4() const;
  std::int64_t max_abs_twice() const;
  std::int64_t sum_twice() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight doubled() const;
  // exact halving; throws if some coordinate of the result leaves (1/2)Z
  Weight halved() const;

  Weight concat(const Weight& tail) const;
  Weight slice(std::size_t begin, std::size_t end) const;

  bool operator==(const Weight& other) const;
  std::strong_ordering operator<=>(const Weight& other) const;

  std::string str() const;
  std::size_t hash() const;

 private:
  std::array<std::int32_t, kMaxRank> coords_{};
  std::uint8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& out, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

// 4 * (a, b) for the standard form on coordinates
std::int64_t dot_x4(const Weight& a, const Weight& b);

// Format one doubled coordinate as "5/2" or "3".
std::string format_half(std::int64_t twice);
// Parse "5/2", "-3", "1/2"; denominators 1 or 2 only.
std::int64_t parse_half(std::string_view text);

enum class Family { A, B, C, D };

std::string family_name(Family f);
Family parse_family(std::string_view text);

// Signed permutation: (w v)_i = sign[i] * v[perm[i]].
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sign;

  Weight apply(const Weight& v) const;
  int determinant() const;
  WeylElement inverse() const;
  WeylElement compose(const WeylElement& right) const;  // (this o right)
  bool is_identity() const;
  bool operator==(const WeylElement&) const = default;
};

struct DominantForm {
  Weight weight;
  int sign = 1;  // determinant of a Weyl element carrying the input to `weight`
};

// Classical root datum in the standard coordinates; A means gl(n).
class RootDatum {
 public:
  RootDatum(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const Weight& rho() const { return rho_; }

  bool is_dominant(const Weight& v) const;
  bool is_regular(const Weight& v) const;
  // weight of some representation of the simply connected group (or GL for A)
  bool is_lattice_weight(const Weight& v) const;

  // {v}: the unique dominant element of W v
  Weight dominant(const Weight& v) const;
  DominantForm to_dominant(const Weight& v) const;
  // An element w with w(v) = {v}.
  WeylElement dominating_element(const Weight& v) const;

  // Longest element applied to v.
  Weight longest_element(const Weight& v) const;

  // Coefficients of d in the simple roots, or nullopt if d is not in the root lattice.
  std::optional<std::vector<std::int64_t>> simple_root_coefficients(const Weight& d) const;
  // d is a non-negative integer combination of simple roots
  bool in_positive_cone(const Weight& d) const;

  // Some w with w(from) = to, if one exists.
  std::optional<WeylElement> find_element(const Weight& from, const Weight& to) const;

  std::size_t weyl_order() const;
  void for_each_weyl_element(const std::function<void(const WeylElement&)>& visit) const;
  // Distinct elements of W mu for dominant mu.
  void for_each_orbit_point(const Weight& dominant_weight,
                            const std::function<void(const Weight&)>& visit) const;

  bool operator==(const RootDatum& other) const {
    return family_ == other.family_ && rank_ == other.rank_;
  }

 private:
  Family family_;
  int rank_;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  Weight rho_;
};

void require(bool condition, const std::string& message);

}  // namespace dseries
