#include "dseries/spectrum.hpp"

#include <algorithm>

namespace dseries {

namespace {

std::vector<std::int64_t> parse_ints(std::string_view text) {
  std::vector<std::int64_t> out;
  const Weight w = Weight::parse(text);
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(w.twice(i) % 2 == 0, "family parameters must be integers");
    out.push_back(w.twice(i) / 2);
  }
  return out;
}

// all weakly decreasing sequences of `length` integers in [0, bound]
template <class Visit>
void for_each_descending(std::size_t length, int bound, Visit&& visit) {
  std::vector<int> seq(length, 0);
  auto recurse = [&](auto&& self, std::size_t i, int upper) -> void {
    if (i == length) {
      visit(seq);
      return;
    }
    for (int v = upper; v >= 0; --v) {
      seq[i] = v;
      self(self, i + 1, v);
    }
  };
  recurse(recurse, 0, bound);
}

}  // namespace

UnipotentFamily UnipotentFamily::type_b(int a, int b) {
  require(a >= 1 && a <= b, "B(a,b) needs 0 < a <= b");
  return {FamilyKind::B, a, b, a + b};
}
UnipotentFamily UnipotentFamily::c_even(int n) {
  require(n >= 1, "C_even(n) needs n >= 1");
  return {FamilyKind::CEven, 0, 0, n};
}
UnipotentFamily UnipotentFamily::c_odd(int n) {
  require(n >= 1, "C_odd(n) needs n >= 1");
  return {FamilyKind::COdd, 0, 0, n};
}
UnipotentFamily UnipotentFamily::d_even(int a, int b) {
  require(a >= 1 && a <= b, "D(a,b) needs 0 < a <= b");
  return {FamilyKind::DEven, a, b, a + b};
}
UnipotentFamily UnipotentFamily::d_odd(int a, int b) {
  require(a >= 1 && a <= b, "D(a,b) needs 0 < a <= b");
  return {FamilyKind::DOdd, a, b, a + b};
}
UnipotentFamily UnipotentFamily::a_induced(int a, int b) {
  require(a >= 0 && a < b, "A(a,b) needs 0 <= a < b");
  return {FamilyKind::ATrivialInduced, a, b, a + b};
}
UnipotentFamily UnipotentFamily::spin_b(int n) {
  require(n >= 1, "SpinB(n) needs n >= 1");
  return {FamilyKind::SpinB, 0, 0, n};
}
UnipotentFamily UnipotentFamily::spin_d(int n, bool plus) {
  require(n >= 2, "SpinD(n) needs n >= 2");
  return {plus ? FamilyKind::SpinDPlus : FamilyKind::SpinDMinus, 0, 0, n};
}

UnipotentFamily UnipotentFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, "family must look like NAME:params, e.g. C_even:2");
  const std::string name(text.substr(0, colon));
  const auto args = parse_ints(text.substr(colon + 1));
  auto need = [&](std::size_t count) {
    require(args.size() == count, "family " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  auto arg = [&](std::size_t i) { return static_cast<int>(args[i]); };
  if (name == "B") { need(2); return type_b(arg(0), arg(1)); }
  if (name == "C_even") { need(1); return c_even(arg(0)); }
  if (name == "C_odd") { need(1); return c_odd(arg(0)); }
  if (name == "D_even") { need(2); return d_even(arg(0), arg(1)); }
  if (name == "D_odd") { need(2); return d_odd(arg(0), arg(1)); }
  if (name == "A") { need(2); return a_induced(arg(0), arg(1)); }
  if (name == "SpinB") { need(1); return spin_b(arg(0)); }
  if (name == "SpinD+") { need(1); return spin_d(arg(0), true); }
  if (name == "SpinD-") { need(1); return spin_d(arg(0), false); }
  throw PreconditionError("unknown family '" + name + "'");
}

RootDatum UnipotentFamily::datum() const {
  switch (kind_) {
    case FamilyKind::B:
    case FamilyKind::SpinB: return RootDatum(Family::B, rank_);
    case FamilyKind::CEven:
    case FamilyKind::COdd: return RootDatum(Family::C, rank_);
    case FamilyKind::DEven:
    case FamilyKind::DOdd:
    case FamilyKind::SpinDPlus:
    case FamilyKind::SpinDMinus: return RootDatum(Family::D, rank_);
    case FamilyKind::ATrivialInduced: return RootDatum(Family::A, rank_);
  }
  throw std::logic_error("unreachable");
}

std::string UnipotentFamily::name() const {
  const std::string ab = "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  const std::string n = "(" + std::to_string(rank_) + ")";
  switch (kind_) {
    case FamilyKind::B: return "B" + ab;
    case FamilyKind::CEven: return "C_even" + n;
    case FamilyKind::COdd: return "C_odd" + n;
    case FamilyKind::DEven: return "D_even" + ab;
    case FamilyKind::DOdd: return "D_odd" + ab;
    case FamilyKind::ATrivialInduced: return "A" + ab;
    case FamilyKind::SpinB: return "SpinB" + n;
    case FamilyKind::SpinDPlus: return "SpinD+" + n;
    case FamilyKind::SpinDMinus: return "SpinD-" + n;
  }
  return "?";
}

bool UnipotentFamily::has_spectrum() const {
  switch (kind_) {
    case FamilyKind::B:
    case FamilyKind::CEven:
    case FamilyKind::COdd:
    case FamilyKind::DEven:
    case FamilyKind::DOdd: return true;
    default: return false;
  }
}

Weight left_parameter(const UnipotentFamily& f) {
  std::vector<std::int64_t> twice;
  auto run = [&](std::int64_t from, std::int64_t to) {
    for (std::int64_t v = from; v <= to; v += 2) twice.push_back(v);
  };
  switch (f.kind()) {
    case FamilyKind::B:
      run(-2 * f.b() + 1, -1);
      run(-2 * f.a(), -2);
      break;
    case FamilyKind::CEven:
    case FamilyKind::COdd: run(-2 * f.rank() + 1, -1); break;
    case FamilyKind::DEven:
    case FamilyKind::DOdd:
      run(-2 * f.a() + 1, -1);
      run(-2 * f.b() + 2, 0);
      break;
    case FamilyKind::ATrivialInduced:
      for (std::int64_t v = f.b() - 1; v >= -(f.b() - 1); v -= 2) twice.push_back(v);
      for (std::int64_t v = f.a() - 1; v >= -(f.a() - 1); v -= 2) twice.push_back(v);
      break;
    default: throw PreconditionError("genuine families have quarter-integral lambda; use two_lambda");
  }
  return Weight::from_twice(twice);
}

Weight two_lambda(const UnipotentFamily& f) {
  const RootDatum datum = f.datum();
  switch (f.kind()) {
    case FamilyKind::SpinB:
    case FamilyKind::SpinDPlus:
    case FamilyKind::SpinDMinus: {
      std::vector<std::int64_t> twice;
      for (int v = 2 * f.rank() - 1; v >= 1; v -= 2) twice.push_back(v);
      if (f.kind() == FamilyKind::SpinDMinus) twice.back() = -1;
      return Weight::from_twice(twice);
    }
    default: return datum.dominant(left_parameter(f).doubled());
  }
}

std::vector<Weight> kspectrum(const UnipotentFamily& f, int bound) {
  require(f.has_spectrum(), "no K-spectrum available for " + f.name());
  require(bound >= 0, "bound must be non-negative");
  std::vector<Weight> out;
  const auto n = static_cast<std::size_t>(f.rank());
  switch (f.kind()) {
    case FamilyKind::B:
      for_each_descending(static_cast<std::size_t>(f.a()), bound, [&](const std::vector<int>& alpha) {
        std::vector<std::int64_t> coords;
        for (int x : alpha) coords.insert(coords.end(), {x, x});
        coords.resize(n, 0);
        out.push_back(Weight::from_integers(coords));
      });
      break;
    case FamilyKind::CEven:
    case FamilyKind::COdd:
      for (int k = f.kind() == FamilyKind::CEven ? 0 : 1; k <= bound; k += 2) {
        std::vector<std::int64_t> coords(n, 0);
        coords[0] = k;
        out.push_back(Weight::from_integers(coords));
      }
      break;
    case FamilyKind::DEven:
    case FamilyKind::DOdd: {
      const int parity = f.kind() == FamilyKind::DEven ? 0 : 1;
      for_each_descending(static_cast<std::size_t>(2 * f.a()), bound, [&](const std::vector<int>& alpha) {
        int sum = 0;
        for (int x : alpha) sum += x;
        if (sum % 2 != parity) return;
        std::vector<std::int64_t> coords(alpha.begin(), alpha.end());
        coords.resize(n, 0);
        out.push_back(Weight::from_integers(coords));
      });
      break;
    }
    default: break;
  }
  std::sort(out.begin(), out.end(), [](const Weight& x, const Weight& y) {
    const auto nx = x.norm_sq_x4();
    const auto ny = y.norm_sq_x4();
    return nx != ny ? nx < ny : x < y;
  });
  return out;
}

bool in_spectrum(const UnipotentFamily& f, const Weight& k) {
  require(f.has_spectrum(), "no K-spectrum available for " + f.name());
  const auto n = static_cast<std::size_t>(f.rank());
  if (k.size() != n || !k.is_integral()) return false;
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(k.twice(i) / 2);
  if (!std::is_sorted(c.rbegin(), c.rend()) || c.back() < 0) return false;
  auto zeros_from = [&](std::size_t start) {
    return std::all_of(c.begin() + static_cast<std::ptrdiff_t>(start), c.end(), [](auto x) { return x == 0; });
  };
  switch (f.kind()) {
    case FamilyKind::B: {
      const auto a = static_cast<std::size_t>(f.a());
      for (std::size_t i = 0; i < a; ++i)
        if (c[2 * i] != c[2 * i + 1]) return false;
      return zeros_from(2 * a);
    }
    case FamilyKind::CEven:
    case FamilyKind::COdd:
      return zeros_from(1) && (c[0] % 2 == (f.kind() == FamilyKind::CEven ? 0 : 1));
    case FamilyKind::DEven:
    case FamilyKind::DOdd: {
      const auto len = static_cast<std::size_t>(2 * f.a());
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < len; ++i) sum += c[i];
      return zeros_from(len) && (sum % 2 == (f.kind() == FamilyKind::DEven ? 0 : 1));
    }
    default: return false;
  }
}

std::optional<int> spectrum_sum_parity(const UnipotentFamily& f) {
  switch (f.kind()) {
    case FamilyKind::B:
    case FamilyKind::CEven:
    case FamilyKind::DEven: return 0;
    case FamilyKind::COdd:
    case FamilyKind::DOdd: return 1;
    default: return std::nullopt;
  }
}

std::vector<std::int64_t> printed_d_two_lambda(int a, int b) {
  require(a >= 1 && a <= b, "D(a,b) needs 0 < a <= b");
  std::vector<std::int64_t> out{2 * b - 2};
  for (int v = 2 * b; v >= 2 * a; v -= 2) out.push_back(v);
  for (int v = 2 * a - 1; v >= 0; --v) out.push_back(v);
  return out;
}

}  // namespace dseries
