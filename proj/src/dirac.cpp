#include "dseries/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dseries/characters.hpp"

namespace dseries {

namespace {

std::int64_t ceil_sqrt(std::int64_t x) {
  if (x <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

// floor(sqrt(a)/2 + sqrt(b)/2), rounded up safely
int half_sum_of_roots_bound(std::int64_t a_x4, std::int64_t b_x4) {
  return static_cast<int>((ceil_sqrt(a_x4) + ceil_sqrt(b_x4)) / 2);
}

std::int64_t scale_factor(int rank, SpinModuleScaling scaling) {
  return scaling == SpinModuleScaling::FloorHalfRank ? (std::int64_t{1} << (rank / 2)) : 1;
}

bool is_c_or_d(FamilyKind k) {
  return k == FamilyKind::CEven || k == FamilyKind::COdd || k == FamilyKind::DEven || k == FamilyKind::DOdd;
}

std::int64_t spectrum_multiplicity_in(const std::vector<TensorTerm>& terms, const UnipotentFamily& family) {
  std::int64_t total = 0;
  for (const auto& t : terms)
    if (in_spectrum(family, t.highest)) total += t.multiplicity;
  return total;
}

Weight doubled_rho(const RootDatum& datum) { return datum.rho().doubled(); }

}  // namespace

std::int64_t spin_norm_sq_x4(const RootDatum& datum, const Weight& eta) {
  require(eta.size() == static_cast<std::size_t>(datum.rank()), "weight length does not match rank");
  return (datum.dominant(eta - datum.rho()) + datum.rho()).norm_sq_x4();
}

int default_search_bound(const UnipotentFamily& family) {
  const RootDatum datum = family.datum();
  // |eta| <= |2 lambda| + 2 |rho|
  return half_sum_of_roots_bound(two_lambda(family).norm_sq_x4(), 4 * datum.rho().norm_sq_x4());
}

DiracResult dirac_unipotent(const UnipotentFamily& family, const DiracOptions& options) {
  require(family.has_spectrum(), "no K-spectrum is available for " + family.name());
  const RootDatum datum = family.datum();
  const Weight two_lam = two_lambda(family);
  const Weight& rho = datum.rho();
  const std::int64_t target = two_lam.norm_sq_x4();

  DiracResult result;
  result.label = family.name();
  result.two_lambda = two_lam;
  result.checks.target_norm_x4 = target;

  int bound = options.bound.value_or(default_search_bound(family));
  std::vector<Weight> minimizers;
  std::int64_t best = -1;
  for (;;) {
    minimizers.clear();
    best = -1;
    result.checks.scanned = 0;
    for (const Weight& k : kspectrum(family, bound)) {
      ++result.checks.scanned;
      const std::int64_t s = spin_norm_sq_x4(datum, k);
      if (best < 0 || s < best) {
        best = s;
        minimizers.assign(1, k);
      } else if (s == best) {
        minimizers.push_back(k);
      }
    }
    if (options.bound) break;
    // anything with spin norm <= best has |eta| <= sqrt(best) + |rho|
    const int needed = half_sum_of_roots_bound(best, rho.norm_sq_x4());
    if (needed <= bound) break;
    bound = needed;
  }
  result.checks.search_bound = bound;
  result.checks.min_spin_norm_x4 = best;
  result.nonzero = best == target;

  for (const Weight& k : minimizers) {
    const Weight delta = datum.dominant(k - rho);
    result.spin_lkts.push_back({k, 1, delta, best});
  }

  const std::int64_t scale = scale_factor(datum.rank(), options.scaling);
  const Weight tau = two_lam - rho;
  const WeightSystem rho_weights(datum, rho);
  std::int64_t by_tensor = 0;
  for (const auto& s : result.spin_lkts) by_tensor += s.multiplicity * tensor_multiplicity(datum, s.ktype, rho_weights, tau);
  result.checks.by_tensor = scale * by_tensor;
  result.checks.by_count = result.nonzero ? scale * static_cast<std::int64_t>(result.spin_lkts.size()) : 0;
  if (options.full_tensor_check) {
    result.checks.full_tensor_sum = spectrum_multiplicity_in(tensor_decompose(datum, tau, rho), family);
  }
  if (result.nonzero) {
    result.tau = tau;
    result.tau_extremal = tau;
    result.multiplicity = result.checks.by_count;
  }
  return result;
}

std::int64_t hd_multiplicity(const UnipotentFamily& family, MultiplicityMethod method, const DiracOptions& options) {
  DiracOptions opts = options;
  opts.full_tensor_check = false;
  const DiracResult r = dirac_unipotent(family, opts);
  return method == MultiplicityMethod::Count ? r.checks.by_count : r.checks.by_tensor;
}

bool parity_vanishing(const UnipotentFamily& family, int bound) {
  require(is_c_or_d(family.kind()), "parity vanishing applies to type C or D families only");
  DiracOptions opts;
  opts.full_tensor_check = false;
  const DiracResult r = dirac_unipotent(family, opts);
  require(!r.nonzero, family.name() + " has nonzero Dirac cohomology");

  const RootDatum datum = family.datum();
  const int parity = *spectrum_sum_parity(family);
  for (const Weight& k : kspectrum(family, bound))
    if (((k.sum_twice() / 2) % 2 + 2) % 2 != parity) return false;
  // roots 2e_i and e_i +- e_j have even coordinate sum, so every constituent of
  // V(kappa) (x) V(rho) has coordinate sum congruent to sum(kappa) + sum(rho)
  const Weight tau = r.two_lambda - datum.rho();
  const std::int64_t gap = parity + datum.rho().sum_twice() / 2 - tau.sum_twice() / 2;
  const bool parity_says_zero = (gap % 2 + 2) % 2 == 1;

  const auto terms = tensor_decompose(datum, tau, datum.rho());
  const bool direct_says_zero = spectrum_multiplicity_in(terms, family) == 0;
  return parity_says_zero && direct_says_zero;
}

PositivityReport positivity_check(const UnipotentFamily& family, int bound) {
  DiracOptions opts;
  opts.full_tensor_check = false;
  const DiracResult r = dirac_unipotent(family, opts);
  const RootDatum datum = family.datum();
  PositivityReport report;
  report.delta = r.spin_lkts.front().delta;
  for (const auto& s : r.spin_lkts)
    if (!(s.delta == report.delta)) throw std::logic_error("spin-LKTs with different delta");
  for (const Weight& k : kspectrum(family, bound)) {
    for (const auto& t : tensor_decompose(datum, k, datum.rho())) {
      ++report.constituents;
      if (t.multiplicity < 1 || !datum.in_positive_cone(t.highest - report.delta)) report.violations.push_back(t.highest);
    }
  }
  return report;
}

int InductionData::rank() const {
  int r = core ? core->rank() : core_rank;
  for (const auto& b : blocks) r += b.size;
  return r;
}

RootDatum InductionData::datum() const { return RootDatum(group, rank()); }

Weight InductionData::two_lambda() const {
  std::vector<std::int64_t> twice;
  for (const auto& b : blocks) {
    require(b.size >= 1, "GL block sizes must be positive");
    for (int i = 0; i < b.size; ++i) twice.push_back(b.xi_twice + 2 * (b.size - 1 - 2 * i));
  }
  Weight core_part(0);
  if (core) {
    require(core->datum().family() == group, "core family does not match the group type");
    core_part = dseries::two_lambda(*core);
  } else if (core_rank > 0) {
    require(group != Family::A, "type A has no core factor");
    core_part = doubled_rho(RootDatum(group, core_rank));
  }
  return Weight::from_twice(twice).concat(core_part);
}

std::string InductionData::describe() const {
  std::vector<std::string> parts;
  for (const auto& b : blocks) parts.push_back("GL(" + std::to_string(b.size) + ")[xi=" + format_half(b.xi_twice) + "]");
  if (core) {
    parts.push_back(core->name());
  } else if (core_rank > 0 || parts.empty()) {
    parts.push_back("trivial(" + family_name(group) + std::to_string(core_rank) + ")");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i];
  return out;
}

DiracResult dirac_induced(const InductionData& data, const DiracOptions& options) {
  if (data.blocks.empty() && data.core) return dirac_unipotent(*data.core, options);
  require(data.rank() >= 1, "induction data has rank 0");
  const RootDatum datum = data.datum();
  const Weight two_lam = data.two_lambda();
  require(datum.is_lattice_weight(two_lam), "2*lambda = " + two_lam.str() + " is not integral for " + datum.name());
  require(datum.is_regular(two_lam), "2*lambda = " + two_lam.str() + " is not regular");
  require(!two_lam.halved().is_integral() || !two_lam.is_integral(),
          "lambda = " + two_lam.str() + "/2 is integral, not half-integral");

  DiracResult result;
  result.label = data.describe();
  result.two_lambda = two_lam;
  result.checks.target_norm_x4 = two_lam.norm_sq_x4();

  bool core_nonzero = true;
  std::int64_t core_pairing = 1;  // [pi_core (x) V(rho_core) : V(2 lambda_core - rho_core)]
  if (data.core) {
    require(data.core->has_spectrum(), "no K-spectrum is available for core " + data.core->name());
    DiracOptions core_opts = options;
    core_opts.scaling = SpinModuleScaling::Unscaled;
    const DiracResult core = dirac_unipotent(*data.core, core_opts);
    core_nonzero = core.nonzero;
    core_pairing = core.checks.full_tensor_sum.value_or(core.checks.by_tensor);
    result.checks.min_spin_norm_x4 = core.checks.min_spin_norm_x4;
    result.checks.search_bound = core.checks.search_bound;
    result.checks.scanned = core.checks.scanned;
  } else if (data.core_rank > 0) {
    const RootDatum core_datum(data.group, data.core_rank);
    const Weight zero(static_cast<std::size_t>(data.core_rank));
    core_pairing = tensor_multiplicity(core_datum, zero, core_datum.rho(), core_datum.rho());
  }

  const std::int64_t scale = scale_factor(datum.rank(), options.scaling);
  result.nonzero = core_nonzero;
  result.checks.by_count = core_nonzero ? scale : 0;
  result.checks.by_tensor = scale * core_pairing;
  result.checks.full_tensor_sum = core_pairing;
  if (core_nonzero) {
    // rho' is rho for the positive system making lambda dominant
    const WeylElement w = datum.dominating_element(two_lam);
    const Weight rho_prime = w.inverse().apply(datum.rho());
    result.tau = w.apply(two_lam) - datum.rho();
    result.tau_extremal = two_lam - rho_prime;
    result.multiplicity = scale;
  }
  return result;
}

}  // namespace dseries
