#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseries/spectrum.hpp"
#include "dseries/weights.hpp"

namespace dseries {

// 4 * |{eta - rho} + rho|^2
std::int64_t spin_norm_sq_x4(const RootDatum& datum, const Weight& eta);

// How the multiplicity of V(2 lambda - rho) in H_D is scaled from [pi (x) V(rho) : V(2 lambda - rho)].
enum class SpinModuleScaling {
  FloorHalfRank,  // 2^floor(rank/2) copies of V(rho) in the spin module
  Unscaled,       // report the bare tensor multiplicity
};

struct DiracOptions {
  std::optional<int> bound;  // coordinate cutoff for K-type scans; default is proof-backed
  SpinModuleScaling scaling = SpinModuleScaling::FloorHalfRank;
  bool full_tensor_check = true;  // also sum [V(kappa) (x) V(rho) : V(tau)] over all K-types kappa
};

struct SpinLkt {
  Weight ktype;
  std::int64_t multiplicity = 1;  // multiplicity in pi; spectra here are multiplicity free
  Weight delta;                   // {ktype - rho}
  std::int64_t spin_norm_x4 = 0;
  bool operator==(const SpinLkt&) const = default;
};

struct DiracChecks {
  std::int64_t target_norm_x4 = 0;  // 4 |2 lambda|^2
  std::int64_t min_spin_norm_x4 = 0;
  int search_bound = 0;
  std::int64_t scanned = 0;
  std::int64_t by_count = 0;   // scale * number of spin-LKTs attaining |2 lambda|
  std::int64_t by_tensor = 0;  // scale * sum over spin-LKTs of [V(eta) (x) V(rho) : V(tau)]
  std::optional<std::int64_t> full_tensor_sum;  // [pi (x) V(rho) : V(tau)] over all K-types
  bool operator==(const DiracChecks&) const = default;
};

struct DiracResult {
  std::string label;
  Weight two_lambda;
  bool nonzero = false;
  std::optional<Weight> tau;           // highest weight 2{lambda} - rho
  std::optional<Weight> tau_extremal;  // 2 lambda - rho' for the lambda-dominant positive system
  std::optional<std::int64_t> multiplicity;
  std::vector<SpinLkt> spin_lkts;
  DiracChecks checks;
  bool operator==(const DiracResult&) const = default;
};

// Proof-backed coordinate cutoff for the spin-LKT scan.
int default_search_bound(const UnipotentFamily& family);

DiracResult dirac_unipotent(const UnipotentFamily& family, const DiracOptions& options = {});

enum class MultiplicityMethod { Count, Tensor };
std::int64_t hd_multiplicity(const UnipotentFamily& family, MultiplicityMethod method,
                             const DiracOptions& options = {});

// Vanishing of [pi (x) V(rho) : V(2 lambda - rho)] by coordinate-sum parity and by direct
// tensor computation. Only for C/D families whose Dirac cohomology is zero.
bool parity_vanishing(const UnipotentFamily& family, int bound);

struct PositivityReport {
  Weight delta;
  std::int64_t constituents = 0;
  std::vector<Weight> violations;
  bool operator==(const PositivityReport&) const = default;
};

// Every constituent of V(kappa) (x) V(rho), kappa in the spectrum up to `bound`,
// minus delta = {eta - rho} for a spin-LKT eta, must be a non-negative combination of simple roots.
PositivityReport positivity_check(const UnipotentFamily& family, int bound);

struct GlBlock {
  int size = 1;
  std::int64_t xi_twice = 0;  // character weight, doubled; constant on the block
  bool operator==(const GlBlock&) const = default;
};

// Ind(C_xi (x) pi_core) from GL(n_1) x ... x GL(n_k) x G(m).
struct InductionData {
  Family group = Family::C;
  std::vector<GlBlock> blocks;
  std::optional<UnipotentFamily> core;  // empty: trivial representation of G(core_rank)
  int core_rank = 0;

  int rank() const;
  RootDatum datum() const;
  // assembled 2 lambda: xi + 2 rho_gl on each block, then the core
  Weight two_lambda() const;
  std::string describe() const;
  bool operator==(const InductionData&) const = default;
};

DiracResult dirac_induced(const InductionData& data, const DiracOptions& options = {});

}  // namespace dseries
