#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gnk/partitions.hpp"
#include "gnk/qpoly.hpp"

namespace gnk {

/// How per-partition weights are assigned: one constant, a table keyed by
/// partition size, a table keyed by largest part, or an explicit table keyed
/// by the partition itself (frequency-notation string). Missing table entries
/// default to weight 1.
enum class RhoScheme { constant, by_size, by_largest_part, per_partition };

/// Full perturbation configuration for the recurrence: partition constraints,
/// the (a, b) exponent/argument adjustment, the initial-condition multiplier
/// nu, and the per-partition weighting rho. The default configuration
/// reproduces the plain recurrence exactly.
struct KohConfig {
  PartitionConstraints constraints;
  int a = 0;
  int b = 0;
  Int nu = 1;
  RhoScheme scheme = RhoScheme::constant;
  Int rho = 1;
  std::map<int, Int> rho_by_key;
  std::map<std::string, Int> rho_by_partition;
  /// Divide the final value by nu^k, and by rho once when the scheme is
  /// constant (k >= 1). Non-constant schemes are normalized by nu^k alone.
  bool normalize = false;

  Int weight(const Partition& lam) const;
  bool is_default() const;
  std::string str() const;
};

/// One row per admissible partition of k, total equal to the perturbed
/// recurrence value. Zero entries are kept so the table shows which
/// partitions vanish.
struct ContributionBreakdown {
  int n = 0;
  int k = 0;
  std::vector<std::pair<Partition, QPoly>> entries;
  QPoly total;
};

/// Memoizing evaluator for one perturbation configuration. Evaluation is the
/// partition-sum recurrence with initial conditions applied before the sum:
///   G(n<0,k) = G(n,k<0) = 0,
///   G(n,0) = nu,
///   G(n,1) = rho([1]) nu (1-q^(n+1))/(1-q),
///   G(0,k) = nu.
/// Weights and constraints apply at every recursion level; the initial
/// conditions bypass the constraints (an inner factor G(n',1) is the
/// geometric run whatever the partition restriction says). Consequently the
/// vanishing results proven through the sum hold for n >= 1; at n = 0 the
/// initial condition wins.
class KohEngine {
 public:
  explicit KohEngine(KohConfig cfg);
  const KohConfig& config() const { return cfg_; }

  /// Perturbed recurrence value, normalized when the config asks for it.
  QPoly value(int n, int k);
  ContributionBreakdown breakdown(int n, int k);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  KohConfig cfg_;
};

/// Plain recurrence value; equals gnk_product(n,k) exactly. Shares one
/// default engine (and memo table) process-wide.
QPoly koh(int n, int k);

/// One-shot evaluation under an arbitrary configuration.
QPoly koh_restricted(int n, int k, const KohConfig& cfg);

/// Sum restricted to partitions of size <= s. Inner factors use the
/// unrestricted q-binomial, which is exact here because every inner second
/// argument is a multiplicity <= s. Memoized globally on (s, n, k).
QPoly gs(int n, int k, int s);

/// The single-partition summand of the plain recurrence: the q-power times
/// the product of unrestricted G values. Summing over all partitions of k
/// recovers G(n,k).
QPoly partition_contribution(int n, int k, const Partition& lam);

/// Closed form of the single-partition summand for the characterized shapes
/// ([k], rectangles [m^l], two-part, one-repeat size 3, distinct triples).
/// Throws UnsupportedShape for anything else and OutOfValidityRange below the
/// shape's n bound.
QPoly characterized_contribution(int n, int k, const Partition& lam);

ContributionBreakdown contribution_breakdown(int n, int k, const KohConfig& cfg = KohConfig{});

/// Randomly weighted recurrence instances with their decomposition
/// certificates. Weights are drawn uniformly in [0, weight_bound] for every
/// partition of every level j <= k, from a deterministic generator seeded
/// with seed.
struct RandomTheorem {
  KohConfig cfg;
  std::vector<std::pair<int, QPoly>> instances;
  std::vector<ContributionBreakdown> certificates;
};
RandomTheorem random_theorem(int k, unsigned weight_bound, std::uint64_t seed, int n_max = 8);

}  // namespace gnk
