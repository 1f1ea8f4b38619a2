#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gnk {

/// Integer partition in frequency representation: freq maps part size to
/// multiplicity, every stored multiplicity strictly positive, and
/// sum(size * multiplicity) == k. The size |lambda| is the number of parts.
struct Partition {
  int k = 0;
  std::map<int, int> freq;

  int size() const;
  int largest_part() const;
  int multiplicity(int part) const;
  /// Non-increasing list form, for display and gap checks.
  std::vector<int> parts() const;
  bool valid() const;
  /// Frequency notation "a1^b1,a2^b2,..." with unit exponents omitted;
  /// empty partition renders as "".
  std::string str() const;

  static Partition from_parts(const std::vector<int>& parts);
  static Partition empty() { return Partition{}; }

  auto operator<=>(const Partition&) const = default;
};

/// Declarative restriction set from the partition-perturbation vocabulary.
/// An empty constraint set admits every partition. distinct is equivalent to
/// min_gap >= 1. The congruence constraint applies to each part individually
/// (the source material does not pin down whether parts, sizes, or both are
/// constrained; part-wise is what this library implements).
struct PartitionConstraints {
  std::optional<int> min_part;
  std::optional<int> max_part;
  std::optional<int> min_size;
  std::optional<int> max_size;
  int min_gap = 0;
  bool distinct = false;
  /// (modulus, allowed residues); every part must be congruent to one of the
  /// residues mod the modulus.
  std::optional<std::pair<int, std::set<int>>> congruence;
  std::optional<std::set<int>> allowed_parts;

  int effective_gap() const { return distinct && min_gap < 1 ? 1 : min_gap; }
  bool admits(const Partition& p) const;
  bool unconstrained() const;
  /// Canonical text form, used for cache keys and CLI echoes.
  std::string str() const;
};

/// All partitions of k satisfying the constraints, in reverse-lexicographic
/// order on the part multiset ([3] before [2,1] before [1,1,1]). k = 0 yields
/// the empty partition when min_size permits; unsatisfiable constraints yield
/// an empty list.
std::vector<Partition> enumerate(int k, const PartitionConstraints& c = {});

/// Largest size s such that a partition of k with minimum part min_part and
/// consecutive difference >= gap can have s parts:
/// s*min_part + gap*s*(s-1)/2 <= k.
int max_feasible_size(int k, int min_part, int gap);

}  // namespace gnk
