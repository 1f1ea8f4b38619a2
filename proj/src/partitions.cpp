#include "gnk/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace gnk {

int Partition::size() const {
  int s = 0;
  for (const auto& [part, mult] : freq) s += mult;
  return s;
}

int Partition::largest_part() const { return freq.empty() ? 0 : freq.rbegin()->first; }

int Partition::multiplicity(int part) const {
  auto it = freq.find(part);
  return it == freq.end() ? 0 : it->second;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (auto it = freq.rbegin(); it != freq.rend(); ++it)
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
  return out;
}

bool Partition::valid() const {
  long long total = 0;
  for (const auto& [part, mult] : freq) {
    if (part <= 0 || mult <= 0) return false;
    total += static_cast<long long>(part) * mult;
  }
  return total == k;
}

std::string Partition::str() const {
  std::ostringstream out;
  bool first = true;
  for (auto it = freq.rbegin(); it != freq.rend(); ++it) {
    if (!first) out << ",";
    first = false;
    out << it->first;
    if (it->second > 1) out << "^" << it->second;
  }
  return out.str();
}

Partition Partition::from_parts(const std::vector<int>& parts) {
  Partition p;
  for (int part : parts) {
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
    p.freq[part] += 1;
    p.k += part;
  }
  return p;
}

bool PartitionConstraints::unconstrained() const {
  return !min_part && !max_part && !min_size && !max_size && min_gap <= 0 && !distinct &&
         !congruence && !allowed_parts;
}

bool PartitionConstraints::admits(const Partition& p) const {
  const int s = p.size();
  if (min_size && s < *min_size) return false;
  if (max_size && s > *max_size) return false;
  const int gap = effective_gap();
  for (const auto& [part, mult] : p.freq) {
    if (min_part && part < *min_part) return false;
    if (max_part && part > *max_part) return false;
    if (allowed_parts && !allowed_parts->count(part)) return false;
    if (congruence) {
      const auto& [mod, residues] = *congruence;
      if (!residues.count(((part % mod) + mod) % mod)) return false;
    }
    if (gap > 0 && mult > 1) return false;  // repeated parts differ by 0
  }
  if (gap > 0) {
    int prev = -1;
    for (auto it = p.freq.rbegin(); it != p.freq.rend(); ++it) {
      if (prev >= 0 && prev - it->first < gap) return false;
      prev = it->first;
    }
  }
  return true;
}

std::string PartitionConstraints::str() const {
  std::ostringstream out;
  if (min_part) out << " min_part=" << *min_part;
  if (max_part) out << " max_part=" << *max_part;
  if (min_size) out << " min_size=" << *min_size;
  if (max_size) out << " max_size=" << *max_size;
  if (min_gap > 0) out << " min_gap=" << min_gap;
  if (distinct) out << " distinct";
  if (congruence) {
    out << " mod=" << congruence->first << ":";
    bool first = true;
    for (int r : congruence->second) {
      if (!first) out << ",";
      first = false;
      out << r;
    }
  }
  if (allowed_parts) {
    out << " parts=";
    bool first = true;
    for (int a : *allowed_parts) {
      if (!first) out << ",";
      first = false;
      out << a;
    }
  }
  std::string s = out.str();
  return s.empty() ? "unconstrained" : s.substr(1);
}

namespace {

bool part_allowed(int part, const PartitionConstraints& c) {
  if (c.min_part && part < *c.min_part) return false;
  if (c.max_part && part > *c.max_part) return false;
  if (c.allowed_parts && !c.allowed_parts->count(part)) return false;
  if (c.congruence) {
    const auto& [mod, residues] = *c.congruence;
    if (!residues.count(((part % mod) + mod) % mod)) return false;
  }
  return true;
}

// Descending choice of the next (largest remaining) part; emission order is
// therefore reverse-lexicographic on the part multiset.
void descend(int remaining, int max_next, int size_so_far, const PartitionConstraints& c,
             Partition& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    if (!c.min_size || size_so_far >= *c.min_size) out.push_back(acc);
    return;
  }
  if (c.max_size && size_so_far >= *c.max_size) return;
  const int gap = c.effective_gap();
  for (int part = std::min(remaining, max_next); part >= 1; --part) {
    if (c.min_part && part < *c.min_part) break;  // parts only get smaller
    if (!part_allowed(part, c)) continue;
    acc.freq[part] += 1;
    acc.k += part;
    // Same part may repeat only when gap == 0; otherwise the next part must
    // sit at least gap below this one.
    descend(remaining - part, gap > 0 ? part - gap : part, size_so_far + 1, c, acc, out);
    acc.k -= part;
    if (--acc.freq[part] == 0) acc.freq.erase(part);
  }
}

}  // namespace

std::vector<Partition> enumerate(int k, const PartitionConstraints& c) {
  if (k < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  if (k == 0) {
    if (!c.min_size || *c.min_size <= 0) out.push_back(Partition::empty());
    return out;
  }
  Partition acc;
  descend(k, k, 0, c, acc, out);
  return out;
}

int max_feasible_size(int k, int min_part, int gap) {
  if (min_part < 1) throw std::invalid_argument("minimum part must be positive");
  int s = 0;
  while (true) {
    const long long next = s + 1;
    const long long needed = next * min_part + static_cast<long long>(gap) * next * (next - 1) / 2;
    if (needed > k) break;
    ++s;
  }
  return s;
}

}  // namespace gnk
