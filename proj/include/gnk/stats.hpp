#pragma once

#include <atomic>
#include <cstdint>

namespace gnk {

/// Evaluation counters for the --profile CLI flag. Purely observational;
/// never affects results.
struct Stats {
  std::atomic<std::uint64_t> qbinom_hits{0};
  std::atomic<std::uint64_t> qbinom_misses{0};
  std::atomic<std::uint64_t> gs_hits{0};
  std::atomic<std::uint64_t> gs_misses{0};
  std::atomic<std::uint64_t> koh_states{0};
  std::atomic<std::uint64_t> partitions_enumerated{0};
};

Stats& stats();

}  // namespace gnk
