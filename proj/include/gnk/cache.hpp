#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gnk/qpoly.hpp"

namespace gnk {

namespace detail {
// Snapshot/restore hooks for the two persistent memo tables.
std::vector<std::tuple<int, int, QPoly>> qbinom_snapshot();
void qbinom_restore(const std::vector<std::tuple<int, int, QPoly>>& entries);
std::vector<std::tuple<int, int, int, QPoly>> gs_snapshot();
void gs_restore(const std::vector<std::tuple<int, int, int, QPoly>>& entries);
}  // namespace detail

namespace cache {

/// Binary blob schema version; files with any other version are ignored.
inline constexpr std::uint32_t kSchemaVersion = 1;

/// Load memo tables from <dir>/gnk-cache-v1.bin. Returns false (and loads
/// nothing) when the file is missing, unreadable, or from another schema
/// version.
bool load(const std::string& dir);

/// Persist the current memo tables; writes a temp file and renames it in.
bool save(const std::string& dir);

}  // namespace cache

}  // namespace gnk
