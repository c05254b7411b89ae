#pragma once

#include <string>

#include "eqobs/group.hpp"

namespace eqobs {

/// Cache file for a group's class data inside `dir` (hex content key + .json).
std::string group_cache_path(const PermGroup& group, const std::string& dir);

/// Installs persisted subgroup classes and marks into the group's memo
/// slots. Returns false (without touching the group) when the file is
/// missing or fails re-validation; corrupt caches are never trusted.
bool load_group_cache(const GroupPtr& group, const std::string& dir, const Bounds& bounds = {});

/// Computes (if needed) and persists the group's class data.
void store_group_cache(const GroupPtr& group, const std::string& dir, const Bounds& bounds = {});

} // namespace eqobs
