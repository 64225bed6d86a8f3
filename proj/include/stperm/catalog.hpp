#pragma once

#include <string>
#include <vector>

#include "stperm/group.hpp"

namespace stperm {

/**
 * Group catalog: one file per group under the catalog directory, in a small
 * line-based format (see docs/formats.md):
 *
 *   name Q8
 *   order 8
 *   generators 2
 *   1 2 3 0 5 6 7 4
 *   4 7 6 5 2 1 0 3
 *
 * or, for explicit tables, `table <n>` followed by n rows of n indices.
 * The directory defaults to the one shipped with the repo and can be
 * overridden with the STPERM_CATALOG_DIR environment variable.
 */

std::string catalog_dir();

/// All catalog entries (file stems), sorted.
std::vector<std::string> catalog_names();

/// Loads and validates a catalog group by name. Throws std::invalid_argument
/// for unknown names, ValidationError for malformed files.
GroupPtr catalog(const std::string& name);

/// Parses a catalog-format file at an explicit path.
GroupPtr load_group_file(const std::string& path);

/// Builds a group from permutation generators (the `generators` form).
GroupPtr group_from_generators(const std::vector<std::vector<int>>& gens);

} // namespace stperm
