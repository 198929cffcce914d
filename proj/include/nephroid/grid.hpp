#pragma once

#include <vector>

#include "nephroid/classes.hpp"

namespace nephroid {

/// Full reproducible parameter grid used by the oracle-agreement suite and
/// cmd_table: alpha in {0, 0.1, ..., 0.9}, n in {1, 2, 3, 5},
/// beta in {1.1, 1.5, 2, 5}, (A,B) in the five catalogue pairs.
/// Order is class tag, then parameters ascending.
std::vector<ClassId> standard_grid();

/// One representative instance per family (18 rows) for `verify --all`.
std::vector<ClassId> representative_set();

}  // namespace nephroid
