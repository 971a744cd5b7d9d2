#pragma once

#include <cstddef>

#include "cvnet/types.hpp"

namespace cvnet {

/// Overlap-union of two partial cluster views: clusters from either side
/// sharing at least `overlap_min` nodes are merged until nothing changes.
/// With overlap_min > 1 a node left in several clusters stays with the
/// largest one (earliest on ties).
ClusterSet combine(const ClusterSet& a, const ClusterSet& b, std::size_t overlap_min = 1);

bool exact_match(const ClusterSet& result, const ClusterSet& truth);

/// Hubert-Arabie adjusted Rand index over the union of both node sets.
/// Nodes missing from one side count as singletons there. Degenerate
/// tables (no pair structure to compare) give 1 for identical partitions
/// and 0 otherwise.
double adjusted_rand_index(const ClusterSet& result, const ClusterSet& truth);

}  // namespace cvnet
