#pragma once

#include "hkcut/enumerate_types.hpp"
#include "hkcut/hypergraph.hpp"

namespace hkcut {

struct EnumerateOptions {
  int threads = 1;
};

/// Deterministic enumeration of all minimum k-cut-sets.
///
/// For every ordered pair of disjoint non-empty vertex sets (S,T) with
/// |S|,|T| <= 2k-1 it computes the source-minimal minimum (S,T)-terminal cut
/// (U, V\U). If deleting the boundary of U leaves at least k components, the
/// boundary joins the candidate family F; otherwise U joins the collection C.
/// Afterwards the boundary of every k-partition assembled from members of C
/// joins F as well. The result is the cheapest subfamily of F, deduplicated
/// and sorted. If G already has at least k components the empty cut-set is
/// the unique optimum and no terminal cuts are computed.
///
/// Output is byte-identical across runs and thread counts.
EnumerationReport enum_min_k_cutsets(const Hypergraph& g, int k,
                                     const EnumerateOptions& options = {});

/// k=2 fast path: fixes t = vertex 0 and scans the C(n-1,1) + C(n-1,2) = C(n,2)
/// source sets S of size at most 2, collecting the boundary of each
/// source-minimal minimum (S,{t})-terminal cut. The cut-sets achieving the
/// global minimum value form exactly the family of minimum cut-sets.
/// Disconnected inputs yield opt 0 with family {{}}, matching the general path.
EnumerationReport enum_min_cutsets_k2(const Hypergraph& g, const EnumerateOptions& options = {});

/// Cost of a minimum k-cut-set.
Cost min_k_cut_value(const Hypergraph& g, int k, const EnumerateOptions& options = {});

}  // namespace hkcut
