#pragma once

#include <optional>
#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Result of rebuilding overlapping near-optimal cuts A_1..A_p into the clean
/// (p+2)-tuple (Y_1,...,Y_p,W,Z): Z is the common complement, W the pairwise
/// overlap, Y_i what remains of A_i. Parts always tile V; Y_i may be empty.
struct UncrossedPartition {
  std::vector<VertexSet> ys;
  VertexSet w;
  VertexSet z;
};

/// Additive breakdown of the sigma value of an uncrossed partition.
/// All terms are cost-weighted; with unit costs they reduce to edge counts.
struct SigmaBreakdown {
  Cost cost_partition = 0;  // hyperedges crossing (Y_1,...,Y_p,W,Z)
  Cost cost_wz = 0;         // hyperedges inside W+Z meeting both W and Z
  Cost alpha = 0;           // hyperedges meeting Z and >= 2 of {Y_1..Y_p,W}
  Cost beta = 0;            // hyperedges disjoint from Z meeting >= 2 of {Y_1..Y_p}
  Cost sigma = 0;           // sum of the four terms
};

/// Builds (Y_1,...,Y_p,W,Z) from U and the sink sides A_1..A_p, each of which
/// must contain V\U. Requires p >= 2.
UncrossedPartition uncross(const Hypergraph& g, const VertexSet& u,
                           const std::vector<VertexSet>& sink_sides);

SigmaBreakdown sigma_breakdown(const Hypergraph& g, const UncrossedPartition& partition);

struct UncrossingVerdict {
  bool hypothesis_holds = false;   // u_i in A_i and in no other A_j
  bool inequality_holds = false;   // sigma <= min pairwise d(A_i)+d(A_j)
  bool equality_when_p2 = false;   // sigma == that minimum (vacuously true for p != 2)
  Cost sigma_value = 0;
  Cost min_pair_value = 0;
  std::vector<bool> y_nonempty;    // per-pivot, for reporting empty-part frequency
};

/// Checks the uncrossing bound for cuts the caller obtained as minimum
/// ((pivots + r) \ {u_i}, V\U)-terminal cuts: pivots[i] pairs with
/// sink_sides[i]. Shape violations throw; a failed pivot-membership
/// hypothesis yields hypothesis_holds == false with nothing asserted.
UncrossingVerdict check_uncrossing_lemma(const Hypergraph& g, const VertexSet& u,
                                         const VertexSet& r, const std::vector<int>& pivots,
                                         const std::vector<VertexSet>& sink_sides);

struct AggregateResult {
  bool found = false;
  std::vector<int> indices;          // chosen k-1 positions into ys
  std::vector<VertexSet> partition;  // the assembled k-partition
  Cost partition_cost = 0;
  Cost bound = 0;                    // cost_partition + alpha + beta
};

/// Scans (k-1)-subsets of the non-empty Y parts in lexicographic index order
/// for one whose induced k-partition (chosen parts, rest) satisfies
/// 2 * cost <= cost_partition + alpha + beta. Requires p >= 2k-2.
/// On inputs assembled from cuts satisfying the uncrossing hypothesis a
/// qualifying subset always exists; found == false refutes that.
AggregateResult aggregate(const Hypergraph& g, const UncrossedPartition& partition, int k);

/// Smallest witness source set for one side of a minimum cut: scans non-empty
/// S <= V1 with |S| <= 2 in lexicographic order and returns the first whose
/// source-minimal minimum (S,T)-terminal cut (A, V\A) has boundary equal to
/// the boundary of V1 and A <= V1. The caller must have established that
/// (V1, V\V1) is a minimum cut; T must be a non-empty subset of V\V1.
std::optional<VertexSet> find_witness_k2(const Hypergraph& g, const VertexSet& v1,
                                         const VertexSet& t);

/// Witness source set for the first part of a minimum k-partition whose
/// boundary equals its crossing set: scans S <= V1 with |S| <= 2k-1.
/// T must hit every later part. Minimality of the partition is the caller's
/// obligation; the boundary condition and shape are validated here.
std::optional<VertexSet> find_witness_general(const Hypergraph& g, const VertexPartition& p,
                                              const VertexSet& t);

struct WitnessVerdict {
  bool found = false;
  VertexSet sources;  // the full source terminal set that worked
  VertexSet sinks;    // the full sink terminal set that worked
};

/// For a cut strictly cheaper than the minimum k-cut-set value (caller
/// supplies opt_k), fixes s = min(U), t = min(V\U) and scans
/// S <= U\{s}, T <= (V\U)\{t} with |S|,|T| <= 2k-3 for a pair making
/// (U, V\U) the unique minimum (S+{s}, T+{t})-terminal cut. Uniqueness is
/// established by exhaustive enumeration of all optimal source sides.
WitnessVerdict check_unique_terminal_witness(const Hypergraph& g, const VertexSet& u, int k,
                                             Cost opt_k);

struct ContainmentVerdict {
  bool source_side_contained = false;  // U <= V1
  bool value_matches = false;          // d(U) == min (S, V\V1)-terminal cut value
  VertexSet source_side;
};

/// For a minimum k-partition P whose crossing set equals the boundary of its
/// first part, S <= V1 and T <= V\V1 hitting every later part: the
/// source-minimal minimum (S,T)-terminal cut must stay inside V1 and match
/// the minimum (S, V\V1)-terminal cut value. Minimality of P is the caller's
/// obligation; everything else is validated.
ContainmentVerdict check_containment_lemma(const Hypergraph& g, const VertexPartition& p,
                                           const VertexSet& s, const VertexSet& t);

}  // namespace hkcut
