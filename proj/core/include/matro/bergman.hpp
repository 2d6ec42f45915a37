#pragma once

// The Bergman complex of a matroid and its nested set triangulations.
//
// Facets of the Bergman complex are encoded as partitions of the ground
// set into rank-many blocks; faces are identified with the loop-free
// matroids M_w selected by weight vectors.  Nested set complexes live on
// the connected proper flats (minimal building set), on all proper flats
// (maximal building set, the order complex of the proper part), or on any
// building set in between.

#include <utility>
#include <vector>

#include "matro/boolean_nested.hpp"
#include "matro/flats.hpp"
#include "matro/matroid.hpp"

namespace matro {

// A partition of the ground set; blocks are sorted by smallest element.
struct SetPartition {
  std::vector<Mask> blocks;

  static SetPartition of(std::vector<Mask> blocks);
  bool operator==(const SetPartition&) const = default;
  bool operator<(const SetPartition& other) const { return blocks < other.blocks; }
};

// A nested set, stored as sorted flat ids of some FlatsLattice.  The top
// flat is implicit and never listed.
struct NestedSet {
  std::vector<int> flats;

  bool operator==(const NestedSet&) const = default;
  bool operator<(const NestedSet& other) const { return flats < other.flats; }
};

// Face counts by dimension: f[d] = number of d-dimensional faces.
struct FVector {
  std::vector<long long> f;

  bool operator==(const FVector&) const = default;
};

// Reduced Euler characteristic -1 + sum (-1)^d f_d.
long long euler_characteristic(const FVector& fv);

// ---- membership -------------------------------------------------------------

// Does w lie in the Bergman fan: does every circuit attain its minimum
// weight at least twice?  The overload taking precomputed circuits avoids
// recomputing them across many queries.
bool bergman_membership(const Matroid& m, const WeightVector& w);
bool bergman_membership(const std::vector<Mask>& circuits, const WeightVector& w,
                        int ground_size);

// ---- localization at a basis ------------------------------------------------

// For each element i outside the basis, the set F_i = C(i, basis) - i
// where C(i, basis) is the unique circuit of basis + i.  Pairs (i, F_i)
// are sorted by i (0-based).
std::vector<std::pair<int, Mask>> local_building_set(const Matroid& m, Mask basis);

// ---- nested sets in the lattice of flats -------------------------------------

// Is the given set of building-set members nested: does every antichain of
// two or more of them join to a flat outside the building set?
bool is_nested(const FlatsLattice& lattice, const BuildingSet& building,
               const std::vector<int>& flats);

// ---- facets of the Bergman and nested set complexes -------------------------

// All facets of the Bergman complex, each as the partition of the ground
// set into the connected components of the face matroid.  Requires a
// connected loop-free matroid.  The per-basis sweep runs on `threads`
// worker threads (values < 1 mean "use hardware concurrency").
std::vector<SetPartition> bergman_facets(const Matroid& m, int threads = 1);

// How the minimal nested set complex triangulates one Bergman facet.
struct FacetSplit {
  std::vector<int> pool;             // vertices on the facet, as flat ids
  bool subdivided = false;           // more than one simplex?
  std::vector<NestedSet> simplices;  // the (rank-1)-element nested sets
};

// `facets` must be the output of bergman_facets(m); omega must be one of
// its entries.
FacetSplit facet_triangulation(const Matroid& m, const FlatsLattice& lattice,
                               const BuildingSet& gmin, const SetPartition& omega,
                               const std::vector<SetPartition>& facets);

// Facets of the minimal nested set complex: union of the triangulations
// of all Bergman facets.
std::vector<NestedSet> nested_facets_min(const Matroid& m, const FlatsLattice& lattice,
                                         const BuildingSet& gmin, int threads = 1);

// Facets of the maximal nested set complex: the maximal chains of proper
// flats (the order complex of the proper part of the lattice).
std::vector<NestedSet> nested_facets_max(const FlatsLattice& lattice);

// Facets of the nested set complex of an arbitrary building set, computed
// by localizing at every basis and sweeping weight orderings there.  Also
// serves as an independent route to the min/max complexes.
std::vector<NestedSet> nested_facets_localized(const Matroid& m,
                                               const FlatsLattice& lattice,
                                               const BuildingSet& building,
                                               int threads = 1);

// Facets of the nested set complex of any building set: dispatches to the
// direct minimal/maximal routes when the building set is one of those two,
// and to the localized sweep otherwise (after validating the building set).
std::vector<NestedSet> nested_facets(const Matroid& m, const FlatsLattice& lattice,
                                     const BuildingSet& building, int threads = 1);

// The set partition encoded by a nested set whose tree exists (blocks are
// the label sets F minus everything below F, plus the root block).
SetPartition nested_partition(const FlatsLattice& lattice, const NestedSet& nested);

// ---- face matroids ----------------------------------------------------------

// The tree of a nested set, with lattice data per node: `below` and `upto`
// are the flats spanned by everything strictly below / weakly below the
// node, and `part` = upto - below is the node's ground set block.
struct FaceTree {
  struct Node {
    Mask part = 0;
    Mask below = 0;
    Mask upto = 0;
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // node 0 is the root
};

// The matroid M_S of a nested set S: direct sum over the tree nodes of the
// interval minors M[below, upto], reassembled on the original ground set.
// Equals max_weight_matroid at the characteristic-vector sum of S; the
// construction is independent of the basis chosen internally.
std::pair<FaceTree, Matroid> nested_face_matroid(const Matroid& m,
                                                 const FlatsLattice& lattice,
                                                 const BuildingSet& building,
                                                 const NestedSet& nested);

// ---- faces and f-vectors ----------------------------------------------------

// A face of the Bergman complex: a loop-free face matroid and its
// dimension c(M_face) - 2.
struct BergmanFace {
  Matroid face_matroid;
  int dim = 0;
};

// All faces of every dimension >= 0, deduplicated across the nested sets
// mapping onto them; sorted by (dim, bases).  Any building set gives the
// same answer; the minimal one is cheapest.
std::vector<BergmanFace> bergman_faces(const Matroid& m, const FlatsLattice& lattice,
                                       const BuildingSet& building, int threads = 1);

FVector bergman_f_vector(const Matroid& m, const FlatsLattice& lattice,
                         const BuildingSet& building, int threads = 1);

// f-vector of a nested set complex given its facets (faces are all
// nonempty subsets of facets; the complex is pure of dimension rank-2).
FVector nested_f_vector(int rank, const std::vector<NestedSet>& facets);
FVector nested_f_vector(const Matroid& m, const FlatsLattice& lattice,
                        const BuildingSet& building, int threads = 1);

// ---- equality of the two complexes ------------------------------------------

struct EqualityResult {
  bool equal = true;
  // when not equal: a connected flat G and a flat F < G whose interval
  // minor M[F,G] is disconnected
  Mask witness_low = 0;
  Mask witness_high = 0;
};

// The minimal nested set complex equals the Bergman complex iff for every
// connected flat G and every flat F < G the interval M[F,G] is connected.
EqualityResult equality_criterion(const Matroid& m, const FlatsLattice& lattice,
                                  const BuildingSet& gmin);

}  // namespace matro
