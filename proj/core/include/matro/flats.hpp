#pragma once

// The lattice of flats of a matroid, plus the building-set machinery on
// top of it: connected flats, flacets, polytope facet descriptions.

#include <unordered_map>
#include <utility>
#include <vector>

#include "matro/matroid.hpp"

namespace matro {

struct Flat {
  Mask mask = 0;
  int rank = 0;
};

// All flats of a matroid, ordered by (rank, mask) and addressed by dense
// ids; id 0 is the bottom flat (the closure of the empty set) and the last
// id is the top flat (the full ground set).  Immutable once built.
class FlatsLattice {
 public:
  static FlatsLattice build(const Matroid& m);

  const Matroid& matroid() const { return matroid_; }
  int size() const { return static_cast<int>(flats_.size()); }
  const Flat& operator[](int id) const { return flats_[id]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int lattice_rank() const { return flats_.back().rank; }

  // Id of a mask, or -1 when the mask is not a flat.
  int id_of(Mask m) const;

  // Ids of the flats of a given rank, ascending.
  std::vector<int> of_rank(int rank) const;
  // Number of flats per rank 0..r.
  std::vector<long long> rank_counts() const;

  bool leq(int a, int b) const { return subset_of(flats_[a].mask, flats_[b].mask); }
  int meet(int a, int b) const;  // intersection of flats is a flat
  int join(int a, int b) const;  // closure of the union

  // Ids covering `id` (flats one rank up reachable by adding one element).
  const std::vector<int>& covers_above(int id) const { return covers_above_[id]; }

  // Moebius function mu(bottom, id) for every id.
  std::vector<long long> mobius_from_bottom() const;
  // mu(bottom, top).
  long long mobius() const;

 private:
  Matroid matroid_ = Matroid::uniform(1, 1);  // replaced in build()
  std::vector<Flat> flats_;
  std::vector<int> rank_offset_;  // flats_[rank_offset_[s] .. rank_offset_[s+1])
  std::vector<std::vector<int>> covers_above_;
  std::unordered_map<Mask, int> index_;
};

// A building set inside a lattice of flats.  `members` holds the proper
// (non-top) members as flat ids, sorted; the top flat is tracked by flag
// since it is the cone point of every nested set complex and never shows
// up as a complex vertex.
struct BuildingSet {
  std::vector<int> members;
  bool contains_top = false;
};

// The minimal building set: all connected proper flats of positive rank
// (`members`), with the top flat included iff the matroid is connected.
// Requires a loop-free matroid.
BuildingSet connected_flats(const Matroid& m, const FlatsLattice& lattice);

// The maximal building set: every flat above the bottom.
BuildingSet full_building_set(const FlatsLattice& lattice);

struct BuildingCheck {
  bool ok = true;
  int witness = -1;  // id of the first flat whose interval fails to factor
};

// Does G (a set of flat ids strictly above the bottom) satisfy the
// interval-factorization property of a building set?
BuildingCheck is_building_set(const FlatsLattice& lattice,
                              const std::vector<int>& member_ids);

// Flats F whose restriction and contraction are both connected; these are
// exactly the flats whose inequality sum(x_i, i in F) <= rank(F) cuts out
// a facet of the matroid polytope.  Requires a connected matroid.
std::vector<int> flacets(const Matroid& m, const FlatsLattice& lattice);

// Irredundant facet description of the matroid polytope of a connected
// matroid: flacet inequalities, the facet-defining nonnegativity bounds,
// and the ambient equation sum(x) = rank.
struct PolytopeFacets {
  int dimension = 0;
  std::vector<std::pair<int, int>> flacet_rhs;  // (flat id, rank(F))
  std::vector<int> nonnegative;                 // 0-based elements with x_e >= 0 a facet
};

PolytopeFacets polytope_facets(const Matroid& m, const FlatsLattice& lattice);

}  // namespace matro
