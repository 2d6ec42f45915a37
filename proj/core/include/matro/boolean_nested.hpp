#pragma once

// Building sets, nested sets and labeled set trees inside a Boolean
// lattice 2^[r].  This is the combinatorial core that the matroid-level
// complexes reduce to after localizing at a basis.

#include <vector>

#include "matro/errors.hpp"
#include "matro/subsets.hpp"

namespace matro {

// A family of nonempty subsets of [r], canonically sorted and deduplicated.
struct BooleanFamily {
  int r = 0;
  std::vector<Mask> sets;

  static BooleanFamily make(int r, std::vector<Mask> sets);
  bool contains(Mask m) const;
};

// Building set in 2^[r]: contains all singletons, and the union of any two
// intersecting members.
bool is_building_boolean(const BooleanFamily& family);

// Smallest building set containing the family: add singletons, then close
// under unions of overlapping members until stable.
BooleanFamily building_closure(const BooleanFamily& family);

// Vertex of the Minkowski sum Delta_F = sum of simplex faces Delta_S,
// S in F, selected by a generic weight ordering: entry v_i counts the
// members of F whose earliest element in permutation order is i.  The
// permutation lists 0-based elements, most significant (smallest weight)
// first; `maximize` flips the objective by reversing the order.
std::vector<long long> delta_vertex(const BooleanFamily& family,
                                    const std::vector<int>& perm,
                                    bool maximize = false);

// Right-hand side of the facet inequality of Delta_F attached to G:
// number of members contained in G.
long long delta_facet_rhs(const BooleanFamily& family, Mask g);

// Is S (a set of members of the building family) nested: every antichain
// of at least two elements has union outside the family?
bool is_nested_boolean(const BooleanFamily& building, const std::vector<Mask>& sets);

// A rooted tree with pairwise disjoint nonempty labels; node 0 is the root.
struct FTree {
  struct Node {
    Mask label = 0;
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;

  // Union of labels in the subtree of `node`.
  Mask subtree_union(int node) const;
};

// Unique tree whose subtree unions are exactly the given nested set; the
// nested set must contain [r] (which becomes the root's subtree).
FTree tree_from_nested(const BooleanFamily& building, const std::vector<Mask>& nested);

// Subtree unions of all non-root nodes, sorted; inverse of tree_from_nested.
std::vector<Mask> sets_of_tree(const FTree& tree);

// All maximal nested sets (each has r-1 members, the top [r] left
// implicit), obtained by sweeping the r! weight orderings.  The building
// family must contain [r].
std::vector<std::vector<Mask>> maximal_nested_sets_boolean(const BooleanFamily& building);

}  // namespace matro
