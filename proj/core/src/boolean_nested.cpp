#include "matro/boolean_nested.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace matro {

BooleanFamily BooleanFamily::make(int r, std::vector<Mask> sets) {
  if (r < 0 || r > kMaxGroundSize) {
    fail(Errc::BadParameters, "Boolean lattice rank out of range: " + std::to_string(r));
  }
  const Mask full = full_mask(r);
  for (Mask m : sets) {
    if (m == 0) fail(Errc::BadParameters, "family members must be nonempty");
    if (!subset_of(m, full)) {
      fail(Errc::BadParameters,
           "family member " + format_set(m) + " leaves the ground set 1.." +
               std::to_string(r));
    }
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return BooleanFamily{r, std::move(sets)};
}

bool BooleanFamily::contains(Mask m) const {
  return std::binary_search(sets.begin(), sets.end(), m);
}

bool is_building_boolean(const BooleanFamily& family) {
  for (int e = 0; e < family.r; ++e) {
    if (!family.contains(Mask{1} << e)) return false;
  }
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < family.sets.size(); ++j) {
      Mask a = family.sets[i], b = family.sets[j];
      if ((a & b) && !family.contains(a | b)) return false;
    }
  }
  return true;
}

BooleanFamily building_closure(const BooleanFamily& family) {
  std::set<Mask> closed(family.sets.begin(), family.sets.end());
  for (int e = 0; e < family.r; ++e) closed.insert(Mask{1} << e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> current(closed.begin(), closed.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Mask a = current[i], b = current[j];
        if ((a & b) && !closed.count(a | b)) {
          closed.insert(a | b);
          grew = true;
        }
      }
    }
  }
  return BooleanFamily::make(family.r,
                             std::vector<Mask>(closed.begin(), closed.end()));
}

namespace {

void check_perm(int r, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != r) {
    fail(Errc::LengthMismatch, "permutation has " + std::to_string(perm.size()) +
                                   " entries, expected " + std::to_string(r));
  }
  Mask seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= r || (seen & (Mask{1} << p))) {
      fail(Errc::BadParameters, "not a permutation of 0.." + std::to_string(r - 1));
    }
    seen |= Mask{1} << p;
  }
}

}  // namespace

std::vector<long long> delta_vertex(const BooleanFamily& family,
                                    const std::vector<int>& perm, bool maximize) {
  check_perm(family.r, perm);
  std::vector<int> order = perm;
  if (maximize) std::reverse(order.begin(), order.end());
  // position_of[e] = rank of element e in the ordering
  std::vector<int> position_of(family.r);
  for (int k = 0; k < family.r; ++k) position_of[order[k]] = k;
  std::vector<long long> vertex(family.r, 0);
  for (Mask f : family.sets) {
    int best = family.r;
    for (Mask t = f; t; t &= t - 1) {
      best = std::min(best, position_of[lowest_bit(t)]);
    }
    ++vertex[order[best]];
  }
  return vertex;
}

long long delta_facet_rhs(const BooleanFamily& family, Mask g) {
  long long count = 0;
  for (Mask f : family.sets) {
    if (subset_of(f, g)) ++count;
  }
  return count;
}

bool is_nested_boolean(const BooleanFamily& building, const std::vector<Mask>& sets) {
  for (Mask m : sets) {
    if (!building.contains(m)) {
      fail(Errc::NotSubsetOfLattice,
           "set " + format_set(m) + " is not a member of the building family");
    }
  }
  std::vector<Mask> family(sets.begin(), sets.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Depth-first enumeration of antichains: any antichain of size >= 2
  // whose union lies in the building family kills nestedness.
  struct Walker {
    const BooleanFamily& building;
    const std::vector<Mask>& family;
    std::vector<Mask> chosen;
    bool ok = true;

    void walk(std::size_t start, Mask current_union) {
      if (!ok) return;
      if (chosen.size() >= 2 && building.contains(current_union)) {
        ok = false;
        return;
      }
      for (std::size_t i = start; i < family.size() && ok; ++i) {
        Mask cand = family[i];
        bool incomparable = true;
        for (Mask c : chosen) {
          if (subset_of(c, cand) || subset_of(cand, c)) {
            incomparable = false;
            break;
          }
        }
        if (!incomparable) continue;
        chosen.push_back(cand);
        walk(i + 1, current_union | cand);
        chosen.pop_back();
      }
    }
  } walker{building, family, {}, true};
  walker.walk(0, 0);
  return walker.ok;
}

Mask FTree::subtree_union(int node) const {
  Mask out = nodes[node].label;
  for (int child : nodes[node].children) out |= subtree_union(child);
  return out;
}

namespace {

// Recursively build the tree below `parent` whose subtree unions realize
// `within` and the members of `sets` strictly inside it.
int build_tree_node(FTree& tree, int parent, Mask within,
                    const std::vector<Mask>& sets) {
  std::vector<Mask> inside;
  for (Mask s : sets) {
    if (s != within && subset_of(s, within)) inside.push_back(s);
  }
  std::vector<Mask> maximal;
  for (Mask s : inside) {
    bool is_max = true;
    for (Mask t : inside) {
      if (t != s && subset_of(s, t)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(s);
  }
  Mask children_union = 0;
  for (Mask s : maximal) {
    if (children_union & s) {
      fail(Errc::NotNested, "maximal members below " + format_set(within) +
                                " overlap; the family is not nested");
    }
    children_union |= s;
  }
  Mask label = within & ~children_union;
  if (label == 0) {
    fail(Errc::NotNested, "the maximal members below " + format_set(within) +
                              " cover it; the family is not nested");
  }
  int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(FTree::Node{label, parent, {}});
  for (Mask s : maximal) {
    int child = build_tree_node(tree, id, s, sets);
    tree.nodes[id].children.push_back(child);
  }
  return id;
}

}  // namespace

FTree tree_from_nested(const BooleanFamily& building, const std::vector<Mask>& nested) {
  const Mask full = full_mask(building.r);
  std::vector<Mask> sets(nested.begin(), nested.end());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (std::find(sets.begin(), sets.end(), full) == sets.end()) {
    fail(Errc::TopMissing, "the nested set must contain the full set " + format_set(full));
  }
  std::vector<Mask> proper;
  for (Mask s : sets) {
    if (s != full) proper.push_back(s);
  }
  if (!is_nested_boolean(building, proper)) {
    fail(Errc::NotNested, "the family is not nested for this building set");
  }
  FTree tree;
  build_tree_node(tree, -1, full, sets);
  return tree;
}

std::vector<Mask> sets_of_tree(const FTree& tree) {
  std::vector<Mask> out;
  for (std::size_t v = 1; v < tree.nodes.size(); ++v) {
    out.push_back(tree.subtree_union(static_cast<int>(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Mask>> maximal_nested_sets_boolean(const BooleanFamily& building) {
  const Mask full = full_mask(building.r);
  if (building.r == 0) return {};
  if (!building.contains(full)) {
    fail(Errc::TopMissing,
         "the building family must contain the full set " + format_set(full));
  }
  if (!is_building_boolean(building)) {
    fail(Errc::InvalidBuildingSet, "the family is not a building set");
  }
  std::set<std::vector<Mask>> facets;
  std::vector<int> perm(building.r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> position_of(building.r);
  do {
    for (int k = 0; k < building.r; ++k) position_of[perm[k]] = k;
    // G_k = union of members whose earliest element in this ordering sits
    // at position k; position 0 always yields the full set and is dropped.
    std::vector<Mask> unions(building.r, 0);
    for (Mask f : building.sets) {
      int best = building.r;
      for (Mask t = f; t; t &= t - 1) {
        best = std::min(best, position_of[lowest_bit(t)]);
      }
      unions[best] |= f;
    }
    std::vector<Mask> facet;
    for (int k = 1; k < building.r; ++k) {
      if (unions[k]) facet.push_back(unions[k]);
    }
    std::sort(facet.begin(), facet.end());
    facets.insert(std::move(facet));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::vector<std::vector<Mask>>(facets.begin(), facets.end());
}

}  // namespace matro
