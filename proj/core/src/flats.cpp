#include "matro/flats.hpp"

#include <algorithm>
#include <set>

namespace matro {

FlatsLattice FlatsLattice::build(const Matroid& m) {
  FlatsLattice lat;
  lat.matroid_ = m;

  // Breadth-first closure sweep: level s+1 consists of the closures
  // cl(F + e) over level-s flats F and elements e outside F.
  std::vector<std::vector<Mask>> levels;
  levels.push_back({closure(m, 0)});
  const Mask full = m.ground_mask();
  while (levels.back().front() != full) {
    std::set<Mask> next;
    for (Mask f : levels.back()) {
      for (Mask rest = full & ~f; rest; rest &= rest - 1) {
        next.insert(closure(m, f | (rest & -rest)));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }

  lat.rank_offset_.assign(levels.size() + 1, 0);
  for (std::size_t s = 0; s < levels.size(); ++s) {
    lat.rank_offset_[s + 1] = lat.rank_offset_[s] + static_cast<int>(levels[s].size());
    for (Mask f : levels[s]) {
      lat.index_.emplace(f, static_cast<int>(lat.flats_.size()));
      lat.flats_.push_back(Flat{f, static_cast<int>(s)});
    }
  }

  lat.covers_above_.resize(lat.flats_.size());
  for (int id = 0; id < lat.size(); ++id) {
    const Flat& f = lat.flats_[id];
    std::set<int> above;
    for (Mask rest = full & ~f.mask; rest; rest &= rest - 1) {
      above.insert(lat.index_.at(closure(m, f.mask | (rest & -rest))));
    }
    lat.covers_above_[id].assign(above.begin(), above.end());
  }
  return lat;
}

int FlatsLattice::id_of(Mask m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FlatsLattice::of_rank(int rank) const {
  std::vector<int> out;
  if (rank < 0 || rank + 1 >= static_cast<int>(rank_offset_.size())) return out;
  for (int id = rank_offset_[rank]; id < rank_offset_[rank + 1]; ++id) {
    out.push_back(id);
  }
  return out;
}

std::vector<long long> FlatsLattice::rank_counts() const {
  std::vector<long long> out;
  for (std::size_t s = 0; s + 1 < rank_offset_.size(); ++s) {
    out.push_back(rank_offset_[s + 1] - rank_offset_[s]);
  }
  return out;
}

int FlatsLattice::meet(int a, int b) const {
  return index_.at(flats_[a].mask & flats_[b].mask);
}

int FlatsLattice::join(int a, int b) const {
  Mask u = flats_[a].mask | flats_[b].mask;
  auto it = index_.find(u);
  if (it != index_.end()) return it->second;
  return index_.at(closure(matroid_, u));
}

std::vector<long long> FlatsLattice::mobius_from_bottom() const {
  // mu(0,X) = -sum of mu(0,Y) over flats Y strictly below X; ids are
  // ordered by rank, so a single forward sweep suffices.
  std::vector<long long> mu(flats_.size(), 0);
  mu[0] = 1;
  for (std::size_t x = 1; x < flats_.size(); ++x) {
    long long total = 0;
    for (std::size_t y = 0; y < x; ++y) {
      if (flats_[y].rank < flats_[x].rank && subset_of(flats_[y].mask, flats_[x].mask)) {
        total += mu[y];
      }
    }
    mu[x] = -total;
  }
  return mu;
}

long long FlatsLattice::mobius() const { return mobius_from_bottom().back(); }

BuildingSet connected_flats(const Matroid& m, const FlatsLattice& lattice) {
  if (has_loops(m)) {
    fail(Errc::HasLoops, "connected flats require a loop-free matroid; loops " +
                             format_set(loops(m)));
  }
  BuildingSet out;
  for (int id = 1; id < lattice.size(); ++id) {
    if (id == lattice.top()) continue;
    if (is_connected(restriction(m, lattice[id].mask).matroid)) {
      out.members.push_back(id);
    }
  }
  out.contains_top = is_connected(m);
  return out;
}

BuildingSet full_building_set(const FlatsLattice& lattice) {
  BuildingSet out;
  for (int id = 1; id < lattice.top(); ++id) out.members.push_back(id);
  out.contains_top = lattice.size() > 1;
  return out;
}

BuildingCheck is_building_set(const FlatsLattice& lattice,
                              const std::vector<int>& member_ids) {
  std::vector<char> is_member(lattice.size(), 0);
  for (int id : member_ids) {
    if (id <= lattice.bottom() || id >= lattice.size()) {
      fail(Errc::NotSubsetOfLattice,
           "building set member id " + std::to_string(id) +
               " is not a flat strictly above the bottom");
    }
    is_member[id] = 1;
  }
  // For every lattice element X the maximal members below X must factor
  // the interval [bottom, X]: ranks must add up, interval sizes must
  // multiply up, and joining the pieces of X must give X back.
  for (int x = 1; x < lattice.size(); ++x) {
    std::vector<int> below;
    for (int id : member_ids) {
      if (lattice.leq(id, x)) below.push_back(id);
    }
    std::vector<int> factors;
    for (int id : below) {
      bool maximal = true;
      for (int other : below) {
        if (other != id && lattice.leq(id, other)) {
          maximal = false;
          break;
        }
      }
      if (maximal) factors.push_back(id);
    }
    auto reject = [&]() { return BuildingCheck{false, x}; };
    if (factors.empty()) return reject();

    int rank_sum = 0;
    for (int id : factors) rank_sum += lattice[id].rank;
    if (rank_sum != lattice[x].rank) return reject();

    long long interval_size = 0, product = 1;
    for (int y = 0; y < lattice.size(); ++y) {
      if (lattice.leq(y, x)) ++interval_size;
    }
    for (int id : factors) {
      long long size = 0;
      for (int y = 0; y < lattice.size(); ++y) {
        if (lattice.leq(y, id)) ++size;
      }
      product *= size;
      if (product > interval_size) break;
    }
    if (product != interval_size) return reject();

    // Sizes match, so the join map is an isomorphism iff its candidate
    // inverse Z -> (Z meet G_j)_j really inverts it: every Z <= X must be
    // recovered as the join of its meets with the factors.
    for (int z = 0; z < lattice.size(); ++z) {
      if (!lattice.leq(z, x)) continue;
      Mask zmask = lattice[z].mask;
      Mask pieces = 0;
      for (int id : factors) pieces |= zmask & lattice[id].mask;
      if (closure(lattice.matroid(), pieces) != zmask) return reject();
    }
  }
  return BuildingCheck{};
}

std::vector<int> flacets(const Matroid& m, const FlatsLattice& lattice) {
  if (!is_connected(m)) {
    ComponentPartition parts = connected_components(m);
    std::string msg = "flacets require a connected matroid; components:";
    for (Mask b : parts.blocks) msg += " " + format_set(b);
    fail(Errc::NotConnected, msg);
  }
  std::vector<int> out;
  for (int id = 1; id < lattice.top(); ++id) {
    Mask f = lattice[id].mask;
    if (!is_connected(restriction(m, f).matroid)) continue;
    if (!is_connected(contraction(m, f).matroid)) continue;
    out.push_back(id);
  }
  return out;
}

PolytopeFacets polytope_facets(const Matroid& m, const FlatsLattice& lattice) {
  PolytopeFacets out;
  out.dimension = polytope_dimension(m);
  for (int id : flacets(m, lattice)) {  // throws NotConnected when needed
    out.flacet_rhs.emplace_back(id, lattice[id].rank);
  }
  // x_e >= 0 cuts a facet iff deleting e keeps the matroid connected (the
  // deletion is the face at x_e = 0 and must have full dimension n-2).
  for (int e = 0; e < m.ground_size(); ++e) {
    if (m.ground_size() >= 2 && is_connected(deletion(m, e).matroid)) {
      out.nonnegative.push_back(e);
    }
  }
  return out;
}

}  // namespace matro
