#include "matro/bergman.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "matro/errors.hpp"

namespace matro {

namespace {

void sort_blocks_by_min(std::vector<Mask>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
}

void require_loop_free(const Matroid& m, const char* op) {
  if (has_loops(m)) {
    fail(Errc::HasLoops, std::string(op) + " requires a loop-free matroid; loops: " +
                             format_set(loops(m)));
  }
}

void require_connected(const Matroid& m, const char* op) {
  if (!is_connected(m)) {
    fail(Errc::NotConnected, std::string(op) + " requires a connected matroid (" +
                                 std::to_string(count_components(m)) +
                                 " components found)");
  }
}

int resolve_threads(int threads, std::size_t jobs) {
  int t = threads;
  if (t < 1) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (jobs < static_cast<std::size_t>(t)) t = static_cast<int>(jobs ? jobs : 1);
  return t;
}

// Runs work(worker_index, lo, hi) over a contiguous split of [0, jobs).
template <typename Work>
void run_chunked(std::size_t jobs, int threads, Work work) {
  const int t = resolve_threads(threads, jobs);
  if (t <= 1) {
    work(0, std::size_t{0}, jobs);
    return;
  }
  const std::size_t chunk = (jobs + t - 1) / t;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) {
    const std::size_t lo = static_cast<std::size_t>(k) * chunk;
    const std::size_t hi = std::min(jobs, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, k, lo, hi]() {
      try {
        work(k, lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

// Per-basis partition sweep of the facet algorithm: for each ordering pi of
// the basis, every non-basis element i joins the block of the pi-earliest
// element of F_i, and each basis element seeds its own block.
void facet_sweep_for_basis(const Matroid& m, Mask sigma, std::set<SetPartition>& out) {
  const int n = m.ground_size();
  const int r = m.rank();
  const std::vector<int> sig = mask_elements(sigma);

  // F_i as a mask over basis positions 0..r-1.
  std::vector<std::pair<int, Mask>> outside;
  for (int i = 0; i < n; ++i) {
    if (sigma >> i & 1) continue;
    Mask fi = 0;
    for (int k = 0; k < r; ++k) {
      const Mask cand = (sigma ^ (Mask{1} << sig[k])) | (Mask{1} << i);
      if (m.is_basis(cand)) fi |= Mask{1} << k;
    }
    outside.emplace_back(i, fi);
  }

  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> order(static_cast<std::size_t>(r));
  std::vector<Mask> blocks(static_cast<std::size_t>(r));
  do {
    for (int j = 0; j < r; ++j) order[static_cast<std::size_t>(perm[j])] = j;
    for (int j = 0; j < r; ++j) {
      blocks[static_cast<std::size_t>(j)] = Mask{1} << sig[static_cast<std::size_t>(perm[j])];
    }
    for (const auto& [i, fi] : outside) {
      int best = r;
      for (Mask rest = fi; rest != 0; rest &= rest - 1) {
        best = std::min(best, order[static_cast<std::size_t>(lowest_bit(rest))]);
      }
      blocks[static_cast<std::size_t>(best)] |= Mask{1} << i;
    }
    std::vector<Mask> sorted = blocks;
    sort_blocks_by_min(sorted);
    out.insert(SetPartition{std::move(sorted)});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

SetPartition SetPartition::of(std::vector<Mask> blocks) {
  sort_blocks_by_min(blocks);
  return SetPartition{std::move(blocks)};
}

long long euler_characteristic(const FVector& fv) {
  long long chi = -1;
  for (std::size_t d = 0; d < fv.f.size(); ++d) {
    chi += (d % 2 == 0) ? fv.f[d] : -fv.f[d];
  }
  return chi;
}

// ---- membership --------------------------------------------------------------

bool bergman_membership(const std::vector<Mask>& circuits, const WeightVector& w,
                        int ground_size) {
  if (static_cast<int>(w.size()) != ground_size) {
    fail(Errc::LengthMismatch, "weight vector has " + std::to_string(w.size()) +
                                   " entries for a ground set of size " +
                                   std::to_string(ground_size));
  }
  for (Mask c : circuits) {
    int hits = 0;
    const Rat* best = nullptr;
    for (Mask rest = c; rest != 0; rest &= rest - 1) {
      const Rat& v = w[static_cast<std::size_t>(lowest_bit(rest))];
      if (best == nullptr || v < *best) {
        best = &v;
        hits = 1;
      } else if (v == *best) {
        ++hits;
      }
    }
    if (hits < 2) return false;
  }
  return true;
}

bool bergman_membership(const Matroid& m, const WeightVector& w) {
  require_loop_free(m, "bergman membership");
  return bergman_membership(circuits(m), w, m.ground_size());
}

// ---- localization ------------------------------------------------------------

std::vector<std::pair<int, Mask>> local_building_set(const Matroid& m, Mask basis) {
  if (!m.is_basis(basis)) {
    fail(Errc::NotABasis, format_set(basis) + " is not a basis");
  }
  const int n = m.ground_size();
  std::vector<std::pair<int, Mask>> result;
  for (int i = 0; i < n; ++i) {
    if (basis >> i & 1) continue;
    Mask fi = 0;
    for (Mask rest = basis; rest != 0; rest &= rest - 1) {
      const int j = lowest_bit(rest);
      const Mask cand = (basis ^ (Mask{1} << j)) | (Mask{1} << i);
      if (m.is_basis(cand)) fi |= Mask{1} << j;
    }
    result.emplace_back(i, fi);
  }
  return result;
}

// ---- nestedness in the lattice of flats ---------------------------------------

namespace {

struct NestedTester {
  const FlatsLattice& lattice;
  const BuildingSet& building;
  std::vector<int> ids;      // candidate set, sorted
  std::vector<Mask> masks;   // masks of the candidates
  std::vector<int> chosen;   // current antichain, as indices into ids

  bool in_building(int flat_id) const {
    if (flat_id == lattice.top()) return building.contains_top;
    return std::binary_search(building.members.begin(), building.members.end(), flat_id);
  }

  // True if some antichain extending `chosen` with indices >= from joins
  // into the building set (i.e. the candidate set is NOT nested).
  bool antichain_join_hits(std::size_t from, Mask join_so_far) {
    if (chosen.size() >= 2) {
      const Mask join = closure(lattice.matroid(), join_so_far);
      if (in_building(lattice.id_of(join))) return true;
    }
    for (std::size_t i = from; i < ids.size(); ++i) {
      bool incomparable = true;
      for (int c : chosen) {
        const Mask a = masks[static_cast<std::size_t>(c)];
        const Mask b = masks[i];
        if (subset_of(a, b) || subset_of(b, a)) {
          incomparable = false;
          break;
        }
      }
      if (!incomparable) continue;
      chosen.push_back(static_cast<int>(i));
      const bool hit = antichain_join_hits(i + 1, join_so_far | masks[i]);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  }
};

}  // namespace

bool is_nested(const FlatsLattice& lattice, const BuildingSet& building,
               const std::vector<int>& flats) {
  std::vector<int> ids = flats;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (!std::binary_search(building.members.begin(), building.members.end(), id)) {
      fail(Errc::NotSubsetOfLattice,
           "flat id " + std::to_string(id) + " is not a member of the building set");
    }
  }
  std::vector<Mask> masks;
  masks.reserve(ids.size());
  for (int id : ids) masks.push_back(lattice[id].mask);
  NestedTester tester{lattice, building, std::move(ids), std::move(masks), {}};
  return !tester.antichain_join_hits(0, 0);
}

// ---- Bergman facets -----------------------------------------------------------

std::vector<SetPartition> bergman_facets(const Matroid& m, int threads) {
  require_loop_free(m, "bergman facets");
  require_connected(m, "bergman facets");
  const auto& bases = m.bases();
  const int t = resolve_threads(threads, bases.size());
  std::vector<std::set<SetPartition>> locals(static_cast<std::size_t>(t));
  run_chunked(bases.size(), t, [&](int worker, std::size_t lo, std::size_t hi) {
    auto& local = locals[static_cast<std::size_t>(worker)];
    for (std::size_t b = lo; b < hi; ++b) facet_sweep_for_basis(m, bases[b], local);
  });
  std::set<SetPartition> merged;
  for (auto& local : locals) merged.merge(local);
  return std::vector<SetPartition>(merged.begin(), merged.end());
}

// ---- triangulating one facet --------------------------------------------------

namespace {

// Depth-first search for the (rank-1)-element nested subsets of a facet's
// vertex pool.  Joins of pool antichains are memoized so the antichain
// checks stay cheap.
struct PoolSearch {
  const FlatsLattice& lattice;
  const BuildingSet& building;
  std::vector<int> pool;                         // flat ids, ascending
  std::vector<Mask> masks;                       // their masks
  std::vector<std::vector<char>> comparable;     // pairwise subset-or-superset
  std::unordered_map<long long, int> join_memo;  // (flat id, pool index) -> join id
  int target = 0;                                // r - 1
  std::vector<int> current;                      // pool indices
  std::vector<NestedSet> found;

  PoolSearch(const FlatsLattice& l, const BuildingSet& b, std::vector<int> p, int want)
      : lattice(l), building(b), pool(std::move(p)), target(want) {
    masks.reserve(pool.size());
    for (int id : pool) masks.push_back(lattice[id].mask);
    comparable.assign(pool.size(), std::vector<char>(pool.size(), 0));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        comparable[i][j] = subset_of(masks[i], masks[j]) || subset_of(masks[j], masks[i]);
      }
    }
  }

  bool in_building(int flat_id) const {
    if (flat_id == lattice.top()) return building.contains_top;
    return std::binary_search(building.members.begin(), building.members.end(), flat_id);
  }

  int join_with(int flat_id, std::size_t pool_index) {
    const long long key =
        static_cast<long long>(flat_id) * static_cast<long long>(pool.size() + 1) +
        static_cast<long long>(pool_index);
    auto it = join_memo.find(key);
    if (it != join_memo.end()) return it->second;
    const Mask joined =
        closure(lattice.matroid(), lattice[flat_id].mask | masks[pool_index]);
    const int id = lattice.id_of(joined);
    join_memo.emplace(key, id);
    return id;
  }

  // Does adding pool index `next` keep the current set nested?  Only
  // antichains through `next` need checking; the rest were checked before.
  bool stays_nested(std::size_t next) {
    std::vector<std::size_t> free_indices;
    for (int c : current) {
      if (!comparable[static_cast<std::size_t>(c)][next]) {
        free_indices.push_back(static_cast<std::size_t>(c));
      }
    }
    const std::size_t k = free_indices.size();
    for (std::size_t pick = 1; pick < (std::size_t{1} << k); ++pick) {
      bool antichain = true;
      for (std::size_t a = 0; a < k && antichain; ++a) {
        if (!(pick >> a & 1)) continue;
        for (std::size_t b = a + 1; b < k; ++b) {
          if ((pick >> b & 1) && comparable[free_indices[a]][free_indices[b]]) {
            antichain = false;
            break;
          }
        }
      }
      if (!antichain) continue;
      int join_id = pool[next];
      for (std::size_t a = 0; a < k; ++a) {
        if (pick >> a & 1) join_id = join_with(join_id, free_indices[a]);
      }
      if (in_building(join_id)) return false;
    }
    return true;
  }

  void extend(std::size_t from) {
    if (static_cast<int>(current.size()) == target) {
      NestedSet ns;
      ns.flats.reserve(current.size());
      for (int c : current) ns.flats.push_back(pool[static_cast<std::size_t>(c)]);
      found.push_back(std::move(ns));
      return;
    }
    const std::size_t missing = static_cast<std::size_t>(target) - current.size();
    for (std::size_t i = from; i + missing <= pool.size(); ++i) {
      if (!stays_nested(i)) continue;
      current.push_back(static_cast<int>(i));
      extend(i + 1);
      current.pop_back();
    }
  }
};

}  // namespace

FacetSplit facet_triangulation(const Matroid& m, const FlatsLattice& lattice,
                               const BuildingSet& gmin, const SetPartition& omega,
                               const std::vector<SetPartition>& facets) {
  if (!std::binary_search(facets.begin(), facets.end(), omega)) {
    fail(Errc::NotAFacet, "the partition is not a facet of the Bergman complex");
  }
  const int r = m.rank();

  // Pool: building set members that are unions of rank-many blocks.
  FacetSplit split;
  for (int id : gmin.members) {
    const Flat& f = lattice[id];
    Mask covered = 0;
    int used = 0;
    for (Mask b : omega.blocks) {
      if (b & f.mask) {
        covered |= b;
        ++used;
      }
    }
    if (covered == f.mask && used == f.rank) split.pool.push_back(id);
  }

  if (static_cast<int>(split.pool.size()) < r - 1) {
    throw std::logic_error("facet vertex pool is smaller than a simplex");
  }
  if (static_cast<int>(split.pool.size()) == r - 1) {
    split.subdivided = false;
    split.simplices.push_back(NestedSet{split.pool});
    return split;
  }
  split.subdivided = true;
  PoolSearch search(lattice, gmin, split.pool, r - 1);
  search.extend(0);
  split.simplices = std::move(search.found);
  if (split.simplices.size() < 2) {
    throw std::logic_error("oversized facet pool yielded fewer than two simplices");
  }
  return split;
}

// ---- nested set complex facets ------------------------------------------------

std::vector<NestedSet> nested_facets_min(const Matroid& m, const FlatsLattice& lattice,
                                         const BuildingSet& gmin, int threads) {
  const std::vector<SetPartition> facets = bergman_facets(m, threads);
  std::set<NestedSet> out;
  for (const SetPartition& omega : facets) {
    FacetSplit split = facet_triangulation(m, lattice, gmin, omega, facets);
    for (NestedSet& ns : split.simplices) out.insert(std::move(ns));
  }
  return std::vector<NestedSet>(out.begin(), out.end());
}

std::vector<NestedSet> nested_facets_max(const FlatsLattice& lattice) {
  const Matroid& m = lattice.matroid();
  require_loop_free(m, "nested facets");
  require_connected(m, "nested facets");
  std::vector<NestedSet> out;
  std::vector<int> chain;
  const int top = lattice.top();
  // Maximal chains climb cover by cover from bottom to top.
  auto climb = [&](auto&& self, int at) -> void {
    for (int next : lattice.covers_above(at)) {
      if (next == top) {
        if (static_cast<int>(chain.size()) == lattice.lattice_rank() - 1) {
          out.push_back(NestedSet{chain});
        }
        continue;
      }
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  climb(climb, lattice.bottom());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NestedSet> nested_facets_localized(const Matroid& m,
                                               const FlatsLattice& lattice,
                                               const BuildingSet& building,
                                               int threads) {
  require_loop_free(m, "nested facets");
  require_connected(m, "nested facets");
  const int n = m.ground_size();
  const int r = m.rank();
  const auto& bases = m.bases();
  const int t = resolve_threads(threads, bases.size());
  std::vector<std::set<NestedSet>> locals(static_cast<std::size_t>(t));
  run_chunked(bases.size(), t, [&](int worker, std::size_t lo, std::size_t hi) {
    auto& local = locals[static_cast<std::size_t>(worker)];
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t b = lo; b < hi; ++b) {
      const Mask sigma = bases[b];
      const std::vector<int> sig = mask_elements(sigma);
      for (int k = 0; k < r; ++k) pos[static_cast<std::size_t>(sig[k])] = k;

      // Building set members spanned by this basis, moved to the Boolean
      // lattice on the basis positions.
      std::vector<Mask> fam_sets{full_mask(r)};
      std::unordered_map<Mask, int> flat_of;
      for (int id : building.members) {
        const Flat& f = lattice[id];
        const Mask captured = f.mask & sigma;
        if (popcount(captured) != f.rank) continue;
        Mask p = 0;
        for (Mask rest = captured; rest != 0; rest &= rest - 1) {
          p |= Mask{1} << pos[static_cast<std::size_t>(lowest_bit(rest))];
        }
        fam_sets.push_back(p);
        flat_of.emplace(p, id);
      }
      const BooleanFamily fam = BooleanFamily::make(r, std::move(fam_sets));
      for (const std::vector<Mask>& facet : maximal_nested_sets_boolean(fam)) {
        NestedSet ns;
        ns.flats.reserve(facet.size());
        for (Mask p : facet) {
          const auto it = flat_of.find(p);
          if (it == flat_of.end()) {
            throw std::logic_error("localized nested facet has no matching flat");
          }
          ns.flats.push_back(it->second);
        }
        std::sort(ns.flats.begin(), ns.flats.end());
        local.insert(std::move(ns));
      }
    }
  });
  std::set<NestedSet> merged;
  for (auto& local : locals) merged.merge(local);
  return std::vector<NestedSet>(merged.begin(), merged.end());
}

std::vector<NestedSet> nested_facets(const Matroid& m, const FlatsLattice& lattice,
                                     const BuildingSet& building, int threads) {
  require_loop_free(m, "nested facets");
  require_connected(m, "nested facets");
  const BuildingSet gmin = connected_flats(m, lattice);
  if (building.members == gmin.members) {
    return nested_facets_min(m, lattice, gmin, threads);
  }
  const BuildingSet gmax = full_building_set(lattice);
  if (building.members == gmax.members) {
    return nested_facets_max(lattice);
  }
  std::vector<int> with_top = building.members;
  if (building.contains_top) with_top.push_back(lattice.top());
  const BuildingCheck check = is_building_set(lattice, with_top);
  if (!check.ok) {
    fail(Errc::InvalidBuildingSet,
         "the building set condition fails at flat " +
             format_set(lattice[check.witness].mask));
  }
  return nested_facets_localized(m, lattice, building, threads);
}

// ---- partitions of nested sets --------------------------------------------------

SetPartition nested_partition(const FlatsLattice& lattice, const NestedSet& nested) {
  std::vector<Mask> masks;
  masks.reserve(nested.flats.size());
  for (int id : nested.flats) {
    if (id <= lattice.bottom() || id >= lattice.top()) {
      fail(Errc::NotNested, "flat id " + std::to_string(id) +
                                " cannot appear in a nested set (bottom or top)");
    }
    masks.push_back(lattice[id].mask);
  }
  std::vector<Mask> blocks;
  Mask all = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    Mask inner = 0;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (j != i && proper_subset_of(masks[j], masks[i])) inner |= masks[j];
    }
    const Mask block = masks[i] & ~inner;
    if (block == 0) {
      fail(Errc::NotNested, "flat " + format_set(masks[i]) +
                                " is covered by the members below it; the set is "
                                "not nested");
    }
    blocks.push_back(block);
    all |= masks[i];
  }
  blocks.push_back(lattice.matroid().ground_mask() & ~all);
  sort_blocks_by_min(blocks);
  return SetPartition{std::move(blocks)};
}

// ---- face matroids ---------------------------------------------------------------

namespace {

std::pair<FaceTree, Matroid> build_face_at(const Matroid& m, const FlatsLattice& lattice,
                                           const BuildingSet& building,
                                           const std::vector<int>& ids, Mask sigma) {
  const int n = m.ground_size();
  const int r = m.rank();
  const std::vector<int> sig = mask_elements(sigma);
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < r; ++k) pos[static_cast<std::size_t>(sig[k])] = k;
  auto posmask_of = [&](Mask flat_mask) {
    Mask p = 0;
    for (Mask rest = flat_mask & sigma; rest != 0; rest &= rest - 1) {
      p |= Mask{1} << pos[static_cast<std::size_t>(lowest_bit(rest))];
    }
    return p;
  };

  // Localize the whole building set at sigma, then hand the nested set to
  // the Boolean tree machinery.
  std::vector<Mask> fam_sets{full_mask(r)};
  for (int id : building.members) {
    const Flat& f = lattice[id];
    if (popcount(f.mask & sigma) != f.rank) continue;
    fam_sets.push_back(posmask_of(f.mask));
  }
  const BooleanFamily fam = BooleanFamily::make(r, std::move(fam_sets));

  std::unordered_map<Mask, Mask> flat_mask_of;
  flat_mask_of.emplace(full_mask(r), m.ground_mask());
  std::vector<Mask> bool_nested{full_mask(r)};
  for (int id : ids) {
    const Flat& f = lattice[id];
    if (popcount(f.mask & sigma) != f.rank) {
      throw std::logic_error("a maximum-weight basis fails to span a nested set member");
    }
    const Mask p = posmask_of(f.mask);
    flat_mask_of.emplace(p, f.mask);
    bool_nested.push_back(p);
  }

  const FTree btree = tree_from_nested(fam, bool_nested);
  FaceTree tree;
  tree.nodes.resize(btree.nodes.size());
  std::vector<Mask> upto(btree.nodes.size());
  for (std::size_t i = 0; i < btree.nodes.size(); ++i) {
    upto[i] = flat_mask_of.at(btree.subtree_union(static_cast<int>(i)));
  }

  std::vector<Mask> sum_bases{0};
  for (std::size_t i = 0; i < btree.nodes.size(); ++i) {
    Mask below = 0;
    for (int c : btree.nodes[i].children) below |= upto[static_cast<std::size_t>(c)];
    if (lattice.id_of(below) < 0 || below == upto[i]) {
      throw std::logic_error("nested set tree produced an invalid interval");
    }
    tree.nodes[i].part = upto[i] & ~below;
    tree.nodes[i].below = below;
    tree.nodes[i].upto = upto[i];
    tree.nodes[i].parent = btree.nodes[i].parent;
    tree.nodes[i].children = btree.nodes[i].children;

    const Minor piece = interval_minor(m, below, upto[i]);
    std::vector<Mask> next;
    next.reserve(sum_bases.size() * piece.matroid.bases().size());
    for (Mask a : sum_bases) {
      for (Mask b : piece.matroid.bases()) next.push_back(a | piece.lift(b));
    }
    sum_bases = std::move(next);
  }
  return {std::move(tree), Matroid::trusted(n, std::move(sum_bases))};
}

std::vector<long long> characteristic_sum(const FlatsLattice& lattice,
                                          const std::vector<int>& ids, int n) {
  std::vector<long long> w(static_cast<std::size_t>(n), 0);
  for (int id : ids) {
    for (Mask rest = lattice[id].mask; rest != 0; rest &= rest - 1) {
      ++w[static_cast<std::size_t>(lowest_bit(rest))];
    }
  }
  return w;
}

}  // namespace

std::pair<FaceTree, Matroid> nested_face_matroid(const Matroid& m,
                                                 const FlatsLattice& lattice,
                                                 const BuildingSet& building,
                                                 const NestedSet& nested) {
  std::vector<int> ids = nested.flats;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!is_nested(lattice, building, ids)) {
    fail(Errc::NotNested, "the given flats are not nested for this building set");
  }
  if (ids.empty()) {
    FaceTree tree;
    tree.nodes.push_back(
        FaceTree::Node{m.ground_mask(), 0, m.ground_mask(), -1, {}});
    return {std::move(tree), m};
  }

  const std::vector<long long> w = characteristic_sum(lattice, ids, m.ground_size());
  const Matroid mw = max_weight_matroid_int(m, w);

  auto built = build_face_at(m, lattice, building, ids, mw.bases().front());
  if (mw.bases().size() > 1) {
    const auto again = build_face_at(m, lattice, building, ids, mw.bases().back());
    if (!(again.second == built.second)) {
      throw std::logic_error("nested face matroid depends on the basis chosen");
    }
  }
  if (!(built.second == mw)) {
    throw std::logic_error(
        "nested face matroid disagrees with the maximum-weight matroid");
  }
  return built;
}

// ---- faces and f-vectors ----------------------------------------------------------

std::vector<BergmanFace> bergman_faces(const Matroid& m, const FlatsLattice& lattice,
                                       const BuildingSet& building, int threads) {
  const std::vector<NestedSet> facets = nested_facets(m, lattice, building, threads);
  std::set<std::vector<int>> subsets;
  for (const NestedSet& facet : facets) {
    const std::size_t k = facet.flats.size();
    for (Mask pick = 1; pick < (Mask{1} << k); ++pick) {
      std::vector<int> part;
      part.reserve(static_cast<std::size_t>(popcount(pick)));
      for (std::size_t i = 0; i < k; ++i) {
        if (pick >> i & 1) part.push_back(facet.flats[i]);
      }
      subsets.insert(std::move(part));
    }
  }

  std::set<std::vector<Mask>> seen;
  std::vector<BergmanFace> out;
  for (const std::vector<int>& s : subsets) {
    const std::vector<long long> w = characteristic_sum(lattice, s, m.ground_size());
    Matroid mw = max_weight_matroid_int(m, w);
    if (has_loops(mw)) {
      throw std::logic_error("a nested set selected a face matroid with loops");
    }
    if (!seen.insert(mw.bases()).second) continue;
    const int dim = count_components(mw) - 2;
    out.push_back(BergmanFace{std::move(mw), dim});
  }
  std::sort(out.begin(), out.end(), [](const BergmanFace& a, const BergmanFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.face_matroid.bases() < b.face_matroid.bases();
  });
  return out;
}

FVector bergman_f_vector(const Matroid& m, const FlatsLattice& lattice,
                         const BuildingSet& building, int threads) {
  FVector fv;
  fv.f.assign(static_cast<std::size_t>(std::max(m.rank() - 1, 0)), 0);
  for (const BergmanFace& face : bergman_faces(m, lattice, building, threads)) {
    fv.f[static_cast<std::size_t>(face.dim)] += 1;
  }
  return fv;
}

FVector nested_f_vector(int rank, const std::vector<NestedSet>& facets) {
  std::set<std::vector<int>> faces;
  for (const NestedSet& facet : facets) {
    const std::size_t k = facet.flats.size();
    for (Mask pick = 1; pick < (Mask{1} << k); ++pick) {
      std::vector<int> part;
      for (std::size_t i = 0; i < k; ++i) {
        if (pick >> i & 1) part.push_back(facet.flats[i]);
      }
      faces.insert(std::move(part));
    }
  }
  FVector fv;
  fv.f.assign(static_cast<std::size_t>(std::max(rank - 1, 0)), 0);
  for (const std::vector<int>& face : faces) {
    fv.f[face.size() - 1] += 1;
  }
  return fv;
}

FVector nested_f_vector(const Matroid& m, const FlatsLattice& lattice,
                        const BuildingSet& building, int threads) {
  return nested_f_vector(m.rank(), nested_facets(m, lattice, building, threads));
}

// ---- equality of the two complexes -------------------------------------------------

EqualityResult equality_criterion(const Matroid& m, const FlatsLattice& lattice,
                                  const BuildingSet& gmin) {
  require_loop_free(m, "equality criterion");
  require_connected(m, "equality criterion");
  std::vector<int> uppers = gmin.members;
  uppers.push_back(lattice.top());
  for (int g : uppers) {
    const Flat& high = lattice[g];
    for (int f = lattice.bottom(); f < lattice.size(); ++f) {
      const Flat& low = lattice[f];
      // A disconnected interval needs two parts of positive rank.
      if (low.rank > high.rank - 2) continue;
      if (f == g || !lattice.leq(f, g)) continue;
      const Minor piece = interval_minor(m, low.mask, high.mask);
      if (!is_connected(piece.matroid)) {
        return EqualityResult{false, low.mask, high.mask};
      }
    }
  }
  return EqualityResult{};
}

}  // namespace matro
