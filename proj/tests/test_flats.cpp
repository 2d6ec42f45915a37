#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "matro/flats.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace matro;

namespace {

// Stems small enough for full subset sweeps.
const char* kSmall[] = {"u24", "k4", "k4e", "cube6", "cube8", "r10", "mk5dual"};

// Does the tuple-join map from the factor intervals onto [bottom, x]
// restrict to a bijection?  (Counting plus the inverse identity
// y = join of the meets y ^ m_i is enough: the join map is then a
// surjection between sets of equal size, hence bijective.)
bool factors_at(const FlatsLattice& lattice, const std::vector<int>& members, int x) {
  std::vector<int> below, maximal;
  for (int g : members)
    if (g != x && lattice.leq(g, x)) below.push_back(g);
  if (std::find(members.begin(), members.end(), x) != members.end()) below.push_back(x);
  for (int g : below) {
    bool is_max = true;
    for (int h : below)
      if (h != g && lattice.leq(g, h)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(g);
  }
  std::vector<int> interval;
  for (int y = 0; y < lattice.size(); ++y)
    if (lattice.leq(y, x)) interval.push_back(y);
  long long tuples = 1;
  for (int g : maximal) {
    long long sz = 0;
    for (int y : interval)
      if (lattice.leq(y, g)) ++sz;
    tuples *= sz;
  }
  if (tuples != static_cast<long long>(interval.size())) return false;
  for (int y : interval) {
    int joined = lattice.bottom();
    for (int g : maximal) joined = lattice.join(joined, lattice.meet(y, g));
    if (joined != y) return false;
  }
  return true;
}

// The member ids a BuildingSet stands for: the proper flats it lists, plus
// the top flat when the set contains it.
std::vector<int> building_ids(const BuildingSet& building, const FlatsLattice& lattice) {
  std::vector<int> ids = building.members;
  if (building.contains_top) ids.push_back(lattice.top());
  return ids;
}

int building_brute_witness(const FlatsLattice& lattice, const std::vector<int>& members) {
  for (int x = 1; x < lattice.size(); ++x)
    if (!factors_at(lattice, members, x)) return x;
  return -1;
}

}  // namespace

TEST_CASE("the lattice holds exactly the flats, in (rank, mask) order") {
  for (const char* stem : kSmall) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);

    std::vector<Flat> brute;
    for (Mask s = 0; s <= m.ground_mask(); ++s) {
      int rk = oracle::rank_brute(m, s);
      bool flat = true;
      for (int e : mask_elements(m.ground_mask() & ~s))
        if (oracle::rank_brute(m, s | (Mask{1} << e)) == rk) {
          flat = false;
          break;
        }
      if (flat) brute.push_back({s, rk});
    }
    std::sort(brute.begin(), brute.end(), [](const Flat& a, const Flat& b) {
      return std::pair(a.rank, a.mask) < std::pair(b.rank, b.mask);
    });

    REQUIRE(lattice.size() == static_cast<int>(brute.size()));
    std::set<Mask> flat_masks;
    for (int id = 0; id < lattice.size(); ++id) {
      REQUIRE(lattice[id].mask == brute[id].mask);
      REQUIRE(lattice[id].rank == brute[id].rank);
      REQUIRE(lattice.id_of(brute[id].mask) == id);
      flat_masks.insert(brute[id].mask);
    }
    for (Mask s = 0; s <= m.ground_mask(); ++s) {
      if (!flat_masks.count(s)) REQUIRE(lattice.id_of(s) == -1);
    }
    CHECK(lattice.bottom() == 0);
    CHECK(lattice.top() == lattice.size() - 1);
    CHECK(lattice[lattice.top()].mask == m.ground_mask());
    CHECK(lattice.lattice_rank() == m.rank());
  }
}

TEST_CASE("flat counts per rank") {
  auto counts = [](const char* stem) {
    return FlatsLattice::build(oracle::corpus(stem)).rank_counts();
  };
  CHECK(counts("u24") == std::vector<long long>{1, 4, 1});
  CHECK(counts("k4") == std::vector<long long>{1, 6, 7, 1});
  CHECK(counts("cube6") == std::vector<long long>{1, 6, 15, 11, 1});
  CHECK(counts("cube8") == std::vector<long long>{1, 8, 28, 20, 1});
  CHECK(counts("cube16") == std::vector<long long>{1, 16, 120, 260, 140, 1});
  CHECK(counts("r10") == std::vector<long long>{1, 10, 45, 75, 30, 1});

  std::vector<long long> mk5 = counts("mk5dual");
  CHECK(mk5.size() == 7);
  CHECK(std::accumulate(mk5.begin(), mk5.end(), 0LL) == 314);

  for (const char* stem : kSmall) {
    CAPTURE(stem);
    FlatsLattice lattice = FlatsLattice::build(oracle::corpus(stem));
    std::vector<long long> rc = lattice.rank_counts();
    for (int s = 0; s < static_cast<int>(rc.size()); ++s)
      CHECK(static_cast<long long>(lattice.of_rank(s).size()) == rc[s]);
  }
}

TEST_CASE("meet is intersection, join is closure of the union") {
  for (const char* stem : {"u24", "k4", "k4e", "cube6", "cube8", "r10"}) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    for (int a = 0; a < lattice.size(); ++a) {
      for (int b = a; b < lattice.size(); ++b) {
        int mt = lattice.meet(a, b);
        int jn = lattice.join(a, b);
        REQUIRE(lattice[mt].mask == (lattice[a].mask & lattice[b].mask));
        REQUIRE(lattice[jn].mask == closure(m, lattice[a].mask | lattice[b].mask));
        REQUIRE(lattice.meet(b, a) == mt);
        REQUIRE(lattice.join(b, a) == jn);
        // submodularity of the rank function on flats
        REQUIRE(lattice[mt].rank + lattice[jn].rank <=
                lattice[a].rank + lattice[b].rank);
        REQUIRE(lattice.leq(a, b) == subset_of(lattice[a].mask, lattice[b].mask));
      }
    }
  }
}

TEST_CASE("covers_above lists exactly the covering flats") {
  for (const char* stem : {"u24", "k4e", "cube6", "r10"}) {
    CAPTURE(stem);
    FlatsLattice lattice = FlatsLattice::build(oracle::corpus(stem));
    for (int id = 0; id < lattice.size(); ++id) {
      std::vector<int> expect;
      for (int c = 0; c < lattice.size(); ++c)
        if (c != id && lattice.leq(id, c) && lattice[c].rank == lattice[id].rank + 1)
          expect.push_back(c);
      std::vector<int> got = lattice.covers_above(id);
      std::sort(got.begin(), got.end());
      REQUIRE(got == expect);
    }
    // in a geometric lattice every cover adds one rank, so the relation
    // "covers" is the same as "leq with rank difference one"; spot-check
    // that nothing sits strictly between a flat and one of its covers
    for (int id = 0; id < lattice.size(); ++id)
      for (int c : lattice.covers_above(id))
        for (int mid = 0; mid < lattice.size(); ++mid)
          REQUIRE(!(mid != id && mid != c && lattice.leq(id, mid) && lattice.leq(mid, c)));
  }
}

TEST_CASE("Moebius numbers against two independent oracles") {
  auto expect = [](const char* stem, long long mu) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    CHECK(lattice.mobius() == mu);
    CHECK(oracle::mobius_chain_count(lattice) == mu);
    CHECK(oracle::mobius_nbc(m) == mu);
    std::vector<long long> from_bottom = lattice.mobius_from_bottom();
    CHECK(from_bottom.front() == 1);
    CHECK(from_bottom.back() == mu);
    for (int atom : lattice.of_rank(1)) CHECK(from_bottom[atom] == -1);
    // sum of mu(bottom, x) over any interval [bottom, y] with y > bottom is 0
    for (int y = 1; y < lattice.size(); ++y) {
      long long total = 0;
      for (int x = 0; x < lattice.size(); ++x)
        if (lattice.leq(x, y)) total += from_bottom[x];
      REQUIRE(total == 0);
    }
  };
  expect("u24", 3);
  expect("k4", -6);
  expect("k4e", -4);
  expect("cube6", 7);
  expect("cube8", 23);
  expect("r10", -51);
  expect("mk5dual", 51);
}

TEST_CASE("Moebius number of the large cube") {
  Matroid m = oracle::corpus("cube16");
  FlatsLattice lattice = FlatsLattice::build(m);
  CHECK(lattice.mobius() == -465);
  CHECK(oracle::mobius_chain_count(lattice) == -465);
  CHECK(oracle::mobius_nbc(m) == -465);
}

TEST_CASE("connected flats form the minimal building set") {
  for (const char* stem : kSmall) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    BuildingSet gmin = connected_flats(m, lattice);
    CHECK(gmin.contains_top == is_connected(m));
    CHECK(std::is_sorted(gmin.members.begin(), gmin.members.end()));

    std::vector<int> expect;
    for (int id = 1; id + 1 < lattice.size(); ++id) {
      Minor r = restriction(m, lattice[id].mask);
      if (oracle::components_brute(r.matroid).size() == 1) expect.push_back(id);
    }
    REQUIRE(gmin.members == expect);
  }

  auto gmin_size = [](const char* stem) {
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    return connected_flats(m, lattice).members.size();
  };
  CHECK(gmin_size("u24") == 4);
  CHECK(gmin_size("k4") == 10);
  CHECK(gmin_size("k4e") == 7);
  CHECK(gmin_size("cube6") == 9);
  CHECK(gmin_size("cube8") == 20);
  CHECK(gmin_size("cube16") == 176);
  CHECK(gmin_size("r10") == 40);
  CHECK(gmin_size("mk5dual") == 25);

  // the 40 connected flats of r10: ten singletons, fifteen rank-3
  // four-element flats, fifteen rank-4 six-element flats
  Matroid r10 = oracle::corpus("r10");
  FlatsLattice lattice = FlatsLattice::build(r10);
  BuildingSet gmin = connected_flats(r10, lattice);
  int by_shape[3] = {0, 0, 0};
  for (int id : gmin.members) {
    const Flat& f = lattice[id];
    if (f.rank == 1 && popcount(f.mask) == 1) ++by_shape[0];
    else if (f.rank == 3 && popcount(f.mask) == 4) ++by_shape[1];
    else if (f.rank == 4 && popcount(f.mask) == 6) ++by_shape[2];
  }
  CHECK(by_shape[0] == 10);
  CHECK(by_shape[1] == 15);
  CHECK(by_shape[2] == 15);
}

TEST_CASE("building set recognition") {
  for (const char* stem : {"u24", "k4", "cube6", "r10"}) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    BuildingSet gmin = connected_flats(m, lattice);
    BuildingSet gmax = full_building_set(lattice);

    std::vector<int> gmin_ids = building_ids(gmin, lattice);
    std::vector<int> gmax_ids = building_ids(gmax, lattice);
    CHECK(is_building_set(lattice, gmin_ids).ok);
    CHECK(is_building_set(lattice, gmax_ids).ok);
    CHECK(building_brute_witness(lattice, gmin_ids) == -1);
    CHECK(building_brute_witness(lattice, gmax_ids) == -1);
    CHECK(std::includes(gmax.members.begin(), gmax.members.end(), gmin.members.begin(),
                        gmin.members.end()));
    CHECK(gmin.contains_top);  // the corpus matroids are connected
    CHECK(gmax.contains_top);

    // dropping any connected flat destroys the building property
    for (int drop : gmin_ids) {
      std::vector<int> fewer;
      for (int id : gmin_ids)
        if (id != drop) fewer.push_back(id);
      BuildingCheck check = is_building_set(lattice, fewer);
      REQUIRE(!check.ok);
      REQUIRE(check.witness >= 1);
      REQUIRE(check.witness < lattice.size());
      REQUIRE(!factors_at(lattice, fewer, check.witness));
    }
  }

  // every family between the minimal and maximal building sets, checked
  // against the exhaustive factorization test (K4 is small enough)
  Matroid k4 = oracle::corpus("k4");
  FlatsLattice lattice = FlatsLattice::build(k4);
  BuildingSet gmin = connected_flats(k4, lattice);
  std::vector<int> extra;  // proper flats outside the minimal building set
  for (int id = 1; id + 1 < lattice.size(); ++id)
    if (!std::binary_search(gmin.members.begin(), gmin.members.end(), id))
      extra.push_back(id);
  REQUIRE(extra.size() == 3);  // the three perfect matchings of K4
  for (unsigned pick = 0; pick < (1u << extra.size()); ++pick) {
    std::vector<int> members = building_ids(gmin, lattice);
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (pick >> i & 1) members.push_back(extra[i]);
    std::sort(members.begin(), members.end());
    BuildingCheck check = is_building_set(lattice, members);
    int brute = building_brute_witness(lattice, members);
    CAPTURE(pick);
    REQUIRE(check.ok == (brute == -1));
    if (!check.ok) REQUIRE(!factors_at(lattice, members, check.witness));
  }
}

TEST_CASE("flacets are the flats with connected restriction and contraction") {
  for (const char* stem : kSmall) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    std::vector<int> expect;
    for (int id = 1; id + 1 < lattice.size(); ++id) {
      Minor r = restriction(m, lattice[id].mask);
      Minor c = contraction(m, lattice[id].mask);
      if (oracle::components_brute(r.matroid).size() == 1 &&
          oracle::components_brute(c.matroid).size() == 1)
        expect.push_back(id);
    }
    REQUIRE(flacets(m, lattice) == expect);
  }

  auto flacet_masks = [](const char* stem) {
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    std::vector<Mask> out;
    for (int id : flacets(m, lattice)) out.push_back(lattice[id].mask);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(flacet_masks("u24") == std::vector<Mask>{0b0001, 0b0010, 0b0100, 0b1000});
  auto sorted_masks = [](std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    return masks;
  };
  CHECK(flacet_masks("k4e") ==
        sorted_masks({mask_from_labels({2}), mask_from_labels({3}),
                      mask_from_labels({4}), mask_from_labels({5}),
                      mask_from_labels({1, 2, 4}), mask_from_labels({1, 3, 5})}));
  CHECK(flacet_masks("cube6") ==
        sorted_masks({mask_from_labels({1}), mask_from_labels({2}),
                      mask_from_labels({3}), mask_from_labels({4}),
                      mask_from_labels({5}), mask_from_labels({6}),
                      mask_from_labels({1, 2, 3, 4}), mask_from_labels({1, 3, 5, 6}),
                      mask_from_labels({2, 4, 5, 6})}));
  CHECK(flacet_masks("k4").size() == 10);
}

TEST_CASE("polytope facet descriptions are valid, tight and irredundant") {
  for (const char* stem : kSmall) {
    CAPTURE(stem);
    Matroid m = oracle::corpus(stem);
    FlatsLattice lattice = FlatsLattice::build(m);
    PolytopeFacets pf = polytope_facets(m, lattice);

    CHECK(pf.dimension == polytope_dimension(m));
    CHECK(pf.dimension == m.ground_size() - 1);  // corpus matroids are connected

    std::vector<int> fl = flacets(m, lattice);
    std::vector<int> listed;
    for (auto [id, rhs] : pf.flacet_rhs) {
      listed.push_back(id);
      CHECK(rhs == lattice[id].rank);
    }
    std::sort(listed.begin(), listed.end());
    CHECK(listed == fl);

    for (auto [id, rhs] : pf.flacet_rhs) {
      Mask f = lattice[id].mask;
      bool tight = false;
      for (Mask b : m.bases()) {
        REQUIRE(popcount(b & f) <= rhs);
        if (popcount(b & f) == rhs) tight = true;
      }
      CHECK(tight);
    }

    // x_e >= 0 cuts a facet exactly when deleting e keeps the matroid
    // connected without dropping the rank
    std::vector<int> expect_nonneg;
    for (int e = 0; e < m.ground_size(); ++e) {
      Minor d = deletion(m, e);
      if (d.matroid.rank() == m.rank() &&
          oracle::components_brute(d.matroid).size() == 1)
        expect_nonneg.push_back(e);
    }
    REQUIRE(pf.nonnegative == expect_nonneg);
  }

  Matroid u = Matroid::uniform(2, 4);
  PolytopeFacets pf = polytope_facets(u, FlatsLattice::build(u));
  CHECK(pf.dimension == 3);
  CHECK(pf.flacet_rhs.size() == 4);
  CHECK(pf.nonnegative == std::vector<int>{0, 1, 2, 3});
}
