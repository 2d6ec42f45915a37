#include "matro/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace matro {

namespace {

void check_ground_size(int n) {
  if (n < 0) fail(Errc::BadParameters, "ground set size must be nonnegative");
  if (n > kMaxGroundSize) {
    fail(Errc::GroundSetTooLarge,
         "ground set has " + std::to_string(n) + " elements; at most " +
             std::to_string(kMaxGroundSize) + " are supported");
  }
}

// Convert one 1-based input set, validating labels against [1..n].
Mask mask_from_input(const std::vector<int>& set, int n, Errc code,
                     const char* what) {
  Mask m = 0;
  for (int label : set) {
    if (label < 1 || label > n) {
      fail(code, std::string(what) + " contains element " +
                     std::to_string(label) + " outside 1.." + std::to_string(n));
    }
    Mask bit = Mask{1} << (label - 1);
    if (m & bit) {
      fail(code, std::string(what) + " lists element " + std::to_string(label) +
                     " twice");
    }
    m |= bit;
  }
  return m;
}

std::vector<Mask> canonicalize(std::vector<Mask> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

void check_uniform_cardinality(const std::vector<Mask>& bases, int r) {
  for (Mask b : bases) {
    if (popcount(b) != r) {
      fail(Errc::WrongCardinality, "basis " + format_set(b) + " has " +
                                       std::to_string(popcount(b)) +
                                       " elements, expected " + std::to_string(r));
    }
  }
}

void validate_exchange(const std::vector<Mask>& bases) {
  if (auto witness = exchange_violation(bases)) {
    fail(Errc::ExchangeAxiomViolated,
         "basis exchange fails for sigma=" + format_set(witness->sigma) +
             ", tau=" + format_set(witness->tau) + ", i=" +
             std::to_string(witness->element + 1) +
             ": no j in tau\\sigma with sigma-i+j a basis");
  }
}

// Union-find over ground set elements / graph vertices.
struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

// Exact rank of a rational matrix, by Gaussian elimination on a copy.
int matrix_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      Rat factor = m[row][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[row][c] -= factor * m[rank][c];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

std::optional<ExchangeWitness> exchange_violation(const std::vector<Mask>& bases) {
  auto is_basis = [&](Mask m) {
    return std::binary_search(bases.begin(), bases.end(), m);
  };
  for (Mask sigma : bases) {
    for (Mask tau : bases) {
      Mask leave = sigma & ~tau;
      for (Mask li = leave; li; li &= li - 1) {
        Mask ibit = li & -li;
        bool found = false;
        for (Mask en = tau & ~sigma; en; en &= en - 1) {
          Mask jbit = en & -en;
          if (is_basis((sigma ^ ibit) | jbit)) {
            found = true;
            break;
          }
        }
        if (!found) {
          return ExchangeWitness{sigma, tau, lowest_bit(ibit)};
        }
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::trusted(int n, std::vector<Mask> bases) {
  check_ground_size(n);
  bases = canonicalize(std::move(bases));
  if (bases.empty()) fail(Errc::EmptyBases, "matroid must have at least one basis");
  int r = popcount(bases.front());
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_bases(int n, int r,
                            const std::vector<std::vector<int>>& bases) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    fail(Errc::BadParameters,
         "rank " + std::to_string(r) + " out of range for n=" + std::to_string(n));
  }
  if (bases.empty()) fail(Errc::EmptyBases, "matroid must have at least one basis");
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    masks.push_back(mask_from_input(b, n, Errc::WrongCardinality, "basis"));
  }
  check_uniform_cardinality(masks, r);
  masks = canonicalize(std::move(masks));
  validate_exchange(masks);
  return Matroid(n, r, std::move(masks));
}

Matroid Matroid::from_nonbases(int n, int r,
                               const std::vector<std::vector<int>>& nonbases) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    fail(Errc::BadParameters,
         "rank " + std::to_string(r) + " out of range for n=" + std::to_string(n));
  }
  std::unordered_set<Mask> excluded;
  for (const auto& b : nonbases) {
    Mask m = mask_from_input(b, n, Errc::WrongCardinality, "nonbasis");
    if (popcount(m) != r) {
      fail(Errc::WrongCardinality, "nonbasis " + format_set(m) + " has " +
                                       std::to_string(popcount(m)) +
                                       " elements, expected " + std::to_string(r));
    }
    excluded.insert(m);
  }
  std::vector<Mask> masks;
  if (r == 0) {
    if (!excluded.count(0)) masks.push_back(0);
  } else {
    for (Mask m = first_combination(r); ; ) {
      if (!excluded.count(m)) masks.push_back(m);
      if (!next_combination(m, n)) break;
    }
  }
  if (masks.empty()) {
    fail(Errc::EmptyBases, "every r-subset is excluded; no bases remain");
  }
  validate_exchange(masks);
  return Matroid(n, r, std::move(masks));
}

Matroid Matroid::from_circuits(int n, const std::vector<std::vector<int>>& circuits) {
  check_ground_size(n);
  if (n > 26) {
    fail(Errc::BadParameters,
         "circuit construction enumerates all subsets and is limited to n <= 26");
  }
  std::vector<Mask> cs;
  cs.reserve(circuits.size());
  for (const auto& c : circuits) {
    Mask m = mask_from_input(c, n, Errc::ValidationError, "circuit");
    if (m == 0) fail(Errc::NotAnAntichain, "circuits must be nonempty sets");
    cs.push_back(m);
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i != j && subset_of(cs[i], cs[j])) {
        fail(Errc::NotAnAntichain, "circuit " + format_set(cs[i]) +
                                       " is contained in circuit " + format_set(cs[j]));
      }
    }
  }
  // dependent[m] = m contains some circuit; any proper superset of a circuit
  // has a dependent one-element-smaller subset, so a subset scan suffices.
  const Mask full = full_mask(n);
  std::unordered_set<Mask> circuit_set(cs.begin(), cs.end());
  std::vector<char> dependent(std::size_t{1} << n, 0);
  int r = 0;
  for (Mask m = 1; m <= full; ++m) {
    bool dep = circuit_set.count(m) > 0;
    for (Mask t = m; !dep && t; t &= t - 1) {
      dep = dependent[m & ~(t & -t)];
    }
    dependent[m] = dep;
    if (!dep) r = std::max(r, popcount(m));
  }
  std::vector<Mask> masks;
  if (r == 0) {
    masks.push_back(0);
  } else {
    for (Mask m = first_combination(r); ; ) {
      if (!dependent[m]) masks.push_back(m);
      if (!next_combination(m, n)) break;
    }
  }
  validate_exchange(masks);
  return Matroid(n, r, std::move(masks));
}

Matroid Matroid::from_graph(int vertices,
                            const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 1) fail(Errc::BadParameters, "graph needs at least one vertex");
  check_ground_size(static_cast<int>(edges.size()));
  const int n = static_cast<int>(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > vertices || b < 1 || b > vertices) {
      fail(Errc::ValidationError, "edge (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") leaves 1.." +
                                      std::to_string(vertices));
    }
    if (a == b) {
      fail(Errc::GraphLoopEdge,
           "loop edge at vertex " + std::to_string(a) + " is not allowed");
    }
  }
  {
    UnionFind uf(vertices);
    int parts = vertices;
    for (const auto& [a, b] : edges) {
      if (uf.unite(a - 1, b - 1)) --parts;
    }
    if (parts != 1) {
      fail(Errc::DisconnectedGraph, "graph is disconnected (" +
                                        std::to_string(parts) + " components)");
    }
  }
  const int r = vertices - 1;
  std::vector<Mask> masks;
  if (r == 0) {
    masks.push_back(0);
  } else {
    for (Mask m = first_combination(r); ; ) {
      UnionFind uf(vertices);
      bool forest = true;
      for (Mask t = m; t; t &= t - 1) {
        const auto& [a, b] = edges[lowest_bit(t)];
        if (!uf.unite(a - 1, b - 1)) {
          forest = false;
          break;
        }
      }
      if (forest) masks.push_back(m);
      if (!next_combination(m, n)) break;
    }
  }
  // Spanning trees of a connected graph always satisfy basis exchange.
  return trusted(n, std::move(masks));
}

Matroid Matroid::from_vectors(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty() || rows[0].empty()) {
    fail(Errc::BadParameters, "matrix must have at least one row and column");
  }
  const std::size_t cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != cols) {
      fail(Errc::ValidationError, "matrix rows have unequal lengths");
    }
  }
  check_ground_size(static_cast<int>(cols));
  const int n = static_cast<int>(cols);
  const int r = matrix_rank(rows);
  if (r == 0) fail(Errc::ZeroMatrix, "matrix is zero; column matroid is undefined here");
  std::vector<Mask> masks;
  std::vector<std::vector<Rat>> sub(rows.size(), std::vector<Rat>(r));
  for (Mask m = first_combination(r); ; ) {
    std::vector<int> cols_of = mask_elements(m);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      for (int c = 0; c < r; ++c) sub[row][c] = rows[row][cols_of[c]];
    }
    if (matrix_rank(sub) == r) masks.push_back(m);
    if (!next_combination(m, n)) break;
  }
  // Column matroids of exact matrices satisfy basis exchange.
  return trusted(n, std::move(masks));
}

Matroid Matroid::uniform(int r, int n) {
  check_ground_size(n);
  if (r < 1 || r > n) {
    fail(Errc::BadParameters, "uniform matroid needs 0 < r <= n, got r=" +
                                  std::to_string(r) + ", n=" + std::to_string(n));
  }
  std::vector<Mask> masks;
  for (Mask m = first_combination(r); ; ) {
    masks.push_back(m);
    if (!next_combination(m, n)) break;
  }
  return trusted(n, std::move(masks));
}

bool Matroid::is_basis(Mask candidate) const {
  return std::binary_search(bases_.begin(), bases_.end(), candidate);
}

// ---- rank, closure, independence -------------------------------------------

int rank_of(const Matroid& m, Mask subset) {
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, popcount(b & subset));
  return best;
}

bool is_independent(const Matroid& m, Mask subset) {
  return rank_of(m, subset) == popcount(subset);
}

Mask closure(const Matroid& m, Mask subset) {
  // One pass: rank(S+e) > rank(S) iff some basis meeting S in rank(S)
  // elements contains e, so the union U of all such bases is exactly the
  // set of elements outside the closure.
  int best = -1;
  Mask argmax_union = 0;
  for (Mask b : m.bases()) {
    int t = popcount(b & subset);
    if (t > best) {
      best = t;
      argmax_union = b;
    } else if (t == best) {
      argmax_union |= b;
    }
  }
  return subset | (m.ground_mask() & ~argmax_union);
}

Mask loops(const Matroid& m) {
  Mask in_some_basis = 0;
  for (Mask b : m.bases()) in_some_basis |= b;
  return m.ground_mask() & ~in_some_basis;
}

bool has_loops(const Matroid& m) { return loops(m) != 0; }

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  const int n = m.ground_size();
  const int limit = std::min(m.rank() + 1, n);
  for (int k = 1; k <= limit; ++k) {
    for (Mask cand = first_combination(k); ; ) {
      if (rank_of(m, cand) < k) {
        bool minimal = true;
        for (Mask t = cand; minimal && t; t &= t - 1) {
          minimal = is_independent(m, cand & ~(t & -t));
        }
        if (minimal) out.push_back(cand);
      }
      if (!next_combination(cand, n)) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- connectivity -----------------------------------------------------------

ComponentPartition connected_components(const Matroid& m) {
  // Two elements lie in the same block iff they are linked by a chain of
  // single basis exchanges; this generates the same partition as the
  // common-circuit relation.  Loops and coloops never take part in an
  // exchange and stay singletons.
  const int n = m.ground_size();
  ComponentPartition out;
  if (n == 0) return out;
  UnionFind uf(n);
  for (Mask sigma : m.bases()) {
    for (Mask si = sigma; si; si &= si - 1) {
      Mask ibit = si & -si;
      int i = lowest_bit(ibit);
      for (Mask sj = m.ground_mask() & ~sigma; sj; sj &= sj - 1) {
        Mask jbit = sj & -sj;
        int j = lowest_bit(jbit);
        if (uf.find(i) == uf.find(j)) continue;
        if (m.is_basis((sigma ^ ibit) | jbit)) uf.unite(i, j);
      }
    }
  }
  std::vector<Mask> block_of(n, 0);
  for (int e = 0; e < n; ++e) block_of[uf.find(e)] |= Mask{1} << e;
  for (int e = 0; e < n; ++e) {
    if (block_of[e]) out.blocks.push_back(block_of[e]);
  }
  // roots appear in ascending order, which sorts blocks by smallest element
  return out;
}

int count_components(const Matroid& m) {
  return connected_components(m).count();
}

bool is_connected(const Matroid& m) { return count_components(m) == 1; }

// ---- duality, minors, sums --------------------------------------------------

Matroid dual(const Matroid& m) {
  std::vector<Mask> masks;
  masks.reserve(m.bases().size());
  for (Mask b : m.bases()) masks.push_back(m.ground_mask() & ~b);
  return Matroid::trusted(m.ground_size(), std::move(masks));
}

Mask Minor::lift(Mask sub) const {
  Mask out = 0;
  for (Mask t = sub; t; t &= t - 1) {
    out |= Mask{1} << labels[lowest_bit(t)];
  }
  return out;
}

namespace {

// Compress a parent-ground mask onto the 0..k-1 positions of `kept`.
Mask compress(Mask m, const std::vector<int>& kept) {
  Mask out = 0;
  for (std::size_t pos = 0; pos < kept.size(); ++pos) {
    if (m & (Mask{1} << kept[pos])) out |= Mask{1} << pos;
  }
  return out;
}

void require_flat(const Matroid& m, Mask f, const char* what) {
  if ((f & ~m.ground_mask()) != 0 || closure(m, f) != f) {
    fail(Errc::NotAFlat, std::string(what) + " " + format_set(f) +
                             " is not a flat of the matroid");
  }
}

Minor make_minor(const Matroid& m, Mask kept_mask, Mask must_meet, int meet_rank,
                 bool take_inside) {
  // Shared core of restriction/contraction/interval: keep bases sigma with
  // |sigma & must_meet| = meet_rank, project them to kept_mask.
  std::vector<int> kept = mask_elements(kept_mask);
  std::vector<Mask> masks;
  for (Mask sigma : m.bases()) {
    if (popcount(sigma & must_meet) != meet_rank) continue;
    Mask part = take_inside ? (sigma & kept_mask) : (sigma & ~must_meet);
    masks.push_back(compress(part & kept_mask, kept));
  }
  return Minor{Matroid::trusted(static_cast<int>(kept.size()), std::move(masks)),
               std::move(kept)};
}

}  // namespace

Minor restriction(const Matroid& m, Mask flat) {
  require_flat(m, flat, "restriction set");
  return make_minor(m, flat, flat, rank_of(m, flat), true);
}

Minor contraction(const Matroid& m, Mask flat) {
  require_flat(m, flat, "contraction set");
  return make_minor(m, m.ground_mask() & ~flat, flat, rank_of(m, flat), false);
}

Minor interval_minor(const Matroid& m, Mask flat_low, Mask flat_high) {
  require_flat(m, flat_low, "interval lower flat");
  require_flat(m, flat_high, "interval upper flat");
  if (!subset_of(flat_low, flat_high)) {
    fail(Errc::NotNested, "interval flats must be nested: " + format_set(flat_low) +
                              " is not contained in " + format_set(flat_high));
  }
  const int rank_high = rank_of(m, flat_high);
  const int rank_low = rank_of(m, flat_low);
  std::vector<int> kept = mask_elements(flat_high & ~flat_low);
  std::vector<Mask> masks;
  for (Mask sigma : m.bases()) {
    if (popcount(sigma & flat_high) != rank_high) continue;
    if (popcount(sigma & flat_low) != rank_low) continue;
    masks.push_back(compress(sigma & flat_high & ~flat_low, kept));
  }
  return Minor{Matroid::trusted(static_cast<int>(kept.size()), std::move(masks)),
               std::move(kept)};
}

Minor deletion(const Matroid& m, int element) {
  const Mask bit = Mask{1} << element;
  std::vector<int> kept = mask_elements(m.ground_mask() & ~bit);
  std::vector<Mask> masks;
  for (Mask sigma : m.bases()) {
    if (!(sigma & bit)) masks.push_back(compress(sigma, kept));
  }
  if (masks.empty()) {
    // element is a coloop; rank drops by one
    for (Mask sigma : m.bases()) masks.push_back(compress(sigma & ~bit, kept));
  }
  return Minor{Matroid::trusted(static_cast<int>(kept.size()), std::move(masks)),
               std::move(kept)};
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.ground_size() + b.ground_size();
  check_ground_size(n);
  std::vector<Mask> masks;
  masks.reserve(a.bases().size() * b.bases().size());
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) {
      masks.push_back(x | (y << a.ground_size()));
    }
  }
  return Matroid::trusted(n, std::move(masks));
}

// ---- weight maximization ----------------------------------------------------

Matroid max_weight_matroid_int(const Matroid& m, const std::vector<long long>& w) {
  if (static_cast<int>(w.size()) != m.ground_size()) {
    fail(Errc::LengthMismatch, "weight vector has " + std::to_string(w.size()) +
                                   " entries for a ground set of size " +
                                   std::to_string(m.ground_size()));
  }
  long long best = 0;
  bool first = true;
  std::vector<Mask> argmax;
  for (Mask sigma : m.bases()) {
    long long cost = 0;
    for (Mask t = sigma; t; t &= t - 1) cost += w[lowest_bit(t)];
    if (first || cost > best) {
      best = cost;
      argmax.clear();
      first = false;
    }
    if (cost == best) argmax.push_back(sigma);
  }
  return Matroid::trusted(m.ground_size(), std::move(argmax));
}

Matroid max_weight_matroid(const Matroid& m, const WeightVector& w) {
  if (static_cast<int>(w.size()) != m.ground_size()) {
    fail(Errc::LengthMismatch, "weight vector has " + std::to_string(w.size()) +
                                   " entries for a ground set of size " +
                                   std::to_string(m.ground_size()));
  }
  // Try to scale to small integers; fall back to full rational sums.
  BigInt common = 1;
  for (const Rat& x : w) common = lcm(common, denominator(x));
  std::vector<long long> scaled(w.size());
  bool fits = true;
  const BigInt limit = BigInt{1} << 40;
  for (std::size_t i = 0; i < w.size() && fits; ++i) {
    BigInt v = numerator(w[i]) * (common / denominator(w[i]));
    if (abs(v) > limit) {
      fits = false;
    } else {
      scaled[i] = static_cast<long long>(v);
    }
  }
  if (fits) return max_weight_matroid_int(m, scaled);

  Rat best = 0;
  bool first = true;
  std::vector<Mask> argmax;
  for (Mask sigma : m.bases()) {
    Rat cost = 0;
    for (Mask t = sigma; t; t &= t - 1) cost += w[lowest_bit(t)];
    if (first || cost > best) {
      best = cost;
      argmax.clear();
      first = false;
    }
    if (cost == best) argmax.push_back(sigma);
  }
  return Matroid::trusted(m.ground_size(), std::move(argmax));
}

int polytope_dimension(const Matroid& m) {
  return m.ground_size() - count_components(m);
}

}  // namespace matro
