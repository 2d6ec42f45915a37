#pragma once

// Matroids on ground sets of at most 64 elements, represented by their
// sorted list of bases.  Values are immutable after construction and safe
// to share across threads; every operation is a pure function of its
// arguments.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matro/errors.hpp"
#include "matro/rational.hpp"
#include "matro/subsets.hpp"

namespace matro {

// A failed basis-exchange instance: for bases sigma, tau and element
// `element` of sigma \ tau there is no j in tau \ sigma with
// sigma - element + j again a basis.
struct ExchangeWitness {
  Mask sigma = 0;
  Mask tau = 0;
  int element = 0;  // 0-based
};

// Returns a witness if the (sorted, deduplicated) base list violates the
// basis exchange axiom, std::nullopt if the list is a valid matroid.
std::optional<ExchangeWitness> exchange_violation(const std::vector<Mask>& bases);

class Matroid {
 public:
  // Named constructors; all take 1-based element labels.
  static Matroid from_bases(int n, int r, const std::vector<std::vector<int>>& bases);
  static Matroid from_nonbases(int n, int r, const std::vector<std::vector<int>>& nonbases);
  static Matroid from_circuits(int n, const std::vector<std::vector<int>>& circuits);
  // Graphic matroid of a connected loopless multigraph on vertices 1..v;
  // ground set element i is edges[i-1].
  static Matroid from_graph(int vertices, const std::vector<std::pair<int, int>>& edges);
  // Column matroid of an exact rational matrix (rows x columns).
  static Matroid from_vectors(const std::vector<std::vector<Rat>>& rows);
  static Matroid uniform(int r, int n);

  // Internal constructor for callers that can guarantee basis exchange
  // holds (duals, minors, direct sums, weight maximizers, ...).  The list
  // is canonicalized but not validated.
  static Matroid trusted(int n, std::vector<Mask> bases);

  int ground_size() const { return n_; }
  int rank() const { return r_; }
  Mask ground_mask() const { return full_mask(n_); }
  const std::vector<Mask>& bases() const { return bases_; }
  bool is_basis(Mask candidate) const;

  // Two matroids are equal iff ground size and base lists coincide.
  bool operator==(const Matroid& other) const = default;

 private:
  Matroid(int n, int r, std::vector<Mask> bases)
      : n_(n), r_(r), bases_(std::move(bases)) {}

  int n_ = 0;
  int r_ = 0;
  std::vector<Mask> bases_;  // sorted ascending as integers, no duplicates
};

// ---- rank, closure, independence -------------------------------------------

int rank_of(const Matroid& m, Mask subset);
bool is_independent(const Matroid& m, Mask subset);
Mask closure(const Matroid& m, Mask subset);
Mask loops(const Matroid& m);
bool has_loops(const Matroid& m);

// All inclusion-minimal dependent sets, sorted ascending as masks.
std::vector<Mask> circuits(const Matroid& m);

// ---- connectivity -----------------------------------------------------------

// Blocks of the finest partition of the ground set such that every circuit
// stays inside one block; loops and coloops are singleton blocks.  Blocks
// are sorted by their smallest element.
struct ComponentPartition {
  std::vector<Mask> blocks;
  int count() const { return static_cast<int>(blocks.size()); }
};

ComponentPartition connected_components(const Matroid& m);
int count_components(const Matroid& m);
bool is_connected(const Matroid& m);

// ---- duality, minors, sums --------------------------------------------------

Matroid dual(const Matroid& m);

// A minor together with its relabeling: element i of the minor (0-based)
// is ground set element labels[i] (0-based) of the parent.
struct Minor {
  Matroid matroid;
  std::vector<int> labels;

  // Map a mask of the minor back to a mask of the parent ground set.
  Mask lift(Mask sub) const;
};

// Restriction M|F to a flat F of rank s: bases are the s-subsets of F
// that extend to a basis of M.
Minor restriction(const Matroid& m, Mask flat);
// Contraction M/F: bases are basis complements sigma \ F over bases with
// |sigma & F| = rank(F).
Minor contraction(const Matroid& m, Mask flat);
// Interval minor M[F,G] = (M|G)/F for nested flats F <= G.
Minor interval_minor(const Matroid& m, Mask flat_low, Mask flat_high);
// Deletion M \ {e}; e given 0-based.  (Unlike restriction this does not
// require the kept set to be a flat.)
Minor deletion(const Matroid& m, int element);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// ---- weight maximization ----------------------------------------------------

// The matroid M_w whose bases are the w-maximal bases of M.  Its polytope
// is the face of the polytope of M selected by w.
Matroid max_weight_matroid(const Matroid& m, const WeightVector& w);

// Fast path used internally and by the complex machinery: small integer
// weights, same definition.
Matroid max_weight_matroid_int(const Matroid& m, const std::vector<long long>& w);

// ---- polytope ---------------------------------------------------------------

// dim P_M = n - c(M).
int polytope_dimension(const Matroid& m);

}  // namespace matro
