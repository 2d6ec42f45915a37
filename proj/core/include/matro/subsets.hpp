#pragma once

// Subsets of a ground set {1,...,n} are stored as bitmasks: bit i-1 set
// means element i is present.  The word size caps the ground set at 64
// elements, which is far beyond the size this library is meant for.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matro {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

inline int popcount(Mask m) { return std::popcount(m); }

// Mask of the full ground set {1,...,n}.
inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline bool proper_subset_of(Mask a, Mask b) { return a != b && subset_of(a, b); }

// Index of the lowest set bit; undefined for m == 0.
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// 0-based bit indices of m, ascending.
inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(lowest_bit(m));
    m &= m - 1;
  }
  return out;
}

// 1-based element labels of m, ascending.
inline std::vector<int> mask_labels(Mask m) {
  std::vector<int> out = mask_elements(m);
  for (int& e : out) ++e;
  return out;
}

// Mask from 0-based bit indices.
inline Mask mask_from_elements(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask{1} << e;
  return m;
}

// Mask from 1-based labels.
inline Mask mask_from_labels(const std::vector<int>& labels) {
  Mask m = 0;
  for (int e : labels) m |= Mask{1} << (e - 1);
  return m;
}

// Render as "{1,3,4}" with 1-based labels ("{}" when empty).
inline std::string format_set(Mask m) {
  std::string out = "{";
  bool first = true;
  while (m) {
    if (!first) out += ",";
    out += std::to_string(lowest_bit(m) + 1);
    first = false;
    m &= m - 1;
  }
  out += "}";
  return out;
}

// Smallest mask with k bits set: {0,...,k-1}.
inline Mask first_combination(int k) { return full_mask(k); }

// Advance m to the next k-subset of an n-set in numeric order (Gosper's
// hack).  Returns false once m was the last combination.
inline bool next_combination(Mask& m, int n) {
  if (m == 0) return false;  // the empty set is its own orbit
  Mask c = m & -m;
  Mask r = m + c;
  m = (((r ^ m) >> 2) / c) | r;
  return m <= full_mask(n);
}

}  // namespace matro
