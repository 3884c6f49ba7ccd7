#pragma once

#include <compare>
#include <cstdint>
#include <optional>

namespace kvdp {

// Edge cost with a deterministic tie-breaking component. Ordering is
// lexicographic: the true length decides first, the perturbation tag only
// breaks exact ties. Keeping the two parts separate (instead of packing
// base*2^b + tag into one integer) makes overflow impossible for any input
// we accept: tag sums stay below 2^48 * m and bases below 2^62.
struct Weight {
  std::int64_t base = 0;
  std::int64_t tag = 0;

  friend Weight operator+(Weight a, Weight b) { return {a.base + b.base, a.tag + b.tag}; }
  friend Weight operator-(Weight a, Weight b) { return {a.base - b.base, a.tag - b.tag}; }
  Weight& operator+=(Weight o) {
    base += o.base;
    tag += o.tag;
    return *this;
  }
  auto operator<=>(const Weight&) const = default;
};

// Absent value means unreachable / infeasible; it compares as +infinity.
using Cost = std::optional<Weight>;

inline Cost add(Cost a, Cost b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

inline bool cost_less(const Cost& a, const Cost& b) {
  if (!b) return a.has_value();
  if (!a) return false;
  return *a < *b;
}

// Keeps the smaller of the two; returns true if `best` changed.
inline bool improve(Cost& best, const Cost& cand) {
  if (cost_less(cand, best)) {
    best = cand;
    return true;
  }
  return false;
}

}  // namespace kvdp
