#ifndef BRICKBASIS_GEOMETRY_HPP
#define BRICKBASIS_GEOMETRY_HPP

#include <brickbasis/rational.hpp>

#include <cstddef>
#include <vector>

namespace brickbasis {

// An m-dimensional axis-aligned brick: half-open product of intervals
// [origin[k], origin[k] + extent[k]). leaf_index and repetition record
// which tree leaf emitted it and on which of its repetitions.
struct box {
  std::vector<rational> origin;
  std::vector<rational> extent;
  std::size_t leaf_index = 0;
  std::size_t repetition = 0;

  std::size_t dim() const { return origin.size(); }

  rational hi(std::size_t axis) const { return origin[axis] + extent[axis]; }

  friend bool operator==(const box &a, const box &b) {
    return a.origin == b.origin && a.extent == b.extent;
  }
};

rational box_volume(const box &b);

// Open-interior overlap test with exact comparisons: touching faces count
// as disjoint.
bool boxes_interior_disjoint(const box &a, const box &b);

// True when `inner` lies within `outer` bounds (closed containment).
bool box_contains(const box &outer, const box &inner);

} // namespace brickbasis

#endif // BRICKBASIS_GEOMETRY_HPP
