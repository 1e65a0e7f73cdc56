#include <brickbasis/geometry.hpp>

#include <brickbasis/errors.hpp>

namespace brickbasis {

rational box_volume(const box &b) {
  rational v(1);
  for (const rational &e : b.extent)
    v *= e;
  return v;
}

bool boxes_interior_disjoint(const box &a, const box &b) {
  if (a.dim() != b.dim())
    throw invalid_input("boxes_interior_disjoint: dimension mismatch");
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a.hi(k) <= b.origin[k] || b.hi(k) <= a.origin[k])
      return true;
  }
  return false;
}

bool box_contains(const box &outer, const box &inner) {
  if (outer.dim() != inner.dim())
    throw invalid_input("box_contains: dimension mismatch");
  for (std::size_t k = 0; k < outer.dim(); ++k) {
    if (inner.origin[k] < outer.origin[k] || inner.hi(k) > outer.hi(k))
      return false;
  }
  return true;
}

} // namespace brickbasis
