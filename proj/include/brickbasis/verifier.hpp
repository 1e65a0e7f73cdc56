#ifndef BRICKBASIS_VERIFIER_HPP
#define BRICKBASIS_VERIFIER_HPP

#include <brickbasis/builder.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace brickbasis {

struct tiling_violation {
  std::string kind; // "not_contained", "overlap", "volume_mismatch"
  std::vector<std::size_t> bricks; // 0-based emission indices
};

// Certificate for an exact tiling of axis-aligned boxes: containment,
// pairwise interior disjointness and volume accounting together imply
// full coverage.
struct tiling_report {
  bool contained = false;
  bool disjoint = false;
  bool volume_ok = false;
  rational brick_volume_sum;
  rational target_volume;
  std::vector<tiling_violation> violations;

  bool exact_tiling() const { return contained && disjoint && volume_ok; }
};

tiling_report verify_tiling(const scene &scn);

// Brute-force second oracle: scales the scene onto an integer lattice
// with the given resolution (every boundary coordinate must be a
// multiple of 1/resolution) and checks that each target cell is covered
// by exactly one brick.
bool lattice_cover_check(const scene &scn, unsigned long long resolution);

// Least common multiple of all boundary-coordinate denominators; the
// smallest usable lattice resolution.
unsigned long long natural_lattice_resolution(const scene &scn);

} // namespace brickbasis

#endif // BRICKBASIS_VERIFIER_HPP
