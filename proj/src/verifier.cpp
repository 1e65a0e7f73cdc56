#include <brickbasis/verifier.hpp>

#include <brickbasis/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>

namespace brickbasis {

namespace {

void check_dimensions(const scene &scn) {
  const std::size_t m = scn.target.dim();
  if (m < 1 || m != scn.target.extent.size())
    throw invalid_input("verify: malformed target box");
  for (const box &brick : scn.bricks)
    if (brick.dim() != m || brick.extent.size() != m)
      throw invalid_input("verify: mixed brick dimensions");
}

} // namespace

tiling_report verify_tiling(const scene &scn) {
  check_dimensions(scn);
  tiling_report report;
  report.contained = true;
  report.disjoint = true;

  for (std::size_t i = 0; i < scn.bricks.size(); ++i) {
    if (!box_contains(scn.target, scn.bricks[i])) {
      report.contained = false;
      report.violations.push_back({"not_contained", {i}});
    }
  }
  for (std::size_t i = 0; i < scn.bricks.size(); ++i) {
    for (std::size_t j = i + 1; j < scn.bricks.size(); ++j) {
      if (!boxes_interior_disjoint(scn.bricks[i], scn.bricks[j])) {
        report.disjoint = false;
        report.violations.push_back({"overlap", {i, j}});
      }
    }
  }

  report.brick_volume_sum = rational(0);
  for (const box &brick : scn.bricks)
    report.brick_volume_sum += box_volume(brick);
  report.target_volume = box_volume(scn.target);
  report.volume_ok = report.brick_volume_sum == report.target_volume;
  if (!report.volume_ok)
    report.violations.push_back({"volume_mismatch", {}});

  return report;
}

namespace {

// coordinate * resolution, required to be an integer.
long long lattice_coord(const rational &coord, unsigned long long resolution) {
  const bigint scaled_num = coord.num() * resolution;
  if (scaled_num % coord.den() != 0)
    throw invalid_input("lattice check: resolution " +
                        std::to_string(resolution) +
                        " is not a common denominator of coordinate " +
                        coord.str());
  const bigint cell = scaled_num / coord.den();
  if (cell < std::numeric_limits<long long>::min() ||
      cell > std::numeric_limits<long long>::max())
    throw invalid_input("lattice check: scaled coordinate out of range");
  return static_cast<long long>(cell);
}

} // namespace

bool lattice_cover_check(const scene &scn, unsigned long long resolution) {
  check_dimensions(scn);
  if (resolution < 1)
    throw invalid_input("lattice check: resolution must be positive");
  const std::size_t m = scn.target.dim();

  std::vector<long long> lo(m), hi(m);
  std::size_t total_cells = 1;
  for (std::size_t k = 0; k < m; ++k) {
    lo[k] = lattice_coord(scn.target.origin[k], resolution);
    hi[k] = lattice_coord(scn.target.hi(k), resolution);
    if (hi[k] <= lo[k])
      throw invalid_input("lattice check: empty target");
    const unsigned long long cells = static_cast<unsigned long long>(hi[k] - lo[k]);
    if (cells > (std::size_t(1) << 28) / total_cells)
      throw invalid_input("lattice check: too many cells at this resolution");
    total_cells *= cells;
  }

  std::vector<std::uint32_t> cover(total_cells, 0);
  for (const box &brick : scn.bricks) {
    std::vector<long long> blo(m), bhi(m);
    bool empty = false;
    for (std::size_t k = 0; k < m; ++k) {
      blo[k] = std::max(lattice_coord(brick.origin[k], resolution), lo[k]);
      bhi[k] = std::min(lattice_coord(brick.hi(k), resolution), hi[k]);
      if (bhi[k] <= blo[k])
        empty = true;
    }
    if (empty)
      continue;
    // Odometer over the brick's clamped cell range, last axis fastest.
    std::vector<long long> cell(blo);
    bool done = false;
    while (!done) {
      std::size_t linear = 0;
      for (std::size_t k = 0; k < m; ++k)
        linear = linear * static_cast<std::size_t>(hi[k] - lo[k]) +
                 static_cast<std::size_t>(cell[k] - lo[k]);
      ++cover[linear];
      done = true;
      for (std::size_t k = m; k-- > 0;) {
        if (++cell[k] < bhi[k]) {
          done = false;
          break;
        }
        cell[k] = blo[k];
      }
    }
  }

  for (std::uint32_t count : cover)
    if (count != 1)
      return false;
  return true;
}

unsigned long long natural_lattice_resolution(const scene &scn) {
  check_dimensions(scn);
  bigint l = 1;
  auto absorb = [&l](const rational &coord) { l = lcm(l, coord.den()); };
  for (std::size_t k = 0; k < scn.target.dim(); ++k) {
    absorb(scn.target.origin[k]);
    absorb(scn.target.hi(k));
  }
  for (const box &brick : scn.bricks) {
    for (std::size_t k = 0; k < brick.dim(); ++k) {
      absorb(brick.origin[k]);
      absorb(brick.hi(k));
    }
  }
  if (l > std::numeric_limits<unsigned long long>::max())
    throw invalid_input("lattice check: denominators too large for a "
                        "machine resolution");
  return static_cast<unsigned long long>(l);
}

} // namespace brickbasis
