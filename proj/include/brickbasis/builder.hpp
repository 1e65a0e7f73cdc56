#ifndef BRICKBASIS_BUILDER_HPP
#define BRICKBASIS_BUILDER_HPP

#include <brickbasis/geometry.hpp>
#include <brickbasis/tree.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace brickbasis {

// A finished construction: the ordered brick list tiling the target box.
// m is the build dimension (n minus the height of the start node); brick
// emission order is the deterministic depth-first sweep, left child
// first, repetitions in increasing order.
struct scene {
  problem_spec spec;
  std::size_t start_index = 1;
  std::size_t m = 0;
  box target;
  std::vector<box> bricks;
  long long palette_seed = 0;
};

// How to pick the node the construction starts from.
class start_request {
public:
  static start_request root() { return start_request(kind::root, 1); }
  static start_request automatic() { return start_request(kind::automatic, 0); }
  static start_request at(std::size_t index) {
    return start_request(kind::index, index);
  }

  bool is_root() const { return kind_ == kind::root; }
  bool is_automatic() const { return kind_ == kind::automatic; }
  std::size_t index() const { return index_; }

private:
  enum class kind { root, automatic, index };
  start_request(kind k, std::size_t index) : kind_(k), index_(index) {}
  kind kind_;
  std::size_t index_;
};

// True when visiting `index` would emit at least one brick: its phi is
// nonzero and some maximal path below it carries nonzero phi throughout.
bool subtree_emits(const labeled_tree &tree, std::size_t index);

// Resolves the start node. `root` always picks the root. An explicit
// index must be reachable from the root through children whose sibling
// subtrees emit nothing. `automatic` keeps descending into the unique
// emitting child until at most three levels remain, then checks that no
// reachable multiplicity below the pick is negative.
std::size_t choose_start(const labeled_tree &tree, const start_request &request);

// The cursor sweep: emits the bricks of the subtree of `start` into an
// (n - height(start))-dimensional scene. Fails loudly on negative
// reachable multiplicities and non-positive edge factors.
scene build(const labeled_tree &tree, std::size_t start,
            long long palette_seed = 0);

// The eight brick colors, in palette order.
const std::array<std::string, 8> &brick_palette();

// Deterministic per-brick colors: (palette_seed + emission index) mod 8.
std::vector<std::string> assign_colors(const scene &scn);

} // namespace brickbasis

#endif // BRICKBASIS_BUILDER_HPP
