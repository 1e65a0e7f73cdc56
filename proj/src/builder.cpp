#include <brickbasis/builder.hpp>

#include <brickbasis/errors.hpp>

namespace brickbasis {

bool subtree_emits(const labeled_tree &tree, std::size_t index) {
  const labeled_node &v = tree.node(index);
  if (v.phi == 0)
    return false;
  if (v.is_leaf())
    return true;
  return subtree_emits(tree, *v.left) || subtree_emits(tree, *v.right);
}

namespace {

std::string node_tag(std::size_t index) {
  return "node " + std::to_string(index);
}

// Walks every positive-multiplicity path below `start`, rejecting
// negative multiplicities and, when check_extents is set, non-positive
// factor values at the depth they would be used.
void validate_subtree(const labeled_tree &tree, std::size_t start,
                      std::size_t index, bool check_extents) {
  const labeled_node &v = tree.node(index);
  if (index != start && check_extents) {
    const std::size_t level = v.height - tree.node(start).height;
    const rational value = node_factor_value(tree, index, level);
    if (!value.is_positive())
      throw non_positive_extent(
          node_tag(index) + ": factor value " + value.display_str() +
              " is not positive (x_j >= j guarantees positive factors)",
          index);
  }
  if (v.is_leaf())
    return;
  for (std::size_t child : {*v.left, *v.right}) {
    const long long phi = tree.node(child).phi;
    if (phi < 0)
      throw negative_multiplicity(
          node_tag(child) + ": multiplicity " + std::to_string(phi) +
              " is negative; the instance admits no brick construction",
          child);
    if (phi > 0)
      validate_subtree(tree, start, child, check_extents);
  }
}

} // namespace

std::size_t choose_start(const labeled_tree &tree,
                         const start_request &request) {
  const std::size_t n = tree.n();

  if (request.is_root())
    return 1;

  if (request.is_automatic()) {
    std::size_t candidate = 1;
    while (n - tree.node(candidate).height > 3) {
      const labeled_node &v = tree.node(candidate);
      const bool left_emits = subtree_emits(tree, *v.left);
      const bool right_emits = subtree_emits(tree, *v.right);
      if (left_emits == right_emits)
        throw not_projectable(
            node_tag(candidate) +
                ": neither subtree is empty, cannot project below 4 "
                "dimensions",
            candidate);
      candidate = left_emits ? *v.left : *v.right;
    }
    // An automatic pick also guarantees nonnegative reachable
    // multiplicities; extent positivity is diagnosed at build time.
    validate_subtree(tree, candidate, candidate, false);
    return candidate;
  }

  const std::size_t index = request.index();
  if (index < 1 || index > tree.size())
    throw invalid_start(node_tag(index) + ": index out of range", index);
  if (tree.node(index).height >= n)
    throw invalid_start(node_tag(index) + ": a leaf cannot start a build",
                        index);
  // Valid starts leave only non-emitting sibling subtrees behind.
  std::size_t walk = index;
  while (walk > 1) {
    const std::size_t sibling = (walk % 2 == 0) ? walk + 1 : walk - 1;
    if (subtree_emits(tree, sibling))
      throw invalid_start(node_tag(index) + ": sibling subtree at " +
                              node_tag(sibling) +
                              " emits bricks; start is not a projection",
                          index);
    walk /= 2;
  }
  return index;
}

namespace {

struct sweep_state {
  const labeled_tree &tree;
  std::size_t start_height;
  std::size_t m;
  std::vector<rational> origin;
  std::vector<rational> extent;
  std::vector<box> bricks;
};

void sweep_children(sweep_state &state, std::size_t index);

void sweep(sweep_state &state, std::size_t index, std::size_t repetition) {
  const labeled_node &v = state.tree.node(index);
  const std::size_t level = v.height - state.start_height;
  const std::size_t axis0 = state.m - level; // 0-based axis
  const rational value = node_factor_value(state.tree, index, level);
  state.extent[axis0] = value;

  if (level == state.m) {
    box brick;
    brick.origin = state.origin;
    brick.extent = state.extent;
    brick.leaf_index = index;
    brick.repetition = repetition;
    state.bricks.push_back(std::move(brick));
    state.origin[0] += value;
    return;
  }

  sweep_children(state, index);
  for (std::size_t k = 0; k < axis0; ++k)
    state.origin[k] = rational(0);
  state.origin[axis0] += value;
}

void sweep_children(sweep_state &state, std::size_t index) {
  const labeled_node &v = state.tree.node(index);
  for (std::size_t child : {*v.left, *v.right}) {
    const long long phi = state.tree.node(child).phi;
    for (long long rep = 1; rep <= phi; ++rep)
      sweep(state, child, static_cast<std::size_t>(rep));
  }
}

} // namespace

scene build(const labeled_tree &tree, std::size_t start,
            long long palette_seed) {
  if (start < 1 || start > tree.size())
    throw invalid_start(node_tag(start) + ": index out of range", start);
  const std::size_t start_height = tree.node(start).height;
  const std::size_t n = tree.n();
  if (start_height >= n)
    throw invalid_start(node_tag(start) + ": a leaf cannot start a build",
                        start);
  const std::size_t m = n - start_height;

  validate_subtree(tree, start, start, true);

  sweep_state state{tree, start_height, m,
                    std::vector<rational>(m, rational(0)),
                    std::vector<rational>(m, rational(0)),
                    {}};
  sweep_children(state, start);

  scene scn;
  scn.spec = tree.spec();
  scn.start_index = start;
  scn.m = m;
  scn.palette_seed = palette_seed;
  scn.bricks = std::move(state.bricks);

  scn.target.origin.assign(m, rational(0));
  scn.target.extent.resize(m);
  for (std::size_t axis0 = 0; axis0 < m; ++axis0) {
    const std::size_t level = m - axis0;
    const std::size_t j = start_height + level;
    scn.target.extent[axis0] =
        rational(static_cast<long long>(j)) /
        rational(static_cast<long long>(level)) *
        (tree.spec().x[j - 1] + rational(tree.spec().s[j - 1]));
  }
  return scn;
}

const std::array<std::string, 8> &brick_palette() {
  static const std::array<std::string, 8> palette = {
      "White", "Blue", "Yellow", "Pink", "Green", "Red", "Cyan", "Magenta"};
  return palette;
}

std::vector<std::string> assign_colors(const scene &scn) {
  const auto &palette = brick_palette();
  std::vector<std::string> colors;
  colors.reserve(scn.bricks.size());
  for (std::size_t i = 0; i < scn.bricks.size(); ++i) {
    const long long slot =
        ((scn.palette_seed + static_cast<long long>(i)) % 8 + 8) % 8;
    colors.push_back(palette[static_cast<std::size_t>(slot)]);
  }
  return colors;
}

} // namespace brickbasis
