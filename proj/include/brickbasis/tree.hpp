#ifndef BRICKBASIS_TREE_HPP
#define BRICKBASIS_TREE_HPP

#include <brickbasis/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace brickbasis {

// One problem instance: p(x_1..x_n) = (x_1 + s_1)...(x_n + s_n) with the
// evaluation points / edge lengths x. A caller wanting roots at +t passes
// s = -t.
struct problem_spec {
  std::size_t n = 0;
  std::vector<long long> s;
  std::vector<rational> x;

  static problem_spec make(std::vector<long long> s, std::vector<rational> x);
};

// Node of the labeled complete binary tree. A node at height h >= 1
// carries the factor (x_h + r)/h and the multiplicity phi; children are
// held as explicit indices (absent for leaves).
struct labeled_node {
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
  long long phi = 0;
  long long r = 0;
  std::size_t height = 0;

  bool is_leaf() const { return !left.has_value(); }
};

// Complete binary tree of height n in 1-based heap order: node i has
// children 2i and 2i+1, left stored before right.
class labeled_tree {
public:
  labeled_tree(problem_spec spec, std::vector<labeled_node> nodes)
      : spec_(std::move(spec)), nodes_(std::move(nodes)) {}

  const problem_spec &spec() const { return spec_; }
  std::size_t n() const { return spec_.n; }
  std::size_t size() const { return nodes_.size(); }

  const labeled_node &node(std::size_t index_1based) const {
    return nodes_[index_1based - 1];
  }

  static std::size_t height_of_index(std::size_t index_1based);

private:
  problem_spec spec_;
  std::vector<labeled_node> nodes_;
};

// (r, phi) labels of both children of a node with label r at height h,
// where s_child is the root entry for the children's height.
struct child_label_pair {
  long long left_r;
  long long left_phi;
  long long right_r;
  long long right_phi;
};

child_label_pair child_labels(long long parent_r, std::size_t parent_h,
                              long long s_child);

// Builds the full labeled tree (2^(n+1) - 1 nodes). Requires 1 <= n <= 20.
labeled_tree generate_tree(const problem_spec &spec);

// Value of the factor (x_h + r)/d carried by a non-root node, where d is
// the node height by default; the override supports projected builds.
rational node_factor_value(const labeled_tree &tree, std::size_t index,
                           std::optional<std::size_t> denominator_override = {});

// Tabular rendering, columns "v_s v_d phi_p r h", one node per row in
// index order, -1 for absent children.
std::string print_tree_table(const labeled_tree &tree);

} // namespace brickbasis

#endif // BRICKBASIS_TREE_HPP
