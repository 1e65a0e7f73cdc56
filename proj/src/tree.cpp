#include <brickbasis/tree.hpp>

#include <brickbasis/errors.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace brickbasis {

namespace {
constexpr std::size_t max_tree_n = 20;
}

problem_spec problem_spec::make(std::vector<long long> s,
                                std::vector<rational> x) {
  problem_spec spec;
  spec.n = s.size();
  if (spec.n == 0)
    throw invalid_input("problem spec: n must be at least 1");
  if (x.size() != spec.n)
    throw invalid_input("problem spec: s and x must have equal length");
  spec.s = std::move(s);
  spec.x = std::move(x);
  return spec;
}

std::size_t labeled_tree::height_of_index(std::size_t index_1based) {
  return static_cast<std::size_t>(std::bit_width(index_1based) - 1);
}

child_label_pair child_labels(long long parent_r, std::size_t parent_h,
                              long long s_child) {
  const long long h = static_cast<long long>(parent_h);
  child_label_pair out{};
  if (parent_r >= 0) {
    out.right_r = parent_r + 1;
    out.right_phi = std::llabs(parent_r - h) + s_child;
    out.left_r = parent_r - h;
    out.left_phi = std::llabs(parent_r + 1) - s_child;
  } else {
    out.right_r = parent_r + h;
    out.right_phi = std::llabs(parent_r - 1) + s_child;
    out.left_r = parent_r - 1;
    out.left_phi = std::llabs(parent_r + h) - s_child;
  }
  return out;
}

labeled_tree generate_tree(const problem_spec &spec) {
  if (spec.n < 1)
    throw invalid_input("generate_tree: n must be at least 1");
  if (spec.n > max_tree_n)
    throw invalid_input("generate_tree: n > 20 would allocate 2^(n+1)-1 "
                        "nodes; refusing");

  const std::size_t count = (std::size_t(1) << (spec.n + 1)) - 1;
  std::vector<labeled_node> nodes(count);
  nodes[0].phi = 1;
  nodes[0].r = 0;
  nodes[0].height = 0;

  // Nodes up to index 2^n - 1 are internal; their children land at 2i, 2i+1.
  const std::size_t internal_count = (std::size_t(1) << spec.n) - 1;
  for (std::size_t i = 1; i <= internal_count; ++i) {
    labeled_node &parent = nodes[i - 1];
    const std::size_t child_h = parent.height + 1;
    const child_label_pair labels =
        child_labels(parent.r, parent.height, spec.s[child_h - 1]);

    parent.left = 2 * i;
    parent.right = 2 * i + 1;

    labeled_node &left = nodes[2 * i - 1];
    left.r = labels.left_r;
    left.phi = labels.left_phi;
    left.height = child_h;

    labeled_node &right = nodes[2 * i];
    right.r = labels.right_r;
    right.phi = labels.right_phi;
    right.height = child_h;
  }

  return labeled_tree(spec, std::move(nodes));
}

rational node_factor_value(const labeled_tree &tree, std::size_t index,
                           std::optional<std::size_t> denominator_override) {
  if (index < 1 || index > tree.size())
    throw invalid_input("node_factor_value: index out of range");
  const labeled_node &v = tree.node(index);
  if (v.height == 0)
    throw invalid_input("node_factor_value: the root carries no factor");
  const std::size_t d = denominator_override.value_or(v.height);
  if (d == 0)
    throw invalid_input("node_factor_value: zero denominator override");
  return (tree.spec().x[v.height - 1] + rational(v.r)) /
         rational(static_cast<long long>(d));
}

std::string print_tree_table(const labeled_tree &tree) {
  const char *headers[5] = {"v_s", "v_d", "phi_p", "r", "h"};
  std::vector<std::array<std::string, 5>> rows;
  rows.reserve(tree.size());
  auto cell = [](std::optional<std::size_t> child) {
    return child ? std::to_string(*child) : std::string("-1");
  };
  for (std::size_t i = 1; i <= tree.size(); ++i) {
    const labeled_node &v = tree.node(i);
    rows.push_back({cell(v.left), cell(v.right), std::to_string(v.phi),
                    std::to_string(v.r), std::to_string(v.height)});
  }

  std::size_t width[5];
  for (std::size_t c = 0; c < 5; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto &row : rows)
      width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::string (&row)[5]) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (c > 0)
        out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  };
  std::string header_row[5];
  for (std::size_t c = 0; c < 5; ++c)
    header_row[c] = headers[c];
  emit(header_row);
  for (const auto &row : rows) {
    std::string cells[5] = {row[0], row[1], row[2], row[3], row[4]};
    emit(cells);
  }
  return out.str();
}

} // namespace brickbasis
