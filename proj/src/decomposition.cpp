#include <brickbasis/decomposition.hpp>

#include <brickbasis/errors.hpp>

#include <algorithm>

namespace brickbasis {

bigint factorial(std::size_t n) {
  bigint f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<unsigned long>(i);
  return f;
}

std::vector<std::string> all_bitstrings(std::size_t n) {
  if (n >= 8 * sizeof(std::size_t) - 1)
    throw invalid_input("all_bitstrings: n too large");
  const std::size_t count = std::size_t(1) << n;
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::string bits(n, '0');
    for (std::size_t j = 0; j < n; ++j)
      if (v >> (n - 1 - j) & 1)
        bits[j] = '1';
    out.push_back(std::move(bits));
  }
  return out;
}

std::string subset_to_bits(const std::vector<std::size_t> &subset,
                           std::size_t n) {
  std::string bits(n, '0');
  for (std::size_t element : subset) {
    if (element < 1 || element > n)
      throw invalid_input("subset_to_bits: element " + std::to_string(element) +
                          " outside 1.." + std::to_string(n));
    bits[element - 1] = '1';
  }
  return bits;
}

std::vector<std::size_t> bits_to_subset(const std::string &bits) {
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1')
      subset.push_back(j + 1);
    else if (bits[j] != '0')
      throw invalid_input("bits_to_subset: invalid character in bitstring");
  }
  return subset;
}

namespace {

void extract_paths(const labeled_tree &tree, std::size_t index,
                   std::vector<long long> &roots, std::string &bits,
                   std::vector<basis_element> &out) {
  const labeled_node &v = tree.node(index);
  roots[v.height - 1] = v.r;
  if (v.is_leaf()) {
    basis_element element;
    element.bits = bits;
    element.subset = bits_to_subset(bits);
    element.roots = roots;
    element.coefficient = 1;
    std::size_t walk = index;
    while (walk > 1) {
      element.coefficient *= tree.node(walk).phi;
      walk /= 2;
    }
    out.push_back(std::move(element));
    return;
  }
  bits.push_back('1');
  extract_paths(tree, *v.left, roots, bits, out);
  bits.back() = '0';
  extract_paths(tree, *v.right, roots, bits, out);
  bits.pop_back();
}

} // namespace

decomposition roots_and_coefs(const labeled_tree &tree) {
  const std::size_t n = tree.n();
  std::vector<basis_element> elements;
  elements.reserve(std::size_t(1) << n);

  std::vector<long long> roots(n, 0);
  std::string bits;
  bits.reserve(n);
  // Left subtree first, mirroring the order the tree stores children in;
  // the canonical output order is ascending bitstrings, so re-sort after.
  bits.push_back('1');
  extract_paths(tree, *tree.node(1).left, roots, bits, elements);
  bits.back() = '0';
  extract_paths(tree, *tree.node(1).right, roots, bits, elements);

  std::sort(elements.begin(), elements.end(),
            [](const basis_element &a, const basis_element &b) {
              return a.bits < b.bits;
            });
  return decomposition{tree.spec(), std::move(elements)};
}

rational eval_q(const basis_element &element, const std::vector<rational> &x) {
  const std::size_t n = element.roots.size();
  if (x.size() != n)
    throw invalid_input("eval_q: dimension mismatch");
  rational product(1);
  for (std::size_t j = 0; j < n; ++j)
    product *= x[j] + rational(element.roots[j]);
  return product / rational(factorial(n));
}

rational eval_p(const problem_spec &spec, const std::vector<rational> &x) {
  if (x.size() != spec.n)
    throw invalid_input("eval_p: dimension mismatch");
  rational product(1);
  for (std::size_t j = 0; j < spec.n; ++j)
    product *= x[j] + rational(spec.s[j]);
  return product;
}

bool verify_identity(const problem_spec &spec) {
  const labeled_tree tree = generate_tree(spec);
  const decomposition decomp = roots_and_coefs(tree);
  const std::size_t n = spec.n;
  const bigint n_factorial = factorial(n);

  // Both sides scaled by n!: integer arithmetic throughout the grid.
  const std::size_t grid = std::size_t(1) << n;
  for (std::size_t point = 0; point < grid; ++point) {
    bigint lhs = 0;
    for (const basis_element &element : decomp.elements) {
      bigint term = element.coefficient;
      if (term == 0)
        continue;
      for (std::size_t j = 0; j < n && term != 0; ++j) {
        const long long xj = (point >> j) & 1;
        term *= xj + element.roots[j];
      }
      lhs += term;
    }
    bigint rhs = n_factorial;
    for (std::size_t j = 0; j < n && rhs != 0; ++j) {
      const long long xj = (point >> j) & 1;
      rhs *= xj + spec.s[j];
    }
    if (lhs != rhs)
      return false;
  }
  return true;
}

bigint eulerian(std::size_t n, std::size_t k) {
  if (n < 1 || k >= n)
    throw invalid_input("eulerian: need 0 <= k < n");
  std::vector<bigint> row{1}; // A(1, 0)
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<bigint> next(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      bigint value = 0;
      if (j < row.size())
        value += bigint(static_cast<unsigned long>(j + 1)) * row[j];
      if (j >= 1 && j - 1 < row.size())
        value += bigint(static_cast<unsigned long>(m - j)) * row[j - 1];
      next[j] = std::move(value);
    }
    row = std::move(next);
  }
  return row[k];
}

refinement_groups refinement_by_subset_size(std::size_t n) {
  if (n < 1)
    throw invalid_input("refinement_by_subset_size: n must be at least 1");
  problem_spec spec;
  spec.n = n;
  spec.s.assign(n, 0);
  spec.x.assign(n, rational(0));

  const decomposition decomp = roots_and_coefs(generate_tree(spec));

  refinement_groups groups;
  groups.sums_by_size.assign(n + 1, 0);
  groups.total = 0;
  for (const basis_element &element : decomp.elements) {
    groups.sums_by_size[element.subset.size()] += element.coefficient;
    groups.total += element.coefficient;
  }
  groups.eulerian_row.assign(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k)
    groups.eulerian_row[k] = eulerian(n, k - 1);
  return groups;
}

bool refinement_check(std::size_t n) {
  const refinement_groups groups = refinement_by_subset_size(n);
  if (groups.sums_by_size[0] != 0)
    return false;
  for (std::size_t k = 1; k <= n; ++k)
    if (groups.sums_by_size[k] != groups.eulerian_row[k])
      return false;
  return groups.total == factorial(n);
}

} // namespace brickbasis
