#ifndef BRICKBASIS_DECOMPOSITION_HPP
#define BRICKBASIS_DECOMPOSITION_HPP

#include <brickbasis/tree.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace brickbasis {

// One basis element, indexed by a subset S of {1..n}. Bit j of `bits` is
// 1 exactly when step j of the tree path takes the left child, i.e. when
// j is in S. The element's polynomial is prod_j (x_j + roots[j]) / n!,
// and `coefficient` is the product of the phi labels along the path
// (root excluded).
struct basis_element {
  std::string bits;
  std::vector<std::size_t> subset;
  std::vector<long long> roots;
  bigint coefficient;
};

// Full basis expansion: exactly one element per subset, in ascending
// bitstring order.
struct decomposition {
  problem_spec spec;
  std::vector<basis_element> elements;
};

bigint factorial(std::size_t n);

// All length-n bitstrings in ascending binary order; n = 0 yields [""].
std::vector<std::string> all_bitstrings(std::size_t n);

std::string subset_to_bits(const std::vector<std::size_t> &subset,
                           std::size_t n);
std::vector<std::size_t> bits_to_subset(const std::string &bits);

// Walks every maximal path of the tree and extracts the (roots,
// coefficient) pair per subset.
decomposition roots_and_coefs(const labeled_tree &tree);

// prod_j (x_j + roots[j]) / n!
rational eval_q(const basis_element &element, const std::vector<rational> &x);

// prod_j (x_j + s_j)
rational eval_p(const problem_spec &spec, const std::vector<rational> &x);

// Exact check of p = sum_S C_S q_S on the grid {0,1}^n. Both sides are
// multilinear, so grid equality is polynomial identity, not sampling.
bool verify_identity(const problem_spec &spec);

// Eulerian number <n over k> by the classical recurrence
// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1), A(1,0) = 1.
bigint eulerian(std::size_t n, std::size_t k);

// Coefficient sums of the s = 0 decomposition grouped by subset size.
struct refinement_groups {
  std::vector<bigint> sums_by_size;    // index k = sum over |S| = k
  std::vector<bigint> eulerian_row;    // index k = A(n, k-1), entry 0 is 0
  bigint total;
};

refinement_groups refinement_by_subset_size(std::size_t n);

// True when the s = 0 coefficients grouped by |S| reproduce the Eulerian
// numbers: group 0 sums to 0, group k to A(n, k-1), total to n!.
bool refinement_check(std::size_t n);

} // namespace brickbasis

#endif // BRICKBASIS_DECOMPOSITION_HPP
