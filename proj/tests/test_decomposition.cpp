#include <brickbasis/decomposition.hpp>
#include <brickbasis/errors.hpp>

#include "golden_data.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

using namespace brickbasis;

namespace {

problem_spec spec_of(std::vector<long long> s) {
  const std::size_t n = s.size();
  return problem_spec::make(std::move(s),
                            std::vector<rational>(n, rational(0)));
}

decomposition decompose(std::vector<long long> s) {
  return roots_and_coefs(generate_tree(spec_of(std::move(s))));
}

// Independent oracle: multilinear coefficients of (x1+a)(x2+b) are
// [ab, b, a, 1] on the monomials {1, x1, x2, x1 x2}.
std::array<bigint, 4> expand_n2(long long a, long long b) {
  return {bigint(a) * b, bigint(b), bigint(a), bigint(1)};
}

// Independent oracle: count permutations of {1..n} with exactly k descents.
bigint count_descents(std::size_t n, std::size_t k) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  bigint count = 0;
  do {
    std::size_t descents = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1])
        ++descents;
    if (descents == k)
      ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

} // namespace

TEST_CASE("bitstring enumeration") {
  CHECK(all_bitstrings(2) ==
        std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(all_bitstrings(0) == std::vector<std::string>{""});

  const auto strings = all_bitstrings(3);
  REQUIRE(strings.size() == 8);
  CHECK(std::is_sorted(strings.begin(), strings.end()));
  CHECK(std::set<std::string>(strings.begin(), strings.end()).size() == 8);
  CHECK(strings.front() == "000");
  CHECK(strings.back() == "111");
}

TEST_CASE("subset/bitstring correspondence") {
  CHECK(subset_to_bits({2}, 2) == "01");
  CHECK(subset_to_bits({}, 3) == "000");
  CHECK(subset_to_bits({1, 2}, 2) == "11");
  CHECK_THROWS_AS(subset_to_bits({4}, 3), invalid_input);
  CHECK_THROWS_AS(subset_to_bits({0}, 3), invalid_input);

  CHECK(bits_to_subset("01") == std::vector<std::size_t>{2});
  for (std::size_t n = 0; n <= 6; ++n)
    for (const std::string &bits : all_bitstrings(n))
      CHECK(subset_to_bits(bits_to_subset(bits), n) == bits);
}

TEST_CASE("one element per subset, ascending") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> dist(-4, 4);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<long long> s(n);
    for (auto &v : s)
      v = dist(rng);
    const decomposition decomp = decompose(std::move(s));
    std::vector<std::string> bits;
    for (const basis_element &e : decomp.elements)
      bits.push_back(e.bits);
    CHECK(bits == all_bitstrings(n));
  }
}

TEST_CASE("extraction matches the n = 2 closed forms") {
  for (long long s1 = -2; s1 <= 2; ++s1) {
    for (long long s2 = -2; s2 <= 2; ++s2) {
      const decomposition decomp = decompose({s1, s2});
      REQUIRE(decomp.elements.size() == 4);
      for (std::size_t e = 0; e < 4; ++e) {
        INFO("s = (", s1, ",", s2, "), element ", e);
        CHECK(decomp.elements[e].roots ==
              std::vector<long long>(std::begin(golden::roots_n2[e]),
                                     std::end(golden::roots_n2[e])));
        CHECK(decomp.elements[e].coefficient ==
              bigint(golden::coef_n2(e, s1, s2)));
      }
    }
  }
}

TEST_CASE("extraction at selected instances") {
  const decomposition at11 = decompose({1, 1});
  CHECK(at11.elements[0].coefficient == 1); // 00
  CHECK(at11.elements[1].coefficient == 1); // 01
  CHECK(at11.elements[2].coefficient == 0); // 10
  CHECK(at11.elements[3].coefficient == 0); // 11

  const decomposition zero3 = decompose({0, 0, 0});
  REQUIRE(zero3.elements.size() == 8);
  auto element = [&zero3](const std::string &bits) {
    for (const basis_element &e : zero3.elements)
      if (e.bits == bits)
        return e;
    FAIL("missing element");
    return zero3.elements[0];
  };
  CHECK(element("111").roots == std::vector<long long>{0, -1, -2});
  CHECK(element("111").coefficient == 1);
  CHECK(element("100").roots == std::vector<long long>{0, 1, 2});
  CHECK(element("100").coefficient == 1);
  CHECK(element("110").coefficient == 2);
  CHECK(element("101").coefficient == 2);

  const decomposition zero1 = decompose({0});
  CHECK(zero1.elements[0].bits == "0");
  CHECK(zero1.elements[0].roots == std::vector<long long>{1});
  CHECK(zero1.elements[0].coefficient == 0);
  CHECK(zero1.elements[1].bits == "1");
  CHECK(zero1.elements[1].roots == std::vector<long long>{0});
  CHECK(zero1.elements[1].coefficient == 1);
}

TEST_CASE("basis element evaluation") {
  basis_element element;
  element.roots = {0, 1, 2};
  CHECK(eval_q(element, {rational(3), rational(3), rational(3)}) ==
        rational(10));
  CHECK_THROWS_AS(eval_q(element, {rational(3)}), invalid_input);

  element.roots = {1, 2};
  // (x1+1)(x2+2)/2 at two sample points
  CHECK(eval_q(element, {rational(0), rational(0)}) == rational(1));
  CHECK(eval_q(element, {rational(1), rational(1, 2)}) == rational(5, 2));

  element.roots = {0, 0};
  CHECK(eval_q(element, {rational(0), rational(0)}) == rational(0));
}

TEST_CASE("polynomial evaluation") {
  CHECK(eval_p(spec_of({0, 0, 0}), {rational(3), rational(3), rational(3)}) ==
        rational(27));
  CHECK(eval_p(spec_of({1, 1}), {rational(0), rational(0)}) == rational(1));
  CHECK(eval_p(spec_of({-2, 3}), {rational(2), rational(-3)}) == rational(0));
  CHECK_THROWS_AS(eval_p(spec_of({1, 1}), {rational(0)}), invalid_input);
}

TEST_CASE("identity holds on the evaluation grid") {
  CHECK(verify_identity(spec_of({0})));
  for (long long s1 = -3; s1 <= 3; ++s1)
    for (long long s2 = -3; s2 <= 3; ++s2)
      CHECK(verify_identity(spec_of({s1, s2})));
  CHECK(verify_identity(spec_of({0, 0, 0})));

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long long> dist(-5, 5);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<long long> s(n);
      for (auto &v : s)
        v = dist(rng);
      CHECK(verify_identity(spec_of(std::move(s))));
    }
  }
}

TEST_CASE("identity against direct n = 2 expansion") {
  for (long long s1 = -3; s1 <= 3; ++s1) {
    for (long long s2 = -3; s2 <= 3; ++s2) {
      const decomposition decomp = decompose({s1, s2});
      std::array<bigint, 4> sum = {0, 0, 0, 0};
      for (const basis_element &e : decomp.elements) {
        const auto q2 = expand_n2(e.roots[0], e.roots[1]);
        for (std::size_t monomial = 0; monomial < 4; ++monomial)
          sum[monomial] += e.coefficient * q2[monomial];
      }
      const auto target = expand_n2(s1, s2);
      for (std::size_t monomial = 0; monomial < 4; ++monomial)
        CHECK(sum[monomial] == 2 * target[monomial]); // both sides times 2!
    }
  }
}

TEST_CASE("coefficients sum to n! for any integer roots") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long long> dist(-5, 5);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long long> s(n);
      for (auto &v : s)
        v = dist(rng);
      const decomposition decomp = decompose(std::move(s));
      bigint sum = 0;
      for (const basis_element &e : decomp.elements)
        sum += e.coefficient;
      CHECK(sum == factorial(n));
    }
  }
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian(1, 0) == 1);
  CHECK(eulerian(3, 0) == 1);
  CHECK(eulerian(3, 1) == 4);
  CHECK(eulerian(3, 2) == 1);
  CHECK(eulerian(4, 1) == 11);
  CHECK_THROWS_AS(eulerian(3, 3), invalid_input);
  CHECK_THROWS_AS(eulerian(0, 0), invalid_input);

  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k < n; ++k)
      CHECK(eulerian(n, k) == count_descents(n, k));
}

TEST_CASE("coefficient refinement by subset size") {
  const refinement_groups two = refinement_by_subset_size(2);
  CHECK(two.sums_by_size == std::vector<bigint>{0, 1, 1});
  CHECK(two.total == 2);

  const refinement_groups three = refinement_by_subset_size(3);
  CHECK(three.sums_by_size == std::vector<bigint>{0, 1, 4, 1});
  CHECK(three.total == 6);

  const refinement_groups one = refinement_by_subset_size(1);
  CHECK(one.sums_by_size == std::vector<bigint>{0, 1});

  for (std::size_t n = 1; n <= 9; ++n)
    CHECK(refinement_check(n));
}
