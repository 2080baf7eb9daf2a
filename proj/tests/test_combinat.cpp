#include <algorithm>
#include <set>

#include "doctest.h"
#include "rectpark/combinat.hpp"

using namespace rectpark;

namespace {

// n! / prod of hook lengths, computed from the diagram directly.
Integer hook_formula_dimension(const Partition& p) {
  const Partition c = conjugate(p);
  Integer prod = 1;
  for (int r = 0; r < p.length(); ++r)
    for (int col = 0; col < p[r]; ++col) prod *= (p[r] - col - 1) + (c[col] - r - 1) + 1;
  return factorial(static_cast<unsigned>(p.size())) / prod;
}

long long partition_count(int n) {
  // Euler's pentagonal recurrence.
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      const long long sign = (k % 2) ? 1 : -1;
      p[i] += sign * p[i - g1];
      if (g2 <= i) p[i] += sign * p[i - g2];
    }
  }
  return p[n];
}

}  // namespace

TEST_CASE("partition validation and basic accessors") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  const Partition p{3, 1, 1};
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.str() == "[3,1,1]");
  CHECK(Partition::from_unsorted({1, 0, 3, 1}) == p);
  CHECK(p.merged(Partition{2}) == Partition{3, 2, 1, 1});
  CHECK(Partition{}.empty());
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("z_of") {
  CHECK(z_of(Partition{1, 1, 1}) == 6);
  CHECK(z_of(Partition{3}) == 3);
  CHECK(z_of(Partition{2, 1}) == 2);
  // sum over lambda |- n of n!/z_lambda counts permutations.
  for (int n = 1; n <= 8; ++n) {
    Rational total = 0;
    for (const auto& p : partitions_of(n)) total += Rational(factorial(static_cast<unsigned>(n))) / z_of(p);
    CHECK(total == Rational(factorial(static_cast<unsigned>(n))));
  }
}

TEST_CASE("multinomial") {
  CHECK(multinomial(4, Composition{4}) == 1);
  CHECK(multinomial(5, Composition{2, 1, 1, 1}) == 60);
  CHECK(multinomial(3, Composition{1, 1, 1}) == 6);
  CHECK_THROWS_AS(multinomial(4, Composition{1, 1}), std::invalid_argument);
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  const auto four = partitions_of(4);
  CHECK(four == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(4, 2) == std::vector<Partition>{{3, 1}, {2, 2}});
  for (int n = 0; n <= 15; ++n) {
    const auto all = partitions_of(n);
    CHECK(static_cast<long long>(all.size()) == partition_count(n));
    CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>()));
  }
}

TEST_CASE("compositions_of") {
  const std::set<Composition> two{Composition{2}, Composition{1, 1}};
  const auto c2 = compositions_of(2);
  CHECK(std::set<Composition>(c2.begin(), c2.end()) == two);
  const auto c32 = compositions_of(3, 2);
  CHECK(std::set<Composition>(c32.begin(), c32.end()) == std::set<Composition>{{2, 1}, {1, 2}});
  CHECK(compositions_of(1) == std::vector<Composition>{Composition{1}});
  for (int n = 1; n <= 10; ++n) {
    const auto all = compositions_of(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    for (int k = 1; k <= n; ++k)
      CHECK(Integer(static_cast<unsigned long>(compositions_of(n, k).size())) ==
            binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1)));
  }
  CHECK(Composition{2, 1, 3}.partial_sums() == std::vector<int>{2, 3});
}

TEST_CASE("multiplicity_partition") {
  CHECK(multiplicity_partition(Partition{2, 2, 1}) == Partition{2, 1});
  CHECK(multiplicity_partition(Partition{1, 1, 1}) == Partition{3});
  CHECK(multiplicity_partition(Partition{3, 2, 1}) == Partition{1, 1, 1});
}

TEST_CASE("character values") {
  for (const auto& mu : partitions_of(5)) CHECK(character(Partition{5}, mu) == 1);
  CHECK(character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(character(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("character table orthogonality and dimensions") {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts)
      CHECK(character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
            hook_formula_dimension(lambda));
    for (const auto& l1 : parts)
      for (const auto& l2 : parts) {
        Rational s = 0;
        for (const auto& mu : parts) s += Rational(character(l1, mu) * character(l2, mu)) / z_of(mu);
        CHECK(s == Rational(l1 == l2 ? 1 : 0));
      }
  }
}

TEST_CASE("schur_principal_eval") {
  for (int m = 0; m <= 6; ++m) CHECK(schur_principal_eval(Partition{1}, m) == m);
  CHECK(schur_principal_eval(Partition{1, 1}, 2) == 1);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 5; ++n)
      CHECK(schur_principal_eval(Partition{n}, m) ==
            Rational(binomial(static_cast<unsigned>(m + n - 1), static_cast<unsigned>(n))));
  CHECK(schur_principal_eval(Partition{1, 1, 1}, 2) == 0);
  CHECK(hook_length(Partition{3, 1}, 1, 1) == 4);
}
