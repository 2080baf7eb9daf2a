#include "printers.hpp"
#include "rectpark/positivity.hpp"

using namespace rectpark;

namespace {

SymFunc S(Partition p, Rational c = 1) { return SymFunc::term(Basis::s, std::move(p), c); }
SymFunc E(Partition p, Rational c = 1) { return SymFunc::term(Basis::e, std::move(p), c); }

// Cells (r, c) of the English diagram, 1-based, with r > c.
int cells_below_diagonal(const Partition& mu) {
  int count = 0;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu[r - 1]; ++c) count += r > c;
  return count;
}

int diagonal_cells(const Partition& mu) {
  int count = 0;
  for (int r = 1; r <= mu.length(); ++r) count += mu[r - 1] >= r;
  return count;
}

const std::vector<std::pair<int, int>> kPairs{{1, 1}, {1, 2}, {2, 1}, {2, 3}};

}  // namespace

TEST_CASE("iota") {
  CHECK(iota(Partition{1}) == 0);
  CHECK(iota(Partition{2}) == 0);
  CHECK(iota(Partition{1, 1}) == 1);
  CHECK(iota(Partition{2, 2}) == 1);
  CHECK(iota(Partition{2, 1}) == 1);
  for (int k = 0; k <= 4; ++k)
    for (int j = 0; j <= 4; ++j) {
      std::vector<int> parts{k + 1};
      parts.insert(parts.end(), static_cast<std::size_t>(j), 1);
      CHECK(iota(Partition(parts)) == j);
    }
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      CHECK(iota(mu) == cells_below_diagonal(mu));
      CHECK(iota(mu) + iota(conjugate(mu)) + diagonal_cells(mu) == n);
    }
}

TEST_CASE("hook_schur") {
  CHECK(hook_schur(0, 0) == S({1}));
  CHECK(hook_schur(1, 1) == S({2, 1}));
  CHECK(hook_schur(0, 2) == S({1, 1, 1}));
  CHECK_THROWS_AS(hook_schur(-1, 0), std::invalid_argument);
}

TEST_CASE("Schur positivity checker") {
  CHECK(check_schur_positive(SymFunc::term(Basis::h, {2, 1})).positive);
  const auto r = check_schur_positive(S({2}) - S({1, 1}));
  CHECK_FALSE(r.positive);
  CHECK(r.negative_terms == std::vector<Partition>{Partition{1, 1}});
  CHECK_FALSE(check_schur_positive(S({2}, Rational(1, 2))).positive);
  CHECK(check_schur_positive(SymFunc(Basis::s)).positive);
}

TEST_CASE("signed e positivity checker") {
  const auto hook = check_signed_e_positive(-S({2, 1}));
  CHECK(hook.positive);
  CHECK(hook.coefficients.coefficient(Partition{2, 1}) == 1);
  CHECK(hook.coefficients.coefficient(Partition{3}) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(check_signed_e_positive(E({d}, d % 2 ? 1 : -1)).positive);
  CHECK_FALSE(check_signed_e_positive(E({2})).positive);
  CHECK(check_signed_e_positive(S({2})).positive);
}

TEST_CASE("h positivity checker") {
  CHECK(check_h_positive(SymFunc::term(Basis::p, {1, 1})).positive);
  CHECK_FALSE(check_h_positive(SymFunc::term(Basis::p, {2})).positive);
}

TEST_CASE("hook images are h-positive") {
  CHECK(hpositivity_of_hook_image(1, 0, 1, 1).positive);
  const auto prim = hpositivity_of_hook_image(0, 1, 1, 1);
  CHECK(prim.positive);
  CHECK(prim.coefficients == SymFunc::term(Basis::h, {2}));
  CHECK(hpositivity_of_hook_image(1, 1, 1, 2).positive);
  for (const auto& [a, b] : kPairs)
    for (int size = 1; size <= 4; ++size)
      for (int j = 0; j < size; ++j) CHECK(hpositivity_of_hook_image(size - 1 - j, j, a, b).positive);
}

TEST_CASE("primitive Frobenius images are h-positive") {
  for (const auto& [a, b] : kPairs)
    for (int d = 1; d <= 4; ++d) {
      const SymFunc img = Theta(E({d}, d % 2 ? 1 : -1), a, b);
      CHECK(check_h_positive(img).positive);
      CHECK(to_basis(img, Basis::h) == park_frobenius(a * d, b * d, PathFilter::primitive()));
    }
}

TEST_CASE("signed Schur images") {
  for (const auto& mu : partitions_of(2)) CHECK(check_signed_schur_image(mu, 1, 2).report.positive);
  const auto c = check_signed_schur_image(Partition{1, 1}, 1, 1);
  CHECK(c.iota == 1);
  CHECK(c.report.coefficients == S({2}));
  // The opposite sign convention would make this image negative.
  CHECK_FALSE(check_schur_positive(Theta(S({1, 1}), 1, 1)).positive);
  for (const auto& [a, b] : kPairs)
    for (int d = 1; d <= 3; ++d)
      for (const auto& mu : partitions_of(d)) CHECK(check_signed_schur_image(mu, a, b).report.positive);
}
