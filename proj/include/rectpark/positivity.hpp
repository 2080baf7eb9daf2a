#pragma once

#include <vector>

#include "rectpark/homomorphisms.hpp"

namespace rectpark {

// Number of cells (i, j) of mu with j > i, where i is the column and j the
// row (French coordinates); equivalently cells strictly below the main
// diagonal of the English diagram.
int iota(const Partition& mu);

// s_{(k|j)} = s_{(k+1, 1^j)}.
SymFunc hook_schur(int k, int j);

struct PositivityReport {
  bool positive = true;
  // Coefficients in the basis that was checked.
  SymFunc coefficients;
  // Indices whose coefficient is negative or not an integer.
  std::vector<Partition> negative_terms;
};

// Schur expansion with nonnegative integer coefficients.
PositivityReport check_schur_positive(const SymFunc& f);

// Expansion in the basis (-1)^{|mu|-l(mu)} e_mu with nonnegative integer
// coefficients. The reported coefficients are in that signed basis.
PositivityReport check_signed_e_positive(const SymFunc& f);

// Expansion in h with nonnegative integer coefficients.
PositivityReport check_h_positive(const SymFunc& f);

// h-positivity of Theta_{a,b}((-1)^j s_{(k|j)}).
PositivityReport hpositivity_of_hook_image(int k, int j, int a, int b);

// One conjecture case: Theta_{a,b}((-1)^{iota(mu)} s_mu) checked for Schur positivity.
struct ConjectureCase {
  Partition mu;
  int a = 1;
  int b = 1;
  int iota = 0;
  PositivityReport report;
};
ConjectureCase check_signed_schur_image(const Partition& mu, int a, int b);

}  // namespace rectpark
