#include "rectpark/positivity.hpp"

namespace rectpark {

int iota(const Partition& mu) {
  // Row r (1-based) holds columns 1..mu_r; cells with column < row.
  int count = 0;
  for (int row = 1; row <= mu.length(); ++row) count += std::min(mu[row - 1], row - 1);
  return count;
}

SymFunc hook_schur(int k, int j) {
  if (k < 0 || j < 0) throw std::invalid_argument("hook_schur: k and j must be nonnegative");
  std::vector<int> parts(static_cast<std::size_t>(j) + 1, 1);
  parts[0] = k + 1;
  return SymFunc::term(Basis::s, Partition(std::move(parts)));
}

namespace {

PositivityReport inspect(SymFunc coefficients) {
  PositivityReport report;
  for (const auto& [idx, c] : coefficients.terms()) {
    if (c < 0 || !is_integer(c)) {
      report.positive = false;
      report.negative_terms.push_back(idx);
    }
  }
  report.coefficients = std::move(coefficients);
  return report;
}

}  // namespace

PositivityReport check_schur_positive(const SymFunc& f) { return inspect(to_basis(f, Basis::s)); }

PositivityReport check_h_positive(const SymFunc& f) { return inspect(to_basis(f, Basis::h)); }

PositivityReport check_signed_e_positive(const SymFunc& f) {
  SymFunc signed_coeffs(Basis::e);
  const SymFunc fe = to_basis(f, Basis::e);
  for (const auto& [idx, c] : fe.terms())
    signed_coeffs.add_term(idx, (idx.size() - idx.length()) % 2 ? Rational(-c) : c);
  return inspect(std::move(signed_coeffs));
}

PositivityReport hpositivity_of_hook_image(int k, int j, int a, int b) {
  const SymFunc signed_hook = scale(hook_schur(k, j), j % 2 ? -1 : 1);
  return check_h_positive(Theta(signed_hook, a, b));
}

ConjectureCase check_signed_schur_image(const Partition& mu, int a, int b) {
  ConjectureCase out;
  out.mu = mu;
  out.a = a;
  out.b = b;
  out.iota = iota(mu);
  const SymFunc signed_schur = SymFunc::term(Basis::s, mu, out.iota % 2 ? -1 : 1);
  out.report = check_schur_positive(Theta(signed_schur, a, b));
  return out;
}

}  // namespace rectpark
