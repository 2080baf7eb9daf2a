#pragma once

#include "rectpark/parking.hpp"
#include "rectpark/series.hpp"
#include "rectpark/symfunc.hpp"

namespace rectpark {

class NotCoprime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// theta_{a,b}: Lambda -> Q, p_k -> binom((a+b)k, ak) / (a+b).
// Throws NotCoprime unless gcd(a, b) = 1.
Rational theta(const SymFunc& f, int a, int b);

// Path counts through theta; throw std::logic_error if theta is not an integer.
Integer count_dyck_closed(int m, int n);
Integer count_primitive_closed(int m, int n);
Integer count_returns_closed(int m, int n, const Composition& gamma);

// (-1)^{d-k} e_{c_1} ... e_{c_k} in the e basis.
SymFunc signed_e_product(const Composition& gamma);

// p_k^{a/b} = (1/a) sum_{lambda |- bk} (ak)^{l(lambda)} p_lambda / z_lambda, p basis.
SymFunc p_ab(int k, int a, int b);
// The same generator computed as (1/a) h_{bk}[ak x].
SymFunc p_ab_by_plethysm(int k, int a, int b);

// Theta_{a,b}: p_k -> p_ab(k, a, b), extended multiplicatively. The result
// is in the p basis. Throws std::invalid_argument for inhomogeneous input.
SymFunc Theta(const SymFunc& f, int a, int b);

// Theta_{a,b} applied to h_d, (-1)^{d-1} e_d or the signed e-product of the
// returns composition, with (m, n) = (ad, bd). Result in the h basis.
SymFunc park_frobenius(int m, int n, const PathFilter& filter = {});

// Frobenius characteristic in the coprime case, in three closed forms.
enum class CoprimeForm { PowerSum, Schur, Complete };
SymFunc coprime_frobenius(int m, int n, CoprimeForm form);

// p_k^{a/b}(x, y) in the hh basis, summed over composition pairs or, with
// multinomial weights, over partition pairs.
enum class BiForm { Composition, Partition };
BiSymFunc p_ab_xy(int k, int a, int b, BiForm form = BiForm::Partition);

// Coefficient of z^d in exp(sum_k p_k^{a/b}(x, y) z^k / k), hh basis.
BiSymFunc bifrobenius(int m, int n);

// sum_d P_{ad,bd}(x) z^d and the primitive series sum_{d>=1} P'_{ad,bd}(x) z^d,
// both through the exponential of sum_k p_k^{a/b} z^k / k, p basis.
TruncatedSeries<SymFunc> frobenius_series(int a, int b, int truncation);
TruncatedSeries<SymFunc> primitive_series(int a, int b, int truncation);

}  // namespace rectpark
