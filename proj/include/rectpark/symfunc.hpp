#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "rectpark/combinat.hpp"
#include "rectpark/rational.hpp"

namespace rectpark {

enum class Basis { p, h, e, m, s };

std::string_view basis_name(Basis b);
// Throws std::invalid_argument on an unknown name.
Basis parse_basis(std::string_view name);

class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sparse rational combination of basis elements indexed by partitions.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational, CanonicalOrder>;

  explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
  static SymFunc term(Basis basis, Partition index, const Rational& coeff = 1);
  static SymFunc one(Basis basis) { return term(basis, Partition{}); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& index) const;

  // Adds coeff to the coefficient of index, erasing it if it cancels.
  void add_term(const Partition& index, const Rational& coeff);

  std::set<int> degrees() const;
  // Degree of a homogeneous element; nullopt for zero or mixed degrees.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);

  // "h[2] + h[1,1]", terms in canonical order; "0" for the zero function.
  std::string str() const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Basis basis_;
  Terms terms_;
};

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc scale(const SymFunc& f, const Rational& c);
// Product; p, h and e multiply by index concatenation, s goes through p.
// The monomial basis is not supported.
SymFunc mul(const SymFunc& f, const SymFunc& g);

inline SymFunc operator+(const SymFunc& f, const SymFunc& g) { return add(f, g); }
inline SymFunc operator-(const SymFunc& f, const SymFunc& g) { return add(f, -g); }
inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return mul(f, g); }
inline SymFunc operator*(const Rational& c, const SymFunc& f) { return scale(f, c); }

SymFunc to_basis(const SymFunc& f, Basis target);

// Hall inner product, <p_lambda, p_mu> = z_lambda delta.
Rational hall_scalar(const SymFunc& f, const SymFunc& g);

// <f, p_{1^n}>, the degree of the module with Frobenius characteristic f.
// Throws std::invalid_argument when f is not homogeneous.
Rational dimension(const SymFunc& f);

// f[c x]: p_k -> c p_k. The result is expressed in the basis of f.
SymFunc scale_powersums(const SymFunc& f, const Rational& c);

// Two-alphabet bases: h_rho(x) h_sigma(y), p_lambda(x) p_mu(y), s_lambda(x) s_mu(y).
enum class BiBasis { hh, pp, ss };

std::string_view bibasis_name(BiBasis b);
BiBasis parse_bibasis(std::string_view name);
Basis single_basis(BiBasis b);

struct BiOrder {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const {
    const CanonicalOrder order;
    if (a.first != b.first) return order(a.first, b.first);
    return order(a.second, b.second);
  }
};

class BiSymFunc {
 public:
  using Index = std::pair<Partition, Partition>;
  using Terms = std::map<Index, Rational, BiOrder>;

  explicit BiSymFunc(BiBasis basis = BiBasis::hh) : basis_(basis) {}
  static BiSymFunc term(BiBasis basis, Partition x, Partition y, const Rational& coeff = 1);
  static BiSymFunc one(BiBasis basis) { return term(basis, {}, {}); }

  BiBasis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& x, const Partition& y) const;
  void add_term(const Partition& x, const Partition& y, const Rational& coeff);

  BiSymFunc operator-() const;
  BiSymFunc& operator+=(const BiSymFunc& other);
  BiSymFunc& operator*=(const Rational& c);

  // "2*h[2](x)h[2](y) + h[1,1](x)h[1,1](y)"
  std::string str() const;

  friend bool operator==(const BiSymFunc&, const BiSymFunc&) = default;

 private:
  BiBasis basis_;
  Terms terms_;
};

BiSymFunc bi_add(const BiSymFunc& f, const BiSymFunc& g);
BiSymFunc bi_mul(const BiSymFunc& f, const BiSymFunc& g);
BiSymFunc bi_to_basis(const BiSymFunc& f, BiBasis target);
inline BiSymFunc bi_to_hh(const BiSymFunc& f) { return bi_to_basis(f, BiBasis::hh); }
// Exchanges the roles of x and y.
BiSymFunc swap_alphabets(const BiSymFunc& f);
// Tensor product f(x) g(y); both factors must be in the matching single basis.
BiSymFunc tensor(const SymFunc& fx, const SymFunc& gy, BiBasis basis);

// <g, h_m(y)>: every h_sigma(y) with |sigma| = m is replaced by 1.
// Throws std::invalid_argument when some term has y-degree other than m.
SymFunc specialize_y_all_ones_hook(const BiSymFunc& g, int m);

inline BiSymFunc operator+(const BiSymFunc& f, const BiSymFunc& g) { return bi_add(f, g); }
inline BiSymFunc operator*(const BiSymFunc& f, const BiSymFunc& g) { return bi_mul(f, g); }
inline BiSymFunc operator*(const Rational& c, const BiSymFunc& f) {
  BiSymFunc r = f;
  r *= c;
  return r;
}

}  // namespace rectpark
