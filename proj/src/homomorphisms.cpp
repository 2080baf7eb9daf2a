#include "rectpark/homomorphisms.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace rectpark {

namespace {

void require_coprime(int a, int b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw NotCoprime("(" + std::to_string(a) + "," + std::to_string(b) + ") is not a coprime pair");
}

Rational theta_generator(int k, int a, int b) {
  return make_rational(binomial(static_cast<unsigned>((a + b) * k), static_cast<unsigned>(a * k)), a + b);
}

Integer require_integer(const Rational& q, const char* what) {
  if (!is_integer(q))
    throw std::logic_error(std::string(what) + ": theta produced the non-integer " + to_string(q));
  return q.get_num();
}

SymFunc p_product(const SymFunc& f, const SymFunc& g) {
  SymFunc r(Basis::p);
  for (const auto& [x, cx] : f.terms())
    for (const auto& [y, cy] : g.terms()) r.add_term(x.merged(y), cx * cy);
  return r;
}

}  // namespace

Rational theta(const SymFunc& f, int a, int b) {
  require_coprime(a, b);
  Rational total = 0;
  const SymFunc fp = to_basis(f, Basis::p);
  for (const auto& [idx, c] : fp.terms()) {
    Rational v = c;
    for (int k : idx.parts()) v *= theta_generator(k, a, b);
    total += v;
  }
  return total;
}

SymFunc signed_e_product(const Composition& gamma) {
  const int sign = (gamma.size() - gamma.length()) % 2 ? -1 : 1;
  return SymFunc::term(Basis::e, gamma.sorted(), sign);
}

Integer count_dyck_closed(int m, int n) {
  const RectangleParams p(m, n);
  return require_integer(theta(SymFunc::term(Basis::h, Partition{p.d}), p.a, p.b), "count_dyck_closed");
}

Integer count_primitive_closed(int m, int n) {
  const RectangleParams p(m, n);
  return require_integer(theta(signed_e_product(Composition{p.d}), p.a, p.b), "count_primitive_closed");
}

Integer count_returns_closed(int m, int n, const Composition& gamma) {
  const RectangleParams p(m, n);
  PathFilter::with_returns(gamma).validate(p);
  return require_integer(theta(signed_e_product(gamma), p.a, p.b), "count_returns_closed");
}

SymFunc p_ab(int k, int a, int b) {
  require_coprime(a, b);
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SymFunc> cache;
  const auto key = std::make_tuple(k, a, b);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SymFunc r(Basis::p);
  for (const auto& lambda : partitions_of(b * k))
    r.add_term(lambda, make_rational(power(Integer(a * k), lambda.length()), z_of(lambda) * a));
  std::lock_guard lock(mutex);
  cache.emplace(key, r);
  return r;
}

SymFunc p_ab_by_plethysm(int k, int a, int b) {
  require_coprime(a, b);
  return scale(scale_powersums(SymFunc::term(Basis::h, Partition{b * k}), a * k), make_rational(1, a));
}

SymFunc Theta(const SymFunc& f, int a, int b) {
  require_coprime(a, b);
  if (!f.is_homogeneous()) throw std::invalid_argument("Theta: input is not homogeneous");
  SymFunc r(Basis::p);
  const SymFunc fp = to_basis(f, Basis::p);
  for (const auto& [idx, c] : fp.terms()) {
    SymFunc image = SymFunc::one(Basis::p);
    for (int k : idx.parts()) image = p_product(image, p_ab(k, a, b));
    r += c * image;
  }
  return r;
}

SymFunc park_frobenius(int m, int n, const PathFilter& filter) {
  const RectangleParams p(m, n);
  filter.validate(p);
  SymFunc source(Basis::h);
  switch (filter.kind) {
    case PathFilter::Kind::All: source = SymFunc::term(Basis::h, Partition{p.d}); break;
    case PathFilter::Kind::Primitive: source = signed_e_product(Composition{p.d}); break;
    case PathFilter::Kind::Returns: source = signed_e_product(filter.returns); break;
  }
  return to_basis(Theta(source, p.a, p.b), Basis::h);
}

SymFunc coprime_frobenius(int m, int n, CoprimeForm form) {
  const RectangleParams params(m, n);
  if (params.d != 1) throw NotCoprime("coprime_frobenius requires gcd(m, n) = 1");
  switch (form) {
    case CoprimeForm::PowerSum: {
      SymFunc r(Basis::p);
      for (const auto& lambda : partitions_of(n))
        r.add_term(lambda, make_rational(power(Integer(m), lambda.length()), z_of(lambda) * m));
      return r;
    }
    case CoprimeForm::Schur: {
      SymFunc r(Basis::s);
      for (const auto& lambda : partitions_of(n))
        r.add_term(lambda, schur_principal_eval(lambda, m) / m);
      return r;
    }
    case CoprimeForm::Complete: {
      SymFunc r(Basis::h);
      for (const auto& lambda : partitions_of(n)) {
        Integer num = 1;
        for (int i = 1; i < lambda.length(); ++i) num *= m - i;
        Integer den = 1;
        for (int v = 1; v <= n; ++v) den *= factorial(static_cast<unsigned>(lambda.multiplicity(v)));
        r.add_term(lambda, make_rational(num, den));
      }
      return r;
    }
  }
  return SymFunc(Basis::p);
}

BiSymFunc p_ab_xy(int k, int a, int b, BiForm form) {
  const int nx = b * k;
  const int ny = a * k;
  BiSymFunc r(BiBasis::hh);
  // Corner counts j run over every value for which both sums are nonempty.
  for (int j = 1; j <= std::min(nx, ny); ++j) {
    if (form == BiForm::Composition) {
      const Rational weight = make_rational(k, j);
      const auto rhos = compositions_of(nx, j);
      const auto sigmas = compositions_of(ny, j);
      for (const auto& rho : rhos)
        for (const auto& sigma : sigmas) r.add_term(rho.sorted(), sigma.sorted(), weight);
    } else {
      const auto mus = partitions_of(nx, j);
      const auto nus = partitions_of(ny, j);
      for (const auto& mu : mus) {
        const Integer wmu = multinomial(j, multiplicity_partition(mu).parts());
        for (const auto& nu : nus) {
          const Integer wnu = multinomial(j, multiplicity_partition(nu).parts());
          r.add_term(mu, nu, make_rational(k * wmu * wnu, j));
        }
      }
    }
  }
  return r;
}

BiSymFunc bifrobenius(int m, int n) {
  const RectangleParams p(m, n);
  std::map<int, BiSymFunc> gens;
  for (int k = 1; k <= p.d; ++k) gens.emplace(k, p_ab_xy(k, p.a, p.b));
  const auto series = exp_series(gens, p.d, BiSymFunc::one(BiBasis::hh));
  return series[p.d];
}

TruncatedSeries<SymFunc> frobenius_series(int a, int b, int truncation) {
  require_coprime(a, b);
  std::map<int, SymFunc> gens;
  for (int k = 1; k <= truncation; ++k) gens.emplace(k, p_ab(k, a, b));
  return exp_series(gens, truncation, SymFunc::one(Basis::p));
}

TruncatedSeries<SymFunc> primitive_series(int a, int b, int truncation) {
  require_coprime(a, b);
  std::map<int, SymFunc> gens;
  for (int k = 1; k <= truncation; ++k) gens.emplace(k, -p_ab(k, a, b));
  const auto one = TruncatedSeries<SymFunc>::one(truncation, SymFunc::one(Basis::p));
  return one - exp_series(gens, truncation, SymFunc::one(Basis::p));
}

}  // namespace rectpark
