#include "rectpark/symfunc.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace rectpark {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "p") return Basis::p;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

SymFunc SymFunc::term(Basis basis, Partition index, const Rational& coeff) {
  SymFunc f(basis);
  f.add_term(index, coeff);
  return f;
}

Rational SymFunc::coefficient(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& index, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<int> SymFunc::degrees() const {
  std::set<int> out;
  for (const auto& [idx, c] : terms_) out.insert(idx.size());
  return out;
}

std::optional<int> SymFunc::degree() const {
  const auto degs = degrees();
  if (degs.size() != 1) return std::nullopt;
  return *degs.begin();
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.basis_ != basis_)
    throw BasisMismatch("cannot add " + std::string(basis_name(basis_)) + " and " +
                        std::string(basis_name(other.basis_)) + " without conversion");
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

namespace {

std::string index_str(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

// Appends one term with its sign to a rendering in progress.
void render_term(std::string& out, const Rational& c, const std::string& monomial) {
  const bool negative = c < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (out.empty()) out += negative ? "-" : "";
  else out += negative ? " - " : " + ";
  if (monomial.empty()) {
    out += to_string(mag);
  } else {
    if (mag != 1) out += to_string(mag) + "*";
    out += monomial;
  }
}

}  // namespace

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    const std::string mono = idx.empty() ? "" : std::string(basis_name(basis_)) + index_str(idx);
    render_term(out, c, mono);
  }
  return out;
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
  SymFunc r = f;
  r += g;
  return r;
}

SymFunc scale(const SymFunc& f, const Rational& c) {
  SymFunc r = f;
  r *= c;
  return r;
}

namespace {

SymFunc concat_product(const SymFunc& f, const SymFunc& g) {
  SymFunc r(f.basis());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) r.add_term(a.merged(b), ca * cb);
  return r;
}

bool is_multiplicative(Basis b) { return b == Basis::p || b == Basis::h || b == Basis::e; }

}  // namespace

SymFunc mul(const SymFunc& f, const SymFunc& g) {
  if (f.basis() != g.basis()) throw BasisMismatch("mul: operands are in different bases");
  if (is_multiplicative(f.basis())) return concat_product(f, g);
  if (f.basis() == Basis::s)
    return to_basis(concat_product(to_basis(f, Basis::p), to_basis(g, Basis::p)), Basis::s);
  throw BasisMismatch("mul: multiplication in the monomial basis is not supported");
}

namespace {

// Gauss-Jordan inverse of a square rational matrix.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale_by = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale_by;
      inv[col][j] *= scale_by;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Expansions of single basis elements. Each table maps an index to its
// image; filled lazily and guarded by one mutex. Values are computed with
// the lock released, so a racing duplicate insert is harmless.
class ConversionTables {
 public:
  static ConversionTables& instance() {
    static ConversionTables tables;
    return tables;
  }

  // Basis element b_lambda expressed in p.
  SymFunc to_p(Basis b, const Partition& lambda) {
    if (b == Basis::p) return SymFunc::term(Basis::p, lambda);
    if (auto hit = lookup(to_p_[index(b)], lambda)) return *hit;
    SymFunc value = compute_to_p(b, lambda);
    store(to_p_[index(b)], lambda, value);
    return value;
  }

  // p_lambda expressed in basis b.
  SymFunc from_p(Basis b, const Partition& lambda) {
    if (b == Basis::p) return SymFunc::term(Basis::p, lambda);
    if (auto hit = lookup(from_p_[index(b)], lambda)) return *hit;
    SymFunc value = compute_from_p(b, lambda);
    store(from_p_[index(b)], lambda, value);
    return value;
  }

 private:
  using Table = std::map<Partition, SymFunc>;

  static std::size_t index(Basis b) { return static_cast<std::size_t>(b); }

  std::optional<SymFunc> lookup(const Table& t, const Partition& key) {
    std::lock_guard lock(mutex_);
    if (auto it = t.find(key); it != t.end()) return it->second;
    return std::nullopt;
  }

  void store(Table& t, const Partition& key, const SymFunc& value) {
    std::lock_guard lock(mutex_);
    t.emplace(key, value);
  }

  // Multiplicative bases: the image of a product index is the product of images.
  SymFunc product_of_generators(Basis target, const Partition& lambda,
                                SymFunc (ConversionTables::*gen)(Basis, int), Basis b) {
    SymFunc r = SymFunc::one(target);
    for (int part : lambda.parts()) r = concat_product(r, (this->*gen)(b, part));
    return r;
  }

  // h_n or e_n in p by the Newton identities
  //   n h_n = sum_k p_k h_{n-k},   n e_n = sum_k (-1)^{k-1} p_k e_{n-k}.
  SymFunc generator_to_p(Basis b, int n) {
    const Partition key{n};
    if (auto hit = lookup(to_p_[index(b)], key)) return *hit;
    SymFunc acc(Basis::p);
    for (int k = 1; k <= n; ++k) {
      SymFunc prev = n - k == 0 ? SymFunc::one(Basis::p) : generator_to_p(b, n - k);
      SymFunc termk = concat_product(SymFunc::term(Basis::p, Partition{k}), prev);
      if (b == Basis::e && (k - 1) % 2) termk *= -1;
      acc += termk;
    }
    acc *= make_rational(1, n);
    store(to_p_[index(b)], key, acc);
    return acc;
  }

  // p_n in h or e by the same identities solved for p_n.
  SymFunc generator_from_p(Basis b, int n) {
    const Partition key{n};
    if (auto hit = lookup(from_p_[index(b)], key)) return *hit;
    // h: p_n = n h_n - sum_{k<n} p_k h_{n-k}
    // e: (-1)^{n-1} p_n = n e_n - sum_{k<n} (-1)^{k-1} p_k e_{n-k}
    SymFunc acc = SymFunc::term(b, Partition{n}, n);
    for (int k = 1; k < n; ++k) {
      SymFunc termk = concat_product(generator_from_p(b, k), SymFunc::term(b, Partition{n - k}));
      if (b == Basis::e && (k - 1) % 2) termk *= -1;
      acc -= termk;
    }
    if (b == Basis::e && (n - 1) % 2) acc *= -1;
    store(from_p_[index(b)], key, acc);
    return acc;
  }

  SymFunc compute_to_p(Basis b, const Partition& lambda) {
    switch (b) {
      case Basis::h:
      case Basis::e:
        return product_of_generators(Basis::p, lambda, &ConversionTables::generator_to_p, b);
      case Basis::s: {
        SymFunc r(Basis::p);
        for (const auto& mu : partitions_of(lambda.size()))
          r.add_term(mu, make_rational(character(lambda, mu), z_of(mu)));
        return r;
      }
      case Basis::m: {
        const auto& inv = monomial_inverse(lambda.size());
        const auto parts = partitions_of(lambda.size());
        std::size_t row = 0;
        while (parts[row] != lambda) ++row;
        SymFunc r(Basis::p);
        for (std::size_t j = 0; j < parts.size(); ++j) r.add_term(parts[j], inv[row][j]);
        return r;
      }
      case Basis::p: break;
    }
    return SymFunc::term(Basis::p, lambda);
  }

  SymFunc compute_from_p(Basis b, const Partition& lambda) {
    switch (b) {
      case Basis::h:
      case Basis::e:
        return product_of_generators(b, lambda, &ConversionTables::generator_from_p, b);
      case Basis::s: {
        // <p_mu, s_lambda> = chi^lambda(mu)
        SymFunc r(Basis::s);
        for (const auto& nu : partitions_of(lambda.size())) r.add_term(nu, character(nu, lambda));
        return r;
      }
      case Basis::m: {
        // <p_mu, h_lambda> is the coefficient of m_lambda in p_mu.
        SymFunc r(Basis::m);
        for (const auto& nu : partitions_of(lambda.size()))
          r.add_term(nu, hall_scalar(SymFunc::term(Basis::p, lambda), to_p(Basis::h, nu)));
        return r;
      }
      case Basis::p: break;
    }
    return SymFunc::term(Basis::p, lambda);
  }

  // Inverse of the matrix M[mu][lambda] = coefficient of m_lambda in p_mu,
  // rows and columns in partitions_of order. Row lambda of the inverse is
  // m_lambda in p.
  const std::vector<std::vector<Rational>>& monomial_inverse(int n) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = m_inverse_.find(n); it != m_inverse_.end()) return it->second;
    }
    const auto parts = partitions_of(n);
    std::vector<std::vector<Rational>> mat(parts.size(), std::vector<Rational>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const SymFunc row = from_p(Basis::m, parts[i]);
      for (std::size_t j = 0; j < parts.size(); ++j) mat[i][j] = row.coefficient(parts[j]);
    }
    // p = M m, so m = M^{-1} p row by row.
    auto inv = invert(std::move(mat));
    std::lock_guard lock(mutex_);
    return m_inverse_.emplace(n, std::move(inv)).first->second;
  }

  std::mutex mutex_;
  std::array<Table, 5> to_p_;
  std::array<Table, 5> from_p_;
  std::map<int, std::vector<std::vector<Rational>>> m_inverse_;
};

SymFunc to_p(const SymFunc& f) {
  if (f.basis() == Basis::p) return f;
  auto& tables = ConversionTables::instance();
  SymFunc r(Basis::p);
  for (const auto& [idx, c] : f.terms()) r += c * tables.to_p(f.basis(), idx);
  return r;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const SymFunc in_p = to_p(f);
  if (target == Basis::p) return in_p;
  auto& tables = ConversionTables::instance();
  SymFunc r(target);
  for (const auto& [idx, c] : in_p.terms()) r += c * tables.from_p(target, idx);
  return r;
}

Rational hall_scalar(const SymFunc& f, const SymFunc& g) {
  const SymFunc fp = to_p(f);
  const SymFunc gp = to_p(g);
  Rational total = 0;
  for (const auto& [idx, c] : fp.terms()) {
    const Rational other = gp.coefficient(idx);
    if (other != 0) total += c * other * Rational(z_of(idx));
  }
  return total;
}

Rational dimension(const SymFunc& f) {
  if (f.is_zero()) return 0;
  const auto deg = f.degree();
  if (!deg) throw std::invalid_argument("dimension: symmetric function is not homogeneous");
  const SymFunc fp = to_p(f);
  return fp.coefficient(Partition(std::vector<int>(*deg, 1))) * Rational(factorial(*deg));
}

SymFunc scale_powersums(const SymFunc& f, const Rational& c) {
  SymFunc r(Basis::p);
  const SymFunc fp = to_p(f);
  for (const auto& [idx, v] : fp.terms()) r.add_term(idx, v * power(c, idx.length()));
  return to_basis(r, f.basis());
}

std::string_view bibasis_name(BiBasis b) {
  switch (b) {
    case BiBasis::hh: return "hh";
    case BiBasis::pp: return "pp";
    case BiBasis::ss: return "ss";
  }
  return "?";
}

BiBasis parse_bibasis(std::string_view name) {
  if (name == "hh") return BiBasis::hh;
  if (name == "pp") return BiBasis::pp;
  if (name == "ss") return BiBasis::ss;
  throw std::invalid_argument("unknown two-alphabet basis '" + std::string(name) + "'");
}

Basis single_basis(BiBasis b) {
  switch (b) {
    case BiBasis::hh: return Basis::h;
    case BiBasis::pp: return Basis::p;
    case BiBasis::ss: return Basis::s;
  }
  return Basis::p;
}

BiSymFunc BiSymFunc::term(BiBasis basis, Partition x, Partition y, const Rational& coeff) {
  BiSymFunc f(basis);
  f.add_term(x, y, coeff);
  return f;
}

Rational BiSymFunc::coefficient(const Partition& x, const Partition& y) const {
  auto it = terms_.find({x, y});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiSymFunc::add_term(const Partition& x, const Partition& y, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Index{x, y}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BiSymFunc BiSymFunc::operator-() const {
  BiSymFunc r = *this;
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

BiSymFunc& BiSymFunc::operator+=(const BiSymFunc& other) {
  if (other.basis_ != basis_) throw BasisMismatch("cannot add two-alphabet functions in different bases");
  for (const auto& [idx, c] : other.terms_) add_term(idx.first, idx.second, c);
  return *this;
}

BiSymFunc& BiSymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

std::string BiSymFunc::str() const {
  if (terms_.empty()) return "0";
  const std::string b(basis_name(single_basis(basis_)));
  std::string out;
  for (const auto& [idx, c] : terms_) {
    std::string mono;
    if (!idx.first.empty()) mono += b + index_str(idx.first) + "(x)";
    if (!idx.second.empty()) mono += b + index_str(idx.second) + "(y)";
    render_term(out, c, mono);
  }
  return out;
}

BiSymFunc bi_add(const BiSymFunc& f, const BiSymFunc& g) {
  BiSymFunc r = f;
  r += g;
  return r;
}

BiSymFunc bi_mul(const BiSymFunc& f, const BiSymFunc& g) {
  if (f.basis() != g.basis()) throw BasisMismatch("bi_mul: operands are in different bases");
  if (f.basis() == BiBasis::ss)
    return bi_to_basis(bi_mul(bi_to_basis(f, BiBasis::pp), bi_to_basis(g, BiBasis::pp)), BiBasis::ss);
  BiSymFunc r(f.basis());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      r.add_term(a.first.merged(b.first), a.second.merged(b.second), ca * cb);
  return r;
}

BiSymFunc tensor(const SymFunc& fx, const SymFunc& gy, BiBasis basis) {
  const Basis single = single_basis(basis);
  if (fx.basis() != single || gy.basis() != single)
    throw BasisMismatch("tensor: factors are not in the matching single-alphabet basis");
  BiSymFunc r(basis);
  for (const auto& [a, ca] : fx.terms())
    for (const auto& [b, cb] : gy.terms()) r.add_term(a, b, ca * cb);
  return r;
}

BiSymFunc bi_to_basis(const BiSymFunc& f, BiBasis target) {
  if (f.basis() == target) return f;
  const Basis from = single_basis(f.basis());
  const Basis to = single_basis(target);
  BiSymFunc r(target);
  for (const auto& [idx, c] : f.terms()) {
    const SymFunc x = to_basis(SymFunc::term(from, idx.first), to);
    const SymFunc y = to_basis(SymFunc::term(from, idx.second), to);
    r += c * tensor(x, y, target);
  }
  return r;
}

BiSymFunc swap_alphabets(const BiSymFunc& f) {
  BiSymFunc r(f.basis());
  for (const auto& [idx, c] : f.terms()) r.add_term(idx.second, idx.first, c);
  return r;
}

SymFunc specialize_y_all_ones_hook(const BiSymFunc& g, int m) {
  const BiSymFunc hh = bi_to_hh(g);
  SymFunc r(Basis::h);
  for (const auto& [idx, c] : hh.terms()) {
    if (idx.second.size() != m)
      throw std::invalid_argument("specialize_y_all_ones_hook: term of y-degree " +
                                  std::to_string(idx.second.size()) + " but m = " + std::to_string(m));
    r.add_term(idx.first, c);
  }
  return r;
}

}  // namespace rectpark
