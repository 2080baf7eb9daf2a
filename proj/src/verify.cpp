#include "rectpark/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "rectpark/homomorphisms.hpp"
#include "rectpark/parking.hpp"
#include "rectpark/paths.hpp"

namespace rectpark {

namespace {

std::string pair_str(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void expect(std::vector<CheckResult>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
}

std::vector<CheckResult> check_counts(int m, int n) {
  std::vector<CheckResult> out;
  const RectangleParams p(m, n);
  const long long brute = count_dyck(m, n);
  const Integer closed = count_dyck_closed(m, n);
  expect(out, "cat" + pair_str(m, n), closed == Integer(static_cast<long>(brute)),
         "theta gives " + closed.get_str() + ", enumeration " + std::to_string(brute));

  const Integer by_shapes = count_parking_by_shapes(m, n);
  const Rational dim = dimension(park_frobenius(m, n));
  expect(out, "parking_count" + pair_str(m, n), dim == Rational(by_shapes),
         "dimension " + to_string(dim) + ", shapes " + by_shapes.get_str());
  if (p.d == 1) {
    const Integer law = power(Integer(m), static_cast<unsigned>(n - 1));
    expect(out, "coprime_law" + pair_str(m, n), law == by_shapes,
           "m^(n-1) = " + law.get_str() + ", shapes " + by_shapes.get_str());
  }
  return out;
}

std::vector<CheckResult> check_frobenius(int m, int n) {
  std::vector<CheckResult> out;
  const RectangleParams p(m, n);
  std::vector<PathFilter> filters{PathFilter::all(), PathFilter::primitive()};
  for (const auto& gamma : compositions_of(p.d)) filters.push_back(PathFilter::with_returns(gamma));
  for (const auto& filter : filters) {
    const SymFunc closed = park_frobenius(m, n, filter);
    const SymFunc brute = brute_frobenius(m, n, filter);
    expect(out, "frobenius" + pair_str(m, n) + " filter=" + filter.str(), closed == brute,
           "closed " + closed.str() + " vs brute " + brute.str());
  }
  if (p.d == 1) {
    const SymFunc ph = to_basis(coprime_frobenius(m, n, CoprimeForm::PowerSum), Basis::h);
    const SymFunc sh = to_basis(coprime_frobenius(m, n, CoprimeForm::Schur), Basis::h);
    const SymFunc hh = coprime_frobenius(m, n, CoprimeForm::Complete);
    expect(out, "coprime_forms" + pair_str(m, n), ph == sh && sh == hh && hh == brute_frobenius(m, n),
           "p-form " + ph.str() + ", s-form " + sh.str() + ", h-form " + hh.str());
  }
  return out;
}

std::vector<CheckResult> check_bijections(int m, int n) {
  std::vector<CheckResult> out;
  std::map<int, long long> dyck_t, bin_t;
  std::map<std::pair<int, int>, long long> dyck_tj, cbin_tj;
  bool round_trip = true;
  std::set<std::pair<std::string, int>> bin_images, cbin_images;
  for (const auto& path : enumerate_dyck(m, n)) {
    const int t = static_cast<int>(highest_rank_points(path).size());
    const int j = static_cast<int>(corners(path).size());
    ++dyck_t[t];
    ++dyck_tj[{t, j}];
    for (int cut = 1; cut <= m; ++cut) {
      const auto img = bizley_forward(path, cut);
      round_trip = round_trip && static_cast<int>(highest_rank_points(img.path).size()) == t &&
                   bizley_backward(img.path, img.highest_index) == std::pair{path, cut};
      bin_images.emplace(img.path.str(), img.highest_index);
    }
    for (int cut = 1; cut <= j; ++cut) {
      const auto img = corner_forward(path, cut);
      round_trip = round_trip && img.path.starts_south() &&
                   static_cast<int>(highest_rank_points(img.path).size()) == t &&
                   static_cast<int>(corners(img.path).size()) == j &&
                   corner_backward(img.path, img.highest_index) == std::pair{path, cut};
      cbin_images.emplace(img.path.str(), img.highest_index);
    }
  }
  long long bin_total = 0, cbin_total = 0;
  for (const auto& path : enumerate_free(m, n, false)) {
    const int t = static_cast<int>(highest_rank_points(path).size());
    ++bin_t[t];
    bin_total += t;
    if (path.starts_south()) {
      ++cbin_tj[{t, static_cast<int>(corners(path).size())}];
      cbin_total += t;
    }
  }
  std::set<int> ts;
  for (const auto& [t, c] : dyck_t) ts.insert(t);
  for (const auto& [t, c] : bin_t) ts.insert(t);
  bool ok = true;
  std::string detail;
  for (int t : ts) {
    if (dyck_t[t] * m != bin_t[t] * t) {
      ok = false;
      detail += " t=" + std::to_string(t);
    }
  }
  expect(out, "bijection_bin" + pair_str(m, n), ok, "mismatch at" + detail);
  std::set<std::pair<int, int>> tjs;
  for (const auto& [tj, c] : dyck_tj) tjs.insert(tj);
  for (const auto& [tj, c] : cbin_tj) tjs.insert(tj);
  ok = true;
  detail.clear();
  for (const auto& [t, j] : tjs) {
    if (dyck_tj[{t, j}] * j != cbin_tj[{t, j}] * t) {
      ok = false;
      detail += " (t,j)=(" + std::to_string(t) + "," + std::to_string(j) + ")";
    }
  }
  expect(out, "bijection_cbin" + pair_str(m, n), ok, "mismatch at" + detail);
  expect(out, "bijection_round_trip" + pair_str(m, n),
         round_trip && static_cast<long long>(bin_images.size()) == bin_total &&
             static_cast<long long>(cbin_images.size()) == cbin_total,
         "forward and backward maps are not mutually inverse bijections");
  return out;
}

std::vector<CheckResult> check_path_structure(int m, int n) {
  std::vector<CheckResult> out;
  const RectangleParams p(m, n);
  const auto paths = enumerate_dyck(m, n);
  bool involution = true;
  std::set<RectDyckPath> conjugates;
  for (const auto& path : paths) {
    const RectDyckPath c = conjugate_path(path);
    involution = involution && conjugate_path(c) == path;
    conjugates.insert(c);
  }
  expect(out, "conjugation" + pair_str(m, n),
         involution && static_cast<long long>(conjugates.size()) == count_dyck(n, m),
         "conjugation is not a bijection onto the (n,m) paths");

  Integer by_returns = 0;
  for (const auto& gamma : compositions_of(p.d)) by_returns += count_returns_closed(m, n, gamma);
  const Integer cat = count_dyck_closed(m, n);
  expect(out, "returns_partition" + pair_str(m, n), by_returns == cat,
         "sum over returns " + by_returns.get_str() + ", total " + cat.get_str());

  const Rational trivial = hall_scalar(brute_frobenius(m, n), SymFunc::term(Basis::s, Partition{n}));
  const Rational closed_trivial = hall_scalar(park_frobenius(m, n), SymFunc::term(Basis::s, Partition{n}));
  expect(out, "trivial_multiplicity" + pair_str(m, n),
         trivial == Rational(cat) && closed_trivial == Rational(cat) &&
             theta(SymFunc::term(Basis::h, Partition{p.d}), p.a, p.b) == Rational(cat),
         "<P, s_n> = " + to_string(trivial) + ", Cat = " + cat.get_str());

  bool integral = true;
  const SymFunc pf = park_frobenius(m, n);
  for (const auto& [idx, c] : pf.terms()) integral = integral && is_integer(c) && c > 0;
  expect(out, "h_integrality" + pair_str(m, n), integral, "non-integral or negative h coefficient");
  return out;
}

std::vector<CheckResult> check_coprime_extras(int m, int n, bool cosets) {
  std::vector<CheckResult> out;
  const SymFunc f = coprime_frobenius(m, n, CoprimeForm::PowerSum);
  bool ok = true;
  for (const auto& lambda : partitions_of(n))
    ok = ok && hall_scalar(f, SymFunc::term(Basis::s, lambda)) == schur_principal_eval(lambda, m) / m;
  expect(out, "hook_content" + pair_str(m, n), ok, "Schur multiplicities differ from s_lambda(1^m)/m");
  if (!cosets) return out;
  // Each coset of the diagonal action on Z_m^n holds exactly one parking function.
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  ok = true;
  while (ok) {
    int hits = 0;
    std::vector<int> v = w;
    for (int k = 0; k < m; ++k) {
      hits += is_parking(v, m, n);
      for (int& x : v) x = (x + 1) % m;
    }
    ok = hits == 1;
    int i = 0;
    while (i < n && ++w[static_cast<std::size_t>(i)] == m) w[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  expect(out, "coset_representatives" + pair_str(m, n), ok, "a coset without a unique parking function");
  return out;
}

std::vector<CheckResult> check_global() {
  std::vector<CheckResult> out;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::vector<int>> lo, hi;
      for (const auto& p : enumerate_dyck(k * n, n)) lo.push_back(p.seq());
      for (const auto& p : enumerate_dyck(k * n + 1, n)) hi.push_back(p.seq());
      expect(out, "staircase_stability" + pair_str(k * n, n), lo == hi,
             "Dyck(kn,n) and Dyck(kn+1,n) differ");
    }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (int k = 1; k <= 3; ++k)
        expect(out, "p_ab_two_routes(k=" + std::to_string(k) + ")" + pair_str(a, b),
               to_basis(p_ab(k, a, b), Basis::p) == to_basis(p_ab_by_plethysm(k, a, b), Basis::p),
               "explicit sum differs from h_bk[ak x]/a");
    }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (int k = 1; k <= 3; ++k)
        expect(out, "p_ab_xy_forms(k=" + std::to_string(k) + ")" + pair_str(a, b),
               p_ab_xy(k, a, b, BiForm::Composition) == p_ab_xy(k, a, b, BiForm::Partition),
               "composition form differs from partition form");
    }
  for (const auto& [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
    const int D = 3;
    const auto P = frobenius_series(a, b, D);
    const auto one = TruncatedSeries<SymFunc>::one(D, SymFunc::one(Basis::p));
    const auto product = P * (one - primitive_series(a, b, D));
    bool ok = true;
    for (int d = 0; d <= D; ++d) ok = ok && to_basis(product[d], Basis::p) == to_basis(one[d], Basis::p);
    expect(out, "series_identity" + pair_str(a, b), ok, "P (1 - P') differs from 1");
  }
  return out;
}

std::vector<CheckResult> check_bifrobenius(int m, int n) {
  std::vector<CheckResult> out;
  const BiSymFunc closed = bifrobenius(m, n);
  const BiSymFunc brute = brute_bifrobenius(m, n);
  expect(out, "bifrobenius" + pair_str(m, n), closed == brute,
         "closed " + closed.str() + " vs brute " + brute.str());
  expect(out, "bifrobenius_symmetry" + pair_str(m, n), swap_alphabets(closed) == bifrobenius(n, m),
         "swap of P(m,n) differs from P(n,m)");
  expect(out, "bifrobenius_reduction" + pair_str(m, n),
         specialize_y_all_ones_hook(closed, m) == park_frobenius(m, n),
         "<P(x,y), h_m(y)> differs from P(x)");
  return out;
}

}  // namespace

int threads_from_env() {
  if (const char* env = std::getenv("RECTPARK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<std::pair<int, int>> cases;
  for (int semi = 2; semi <= options.max_semi; ++semi)
    for (int m = 1; m < semi; ++m) cases.emplace_back(m, semi - m);

  std::vector<std::vector<CheckResult>> buffers(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto [m, n] = cases[i];
      auto& buf = buffers[i];
      try {
        for (auto&& r : check_counts(m, n)) buf.push_back(std::move(r));
        for (auto&& r : check_frobenius(m, n)) buf.push_back(std::move(r));
        for (auto&& r : check_path_structure(m, n)) buf.push_back(std::move(r));
        if (std::gcd(m, n) == 1)
          for (auto&& r : check_coprime_extras(m, n, m + n <= 9)) buf.push_back(std::move(r));
        if (m + n <= options.max_semi_bijection)
          for (auto&& r : check_bijections(m, n)) buf.push_back(std::move(r));
        if (m + n <= options.max_semi_bi)
          for (auto&& r : check_bifrobenius(m, n)) buf.push_back(std::move(r));
      } catch (const std::exception& e) {
        buf.push_back({"case" + pair_str(m, n), false, e.what()});
      }
    }
  };
  const int threads = std::max(1, options.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<CheckResult> all = check_global();
  for (auto& buf : buffers)
    for (auto& r : buf) all.push_back(std::move(r));
  return all;
}

}  // namespace rectpark
