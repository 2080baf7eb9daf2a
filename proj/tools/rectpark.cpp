// rectpark: rectangular Dyck paths, parking functions and their Frobenius
// characteristics from the command line.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
// 3 counterexample to the signed Schur positivity conjecture.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rectpark/homomorphisms.hpp"
#include "rectpark/json_io.hpp"
#include "rectpark/positivity.hpp"
#include "rectpark/verify.hpp"

using namespace rectpark;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitConjecture = 3;

struct Options {
  std::string kind;
  int m = 0;
  int n = 0;
  std::string filter = "all";
  std::string basis;
  std::string format = "text";
  bool brute = false;
  int trunc = -1;
  int n_max = 7;
  int m_max = 8;
  int max_semi = 12;
  int d_max = 3;
  int hook_max = 4;
  std::vector<std::string> pairs;
};

bool json_out(const Options& o) { return o.format == "json"; }

int cmd_count(const Options& o) {
  const RectangleParams params(o.m, o.n);
  const PathFilter filter = PathFilter::parse(o.filter);
  filter.validate(params);
  Integer value;
  if (o.kind == "dyck") {
    if (o.brute) {
      long long c = 0;
      for_each_dyck(o.m, o.n, [&](const RectDyckPath& p) { c += filter.accepts(p); });
      value = Integer(static_cast<long>(c));
    } else if (filter.kind == PathFilter::Kind::All) {
      value = count_dyck_closed(o.m, o.n);
    } else if (filter.kind == PathFilter::Kind::Primitive) {
      value = count_primitive_closed(o.m, o.n);
    } else {
      value = count_returns_closed(o.m, o.n, filter.returns);
    }
  } else {
    if (o.brute) value = Integer(static_cast<long>(count_parking_brute(o.m, o.n, filter)));
    else value = dimension(park_frobenius(o.m, o.n, filter)).get_num();
  }
  if (json_out(o))
    std::cout << wrap_result(params, filter.str(), value.get_str(), o.kind).dump() << "\n";
  else
    std::cout << value.get_str() << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const RectangleParams params(o.m, o.n);
  const PathFilter filter = PathFilter::parse(o.filter);
  filter.validate(params);
  auto emit = [&](const Json& j, const std::string& text) {
    std::cout << (json_out(o) ? j.dump() : text) << "\n";
  };
  if (o.kind == "dyck") {
    for_each_dyck(o.m, o.n, [&](const RectDyckPath& p) {
      if (filter.accepts(p)) emit(to_json(p), p.str());
    });
  } else if (o.kind == "parking") {
    for_each_parking(o.m, o.n, filter, [&](const std::vector<int>& w) {
      const ParkingFunction pf(params, w);
      emit(to_json(pf), pf.str());
    });
  } else {
    for (const auto& p : enumerate_free(o.m, o.n, o.kind == "cfree")) emit(to_json(p), p.str());
  }
  return kExitOk;
}

int cmd_frobenius(const Options& o) {
  const Basis basis = parse_basis(o.basis.empty() ? "h" : o.basis);
  const PathFilter filter = PathFilter::parse(o.filter);
  if (o.trunc >= 0) {
    // Generating series in z for the coprime pair obtained by reducing (m, n).
    const RectangleParams params(o.m, o.n);
    if (filter.kind == PathFilter::Kind::Returns)
      throw std::invalid_argument("--trunc accepts the all and primitive filters only");
    const auto series = filter.kind == PathFilter::Kind::Primitive
                            ? primitive_series(params.a, params.b, o.trunc)
                            : frobenius_series(params.a, params.b, o.trunc);
    Json coeffs = Json::array();
    for (int d = 0; d <= o.trunc; ++d) {
      const SymFunc c = to_basis(series[d], basis);
      if (json_out(o)) coeffs.push_back(to_json(c));
      else std::cout << "z^" << d << ": " << c.str() << "\n";
    }
    if (json_out(o))
      std::cout << Json{{"a", params.a}, {"b", params.b}, {"filter", filter.str()}, {"trunc", o.trunc},
                        {"basis", std::string(basis_name(basis))}, {"coefficients", coeffs}}
                       .dump()
                << "\n";
    return kExitOk;
  }
  const RectangleParams params(o.m, o.n);
  const SymFunc f = to_basis(o.brute ? brute_frobenius(o.m, o.n, filter) : park_frobenius(o.m, o.n, filter), basis);
  if (json_out(o))
    std::cout << wrap_result(params, filter.str(), to_json(f), std::string(basis_name(basis))).dump() << "\n";
  else
    std::cout << f.str() << "\n";
  return kExitOk;
}

int cmd_bifrobenius(const Options& o) {
  const BiBasis basis = parse_bibasis(o.basis.empty() ? "hh" : o.basis);
  const RectangleParams params(o.m, o.n);
  const BiSymFunc f = bi_to_basis(o.brute ? brute_bifrobenius(o.m, o.n) : bifrobenius(o.m, o.n), basis);
  if (json_out(o))
    std::cout << wrap_result(params, "all", to_json(f), std::string(bibasis_name(basis))).dump() << "\n";
  else
    std::cout << f.str() << "\n";
  return kExitOk;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& texts) {
  std::vector<std::pair<int, int>> out;
  if (texts.empty()) return {{1, 1}, {1, 2}, {2, 1}, {2, 3}};
  for (const auto& t : texts) {
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--ab expects a,b");
    out.emplace_back(std::stoi(t.substr(0, comma)), std::stoi(t.substr(comma + 1)));
  }
  return out;
}

int cmd_positivity(const Options& o) {
  const auto pairs = parse_pairs(o.pairs);
  bool hooks_ok = true;
  bool conjecture_ok = true;
  Json hooks = Json::array();
  Json cases = Json::array();
  for (const auto& [a, b] : pairs) {
    for (int size = 1; size <= o.hook_max; ++size) {
      for (int j = 0; j < size; ++j) {
        const int k = size - 1 - j;
        const auto r = hpositivity_of_hook_image(k, j, a, b);
        hooks_ok = hooks_ok && r.positive;
        if (json_out(o)) {
          hooks.push_back(hook_report_json(k, j, a, b, r));
        } else if (!r.positive) {
          std::cout << "HOOK FAILURE (k|j)=(" << k << "|" << j << ") a=" << a << " b=" << b << ": "
                    << r.coefficients.str() << "\n";
        }
      }
    }
    for (int d = 1; d <= o.d_max; ++d) {
      for (const auto& mu : partitions_of(d)) {
        const auto c = check_signed_schur_image(mu, a, b);
        conjecture_ok = conjecture_ok && c.report.positive;
        if (json_out(o)) {
          cases.push_back(to_json(c));
        } else {
          std::cout << (c.report.positive ? "positive     " : "COUNTEREXAMPLE") << " mu=" << mu.str()
                    << " a=" << a << " b=" << b << " iota=" << c.iota << "  " << c.report.coefficients.str()
                    << "\n";
        }
      }
    }
  }
  if (json_out(o)) {
    std::cout << Json{{"hooks", hooks}, {"conjecture", cases}, {"d_max", o.d_max}, {"hook_max", o.hook_max}}.dump()
              << "\n";
  } else {
    std::cout << "hooks: " << (hooks_ok ? "all h-positive" : "FAILED") << "\n";
    std::cout << "conjecture: " << (conjecture_ok ? "no counterexample" : "counterexample found") << "\n";
  }
  if (!hooks_ok) return kExitMismatch;
  return conjecture_ok ? kExitOk : kExitConjecture;
}

int cmd_verify(const Options& o) {
  VerifyOptions opts;
  opts.max_semi = o.max_semi;
  opts.max_semi_bijection = std::min(o.max_semi, 10);
  opts.max_semi_bi = std::min(o.max_semi, 8);
  opts.threads = threads_from_env();
  const auto results = run_verification(opts);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (json_out(o)) continue;
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.ok) std::cout << "  " << r.detail;
    std::cout << "\n";
  }
  for (const auto& r : results) failed += !r.ok;
  if (json_out(o)) {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    std::cout << Json{{"checks", arr}, {"failed", failed}}.dump() << "\n";
  } else {
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed ? kExitMismatch : kExitOk;
}

int cmd_table(const Options& o) {
  const bool dyck = o.kind == "dyck";
  // Dyck table: rows m, columns n. Parking table: rows n, columns m.
  const int rows = dyck ? o.m_max : o.n_max;
  const int cols = dyck ? o.n_max : o.m_max;
  auto cell = [&](int r, int c) -> Integer {
    const int m = dyck ? r : c;
    const int n = dyck ? c : r;
    if (dyck) return o.brute ? Integer(static_cast<long>(count_dyck(m, n))) : count_dyck_closed(m, n);
    if (o.brute) return Integer(static_cast<long>(count_parking_brute(m, n)));
    return dimension(park_frobenius(m, n)).get_num();
  };
  if (json_out(o)) {
    Json table = Json::array();
    for (int r = 1; r <= rows; ++r) {
      Json row = Json::array();
      for (int c = 1; c <= cols; ++c) row.push_back(cell(r, c).get_str());
      table.push_back(row);
    }
    std::cout << Json{{"table", o.kind}, {"rows", dyck ? "m" : "n"}, {"columns", dyck ? "n" : "m"}, {"values", table}}
                     .dump()
              << "\n";
    return kExitOk;
  }
  std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(cols));
  std::size_t width = 1;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      grid[r - 1][c - 1] = cell(r, c).get_str();
      width = std::max(width, grid[r - 1][c - 1].size());
    }
  width = std::max(width, std::to_string(cols).size());
  const std::string corner = dyck ? "m\\n" : "n\\m";
  std::cout << std::setw(4) << corner << " |";
  for (int c = 1; c <= cols; ++c) std::cout << " " << std::setw(static_cast<int>(width)) << c;
  std::cout << "\n" << std::string(5 + cols * (width + 1) + 1, '-') << "\n";
  for (int r = 1; r <= rows; ++r) {
    std::cout << std::setw(4) << r << " |";
    for (int c = 1; c <= cols; ++c) std::cout << " " << std::setw(static_cast<int>(width)) << grid[r - 1][c - 1];
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectangular Dyck paths, parking functions and their Frobenius characteristics"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("m", o.m, "Width (east steps)")->required()->check(CLI::PositiveNumber);
    sub->add_option("n", o.n, "Height (south steps)")->required()->check(CLI::PositiveNumber);
  };
  auto add_filter = [&](CLI::App* sub) {
    sub->add_option("--filter", o.filter, "all | primitive | returns=c1,c2,...");
  };

  auto* count = app.add_subcommand("count", "Count Dyck paths or parking functions");
  count->add_option("kind", o.kind, "dyck | parking")->required()->check(CLI::IsMember({"dyck", "parking"}));
  add_mn(count);
  add_filter(count);
  count->add_flag("--brute", o.brute, "Count by enumeration");
  add_format(count);

  auto* enumerate = app.add_subcommand("enumerate", "List Dyck paths, parking functions or free paths");
  enumerate->add_option("kind", o.kind, "dyck | parking | free | cfree")
      ->required()
      ->check(CLI::IsMember({"dyck", "parking", "free", "cfree"}));
  add_mn(enumerate);
  add_filter(enumerate);
  add_format(enumerate);

  auto* frob = app.add_subcommand("frobenius", "Frobenius characteristic of (m,n)-parking functions");
  add_mn(frob);
  add_filter(frob);
  frob->add_option("--basis", o.basis, "p | h | e | m | s");
  frob->add_flag("--brute", o.brute, "Sum over Dyck shapes instead of the closed form");
  frob->add_option("--trunc", o.trunc, "Print the generating series in z up to this degree")
      ->check(CLI::NonNegativeNumber);
  add_format(frob);

  auto* bifrob = app.add_subcommand("bifrobenius", "Two-alphabet Frobenius characteristic");
  add_mn(bifrob);
  bifrob->add_option("--basis", o.basis, "hh | pp | ss");
  bifrob->add_flag("--brute", o.brute, "Sum over Dyck shapes instead of the closed form");
  add_format(bifrob);

  auto* pos = app.add_subcommand("positivity", "Positivity of Theta images of signed Schur functions");
  pos->add_option("--d-max", o.d_max, "Largest |mu| in the conjecture check")->check(CLI::PositiveNumber);
  pos->add_option("--hook-max", o.hook_max, "Largest hook size")->check(CLI::PositiveNumber);
  pos->add_option("--ab", o.pairs, "Coprime pair a,b (repeatable)");
  add_format(pos);

  auto* verify = app.add_subcommand("verify", "Check closed forms against enumeration");
  verify->add_option("--max-semi", o.max_semi, "Largest m+n")->check(CLI::PositiveNumber);
  add_format(verify);

  auto* table = app.add_subcommand("table", "Tables of path or parking function counts");
  table->add_option("kind", o.kind, "dyck | parking")->required()->check(CLI::IsMember({"dyck", "parking"}));
  table->add_option("--n-max", o.n_max, "Largest n")->check(CLI::PositiveNumber);
  table->add_option("--m-max", o.m_max, "Largest m")->check(CLI::PositiveNumber);
  table->add_flag("--brute", o.brute, "Count by enumeration");
  add_format(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*frob) return cmd_frobenius(o);
    if (*bifrob) return cmd_bifrobenius(o);
    if (*pos) return cmd_positivity(o);
    if (*verify) return cmd_verify(o);
    if (*table) return cmd_table(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
