#include "rectpark/json_io.hpp"

#include <stdexcept>

namespace rectpark {

namespace {

Json index_json(const Partition& p) { return Json(p.vec()); }

Partition index_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition index must be an array");
  return Partition(j.get<std::vector<int>>());
}

Rational coeff_from(const Json& term) {
  Integer num(term.at("num").get<std::string>());
  Integer den(term.at("den").get<std::string>());
  if (den == 0) throw std::invalid_argument("zero denominator");
  return make_rational(num, den);
}

template <class F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string key_of(const Partition& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Json coefficient_map(const SymFunc& f) {
  Json out = Json::object();
  for (const auto& [idx, c] : f.terms()) out[key_of(idx)] = to_string(c);
  return out;
}

}  // namespace

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms())
    terms.push_back({{"index", index_json(idx)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"basis", std::string(basis_name(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
  return guarded([&] {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms")) f.add_term(index_from(term.at("index")), coeff_from(term));
    return f;
  });
}

Json to_json(const BiSymFunc& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms())
    terms.push_back({{"x", index_json(idx.first)},
                     {"y", index_json(idx.second)},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  return {{"basis", std::string(bibasis_name(f.basis()))}, {"terms", terms}};
}

BiSymFunc bisymfunc_from_json(const Json& j) {
  return guarded([&] {
    BiSymFunc f(parse_bibasis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
      f.add_term(index_from(term.at("x")), index_from(term.at("y")), coeff_from(term));
    return f;
  });
}

Json to_json(const RectDyckPath& path) {
  return {{"m", path.params().m},
          {"n", path.params().n},
          {"seq", path.seq()},
          {"word", path.as_free_path().str()}};
}

RectDyckPath dyck_path_from_json(const Json& j) {
  return guarded([&] {
    return RectDyckPath(RectangleParams(j.at("m").get<int>(), j.at("n").get<int>()),
                        j.at("seq").get<std::vector<int>>());
  });
}

Json to_json(const FreePath& path) {
  return {{"m", path.params().m}, {"n", path.params().n}, {"word", path.str()}};
}

Json to_json(const ParkingFunction& pf) {
  return {{"m", pf.params().m}, {"n", pf.params().n}, {"word", pf.word()}};
}

ParkingFunction parking_from_json(const Json& j) {
  return guarded([&] {
    return ParkingFunction(RectangleParams(j.at("m").get<int>(), j.at("n").get<int>()),
                           j.at("word").get<std::vector<int>>());
  });
}

Json to_json(const ConjectureCase& c) {
  return {{"mu", c.mu.vec()},
          {"a", c.a},
          {"b", c.b},
          {"iota", c.iota},
          {"schur_positive", c.report.positive},
          {"coefficients", coefficient_map(c.report.coefficients)}};
}

Json hook_report_json(int k, int j, int a, int b, const PositivityReport& r) {
  return {{"hook", {k, j}},
          {"a", a},
          {"b", b},
          {"h_positive", r.positive},
          {"coefficients", coefficient_map(r.coefficients)}};
}

Json wrap_result(const RectangleParams& params, const std::string& filter, const Json& value,
                 const std::string& basis) {
  return {{"m", params.m}, {"n", params.n}, {"a", params.a},         {"b", params.b},
          {"d", params.d}, {"filter", filter}, {"basis", basis}, {"value", value}};
}

}  // namespace rectpark
