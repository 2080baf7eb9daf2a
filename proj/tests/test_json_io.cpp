#include "printers.hpp"
#include "rectpark/json_io.hpp"

using namespace rectpark;

TEST_CASE("symmetric function round trip") {
  SymFunc f(Basis::h);
  f.add_term(Partition{2, 1}, Rational(3, 2));
  f.add_term(Partition{3}, -1);
  const Json j = to_json(f);
  CHECK(j["basis"] == "h");
  CHECK(j["terms"][0]["index"] == Json::array({3}));
  CHECK(j["terms"][0]["num"] == "-1");
  CHECK(j["terms"][1]["den"] == "2");
  CHECK(symfunc_from_json(j) == f);
  CHECK(symfunc_from_json(Json::parse(j.dump())) == f);
}

TEST_CASE("malformed symmetric function JSON") {
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"q","terms":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"h"})")), std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"h","terms":[{"index":[1,2],"num":"1","den":"1"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"h","terms":[{"index":[1],"num":"1","den":"0"}]})")),
                  std::invalid_argument);
}

TEST_CASE("bi-symmetric function round trip") {
  const BiSymFunc g = bifrobenius(3, 3);
  CHECK(bisymfunc_from_json(Json::parse(to_json(g).dump())) == g);
  CHECK(to_json(g)["basis"] == "hh");
}

TEST_CASE("paths and parking functions") {
  const RectDyckPath p(RectangleParams(5, 4), {3, 2, 1, 0});
  const Json jp = to_json(p);
  CHECK(jp["word"] == "SESESESEE");
  CHECK(jp["seq"] == Json::array({3, 2, 1, 0}));
  CHECK(dyck_path_from_json(jp) == p);
  CHECK_THROWS_AS(dyck_path_from_json(Json::parse(R"({"m":5,"n":4,"seq":[4,0,0,0]})")), std::invalid_argument);
  CHECK(to_json(p.as_free_path()) == Json::parse(R"({"m":5,"n":4,"word":"SESESESEE"})"));
  const ParkingFunction pf(RectangleParams(6, 3), {0, 4, 2});
  CHECK(to_json(pf) == Json::parse(R"({"m":6,"n":3,"word":[0,4,2]})"));
  CHECK(parking_from_json(to_json(pf)) == pf);
  CHECK_THROWS_AS(parking_from_json(Json::parse(R"({"m":2,"n":2,"word":[1,1]})")), std::invalid_argument);
}

TEST_CASE("positivity reports") {
  const auto c = check_signed_schur_image(Partition{1, 1}, 1, 1);
  const Json j = to_json(c);
  CHECK(j == Json::parse(R"({"mu":[1,1],"a":1,"b":1,"iota":1,"schur_positive":true,"coefficients":{"2":"1"}})"));
  const Json h = hook_report_json(0, 1, 1, 1, hpositivity_of_hook_image(0, 1, 1, 1));
  CHECK(h["h_positive"] == true);
  CHECK(h["coefficients"]["2"] == "1");
}

TEST_CASE("result wrapper") {
  const Json w = wrap_result(RectangleParams(4, 6), "all", to_json(park_frobenius(4, 6)), "h");
  CHECK(w["a"] == 2);
  CHECK(w["b"] == 3);
  CHECK(w["d"] == 2);
  CHECK(w["filter"] == "all");
  CHECK(symfunc_from_json(w["value"]) == park_frobenius(4, 6));
}
