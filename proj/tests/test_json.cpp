#include <doctest.h>

#include <json.hpp>

#include "tl3d/algebra.hpp"
#include "tl3d/errors.hpp"
#include "tl3d/json_io.hpp"

using namespace tl3d;
using nlohmann::json;

TEST_SUITE_BEGIN("json");

TEST_CASE("tree round trip and validation") {
  RootedTree t = tree_from_string("()(())");
  json j = to_json(t);
  CHECK(j["brackets"] == "()(())");
  CHECK(j["loops"] == 3);
  CHECK(tree_from_json(j) == t);
  json noncanonical = {{"brackets", "(())()"}};
  CHECK(tree_from_json(noncanonical) == t);
  json wrong_count = {{"brackets", "()"}, {"loops", 5}};
  CHECK_THROWS_AS(tree_from_json(wrong_count), ParseError);
}

TEST_CASE("partition round trip uses signed labels") {
  SetPartition p(2, 2, {{0, 2}, {1}, {3}});
  json j = to_json(p);
  CHECK(j["ground"] == json::array({"1-", "2-", "1+", "2+"}));
  CHECK(j["blocks"][0] == json::array({"1-", "1+"}));
  CHECK(partition_from_json(j) == p);
  json bad = {{"ground", {"1-"}}, {"blocks", {{"1*"}}}};
  CHECK_THROWS_AS(partition_from_json(bad), ParseError);
}

TEST_CASE("diagram round trip re-validates admissibility") {
  Diagram d = identity(tree_from_string("(())"));
  json j = to_json(d);
  CHECK(j["source"] == "(())");
  CHECK(diagram_from_json(j) == d);
  json bad = {{"source", "(())"},
              {"target", "()"},
              {"blocks", {{"2-", "1+"}, {"1-"}}}};
  CHECK_THROWS_AS(diagram_from_json(bad), CheckViolation);
}

TEST_CASE("polynomial round trip") {
  Poly2 p = Poly2::monomial(2, 1, 2) +
            Poly2::monomial(1, 0, Rational(-1, 2)) + Poly2::one();
  json j = to_json(p);
  CHECK(j["q^2*k^1"] == "2");
  CHECK(j["q^1*k^0"] == "-1/2");
  CHECK(j["q^0*k^0"] == "1");
  CHECK(poly_from_json(j) == p);
  CHECK(p.to_string() == "1 - 1/2*q + 2*q^2*k");
}

TEST_CASE("linear combination round trip") {
  RootedTree f = tree_from_string("()()");
  Diagram a(f, f, SetPartition(2, 2, {{0, 2}, {1}, {3}}));
  LinComb x = compose_h(a, a);
  json j = to_json(x);
  CHECK(lincomb_from_json(j) == x);
  CHECK(x.to_string().find("×") != std::string::npos);
}

TEST_CASE("gram and hasse exports carry their structure") {
  json jg = to_json(gram_matrix(tree_from_string("(())"),
                                tree_from_string("()")));
  CHECK(jg["section"] == "()");
  CHECK(jg["entries"][0][0] == "q");
  CHECK(jg["entries"][0][1] == "1");
  CHECK(jg["flags"][0][0] == false);

  json jh = to_json(hasse(2));
  CHECK(jh["nodes"] == json::array({"", "()", "()()", "(())"}));
  CHECK(jh["covers"].size() == 3);
}

TEST_SUITE_END();
