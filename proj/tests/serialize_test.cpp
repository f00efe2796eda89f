#include "arconv/serialize.hpp"
#include "arconv/special.hpp"

#include "doctest.h"
#include "gen.hpp"
#include "json.hpp"

using namespace arconv;

TEST_CASE("sequence JSON layout") {
  NamedSeq s{"bernoulli", bernoulli(4)};
  CHECK(to_json(s) ==
        "{\"name\":\"bernoulli\",\"depth\":4,\"values\":[[\"1\",\"1\"],[\"-1\",\"2\"],[\"1\",\"6\"],[\"0\",\"1\"],[\"-1\","
        "\"30\"]]}\n");
}

TEST_CASE("polynomial entries") {
  NamedSeq s{"bx", bernoulli_poly(2)};
  CHECK(to_json(s) ==
        "{\"name\":\"bx\",\"depth\":2,\"values\":[[[\"1\",\"1\"]],[[\"-1\",\"2\"],[\"1\",\"1\"]],[[\"1\",\"6\"],[\"-1\","
        "\"1\"],[\"1\",\"1\"]]]}\n");
  PolySeq z(1);
  z[0] = RatPoly(Rat(1));
  CHECK(to_json(NamedSeq{"z", z}) == "{\"name\":\"z\",\"depth\":1,\"values\":[[[\"1\",\"1\"]],[]]}\n");
  NamedSeq back = seq_from_json(to_json(NamedSeq{"z", z}));
  CHECK(std::get<PolySeq>(back.seq) == z);
}

TEST_CASE("JSON round trip") {
  gen::Gen g(17);
  for (int i = 0; i < 20; ++i) {
    Seq f = g.seq(g.depth(0, 12));
    NamedSeq s{"f" + std::to_string(i), f};
    std::string text = to_json(s);
    NamedSeq back = seq_from_json(text);
    CHECK(back.name == s.name);
    CHECK(std::get<Seq>(back.seq) == f);
    CHECK(to_json(back) == text);

    PolySeq p = g.poly_seq(g.depth(0, 6), 3);
    NamedSeq ps{"p", p};
    CHECK(std::get<PolySeq>(seq_from_json(to_json(ps)).seq) == p);
  }
}

TEST_CASE("parsing canonicalises and validates") {
  NamedSeq s = seq_from_json(R"({"name":"x","depth":1,"values":[["4","-6"],["0","5"]]})");
  const Seq& f = std::get<Seq>(s.seq);
  CHECK(f[0] == make_rat(-2, 3));
  CHECK(f[1].get_den() == 1);
  CHECK(seq_from_json(R"({"values":[["1","1"]]})").name.empty());
  // a rational next to a polynomial lifts the sequence
  NamedSeq mixed = seq_from_json(R"({"values":[["1","2"],[["0","1"],["1","1"]]]})");
  CHECK(std::get<PolySeq>(mixed.seq)[1] == RatPoly::x());

  for (const char* bad : {"", "[]", "{}", R"({"values":[]})", R"({"values":[["1","0"]]})",
                          R"({"values":[["1"]]})", R"({"values":[[1,2]]})", R"({"values":[["a","1"]]})",
                          R"({"depth":3,"values":[["1","1"]]})", R"({"depth":-1,"values":[["1","1"]]})",
                          R"({"name":5,"values":[["1","1"]]})", R"({"values":["1"]})"}) {
    CAPTURE(bad);
    try {
      seq_from_json(bad);
      FAIL("accepted malformed input");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }
}

TEST_CASE("CSV") {
  CHECK(to_csv(NamedSeq{"b", bernoulli(2)}) == "k,numerator,denominator\n0,1,1\n1,-1,2\n2,1,6\n");
  CHECK(to_csv(NamedSeq{"b", bernoulli_poly(1)}) == "k,polynomial\n0,1\n1,x - 1/2\n");
}

TEST_CASE("Dirichlet JSON") {
  DirSeq f = mobius(3);
  CHECK(to_json("mu", f) ==
        "{\"name\":\"mu\",\"bound\":3,\"index_base\":1,\"values\":[[\"1\",\"1\"],[\"-1\",\"1\"],[\"-1\",\"1\"]]}\n");
}

TEST_CASE("report JSON") {
  IdentityReport pass{"eq3", {}, 4, true, std::nullopt, {}};
  auto j = nlohmann::ordered_json::parse(to_json(pass));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"name", "params", "depth", "pass", "first_failure", "notes"});
  CHECK(j["first_failure"].is_null());

  IdentityReport one{"x", {{"a", "1"}}, 3, false, Failure{{{"k", 2}}, Value(make_rat(1, 2)), Value(Rat(0))}, {}};
  j = nlohmann::ordered_json::parse(to_json(one));
  CHECK(j["first_failure"]["index"] == 2);
  CHECK(j["first_failure"]["lhs"] == nlohmann::ordered_json::array({"1", "2"}));
  CHECK(j["params"]["a"] == "1");

  IdentityReport two{"y", {}, 3, false, Failure{{{"m", 1}, {"n", 0}}, Value(RatPoly::x()), Value(RatPoly())}, {"n"}};
  j = nlohmann::ordered_json::parse(to_json(two));
  CHECK(j["first_failure"]["index"]["m"] == 1);
  CHECK(j["first_failure"]["index"]["n"] == 0);
  CHECK(j["first_failure"]["rhs"].empty());
  CHECK(j["notes"][0] == "n");
  CHECK(value_string(Value(RatPoly::x())) == "x");
}
