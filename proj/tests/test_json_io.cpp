#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "lsreg/json_io.hpp"

using namespace lsreg;

TEST_CASE("cartesian states round-trip exactly") {
  const CartesianState st{{1.1, -0.2, 0.30000000000000004},
                          {0.1, 0.6, -0.2}};
  const CartesianState back = cartesian_from_json(to_json(st));
  CHECK(back.q == st.q);
  CHECK(back.p == st.p);

  // and through an actual string, digits included
  const auto reparsed = nlohmann::json::parse(to_json(st).dump());
  const CartesianState again = cartesian_from_json(reparsed);
  CHECK(again.q == st.q);
  CHECK(again.p == st.p);
}

TEST_CASE("sphere states round-trip exactly on both branches") {
  SphereState sp;
  sp.xi = {-0.477576934079161, 0.31132874773209174, 0.7958835257900354,
           -0.20387274522882615};
  sp.eta = {-0.2555238343449346, -0.7751134726309307, 0.0741979553234669,
            -0.2954288325151117};
  sp.sign = EnergySign::Negative;
  SphereState back = sphere_from_json(to_json(sp));
  CHECK(back.xi == sp.xi);
  CHECK(back.eta == sp.eta);
  CHECK(back.sign == EnergySign::Negative);

  sp.sign = EnergySign::Positive;
  back = sphere_from_json(nlohmann::json::parse(to_json(sp).dump()));
  CHECK(back.xi == sp.xi);
  CHECK(back.sign == EnergySign::Positive);
}

TEST_CASE("field order is pinned for clean diffs") {
  const CartesianState st{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
  CHECK(to_json(st).dump() == R"({"q":[1.0,2.0,3.0],"p":[4.0,5.0,6.0]})");

  SphereState sp;
  sp.xi = {1.0, 0.0, 0.0, 0.0};
  sp.eta = {0.0, 2.0, 0.0, 0.0};
  sp.sign = EnergySign::Negative;
  CHECK(to_json(sp).dump() ==
        R"({"xi":[1.0,0.0,0.0,0.0],"eta":[0.0,2.0,0.0,0.0],"sign":"neg"})");
  sp.sign = EnergySign::Positive;
  CHECK(to_json(sp).dump().find("\"sign\":\"pos\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
  using nlohmann::json;
  // missing field
  CHECK_THROWS_AS(cartesian_from_json(json::parse(R"({"q":[1,2,3]})")),
                  std::invalid_argument);
  // wrong arity
  CHECK_THROWS_AS(
      cartesian_from_json(json::parse(R"({"q":[1,2],"p":[1,2,3]})")),
      std::invalid_argument);
  // not an array
  CHECK_THROWS_AS(
      cartesian_from_json(json::parse(R"({"q":"x","p":[1,2,3]})")),
      std::invalid_argument);
  // bad sign tag
  CHECK_THROWS_AS(
      sphere_from_json(json::parse(
          R"({"xi":[1,0,0,0],"eta":[0,1,0,0],"sign":"none"})")),
      std::invalid_argument);
  // missing eta
  CHECK_THROWS_AS(
      sphere_from_json(json::parse(R"({"xi":[1,0,0,0],"sign":"neg"})")),
      std::invalid_argument);
}

TEST_CASE("direction sniffing looks for the xi field") {
  using nlohmann::json;
  CHECK(is_sphere_json(json::parse(
      R"({"xi":[1,0,0,0],"eta":[0,1,0,0],"sign":"neg"})")));
  CHECK_FALSE(is_sphere_json(json::parse(R"({"q":[1,2,3],"p":[4,5,6]})")));
  CHECK_FALSE(is_sphere_json(json::parse(R"([1,2,3])")));
}

TEST_CASE("17 significant digits reproduce the double") {
  CHECK(fmt17(0.1) == "0.10000000000000001");
  CHECK(fmt17(1.0) == "1");
  CHECK(fmt17(-2813.526454433077) == "-2813.5264544330771");
  for (const double v : {0.1, 1.0 / 3.0, -1962.867606873346, 1e-300, 5e300}) {
    CHECK(std::stod(fmt17(v)) == v);
  }
}
