#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "postlie/error.hpp"
#include "postlie/io/io.hpp"
#include "postlie/lie/catalog.hpp"
#include "postlie/solver/tables.hpp"

using namespace postlie;
using io::Json;

TEST_CASE("algebra json round trip") {
  for (const auto& [name, g] : lie::catalog_samples()) {
    CAPTURE(name);
    const auto j = io::to_json(g);
    const auto back = io::algebra_from_json(Json::parse(j.dump()));
    CHECK(back == g);
    CHECK(io::to_json(back).dump() == j.dump());
  }
}

TEST_CASE("product json round trip") {
  for (const auto& name : {"C3", "C4", "B4", "A3", "h1_plus_C"}) {
    CAPTURE(name);
    const auto p = solver::table(name).product();
    CHECK(io::product_from_json(Json::parse(io::to_json(p).dump())) == p);
  }
  const auto p = solver::table("C2(2/3)").product();
  CHECK(io::product_from_json(io::to_json(p)) == p);
}

TEST_CASE("malformed input") {
  auto bad = [](const char* text) { return io::algebra_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"dim":2,"brackets":[{"i":1,"j":3,"coeffs":{"1":"1"}}]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"x"}}]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1/0"}}]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}},{"i":1,"j":2,"coeffs":{"2":"1"}}]})"),
                  InputError);
  // [e1,e2]=e3, [e1,e3]=e1 breaks Jacobi
  CHECK_THROWS_AS(bad(R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}},{"i":1,"j":3,"coeffs":{"1":"1"}}]})"),
                  InputError);
  CHECK_THROWS_AS(io::resolve_algebra("catalog:nosuch"), InputError);
  CHECK_THROWS_AS(io::resolve_product("table:C2"), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("resolve from file") {
  const std::string path = "io_test_r2.json";
  {
    std::ofstream f(path);
    f << io::to_json(lie::catalog("r2")).dump();
  }
  CHECK(io::resolve_algebra(path) == lie::catalog("r2"));
  std::remove(path.c_str());
}

TEST_CASE("digest is stable") {
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == io::digest("a"));
  CHECK(io::digest("a") != io::digest("b"));
}
