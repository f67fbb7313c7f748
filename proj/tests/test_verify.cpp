#include "ncsym/verify.hpp"

#include <doctest.h>

using namespace ncsym;

namespace {

std::vector<Rational> unit(std::size_t k) {
  std::vector<Rational> v(4);
  v[k] = 1;
  return v;
}

/// Q(sqrt2, sqrt3) with tau_0(sqrt3) = 2 sqrt3, which is not a field map.
InstancePtr corrupted_biquadratic() {
  FieldTowerInstance::NumberFieldDescriptor d;
  d.key = "corrupted";
  d.description = "broken involution";
  d.m1 = 2;
  d.a = 2;
  d.x_name = "sqrt2";
  d.m2 = 2;
  d.b = 3;
  d.y_name = "sqrt3";
  std::vector<Rational> two_y(4), minus_x(4);
  two_y[2] = 2;
  minus_x[1] = -1;
  d.tau_images[0] = {unit(1), two_y};
  d.tau_images[1] = {minus_x, unit(2)};
  d.w[0] = unit(3);
  d.w[1] = unit(3);
  d.subfield_names = {"K0", "K1"};
  return FieldTowerInstance::from_descriptor(d);
}

}  // namespace

TEST_CASE("quick verification passes on every instance") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    CAPTURE(key);
    VerifyConfig cfg;
    cfg.nmax = 4;
    cfg.samples = 10;
    const auto results = run_suites(FieldTowerInstance::by_key(key), suite_names(), cfg);
    REQUIRE(results.size() == suite_names().size());
    for (const auto& r : results) {
      CAPTURE(r.name);
      CHECK(r.ok());
      CHECK(r.passed > 0);
    }
  }
}

TEST_CASE("suite results are reproducible") {
  VerifyConfig cfg;
  cfg.nmax = 4;
  cfg.samples = 10;
  const auto inst = FieldTowerInstance::rational_function();
  const auto a = run_suites(inst, {"indexed_tensor", "sym_algebra"}, cfg);
  const auto b = run_suites(inst, {"indexed_tensor", "sym_algebra"}, cfg);
  REQUIRE(a.size() == 2);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].to_json().dump() == b[k].to_json().dump());
  CHECK_THROWS_AS(run_suites(inst, {"nonsense"}, cfg), std::invalid_argument);
}

TEST_CASE("a misconfigured involution fails the field_tower suite first") {
  VerifyConfig cfg;
  cfg.nmax = 4;
  cfg.samples = 10;
  const auto results = run_suites(corrupted_biquadratic(), suite_names(), cfg);
  REQUIRE(!results.empty());
  CHECK(results.front().name == "field_tower");
  CHECK(!results.front().ok());
}
