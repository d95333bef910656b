#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "singspec/corpus.hpp"
#include "singspec/error.hpp"
#include "singspec/report.hpp"
#include "singspec/snc_model.hpp"
#include "singspec/spectrum.hpp"
#include "cover_oracle.hpp"

using namespace singspec;
using namespace singspec::testing;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
FracPoly F(const std::string& text) { return FracPoly::parse(text); }
const EquivClass kOne = EquivClass::unit();
const EquivClass kL = EquivClass::lefschetz();

EquivClass random_class(std::mt19937_64& rng) {
  EquivClass c;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    const auto p = static_cast<std::int32_t>(rng() % 4);
    const auto q = static_cast<std::int32_t>(rng() % 4);
    const long den = 1 + static_cast<long>(rng() % 6);
    const long num = static_cast<long>(rng() % static_cast<unsigned long>(den));
    c.add(p, q, Rational(num, den), static_cast<std::int64_t>(rng() % 7) - 3);
  }
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string pointer_of(const std::string& json) {
  try {
    parse_model(json);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

FracPoly local_spectrum(const SncModel& m) {
  return milnor_sp_prime(nearby_fiber_class(m, NearbyVariant::kTotalSpace), m.dimension());
}

}  // namespace

TEST_CASE("class_add and class_mul examples") {
  CHECK(class_add(kOne, -kOne).is_zero());
  std::mt19937_64 rng(3);
  const EquivClass a = random_class(rng);
  CHECK(class_add(a, EquivClass()) == a);
  CHECK(class_add(kL, kL) == EquivClass::single(1, 1, R(0), 2));
  CHECK(class_add(kL, kL).str() == "{(1,1,0):2}");
  CHECK(class_mul(kL, kL) == EquivClass::single(2, 2, R(0), 1));
  const EquivClass half = EquivClass::single(0, 0, R(1, 2), 1);
  CHECK(class_mul(half, half) == kOne);
  EquivClass binom;
  binom.add(0, 0, R(0), 1);
  binom.add(1, 1, R(0), -2);
  binom.add(2, 2, R(0), 1);
  CHECK((kOne - kL).pow(2) == binom);
  CHECK(EquivClass().str() == "0");
  CHECK(EquivClass::single(0, 0, R(7, 6), 1) == EquivClass::single(0, 0, R(1, 6), 1));
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 300; ++i) {
    const EquivClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * kOne == a);
    CHECK(a * kL * b == a * b * kL);
    CHECK(a - a == EquivClass());
    CHECK(euler_specialization(a * b) == euler_specialization(a) * euler_specialization(b));
    for (const auto& [k, m] : a.entries()) {
      CHECK(m != 0);
      CHECK(k.angle >= R(0));
      CHECK(k.angle < R(1));
    }
  }
}

TEST_CASE("property: (1 - L)^k is the alternating binomial expansion") {
  for (std::uint32_t k = 0; k <= 8; ++k) {
    EquivClass expected;
    std::int64_t binom = 1;
    for (std::uint32_t j = 0; j <= k; ++j) {
      expected.add(static_cast<std::int32_t>(j), static_cast<std::int32_t>(j), R(0), (j % 2 ? -1 : 1) * binom);
      binom = binom * (k - j) / (j + 1);
    }
    EquivClass repeated = kOne;
    for (std::uint32_t j = 0; j < k; ++j) repeated = class_mul(repeated, kOne - kL);
    CHECK(repeated == expected);
    CHECK((kOne - kL).pow(k) == expected);
  }
}

TEST_CASE("euler, reduce, sp_prime examples") {
  CHECK(euler_specialization(kOne - kL) == 0);
  CHECK(euler_specialization(EquivClass()) == 0);
  CHECK(reduce_class(kOne).is_zero());
  CHECK(reduce_class(kL) == kL - kOne);
  CHECK(sp_prime_of_class(EquivClass::single(0, 0, R(5, 6), 1)) == F("t^(5/6)"));
  CHECK(sp_prime_of_class(kL) == F("t"));
  CHECK(sp_prime_of_class(EquivClass::single(1, 0, R(1, 6), -2)) == F("-2*t^(7/6)"));
  CHECK(sp_prime_of_class(EquivClass()).is_zero());
  CHECK(sp_of_class_hodge(EquivClass::single(1, 0, R(1, 6), 1), 2) == F("t^(5/6)"));
  CHECK(sp_of_class_hodge(kOne, 2) == F("t^2"));
}

TEST_CASE("property: the two spectrum functionals agree on random classes") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const EquivClass c = random_class(rng);
    for (std::int64_t n = 1; n <= 4; ++n) CHECK(sp_twist(sp_prime_of_class(c), n) == sp_of_class_hodge(c, n));
    CHECK(sp_prime_of_class(c + c) == sp_prime_of_class(c) + sp_prime_of_class(c));
  }
}

TEST_CASE("covering degrees") {
  const SncModel m(2,
                   {V("a", 6), V("b", 4), V("c", 2), V("d", 3), V("e", 1), {"h", 5, ComponentKind::kHorizontal}},
                   {});
  CHECK(covering_degree({"a"}, m) == 6);
  CHECK(covering_degree({"a", "b"}, m) == 2);
  CHECK(covering_degree({"c", "d"}, m) == 1);
  CHECK_THROWS_AS(covering_degree({"a", "h"}, m), HorizontalComponent);
  CHECK_THROWS_AS(covering_degree({"zz"}, m), ModelError);
  CHECK(component_count_cstar({"a"}, "b", m) == 2);
  CHECK(component_count_cstar({"a"}, "e", m) == 1);
  CHECK(component_count_cstar({"c", "b"}, "d", m) == 1);
  CHECK_THROWS_AS(component_count_cstar({"a"}, "h", m), HorizontalComponent);
}

TEST_CASE("property: covering degree is monotone under enlarging I") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SncComponent> comps;
    for (int i = 0; i < 6; ++i) comps.push_back(V("c" + std::to_string(i), 1 + static_cast<long>(rng() % 24)));
    const SncModel m(1, comps, {});
    std::vector<std::string> ids;
    std::int64_t prev = covering_degree({comps[0].id}, m);
    ids.push_back(comps[0].id);
    for (int i = 1; i < 6; ++i) {
      ids.push_back(comps[static_cast<std::size_t>(i)].id);
      const std::int64_t cur = covering_degree(ids, m);
      CHECK(cur <= prev);
      CHECK(prev % cur == 0);
      prev = cur;
    }
  }
}

TEST_CASE("nearby fiber: I2 degeneration") {
  const SncModel m = parse_model(fixture_i2_model());
  const EquivClass c = nearby_fiber_class(m, NearbyVariant::kTotalSpace);
  CHECK(c.is_zero());
  CHECK(euler_specialization(c) == 0);
  CHECK(nearby_fiber_class(m, NearbyVariant::kOpenComplement).is_zero());
  CHECK(m.missing_strata().empty());
}

TEST_CASE("nearby fiber: single smooth component") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const EquivClass c = random_class(rng);
    const SncModel m(1, {V("Y", 1)}, {{{"Y"}, c}});
    CHECK(nearby_fiber_class(m, NearbyVariant::kTotalSpace) == c);
    CHECK(nearby_fiber_class(m, NearbyVariant::kOpenComplement) == c);
  }
}

TEST_CASE("nearby fiber: variants treat horizontal strata differently") {
  const SncModel m(1, {V("Y", 2), {"D", 1, ComponentKind::kHorizontal}},
                   {{{"Y"}, kL - kOne}, {{"D"}, kOne}, {{"Y", "D"}, kOne + kOne}});
  // Total space: Y plus Y∩D, each with |I ∩ vertical| = 1; D alone is skipped.
  CHECK(nearby_fiber_class(m, NearbyVariant::kTotalSpace) == kL + kOne);
  CHECK(nearby_fiber_class(m, NearbyVariant::kOpenComplement) == kL - kOne);
}

TEST_CASE("nearby fiber: cusp local Milnor fiber") {
  const SncModel m = parse_model(fixture_cusp_model());
  const EquivClass c = nearby_fiber_class(m, NearbyVariant::kTotalSpace);
  CHECK(euler_specialization(c) == -1);
  const FracPoly sp = milnor_sp_prime(c, 2);
  CHECK(sp == F("t^(5/6) + t^(7/6)"));
  CHECK(sp == sp_product_formula(WeightVector({R(1, 2), R(1, 3)})));
  CHECK(sp_twist(sp, 2) == sp);
  // A'Campo: only the singleton strata survive L -> 1.
  std::int64_t acampo = 0;
  for (const auto& s : m.strata()) {
    if (s.ids.size() == 1) acampo += euler_specialization(s.cover_class);
  }
  CHECK(acampo == -1);
}

TEST_CASE("Chevalley-Weil oracle reproduces the cusp fixture") {
  const SncModel oracle = oracle_model(cusp_resolution());
  const SncModel fixture = parse_model(fixture_cusp_model());
  for (const auto& s : fixture.strata()) {
    CAPTURE(s.cover_class.str());
    auto ids = s.ids;
    std::sort(ids.begin(), ids.end());
    bool found = false;
    for (const auto& o : oracle.strata()) {
      auto oids = o.ids;
      std::sort(oids.begin(), oids.end());
      if (oids == ids) {
        CHECK(o.cover_class == s.cover_class);
        found = true;
      }
    }
    CHECK(found);
  }
  CHECK(oracle.strata().size() == fixture.strata().size());
}

TEST_CASE("Chevalley-Weil oracle models give the product-formula spectrum") {
  CHECK(local_spectrum(oracle_model(cusp_resolution())) == F("t^(5/6) + t^(7/6)"));
  CHECK(local_spectrum(oracle_model(a3_resolution())) == sp_product_formula(WeightVector({R(1, 2), R(1, 4)})));
  for (std::int64_t d = 2; d <= 7; ++d) {
    CAPTURE(d);
    const SncModel m = oracle_model(cone_resolution(d));
    CHECK(local_spectrum(m) == sp_product_formula(WeightVector({R(1, d), R(1, d)})));
    CHECK(euler_specialization(nearby_fiber_class(m, NearbyVariant::kTotalSpace)) == 1 - (d - 1) * (d - 1));
  }
}

TEST_CASE("property: semistable vanishing") {
  // All multiplicities one: every stratum with |I| >= 2 carries a factor
  // (1 - L)^{|I|-1} whose Euler specialization vanishes.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SncComponent> comps;
    std::vector<Stratum> strata;
    const int k = 1 + static_cast<int>(rng() % 4);
    std::int64_t singles = 0;
    for (int i = 0; i < k; ++i) {
      comps.push_back(V("Y" + std::to_string(i), 1));
      const EquivClass c = random_class(rng);
      singles += euler_specialization(c);
      strata.push_back({{comps.back().id}, c});
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) strata.push_back({{comps[i].id, comps[j].id}, random_class(rng)});
    }
    if (k >= 3) strata.push_back({{"Y0", "Y1", "Y2"}, random_class(rng)});
    const SncModel m(1, comps, strata);
    CHECK(euler_specialization(nearby_fiber_class(m, NearbyVariant::kTotalSpace)) == singles);
  }
}

TEST_CASE("property: nearby class is independent of stratum order") {
  const SncModel base = parse_model(fixture_cusp_model());
  const EquivClass expected = nearby_fiber_class(base, NearbyVariant::kTotalSpace);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    auto strata = base.strata();
    std::shuffle(strata.begin(), strata.end(), rng);
    auto comps = base.components();
    std::shuffle(comps.begin(), comps.end(), rng);
    const SncModel m(base.dimension(), comps, strata);
    CHECK(nearby_fiber_class(m, NearbyVariant::kTotalSpace) == expected);
  }
}

TEST_CASE("missing strata are reported") {
  const SncModel m(1, {V("A", 1), V("B", 2)}, {{{"A"}, kOne}});
  CHECK(m.missing_strata() == std::vector<std::string>{"B"});
  CHECK(parse_model(fixture_cusp_model()).missing_strata().empty());
}

TEST_CASE("model validation in the constructor") {
  CHECK_THROWS_AS(SncModel(1, {{"D", 1, ComponentKind::kHorizontal}}, {}), ModelError);
  CHECK_THROWS_AS(SncModel(1, {V("A", 1)}, {{{"B"}, kOne}}), ModelError);
  CHECK_THROWS_AS(SncModel(1, {V("A", 1)}, {{{"A"}, kOne}, {{"A"}, kOne}}), ModelError);
  CHECK_THROWS_AS(SncModel(1, {V("A", 0)}, {}), ModelError);
}

TEST_CASE("model files: schema errors carry JSON pointers") {
  const std::string comps = R"("components": [{"id": "A", "multiplicity": 1, "kind": "vertical"}])";
  CHECK(pointer_of(R"({"n": 1, )" + comps + R"(, "strata": [], "extra": 1})") == "/extra");
  CHECK(pointer_of(R"({"n": 1, )" + comps + "}") == "/strata");
  CHECK(pointer_of(R"({"n": 1, "components": [{"id": "A", "multiplicity": 1, "kind": "sideways"}], "strata": []})") ==
        "/components/0/kind");
  CHECK(pointer_of(R"({"n": 1, "components": [{"id": "A", "multiplicity": 0, "kind": "vertical"}], "strata": []})") ==
        "/components/0/multiplicity");
  CHECK(pointer_of(R"({"n": 1, )" + comps + R"(, "strata": [{"ids": ["B"], "cover_class": []}]})") ==
        "/strata/0/ids/0");
  CHECK(pointer_of(R"({"n": 1, )" + comps +
                   R"(, "strata": [{"ids": ["A"], "cover_class": []}, {"ids": ["A"], "cover_class": []}]})") ==
        "/strata/1/ids");
  CHECK(pointer_of(R"({"n": 1, )" + comps + R"(, "strata": [{"ids": ["A"], "cover_class": [[0, 0, "3/2", 1]]}]})") ==
        "/strata/0/cover_class/0/2");
  CHECK(pointer_of(R"({"n": 1, )" + comps + R"(, "strata": [{"ids": ["A"], "cover_class": [[0, 0, "1/2", 0]]}]})") ==
        "/strata/0/cover_class/0/3");
  CHECK(pointer_of(R"({"n": 1, )" + comps + R"(, "strata": [{"ids": ["A"], "cover_class": [[0, 0, "x", 1]]}]})") ==
        "/strata/0/cover_class/0/2");
  CHECK(pointer_of(R"({"n": "1", )" + comps + R"(, "strata": []})") == "/n");
  CHECK(pointer_of("[1, 2]") == "");
  CHECK(pointer_of("{not json") == "");
  CHECK(pointer_of(R"({"n": 1, )" + comps + R"(, "strata": []})") == "<accepted>");
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), SchemaError);
}

TEST_CASE("model files: canonical round trip") {
  for (const auto* text : {&fixture_i2_model(), &fixture_cusp_model()}) {
    const SncModel m = parse_model(*text);
    CHECK(write_model(m) == *text);
    CHECK(parse_model(write_model(m)) == m);
  }
  const SncModel oracle = oracle_model(cone_resolution(4));
  CHECK(parse_model(write_model(oracle)) == oracle);
  CHECK(write_model(parse_model(write_model(oracle))) == write_model(oracle));
}

TEST_CASE("fixture files match the embedded copies") {
  CHECK(slurp(std::string(SINGSPEC_FIXTURE_DIR) + "/i2_model.json") == fixture_i2_model());
  CHECK(slurp(std::string(SINGSPEC_FIXTURE_DIR) + "/cusp_local_model.json") == fixture_cusp_model());
  CHECK(load_model(std::string(SINGSPEC_FIXTURE_DIR) + "/cusp_local_model.json") == parse_model(fixture_cusp_model()));
}
