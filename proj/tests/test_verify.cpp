#include "doctest.h"
#include "qrep/fixtures.hpp"
#include "qrep/verify.hpp"

using namespace qrep;

namespace {

Representation flip(const Representation& x, std::size_t arrow, std::size_t r, std::size_t c) {
  auto maps = x.maps();
  auto& s = maps[arrow](r, c);
  s = s.is_zero() ? Scalar::one(x.field()) : Scalar::zero(x.field());
  return Representation(x.quiver_ptr(), x.field(), x.dims(), maps);
}

}  // namespace

TEST_CASE("the pipeline passes over Q, F_2 and F_3") {
  for (const Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    CAPTURE(f.name());
    const auto report = verify_paper(f);
    CHECK(report.passed());
    REQUIRE(report.checks.size() == 8);
    CHECK(report.checks[0].value == "1,1,1,8,12,2,7,7");
    CHECK(report.checks[1].value == "<alpha,alpha>=1 real=true");
    CHECK(report.checks[3].value == "(0,0,0,1,2,0,1,1) (0,1,1,4,7,1,4,4) (1,0,1,4,7,1,4,4) (1,1,0,4,7,1,4,4)");
    CHECK(report.checks[4].value == "b2=(0,0) b3=(0,0) b4=(0,0) b1=(3,2)");
    REQUIRE(report.observations.size() == 4);
    CHECK(report.observations[0].value == "1");
    CHECK(report.observations[1].value == "hom(X,S)=4 hom(S,X)=2 ext(S,X)=0 ext(X,S)=1");
    CHECK(report.observations[2].value == "3");
    CHECK(report.observations[3].value.find("Ext^1(X,S) != 0") != std::string::npos);
  }
  CHECK(verify_paper(Field::prime(3)).checks[2].value == "dims=1,1,1,8,12,2,7,7 end=9 local_F2=true local_F3=true");
}

TEST_CASE("report formats") {
  const auto report = verify_paper(Field::prime(2));
  const auto kv = report.to_key_values();
  CHECK(kv.find("check.1.name=") != std::string::npos);
  CHECK(kv.find("check.8.pass=true\n") != std::string::npos);
  CHECK(kv.find("check.3.value=dims=1,1,1,8,12,2,7,7 end=9 local_F2=true\n") != std::string::npos);
  CHECK(kv.substr(kv.size() - 10) == "pass=true\n");
  const auto text = report.to_text();
  CHECK(text.find("[FAIL]") == std::string::npos);
  CHECK(text.find("RESULT: all checks passed") != std::string::npos);
}

TEST_CASE("the pipeline is deterministic") {
  CHECK(verify_paper(Field::rationals()).to_key_values() == verify_paper(Field::rationals()).to_key_values());
}

TEST_CASE("a corrupted X_alpha fails the structure check") {
  auto fx = FixtureSet::load(Field::rationals());
  // With X_a = 0 the simple at vertex 1 splits off.
  const auto a = fx.quiver->arrow_index("a");
  REQUIRE_FALSE(fx.x_alpha.map(a)(5, 0).is_zero());
  fx.x_alpha = flip(fx.x_alpha, a, 5, 0);
  const auto report = verify_paper(fx);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.checks[2].pass);
  CHECK(report.checks[2].value.find("end=9 ") == std::string::npos);
  CHECK_FALSE(report.checks[7].pass);
  CHECK(report.checks[0].pass);
}

TEST_CASE("a corrupted X_beta1 fails") {
  auto fx = FixtureSet::load(Field::prime(2));
  fx.x_beta1 = flip(fx.x_beta1, fx.quiver->arrow_index("d"), 0, 0);
  const auto report = verify_paper(fx);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.checks[5].pass);
}
