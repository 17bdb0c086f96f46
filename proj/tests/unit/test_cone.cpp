#include <doctest.h>

#include <random>

#include "testkit.hpp"
#include "torq/cone.hpp"
#include "torq/errors.hpp"

using namespace torq;
using testkit::witness_checks;

namespace {
RatVec v2(long a, long b) { return {Rat(a), Rat(b)}; }
}

TEST_CASE("cone membership with witnesses") {
  // span{(1,0),(1,1)} contains (1,2) but the cone does not
  std::vector<RatVec> gens = {v2(1, 0), v2(1, 1)};
  ConeDecision dec = cone_member(gens, v2(1, 2));
  CHECK(!dec.member);
  REQUIRE(dec.certificate.has_value());
  CHECK(witness_checks(gens, v2(1, 2), dec));
  CHECK(span_member(gens, v2(1, 2)));

  std::vector<RatVec> basis = {v2(1, 0), v2(0, 1)};
  ConeDecision in = cone_member(basis, v2(1, 2));
  CHECK(in.member);
  REQUIRE(in.coefficients.has_value());
  CHECK((*in.coefficients)[0] == 1);
  CHECK((*in.coefficients)[1] == 2);
  CHECK(witness_checks(basis, v2(1, 2), in));
}

TEST_CASE("empty cone") {
  CHECK(cone_member({}, RatVec{Rat(0), Rat(0)}).member);
  ConeDecision dec = cone_member({}, v2(1, 0));
  CHECK(!dec.member);
  CHECK(witness_checks({}, v2(1, 0), dec));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(cone_member({RatVec{Rat(1)}}, v2(1, 0)), DimensionMismatchError);
  CHECK_THROWS_AS(span_member({RatVec{Rat(1)}}, v2(1, 0)), DimensionMismatchError);
}

TEST_CASE("span membership") {
  CHECK(span_member({v2(1, 1)}, v2(2, 2)));
  CHECK(!span_member({v2(1, 1)}, v2(1, 2)));
  CHECK(!span_member({}, v2(0, 1)));
  CHECK(span_member({}, v2(0, 0)));
}

TEST_CASE("open half-space witnesses") {
  auto w1 = open_halfspace_witness({RatVec{Rat(1)}, RatVec{Rat(1)}}, 1);
  REQUIRE(w1.has_value());
  CHECK((*w1)[0] > 0);

  CHECK(!open_halfspace_witness({RatVec{Rat(1)}, RatVec{Rat(-1)}}, 1).has_value());

  std::vector<RatVec> c4w = {v2(1, 0), v2(1, 0), v2(1, 1), v2(0, 1)};
  auto w2 = open_halfspace_witness(c4w, 2);
  REQUIRE(w2.has_value());
  for (const auto& v : c4w) CHECK(dot(v, *w2) > 0);

  // zero vector kills every open half-space
  CHECK(!open_halfspace_witness({v2(0, 0), v2(1, 1)}, 2).has_value());
  CHECK(open_halfspace_witness({}, 3).has_value());
}

TEST_CASE("cone decisions verify on random instances") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 2000; ++it) {
    int r = 1 + it % 4, k = it % 9;
    std::vector<RatVec> gens;
    for (int j = 0; j < k; ++j)
      gens.push_back(testkit::random_rat_vec(rng, r, -3, 3, 2));
    RatVec target = testkit::random_rat_vec(rng, r, -3, 3, 2);
    ConeDecision dec = cone_member(gens, target);
    CHECK(witness_checks(gens, target, dec));
    if (dec.member) CHECK(span_member(gens, target));
  }
}

TEST_CASE("cone membership is invariant under positive rescaling") {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    int r = 1 + it % 3, k = 1 + it % 5;
    std::vector<RatVec> gens;
    for (int j = 0; j < k; ++j)
      gens.push_back(testkit::random_rat_vec(rng, r, -2, 2, 2));
    RatVec target = testkit::random_rat_vec(rng, r, -2, 2, 2);
    bool base = cone_member(gens, target).member;

    std::uniform_int_distribution<int> pos(1, 5);
    Rat c(pos(rng), pos(rng));
    c.canonicalize();
    std::vector<RatVec> scaled_gens;
    for (const auto& g : gens) {
      Rat cg(pos(rng), pos(rng));
      cg.canonicalize();
      scaled_gens.push_back(scale(cg, g));
    }
    CHECK(cone_member(gens, scale(c, target)).member == base);
    CHECK(cone_member(scaled_gens, target).member == base);
  }
}
