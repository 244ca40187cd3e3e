#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qrep/error.hpp"
#include "qrep/fixtures.hpp"
#include "qrep/quiver.hpp"
#include "random_reps.hpp"

using namespace qrep;

namespace {

const DimVector kAlpha{1, 1, 1, 8, 12, 2, 7, 7};
const DimVector kBeta1{0, 0, 0, 1, 2, 0, 1, 1};
const DimVector kBeta2{0, 1, 1, 4, 7, 1, 4, 4};
const DimVector kBeta3{1, 0, 1, 4, 7, 1, 4, 4};
const DimVector kBeta4{1, 1, 0, 4, 7, 1, 4, 4};

Quiver kronecker() { return Quiver(2, {{"x", 0, 1}, {"y", 0, 1}}); }

DimVector random_vector(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(d(rng));
  return DimVector(std::move(v));
}

std::vector<DimVector> as_dims(const std::vector<oracle::Vec>& vs) {
  std::vector<DimVector> out;
  for (const auto& v : vs) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver(0, {}), ShapeError);
  CHECK_THROWS_AS(Quiver(2, {{"a", 0, 0}}), ShapeError);
  CHECK_THROWS_AS(Quiver(2, {{"a", 0, 2}}), ShapeError);
  CHECK_THROWS_AS(Quiver(2, {{"a", 0, 1}, {"a", 1, 0}}), ShapeError);
  const auto& q = *fixtures::quiver();
  CHECK(q.vertex_count() == 8);
  CHECK(q.arrow_count() == 7);
  CHECK(q.arrow_index("g") == 6);
  CHECK_THROWS_AS(q.arrow_index("z"), ShapeError);
}

TEST_CASE("Euler form examples on Q") {
  const auto& q = *fixtures::quiver();
  CHECK(euler_form(q, kAlpha, kAlpha) == 1);
  CHECK(euler_form(q, DimVector::unit(8, 3), DimVector::unit(8, 3)) == 1);
  CHECK(euler_form(q, DimVector::unit(8, 0), DimVector::unit(8, 3)) == -1);
  CHECK(euler_form(q, kAlpha, kBeta2) == 0);
  CHECK(euler_form(q, kBeta2, kAlpha) == 0);
  CHECK(sym_form(q, kAlpha, kBeta1) == 5);
  for (std::size_t i = 0; i < 8; ++i) CHECK(sym_form(q, DimVector::unit(8, i), DimVector::unit(8, i)) == 2);
  CHECK_THROWS_AS(euler_form(q, kAlpha, DimVector{1, 2}), ShapeError);
}

TEST_CASE("Euler form matches the Cartan-matrix oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto q = gen::quiver(rng, 5, 6);
    const auto a = random_vector(rng, q->vertex_count(), -5, 5);
    const auto b = random_vector(rng, q->vertex_count(), -5, 5);
    CHECK(euler_form(*q, a, b) == oracle::euler(*q, a.coords(), b.coords()));
    CHECK(sym_form(*q, a, b) == oracle::sym(*q, a.coords(), b.coords()));
  }
}

TEST_CASE("form and reflection properties") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto q = gen::quiver(rng, 5, 6);
    const std::size_t n = q->vertex_count();
    const auto a = random_vector(rng, n, -6, 6);
    const auto b = random_vector(rng, n, -6, 6);
    const auto c = random_vector(rng, n, -6, 6);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(-4, 4)(rng);
    CHECK(euler_form(*q, a + k * b, c) == euler_form(*q, a, c) + k * euler_form(*q, b, c));
    CHECK(euler_form(*q, c, a + k * b) == euler_form(*q, c, a) + k * euler_form(*q, c, b));
    CHECK(sym_form(*q, a, b) == sym_form(*q, b, a));
    const std::size_t i = rng() % n;
    const auto r = simple_reflection(*q, i, a);
    CHECK(euler_form(*q, r, r) == euler_form(*q, a, a));
    CHECK(simple_reflection(*q, i, r) == a);
    CHECK(simple_reflection(*q, i, DimVector::unit(n, i)) == -DimVector::unit(n, i));
  }
}

TEST_CASE("reflection examples") {
  const auto& q = *fixtures::quiver();
  const auto e4 = DimVector::unit(8, 3);
  CHECK(simple_reflection(q, 3, e4) == -e4);
  CHECK(simple_reflection(q, 2, e4) == e4 + DimVector::unit(8, 2));
  CHECK_THROWS_AS(simple_reflection(q, 8, e4), ShapeError);
}

TEST_CASE("words") {
  const auto& q = *fixtures::quiver();
  const auto w = fixtures::alpha_word();
  CHECK(w.length() == 17);
  CHECK(w.to_string() == "s8 s7 s5 s4 s8 s7 s5 s8 s7 s5 s6 s4 s5 s4 s1 s2 s3");
  CHECK(apply_word(q, w, DimVector::unit(8, fixtures::kAlphaWordSeed)) == kAlpha);
  CHECK(apply_word(q, ReflectionWord{}, kAlpha) == kAlpha);
  CHECK(apply_word(q, w.reversed(), apply_word(q, w, kBeta3)) == kBeta3);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rq = gen::quiver(rng, 5, 6);
    std::vector<std::size_t> letters;
    for (std::size_t k = rng() % 12; k > 0; --k) letters.push_back(rng() % rq->vertex_count());
    const ReflectionWord rw(letters);
    const auto a = random_vector(rng, rq->vertex_count(), -4, 4);
    CHECK(apply_word(*rq, rw.reversed(), apply_word(*rq, rw, a)) == a);
  }
}

TEST_CASE("real roots") {
  const auto& q = *fixtures::quiver();
  CHECK(is_positive_real_root(q, kAlpha));
  CHECK(is_positive_real_root(q, DimVector::unit(8, 3)));
  for (const auto& b : {kBeta1, kBeta2, kBeta3, kBeta4}) CHECK(is_positive_real_root(q, b));
  CHECK_FALSE(is_positive_real_root(q, DimVector::zero(8)));
  CHECK_FALSE(is_positive_real_root(q, kAlpha + kAlpha));
  const auto k2 = kronecker();
  CHECK_FALSE(is_positive_real_root(k2, DimVector{1, 1}));
  CHECK(is_positive_real_root(k2, DimVector{1, 2}));
  CHECK(is_positive_real_root(k2, DimVector{3, 2}));
  CHECK_FALSE(is_positive_real_root(k2, DimVector{-1, 0}));
}

TEST_CASE("real-root test agrees with the ascending orbit on every box point") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = gen::quiver(rng, 4, 5);
    const std::size_t n = q->vertex_count();
    const oracle::Vec bound(n, 4);
    const auto roots = oracle::real_roots_below(*q, bound);
    std::vector<std::int64_t> v(n, 0);
    while (true) {
      const DimVector a(v);
      CAPTURE(a.to_string());
      CHECK(is_positive_real_root(*q, a) == (roots.count(v) == 1));
      std::size_t k = 0;
      while (k < n && ++v[k] > 4) v[k++] = 0;
      if (k == n) break;
    }
  }
}

TEST_CASE("reflection words") {
  const auto& q = *fixtures::quiver();
  CHECK(reflection_word_for_root(q, DimVector::unit(8, 3)) == ReflectionWord{3});
  CHECK(reflection_word_for_root(kronecker(), DimVector{1, 2}) == ReflectionWord{1, 0, 1});
  CHECK(apply_word(q, reflection_word_for_root(q, kAlpha), kAlpha) == -kAlpha);
  CHECK_THROWS_AS(reflection_word_for_root(kronecker(), DimVector{1, 1}), PreconditionError);

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rq = gen::quiver(rng, 4, 5);
    for (const auto& root : oracle::real_roots_below(*rq, oracle::Vec(rq->vertex_count(), 5))) {
      const DimVector a(root);
      const auto w = reflection_word_for_root(*rq, a);
      CHECK(apply_word(*rq, w, a) == -a);
      CHECK(w == w.reversed());
      CHECK(w.length() % 2 == 1);
    }
  }
}

TEST_CASE("word-suffix roots on the Kronecker quiver") {
  const auto k2 = kronecker();
  const auto w = reflection_word_for_root(k2, DimVector{1, 2});
  const std::vector<DimVector> raw{{2, 3}, {1, 2}, {0, 1}};
  auto got = word_suffix_roots(k2, w);
  CHECK(got == raw);
  CHECK(inversion_candidates(k2, DimVector{1, 2}) == std::vector<DimVector>{{0, 1}});
}

TEST_CASE("reflection candidates") {
  const auto& q = *fixtures::quiver();
  std::vector<DimVector> betas{kBeta1, kBeta2, kBeta3, kBeta4};
  std::sort(betas.begin(), betas.end());
  CHECK(reflection_candidates(q, kAlpha) == betas);
  CHECK(as_dims(oracle::candidates(q, kAlpha.coords())) == betas);
  CHECK(reflection_candidates(kronecker(), DimVector{1, 2}) == std::vector<DimVector>{{0, 1}});
  CHECK(reflection_candidates(q, DimVector::unit(8, 4)).empty());
  CHECK_THROWS_AS(reflection_candidates(kronecker(), DimVector{2, 2}), PreconditionError);
  CHECK_THROWS_AS(orthogonal_candidates(q, kAlpha, 1000), BudgetExceeded);
}

TEST_CASE("reflection candidates agree with brute force") {
  std::mt19937_64 rng(26);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto rq = gen::quiver(rng, 4, 5);
    for (const auto& root : oracle::real_roots_below(*rq, oracle::Vec(rq->vertex_count(), 4))) {
      const DimVector a(root);
      const auto got = reflection_candidates(*rq, a);
      CAPTURE(a.to_string());
      CHECK(got == as_dims(oracle::candidates(*rq, root)));
      for (const auto& b : got) {
        CHECK(is_positive_real_root(*rq, b));
        CHECK(strictly_dominates(a, b));
        CHECK(euler_form(*rq, a, b) >= 0);
        CHECK(euler_form(*rq, b, a) >= 0);
      }
      ++compared;
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("dimension vector helpers") {
  const DimVector a{1, 0, 2};
  CHECK(a.to_string() == "1,0,2");
  CHECK(a.sum() == 3);
  CHECK(a.is_positive());
  CHECK_FALSE(DimVector::zero(3).is_positive());
  CHECK(DimVector::unit(3, 1).simple_index() == 1U);
  CHECK_FALSE(a.simple_index().has_value());
  CHECK(dominates(a, DimVector{1, 0, 1}));
  CHECK_FALSE(strictly_dominates(a, a));
  CHECK((2 * a - a) == a);
}
