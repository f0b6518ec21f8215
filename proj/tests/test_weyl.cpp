#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "tnn/report.hpp"
#include "tnn/weyl.hpp"

using namespace tnn;

namespace {

std::shared_ptr<const CartanData> ctx_of(const char* name) {
  return std::make_shared<CartanData>(builtin_cartan(name));
}

// Order oracle independent of the subword implementation: the standard
// descent recursion v ≤ w  ⟺  v = w, or for any left descent s of w,
// min(v, sv) ≤ sw.
bool bruhat_leq_oracle(const WeylElement& v, const WeylElement& w) {
  if (v == w) return true;
  if (length(v) >= length(w)) return false;
  int n = v.ctx->size();
  for (int i = 0; i < n; ++i) {
    if (!has_left_descent(w, i)) continue;
    WeylElement sw = weyl_mul(simple_reflection(w.ctx, i), w);
    WeylElement sv = weyl_mul(simple_reflection(v.ctx, i), v);
    return bruhat_leq_oracle(has_left_descent(v, i) ? sv : v, sw);
  }
  return false;
}

}  // namespace

TEST_CASE("simple reflection acts by the stated matrix") {
  auto ctx = ctx_of("a2");
  auto s1 = simple_reflection(ctx, 0);
  // s_1(α_1) = -α_1, s_1(α_2) = α_1 + α_2 in simple-root coordinates
  CHECK(s1.action(0, 0) == -1);
  CHECK(s1.action(0, 1) == 1);
  CHECK(s1.action(1, 0) == 0);
  CHECK(s1.action(1, 1) == 1);
}

TEST_CASE("simple reflections are involutions") {
  for (const char* name : {"a2", "a3", "affine_a1"}) {
    auto ctx = ctx_of(name);
    for (int i = 0; i < ctx->size(); ++i)
      CHECK(weyl_mul(simple_reflection(ctx, i), simple_reflection(ctx, i)).is_identity());
  }
}

TEST_CASE("the affine rank-2 rotation has infinite order") {
  auto ctx = ctx_of("affine_a1");
  auto rot = weyl_mul(simple_reflection(ctx, 0), simple_reflection(ctx, 1));
  auto p = weyl_identity(ctx);
  for (int k = 1; k <= 10; ++k) {
    p = weyl_mul(p, rot);
    CHECK_FALSE(p.is_identity());
  }
}

TEST_CASE("length and canonical word") {
  auto ctx = ctx_of("a2");
  auto [l0, w0] = length_and_word(weyl_identity(ctx));
  CHECK(l0 == 0);
  CHECK(w0.empty());
  auto top = word_to_element(ctx, {0, 1, 0});
  auto [l3, w3] = length_and_word(top);
  CHECK(l3 == 3);
  CHECK(w3 == Word{0, 1, 0});  // smallest-node tie-breaking

  auto actx = ctx_of("affine_a1");
  auto six = word_to_element(actx, {0, 1, 0, 1, 0, 1});
  CHECK(length(six) == 6);
}

TEST_CASE("bruhat order basics") {
  auto ctx = ctx_of("a2");
  auto e = weyl_identity(ctx);
  auto s1 = simple_reflection(ctx, 0);
  auto s2 = simple_reflection(ctx, 1);
  auto s2s1 = weyl_mul(s2, s1);
  for (const auto& w : enumerate_upto(ctx, 3)) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(s1, s2s1));
  CHECK_FALSE(bruhat_leq(s1, s2));
}

TEST_CASE("bruhat order matches the descent-recursion oracle") {
  for (const char* name : {"a2", "a3", "affine_a1"}) {
    auto ctx = ctx_of(name);
    auto elems = enumerate_upto(ctx, name == std::string("a3") ? 4 : 5);
    for (const auto& v : elems)
      for (const auto& w : elems) CHECK(bruhat_leq(v, w) == bruhat_leq_oracle(v, w));
  }
}

TEST_CASE("bruhat order is antisymmetric on random pairs") {
  auto ctx = ctx_of("a3");
  auto elems = enumerate_upto(ctx, 6);
  ParamRng rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto& v = elems[rng.uniform(elems.size())];
    const auto& w = elems[rng.uniform(elems.size())];
    if (bruhat_leq(v, w) && bruhat_leq(w, v)) CHECK(v == w);
  }
}

TEST_CASE("parabolic coset decomposition") {
  auto ctx = ctx_of("a2");
  auto s1s2 = word_to_element(ctx, {0, 1});
  auto d = coset_decompose(s1s2, {0});
  CHECK(d.left_part == simple_reflection(ctx, 0));
  CHECK(d.right_part == simple_reflection(ctx, 1));
  for (const auto& w : enumerate_upto(ctx, 3)) {
    auto none = coset_decompose(w, {});
    CHECK(none.left_part.is_identity());
    CHECK(none.right_part == w);
    auto full = coset_decompose(w, {0, 1});
    CHECK(full.left_part == w);
    CHECK(full.right_part.is_identity());
    auto dj = coset_decompose(w, {0});
    CHECK(weyl_mul(dj.left_part, dj.right_part) == w);
    CHECK_FALSE(has_left_descent(dj.right_part, 0));
  }
}

TEST_CASE("demazure product takes the longer option") {
  auto ctx = ctx_of("a2");
  auto s1s2 = word_to_element(ctx, {0, 1});
  CHECK(demazure_star(1, s1s2) == word_to_element(ctx, {1, 0, 1}));
  auto top = word_to_element(ctx, {0, 1, 0});
  CHECK(demazure_star(0, top) == top);  // already maximal
  CHECK(demazure_star_word(ctx, {0, 0, 1, 1, 0, 0}) == top);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_upto(ctx_of("a2"), 3).size() == 6);
  CHECK(enumerate_upto(ctx_of("affine_a1"), 4).size() == 9);
  auto just_e = enumerate_upto(ctx_of("a3"), 0);
  REQUIRE(just_e.size() == 1);
  CHECK(just_e[0].is_identity());
}

TEST_CASE("bruhat intervals") {
  auto ctx = ctx_of("a2");
  auto e = weyl_identity(ctx);
  auto s1 = simple_reflection(ctx, 0);
  auto s1s2 = word_to_element(ctx, {0, 1});
  auto top = word_to_element(ctx, {0, 1, 0});
  CHECK(interval(e, s1).size() == 2);
  CHECK(interval(e, top).size() == 6);
  auto mid = interval(s1, s1s2);
  REQUIRE(mid.size() == 2);
  CHECK(std::count(mid.begin(), mid.end(), s1) == 1);
  CHECK(std::count(mid.begin(), mid.end(), s1s2) == 1);
  // cross-check against filtering the full enumeration
  for (const auto& v : enumerate_upto(ctx, 3))
    for (const auto& w : enumerate_upto(ctx, 3)) {
      if (!bruhat_leq(v, w)) continue;
      auto got = interval(v, w);
      size_t expect = 0;
      for (const auto& x : enumerate_upto(ctx, 3))
        if (bruhat_leq(v, x) && bruhat_leq(x, w)) ++expect;
      CHECK(got.size() == expect);
    }
}

TEST_CASE("word label round trip") {
  auto ctx = ctx_of("a3");
  Word w{0, 2, 1};
  CHECK(word_from_labels(*ctx, word_labels(*ctx, w)) == w);
}
