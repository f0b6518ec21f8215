#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tnn/cartan.hpp"

using namespace tnn;

namespace {

CartanData make(std::vector<std::string> nodes, std::vector<std::vector<long long>> rows) {
  CartanData d;
  d.nodes = std::move(nodes);
  int n = static_cast<int>(rows.size());
  d.matrix = IntMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.matrix(i, j) = rows[i][j];
  return d;
}

}  // namespace

TEST_CASE("validate accepts the rank-2 simply laced matrix") {
  CHECK(validate(make({"1", "2"}, {{2, -1}, {-1, 2}})).ok);
}

TEST_CASE("validate rejects a broken zero pattern") {
  auto rep = validate(make({"1", "2"}, {{2, -1}, {0, 2}}));
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  // the witness must name the offending pair
  bool mentions = false;
  for (const auto& v : rep.violations)
    if (v.find("(1") != std::string::npos || v.find("1,") != std::string::npos ||
        v.find("zero") != std::string::npos)
      mentions = true;
  CHECK(mentions);
}

TEST_CASE("validate accepts the affine rank-2 matrix") {
  // symmetrizable: d_1·(-2) = d_2·(-2) with d = (1,1)
  auto d = make({"1", "2"}, {{2, -2}, {-2, 2}});
  CHECK(validate(d).ok);
  auto sym = symmetrizer(d);
  REQUIRE(sym.has_value());
  CHECK((*sym)[0] * d.matrix(0, 1) == (*sym)[1] * d.matrix(1, 0));
}

TEST_CASE("validate rejects positive off-diagonal entries") {
  CHECK_FALSE(validate(make({"1", "2"}, {{2, 1}, {1, 2}})).ok);
}

TEST_CASE("symmetrizer handles the asymmetric rank-2 matrix") {
  auto d = make({"1", "2"}, {{2, -2}, {-1, 2}});
  auto sym = symmetrizer(d);
  REQUIRE(sym.has_value());
  CHECK((*sym)[0] * d.matrix(0, 1) == (*sym)[1] * d.matrix(1, 0));
  CHECK((*sym)[0] == Rat(1));  // normalization
}

TEST_CASE("one-node extension adjoins -2 edges everywhere") {
  auto d = builtin_cartan("a2");
  auto e = extend_shriek(d);
  REQUIRE(e.size() == 3);
  CHECK(e.nodes.back() == "0");
  int z = e.node_index("0");
  for (const auto& lbl : d.nodes) {
    int i = e.node_index(lbl);
    CHECK(e.matrix(z, i) == -2);
    CHECK(e.matrix(i, z) == -2);
  }
  CHECK(validate(e).ok);
}

TEST_CASE("one-node extension of the empty diagram is a single node") {
  CartanData d;
  auto e = extend_shriek(d);
  REQUIRE(e.size() == 1);
  CHECK(e.matrix(0, 0) == 2);
}

TEST_CASE("glueing the rank-2 diagram along its second node gives the rank-3 chain") {
  auto d = builtin_cartan("a2");
  auto g = glue(d, {"2"});
  REQUIRE(g.glued.size() == 3);
  // chain 1♭ — 2 — 1♯ with the standard simply laced entries
  int fb = g.glued.node_index(g.flat_map.at("1"));
  int mid = g.glued.node_index(g.flat_map.at("2"));
  int sh = g.glued.node_index(g.sharp_map.at("1"));
  CHECK(g.flat_map.at("2") == g.sharp_map.at("2"));
  CHECK(fb != sh);
  CHECK(g.glued.matrix(fb, mid) == -1);
  CHECK(g.glued.matrix(mid, fb) == -1);
  CHECK(g.glued.matrix(sh, mid) == -1);
  CHECK(g.glued.matrix(mid, sh) == -1);
  CHECK(g.glued.matrix(fb, sh) == 0);
  CHECK(g.glued.matrix(sh, fb) == 0);
  for (int i : {fb, mid, sh}) CHECK(g.glued.matrix(i, i) == 2);
  CHECK(validate(g.glued).ok);
}

TEST_CASE("glueing along everything copies the matrix") {
  auto d = builtin_cartan("a3");
  auto g = glue(d, d.nodes);
  REQUIRE(g.glued.size() == d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) CHECK(g.glued.matrix(i, j) == d.matrix(i, j));
  for (const auto& lbl : d.nodes) CHECK(g.flat_map.at(lbl) == g.sharp_map.at(lbl));
}

TEST_CASE("glueing along nothing is the disjoint union") {
  auto d = builtin_cartan("a2");
  auto g = glue(d, {});
  REQUIRE(g.glued.size() == 4);
  for (const auto& a : d.nodes)
    for (const auto& b : d.nodes) {
      int i = g.glued.node_index(g.flat_map.at(a));
      int j = g.glued.node_index(g.sharp_map.at(b));
      CHECK(g.glued.matrix(i, j) == 0);
      CHECK(g.glued.matrix(j, i) == 0);
    }
}

TEST_CASE("json round trip preserves the data") {
  auto d = builtin_cartan("affine_a1");
  auto back = cartan_from_json(cartan_to_json(d));
  CHECK(back.nodes == d.nodes);
  CHECK(back.matrix == d.matrix);
}

TEST_CASE("builtin matrices validate") {
  for (const char* name : {"a1", "a2", "a3", "a4", "affine_a1", "hyperbolic_2_3"})
    CHECK(validate(builtin_cartan(name)).ok);
}
