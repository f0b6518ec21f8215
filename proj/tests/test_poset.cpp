#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "tnn/poset.hpp"

using namespace tnn;

namespace {

GradedPoset chain(int n) {
  GradedPoset p;
  for (int i = 0; i < n; ++i) p.elements.push_back({"c" + std::to_string(i), i});
  for (int i = 0; i + 1 < n; ++i) p.covers.push_back({i, i + 1});
  return p;
}

GradedPoset boolean2() {
  GradedPoset p;
  p.elements = {{"bot", 0}, {"a", 1}, {"b", 1}, {"top", 2}};
  p.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return p;
}

// Bruhat order of the rank-2 symmetric group, hand-pinned
GradedPoset s3_bruhat() {
  GradedPoset p;
  p.elements = {{"e", 0},    {"s1", 1},   {"s2", 1},
                {"s1s2", 2}, {"s2s1", 2}, {"s1s2s1", 3}};
  p.covers = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  return p;
}

}  // namespace

TEST_CASE("chains are graded but not thin") {
  auto p = chain(3);
  CHECK(is_graded(p));
  CHECK_FALSE(is_thin(p));  // the full interval has rank 2 but only 3 elements
}

TEST_CASE("the boolean lattice on two atoms is graded, thin and eulerian") {
  auto p = boolean2();
  CHECK(is_graded(p));
  CHECK(is_thin(p));
  CHECK(is_eulerian(p));
}

TEST_CASE("grading rejects rank jumps and fake covers") {
  GradedPoset jump;
  jump.elements = {{"x", 0}, {"y", 2}};
  jump.covers = {{0, 1}};
  CHECK_FALSE(is_graded(jump));

  GradedPoset fake = chain(3);
  fake.covers.push_back({0, 2});  // declared cover with an intermediate element
  CHECK_FALSE(is_graded(fake));
}

TEST_CASE("mobius values") {
  auto p = boolean2();
  CHECK(mobius(p, 0, 0) == 1);
  CHECK(mobius(p, 0, 1) == -1);
  CHECK(mobius(p, 0, 3) == 1);  // diamond: 1 - 1 - 1 + μ = 0
  auto c = chain(2);
  CHECK(mobius(c, 0, 1) == -1);
}

TEST_CASE("bruhat order of the rank-2 symmetric group is eulerian") {
  auto p = s3_bruhat();
  CHECK(is_graded(p));
  CHECK(is_thin(p));
  CHECK(is_eulerian(p));
  CHECK(mobius(p, 0, 5) == -1);  // (−1)^3
}

TEST_CASE("a chain is not eulerian") {
  CHECK_FALSE(is_eulerian(chain(3)));
}

TEST_CASE("euler characteristics of a segment") {
  GradedPoset p;
  p.elements = {{"v0", 0}, {"v1", 0}, {"edge", 1}};
  p.covers = {{0, 2}, {1, 2}};
  auto rep = ball_euler_check(p);
  CHECK(rep.cell_sum == 1);
  CHECK(rep.ball_ok);
  CHECK(rep.boundary_sum == 2);  // 1 + (−1)^0
  CHECK(rep.sphere_ok);
  CHECK(rep.top_dim == 1);
}

TEST_CASE("euler characteristics of a square disc") {
  GradedPoset p;
  p.elements = {{"v0", 0}, {"v1", 0}, {"v2", 0}, {"v3", 0},
                {"e0", 1}, {"e1", 1}, {"e2", 1}, {"e3", 1}, {"face", 2}};
  p.covers = {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7},
              {4, 8}, {5, 8}, {6, 8}, {7, 8}};
  auto rep = ball_euler_check(p);
  CHECK(rep.cell_sum == 1);
  CHECK(rep.ball_ok);
  CHECK(rep.boundary_sum == 0);  // 1 + (−1)^1
  CHECK(rep.sphere_ok);
}

TEST_CASE("shelling search") {
  GradedPoset single;
  single.elements = {{"pt", 0}};
  CHECK(brute_shelling(single).status == ShellingResult::Status::shellable);

  // order complex of the open rank-2 bruhat interval: the square boundary
  GradedPoset sq;
  sq.elements = {{"s1", 0}, {"s2", 0}, {"s1s2", 0}, {"s2s1", 0},
                 {"c13", 1}, {"c14", 1}, {"c23", 1}, {"c24", 1}};
  sq.covers = {{0, 4}, {2, 4}, {0, 5}, {3, 5}, {1, 6}, {2, 6}, {1, 7}, {3, 7}};
  auto res = brute_shelling(sq);
  CHECK(res.status == ShellingResult::Status::shellable);
  CHECK(res.order.size() == 4);

  auto skipped = brute_shelling(sq, 2);  // more facets than the limit
  CHECK(skipped.status == ShellingResult::Status::skipped);
}

TEST_CASE("dot export") {
  auto two = chain(2);
  auto dot = export_dot(two);
  CHECK(dot.find("c0") != std::string::npos);
  CHECK(dot.find("c1") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(export_dot(two) == dot);  // deterministic
  auto empty = export_dot(GradedPoset{});
  CHECK(empty.find("->") == std::string::npos);
}

TEST_CASE("json round trip") {
  auto p = s3_bruhat();
  auto back = poset_from_json(export_json(p));
  REQUIRE(back.size() == p.size());
  for (int i = 0; i < p.size(); ++i) {
    CHECK(back.elements[i].id == p.elements[i].id);
    CHECK(back.elements[i].rank == p.elements[i].rank);
  }
  auto id_pairs = [](const GradedPoset& q) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : q.covers) out.push_back({q.elements[a].id, q.elements[b].id});
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(id_pairs(back) == id_pairs(p));
}
