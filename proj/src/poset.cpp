#include "tnn/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

using nlohmann::json;

namespace tnn {

std::vector<std::vector<bool>> leq_closure(const GradedPoset& p) {
  int n = p.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : p.covers) leq[a][b] = true;
  // Warshall; posets here are small (hundreds of elements).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw std::invalid_argument("cover relation contains a cycle");
  return leq;
}

bool is_graded(const GradedPoset& p) {
  auto leq = leq_closure(p);
  for (auto [a, b] : p.covers) {
    if (p.elements[b].rank != p.elements[a].rank + 1) return false;
    for (int z = 0; z < p.size(); ++z)
      if (z != a && z != b && leq[a][z] && leq[z][b]) return false;
  }
  // With all covers genuine and of rank step one, every saturated chain in a
  // closed interval has length rank(y) − rank(x).
  return true;
}

bool is_thin(const GradedPoset& p) {
  auto leq = leq_closure(p);
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq[x][y] || p.elements[y].rank - p.elements[x].rank != 2) continue;
      int count = 0;
      for (int z = 0; z < n; ++z)
        if (leq[x][z] && leq[z][y]) ++count;
      if (count != 4) return false;
    }
  return true;
}

namespace {
int mobius_memo(const GradedPoset& p, const std::vector<std::vector<bool>>& leq, int x, int y,
                std::map<std::pair<int, int>, int>& memo) {
  if (x == y) return 1;
  auto it = memo.find({x, y});
  if (it != memo.end()) return it->second;
  int sum = 0;
  for (int z = 0; z < p.size(); ++z)
    if (z != y && leq[x][z] && leq[z][y]) sum += mobius_memo(p, leq, x, z, memo);
  memo[{x, y}] = -sum;
  return -sum;
}
}  // namespace

int mobius(const GradedPoset& p, int x, int y) {
  auto leq = leq_closure(p);
  if (!leq[x][y]) throw std::invalid_argument("mobius of incomparable pair");
  std::map<std::pair<int, int>, int> memo;
  return mobius_memo(p, leq, x, y, memo);
}

bool is_eulerian(const GradedPoset& p) {
  auto leq = leq_closure(p);
  std::map<std::pair<int, int>, int> memo;
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq[x][y]) continue;
      int d = p.elements[y].rank - p.elements[x].rank;
      int expect = (d % 2 == 0) ? 1 : -1;
      if (mobius_memo(p, leq, x, y, memo) != expect) return false;
    }
  return true;
}

EulerReport ball_euler_check(const GradedPoset& face_poset) {
  EulerReport rep;
  int top = -1, top_count = 0;
  for (int i = 0; i < face_poset.size(); ++i) {
    int r = face_poset.elements[i].rank;
    rep.cell_sum += (r % 2 == 0) ? 1 : -1;
    if (top < 0 || r > face_poset.elements[top].rank) {
      top = i;
      top_count = 1;
    } else if (r == face_poset.elements[top].rank) {
      ++top_count;
    }
  }
  if (top_count != 1) throw std::invalid_argument("ball check needs a unique top cell");
  rep.top_dim = face_poset.elements[top].rank;
  rep.boundary_sum = rep.cell_sum - ((rep.top_dim % 2 == 0) ? 1 : -1);
  rep.ball_ok = (rep.cell_sum == 1);
  long long sphere_expect = 1 + ((rep.top_dim - 1) % 2 == 0 ? 1 : -1);
  rep.sphere_ok = (rep.boundary_sum == sphere_expect);
  return rep;
}

ShellingResult brute_shelling(const GradedPoset& face_poset, int facet_limit) {
  auto leq = leq_closure(face_poset);
  int n = face_poset.size();
  std::vector<int> facets;
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n; ++j)
      if (j != i && leq[i][j]) { maximal = false; break; }
    if (maximal) facets.push_back(i);
  }
  for (int f : facets)
    if (face_poset.elements[f].rank != face_poset.elements[facets[0]].rank)
      throw std::invalid_argument("shelling requires a pure poset");
  if (static_cast<int>(facets.size()) > facet_limit)
    return {ShellingResult::Status::skipped, {}};
  if (facets.size() <= 1) return {ShellingResult::Status::shellable, facets};

  int facet_rank = face_poset.elements[facets[0]].rank;
  auto downset = [&](int f) {
    std::vector<bool> d(n, false);
    for (int z = 0; z < n; ++z)
      if (leq[z][f]) d[z] = true;
    return d;
  };
  std::vector<std::vector<bool>> down;
  for (int f : facets) down.push_back(downset(f));

  // F can extend a partial order with union-of-downsets `covered` iff the
  // intersection of ∂F with the earlier subcomplex is pure of rank one less
  // than the facets (codimension-one intersection condition).
  auto extends = [&](const std::vector<bool>& covered, int fi) {
    std::vector<bool> inter(n, false);
    bool any = false;
    for (int z = 0; z < n; ++z)
      if (down[fi][z] && covered[z] && z != facets[fi]) { inter[z] = true; any = true; }
    if (!any) return false;
    for (int z = 0; z < n; ++z) {
      if (!inter[z]) continue;
      bool maximal = true;
      for (int y = 0; y < n; ++y)
        if (y != z && inter[y] && leq[z][y]) { maximal = false; break; }
      if (maximal && face_poset.elements[z].rank != facet_rank - 1) return false;
    }
    return true;
  };

  int k = static_cast<int>(facets.size());
  std::vector<int> order;
  std::vector<bool> used(k, false);
  std::vector<bool> covered(n, false);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(order.size()) == k) return true;
    for (int fi = 0; fi < k; ++fi) {
      if (used[fi]) continue;
      if (!order.empty() && !extends(covered, fi)) continue;
      auto saved = covered;
      for (int z = 0; z < n; ++z)
        if (down[fi][z]) covered[z] = true;
      used[fi] = true;
      order.push_back(facets[fi]);
      if (rec()) return true;
      order.pop_back();
      used[fi] = false;
      covered = saved;
    }
    return false;
  };
  if (rec()) return {ShellingResult::Status::shellable, order};
  return {ShellingResult::Status::not_shellable, {}};
}

namespace {
std::vector<int> sorted_order(const GradedPoset& p) {
  std::vector<int> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (p.elements[a].rank != p.elements[b].rank)
      return p.elements[a].rank < p.elements[b].rank;
    return p.elements[a].id < p.elements[b].id;
  });
  return idx;
}
}  // namespace

std::string export_dot(const GradedPoset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (int i : sorted_order(p))
    out += "  \"" + p.elements[i].id + "\" [label=\"" + p.elements[i].id + " (" +
           std::to_string(p.elements[i].rank) + ")\"];\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : p.covers) edges.push_back({p.elements[a].id, p.elements[b].id});
  std::sort(edges.begin(), edges.end());
  for (auto& [a, b] : edges) out += "  \"" + a + "\" -> \"" + b + "\";\n";
  out += "}\n";
  return out;
}

std::string export_json(const GradedPoset& p) {
  json j;
  j["elements"] = json::array();
  auto idx = sorted_order(p);
  for (int i : idx)
    j["elements"].push_back({{"id", p.elements[i].id}, {"rank", p.elements[i].rank}});
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : p.covers) edges.push_back({p.elements[a].id, p.elements[b].id});
  std::sort(edges.begin(), edges.end());
  j["covers"] = json::array();
  for (auto& [a, b] : edges) j["covers"].push_back({a, b});
  return j.dump(2);
}

GradedPoset poset_from_json(const std::string& text) {
  json j = json::parse(text);
  GradedPoset p;
  std::map<std::string, int> pos;
  for (const auto& e : j.at("elements")) {
    pos[e.at("id").get<std::string>()] = p.size();
    p.elements.push_back({e.at("id").get<std::string>(), e.at("rank").get<int>()});
  }
  for (const auto& c : j.at("covers"))
    p.covers.push_back({pos.at(c.at(0).get<std::string>()), pos.at(c.at(1).get<std::string>())});
  return p;
}

}  // namespace tnn
