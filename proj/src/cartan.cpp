#include "tnn/cartan.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

using nlohmann::json;

namespace tnn {

int CartanData::node_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (nodes[i] == label) return i;
  throw std::invalid_argument("unknown node label: " + label);
}

ValidationReport validate(const CartanData& data) {
  ValidationReport rep;
  auto bad = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  int n = data.size();
  if (data.matrix.rows != n || data.matrix.cols != n) {
    bad("matrix shape does not match node count");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (data.matrix(i, i) != 2)
      bad("diagonal entry at (" + data.nodes[i] + "," + data.nodes[i] + ") is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (data.matrix(i, j) > 0)
        bad("positive off-diagonal entry at (" + data.nodes[i] + "," + data.nodes[j] + ")");
      if ((data.matrix(i, j) == 0) != (data.matrix(j, i) == 0) && i < j)
        bad("zero-symmetry broken at (" + data.nodes[i] + "," + data.nodes[j] + ")");
    }
  }
  if (rep.ok && !symmetrizer(data)) bad("matrix is not symmetrizable");
  return rep;
}

std::optional<std::vector<Rat>> symmetrizer(const CartanData& data) {
  int n = data.size();
  std::vector<Rat> d(n, Rat(0));
  // Propagate d_j = d_i * a_ij / a_ji along edges; any cycle must be consistent.
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || data.matrix(i, j) == 0) continue;
        if (data.matrix(j, i) == 0) return std::nullopt;  // invalid zero pattern
        Rat want = d[i] * Rat(data.matrix(i, j)) / Rat(data.matrix(j, i));
        if (d[j] == 0) {
          d[j] = want;
          stack.push_back(j);
        } else if (d[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return d;
}

CartanData extend_shriek(const CartanData& data) {
  int n = data.size();
  CartanData out;
  out.nodes = data.nodes;
  out.nodes.push_back("0");
  out.matrix = Mat<long long>(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.matrix(i, j) = data.matrix(i, j);
  for (int i = 0; i < n; ++i) {
    out.matrix(i, n) = -2;
    out.matrix(n, i) = -2;
  }
  out.matrix(n, n) = 2;
  return out;
}

GlueResult glue(const CartanData& data, const std::vector<std::string>& K) {
  int n = data.size();
  std::vector<bool> in_k(n, false);
  for (const auto& k : K) in_k[data.node_index(k)] = true;

  GlueResult res;
  // New node order: all flat-copy nodes (glued nodes keep the plain label),
  // then the sharp copies of non-glued nodes.
  std::vector<int> flat_pos(n), sharp_pos(n);
  for (int i = 0; i < n; ++i) {
    flat_pos[i] = static_cast<int>(res.glued.nodes.size());
    res.glued.nodes.push_back(in_k[i] ? data.nodes[i] : data.nodes[i] + "♭");
  }
  for (int i = 0; i < n; ++i) {
    if (in_k[i]) {
      sharp_pos[i] = flat_pos[i];
    } else {
      sharp_pos[i] = static_cast<int>(res.glued.nodes.size());
      res.glued.nodes.push_back(data.nodes[i] + "♯");
    }
  }
  int m = static_cast<int>(res.glued.nodes.size());
  res.glued.matrix = Mat<long long>(m, m);
  for (int i = 0; i < m; ++i) res.glued.matrix(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      long long a = data.matrix(i, j);
      res.glued.matrix(flat_pos[i], flat_pos[j]) = a;
      res.glued.matrix(sharp_pos[i], sharp_pos[j]) = a;
      // Cross-copy entries: nonzero only when one endpoint is glued (then the
      // assignments above already cover it); distinct non-glued copies stay 0.
    }
  for (int i = 0; i < n; ++i) {
    res.flat_map[data.nodes[i]] = res.glued.nodes[flat_pos[i]];
    res.sharp_map[data.nodes[i]] = res.glued.nodes[sharp_pos[i]];
  }
  return res;
}

std::string cartan_to_json(const CartanData& data) {
  json j;
  j["nodes"] = data.nodes;
  json m = json::array();
  for (int i = 0; i < data.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < data.size(); ++k) row.push_back(data.matrix(i, k));
    m.push_back(row);
  }
  j["matrix"] = m;
  return j.dump(2);
}

CartanData cartan_from_json(const std::string& text) {
  json j = json::parse(text);
  CartanData d;
  d.nodes = j.at("nodes").get<std::vector<std::string>>();
  int n = static_cast<int>(d.nodes.size());
  d.matrix = Mat<long long>(n, n);
  const auto& m = j.at("matrix");
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("matrix row count mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::invalid_argument("matrix column count mismatch");
    for (int k = 0; k < n; ++k) d.matrix(i, k) = m[i][k].get<long long>();
  }
  return d;
}

CartanData builtin_cartan(const std::string& name) {
  auto chain = [](int n) {
    CartanData d;
    d.matrix = Mat<long long>(n, n);
    for (int i = 0; i < n; ++i) {
      d.nodes.push_back(std::to_string(i + 1));
      d.matrix(i, i) = 2;
      if (i + 1 < n) {
        d.matrix(i, i + 1) = -1;
        d.matrix(i + 1, i) = -1;
      }
    }
    return d;
  };
  if (name == "a1") return chain(1);
  if (name == "a2") return chain(2);
  if (name == "a3") return chain(3);
  if (name == "a4") return chain(4);
  if (name == "affine_a1") {
    CartanData d;
    d.nodes = {"1", "2"};
    d.matrix = Mat<long long>(2, 2);
    d.matrix(0, 0) = 2; d.matrix(0, 1) = -2;
    d.matrix(1, 0) = -2; d.matrix(1, 1) = 2;
    return d;
  }
  if (name == "hyperbolic_2_3") {
    CartanData d;
    d.nodes = {"1", "2"};
    d.matrix = Mat<long long>(2, 2);
    d.matrix(0, 0) = 2; d.matrix(0, 1) = -2;
    d.matrix(1, 0) = -3; d.matrix(1, 1) = 2;
    return d;
  }
  throw std::invalid_argument("unknown builtin Cartan matrix: " + name);
}

}  // namespace tnn
