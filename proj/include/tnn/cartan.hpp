#pragma once

#include <map>
#include <string>
#include <vector>

#include "tnn/matrix.hpp"
#include "tnn/rational.hpp"

namespace tnn {

// A generalized Cartan matrix together with its ordered node labels.
struct CartanData {
  std::vector<std::string> nodes;
  Mat<long long> matrix;  // indexed by node positions

  int size() const { return static_cast<int>(nodes.size()); }
  int node_index(const std::string& label) const;  // throws on unknown label
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks squareness, diagonal 2's, nonpositive off-diagonal entries, the
// symmetric zero pattern, and symmetrizability (ratio propagation per
// connected component, consistency on cycles).
ValidationReport validate(const CartanData& data);

// Positive diagonal symmetrizer d with d_i a_ij = d_j a_ji, normalized so the
// first entry of each connected component is 1; empty optional if none exists.
std::optional<std::vector<Rat>> symmetrizer(const CartanData& data);

// One-node extension: adjoins node "0" with entries -2 against every old node.
CartanData extend_shriek(const CartanData& data);

struct GlueResult {
  CartanData glued;
  std::map<std::string, std::string> flat_map;   // old label -> glued label
  std::map<std::string, std::string> sharp_map;  // old label -> glued label
};

// Two copies of the diagram identified along K.  Non-glued cross-copy entries
// are zero; entries at a glued node repeat the original row/column toward each
// copy.  Labels: "i♭", "i♯", and plain "i" for i in K.
GlueResult glue(const CartanData& data, const std::vector<std::string>& K);

std::string cartan_to_json(const CartanData& data);
CartanData cartan_from_json(const std::string& text);

// Fixed matrices used by the CLI and the test suites.
CartanData builtin_cartan(const std::string& name);  // a1..a4, affine_a1, hyperbolic_2_3

}  // namespace tnn
