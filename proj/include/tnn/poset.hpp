#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tnn {

struct PosetElement {
  std::string id;
  int rank = 0;
};

// Finite poset given by elements with declared ranks plus cover pairs
// (indices into elements, lower first).  The order relation is the
// transitive closure of the covers.
struct GradedPoset {
  std::vector<PosetElement> elements;
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(elements.size()); }
};

// Reachability matrix of the reflexive-transitive closure.
std::vector<std::vector<bool>> leq_closure(const GradedPoset& p);

// Every declared cover is a genuine cover (no intermediate element) and
// raises rank by exactly one; then all maximal chains in closed intervals
// have equal length rank(y) − rank(x).
bool is_graded(const GradedPoset& p);

// Diamond condition: every closed interval of rank 2 has exactly 4 elements.
bool is_thin(const GradedPoset& p);

int mobius(const GradedPoset& p, int x, int y);  // requires x ≤ y

// μ(x,y) = (−1)^{rank(y)−rank(x)} on every closed interval.
bool is_eulerian(const GradedPoset& p);

struct EulerReport {
  long long cell_sum = 0;      // Σ (−1)^rank over all cells
  long long boundary_sum = 0;  // same sum excluding the unique top cell
  int top_dim = 0;
  bool ball_ok = false;    // cell_sum == 1
  bool sphere_ok = false;  // boundary_sum == 1 + (−1)^{top_dim − 1}
};

// Treats the poset as the face poset of a cell complex with dim = rank;
// requires a unique maximal cell.
EulerReport ball_euler_check(const GradedPoset& face_poset);

struct ShellingResult {
  enum class Status { shellable, not_shellable, skipped } status;
  std::vector<int> order;  // facet indices when shellable
};

// Backtracking search for a shelling order of the facets (maximal elements,
// which must all have the same rank); skipped when there are more facets
// than facet_limit.
ShellingResult brute_shelling(const GradedPoset& face_poset, int facet_limit = 8);

std::string export_dot(const GradedPoset& p);
std::string export_json(const GradedPoset& p);
GradedPoset poset_from_json(const std::string& text);

}  // namespace tnn
