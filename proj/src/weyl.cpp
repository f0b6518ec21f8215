#include "tnn/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tnn {

WeylElement weyl_identity(std::shared_ptr<const CartanData> ctx) {
  int n = ctx->size();
  return {ctx, Mat<long long>::identity(n), Mat<long long>::identity(n)};
}

WeylElement simple_reflection(std::shared_ptr<const CartanData> ctx, int i) {
  int n = ctx->size();
  if (i < 0 || i >= n) throw std::out_of_range("simple reflection index");
  // s_i(α_j) = α_j − a_{ij} α_i: column j is e_j − a_{ij} e_i.
  Mat<long long> m = Mat<long long>::identity(n);
  for (int j = 0; j < n; ++j) m(i, j) -= ctx->matrix(i, j);
  return {ctx, m, m};  // involution
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (a.ctx->matrix != b.ctx->matrix)
    throw std::invalid_argument("Weyl elements from different Cartan data");
  return {a.ctx, a.action * b.action, b.inv * a.inv};
}

WeylElement weyl_inverse(const WeylElement& w) { return {w.ctx, w.inv, w.action}; }

WeylElement word_to_element(std::shared_ptr<const CartanData> ctx, const Word& word) {
  WeylElement w = weyl_identity(ctx);
  for (int i : word) w = weyl_mul(w, simple_reflection(ctx, i));
  return w;
}

namespace {
// Every column of a Weyl action matrix is the coordinate vector of a real
// root, hence is entrywise ≥ 0 or entrywise ≤ 0.
bool column_negative(const Mat<long long>& m, int j) {
  for (int r = 0; r < m.rows; ++r)
    if (m(r, j) > 0) return false;
  return true;
}
}  // namespace

bool has_left_descent(const WeylElement& w, int i) { return column_negative(w.inv, i); }
bool has_right_descent(const WeylElement& w, int i) { return column_negative(w.action, i); }

std::pair<int, Word> length_and_word(const WeylElement& w) {
  WeylElement u = w;
  Word word;
  int n = u.ctx->size();
  while (!u.is_identity()) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (has_left_descent(u, i)) { pick = i; break; }
    if (pick < 0) throw std::logic_error("non-identity element with no descent");
    word.push_back(pick);
    u = weyl_mul(simple_reflection(u.ctx, pick), u);
  }
  return {static_cast<int>(word.size()), word};
}

int length(const WeylElement& w) { return length_and_word(w).first; }
Word canonical_word(const WeylElement& w) { return length_and_word(w).second; }

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  if (v.ctx->matrix != w.ctx->matrix)
    throw std::invalid_argument("Weyl elements from different Cartan data");
  Word word = canonical_word(w);
  WeylElement u = v;
  for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j)
    if (has_right_descent(u, word[j]))
      u = weyl_mul(u, simple_reflection(u.ctx, word[j]));
  return u.is_identity();
}

CosetDecomposition coset_decompose(const WeylElement& w, const std::vector<int>& J) {
  WeylElement rest = w, left = weyl_identity(w.ctx);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i : J)
      if (has_left_descent(rest, i)) {
        left = weyl_mul(left, simple_reflection(w.ctx, i));
        rest = weyl_mul(simple_reflection(w.ctx, i), rest);
        stripped = true;
        break;
      }
  }
  return {left, rest};
}

WeylElement demazure_star(int i, const WeylElement& w) {
  return has_left_descent(w, i) ? w : weyl_mul(simple_reflection(w.ctx, i), w);
}

WeylElement demazure_circ_left(int i, const WeylElement& w) {
  return has_left_descent(w, i) ? weyl_mul(simple_reflection(w.ctx, i), w) : w;
}

WeylElement demazure_circ_right(const WeylElement& w, int i) {
  return has_right_descent(w, i) ? weyl_mul(w, simple_reflection(w.ctx, i)) : w;
}

WeylElement demazure_star_word(std::shared_ptr<const CartanData> ctx, const Word& word) {
  WeylElement w = weyl_identity(ctx);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = demazure_star(*it, w);
  return w;
}

std::vector<long long> element_key(const WeylElement& w) { return w.action.a; }

std::vector<WeylElement> enumerate_upto(std::shared_ptr<const CartanData> ctx, int L) {
  std::map<std::vector<long long>, WeylElement> seen;
  std::vector<WeylElement> frontier{weyl_identity(ctx)};
  seen[element_key(frontier[0])] = frontier[0];
  for (int len = 1; len <= L && !frontier.empty(); ++len) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i = 0; i < ctx->size(); ++i) {
        if (has_right_descent(w, i)) continue;
        WeylElement ws = weyl_mul(w, simple_reflection(ctx, i));
        auto key = element_key(ws);
        if (seen.emplace(key, ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(w);
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    auto wa = length_and_word(a), wb = length_and_word(b);
    if (wa.first != wb.first) return wa.first < wb.first;
    return wa.second < wb.second;
  });
  return out;
}

std::vector<WeylElement> interval(const WeylElement& v, const WeylElement& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("interval endpoints not comparable");
  Word word = canonical_word(w);
  int n = static_cast<int>(word.size());
  std::map<std::vector<long long>, WeylElement> seen;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    WeylElement x = weyl_identity(w.ctx);
    for (int j = 0; j < n; ++j)
      if (mask & (1ull << j)) x = weyl_mul(x, simple_reflection(w.ctx, word[j]));
    seen.emplace(element_key(x), x);
  }
  std::vector<WeylElement> out;
  for (auto& [k, x] : seen)
    if (bruhat_leq(v, x)) out.push_back(x);
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    auto wa = length_and_word(a), wb = length_and_word(b);
    if (wa.first != wb.first) return wa.first < wb.first;
    return wa.second < wb.second;
  });
  return out;
}

std::vector<std::string> word_labels(const CartanData& ctx, const Word& word) {
  std::vector<std::string> out;
  for (int i : word) out.push_back(ctx.nodes.at(i));
  return out;
}

Word word_from_labels(const CartanData& ctx, const std::vector<std::string>& labels) {
  Word out;
  for (const auto& s : labels) out.push_back(ctx.node_index(s));
  return out;
}

}  // namespace tnn
