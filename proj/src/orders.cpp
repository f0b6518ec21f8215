#include "tnn/orders.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>

using nlohmann::json;

namespace tnn {

std::vector<WeylElement> enumerate_parabolic_upto(std::shared_ptr<const CartanData> ctx,
                                                  const std::vector<int>& J, int L) {
  std::map<std::vector<long long>, WeylElement> seen;
  std::vector<WeylElement> frontier{weyl_identity(ctx)};
  seen[element_key(frontier[0])] = frontier[0];
  for (int len = 1; len <= L && !frontier.empty(); ++len) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i : J) {
        if (has_right_descent(w, i)) continue;
        WeylElement ws = weyl_mul(w, simple_reflection(ctx, i));
        if (seen.emplace(element_key(ws), ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

int twisted_length(const WeylElement& w, const std::vector<int>& J) {
  auto dec = coset_decompose(w, J);
  return length(dec.right_part) - length(dec.left_part);
}

bool twisted_leq(const WeylElement& v, const WeylElement& w, const std::vector<int>& J) {
  auto dv = coset_decompose(v, J);
  auto dw = coset_decompose(w, J);
  int bound = length(dw.right_part) - length(dv.right_part);
  if (bound < 0) return false;
  for (const auto& u : enumerate_parabolic_upto(v.ctx, J, bound)) {
    // w_J ≤ v_J·u^{-1} and u·^Jv ≤ ^Jw
    if (bruhat_leq(dw.left_part, weyl_mul(dv.left_part, weyl_inverse(u))) &&
        bruhat_leq(weyl_mul(u, dv.right_part), dw.right_part))
      return true;
  }
  return false;
}

std::vector<WeylElement> twisted_interval(const WeylElement& v, const WeylElement& w,
                                          const std::vector<int>& J) {
  if (!twisted_leq(v, w, J)) throw std::invalid_argument("twisted interval endpoints not comparable");
  auto dv = coset_decompose(v, J);
  auto dw = coset_decompose(w, J);
  int gap = length(dw.right_part) - length(dv.right_part);
  int a_bound = length(dv.left_part) + gap;

  std::vector<WeylElement> bs;
  for (const auto& b : interval(weyl_identity(w.ctx), dw.right_part)) {
    bool min_rep = true;
    for (int i : J)
      if (has_left_descent(b, i)) { min_rep = false; break; }
    if (min_rep) bs.push_back(b);
  }
  auto as = enumerate_parabolic_upto(w.ctx, J, a_bound);

  std::map<std::vector<long long>, WeylElement> seen;
  for (const auto& a : as)
    for (const auto& b : bs) {
      WeylElement x = weyl_mul(a, b);
      if (seen.count(element_key(x))) continue;
      if (twisted_leq(v, x, J) && twisted_leq(x, w, J)) seen.emplace(element_key(x), x);
    }
  std::vector<WeylElement> out;
  for (auto& [k, x] : seen) out.push_back(x);
  std::stable_sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
    int ta = twisted_length(a, J), tb = twisted_length(b, J);
    if (ta != tb) return ta < tb;
    return canonical_word(a) < canonical_word(b);
  });
  return out;
}

namespace {
std::string word_id(const WeylElement& w) {
  Word word = canonical_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += w.ctx->nodes[word[i]];
  }
  return s;
}

struct PairPoset {
  std::vector<std::pair<WeylElement, WeylElement>> pairs;
  std::vector<std::vector<bool>> rel;  // rel[i][j]: pair i ≤ pair j
};

GradedPoset pair_poset_to_graded(const PairPoset& pp,
                                 const std::vector<int>& ranks, bool adjoin_bottom) {
  int n = static_cast<int>(pp.pairs.size());
  GradedPoset p;
  for (int i = 0; i < n; ++i)
    p.elements.push_back({pair_id(pp.pairs[i].first, pp.pairs[i].second), ranks[i]});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !pp.rel[i][j]) continue;
      bool cover = true;
      for (int z = 0; z < n; ++z)
        if (z != i && z != j && pp.rel[i][z] && pp.rel[z][j]) { cover = false; break; }
      if (cover) p.covers.push_back({i, j});
    }
  if (adjoin_bottom) {
    int bot = p.size();
    p.elements.push_back({"0hat", -1});
    for (int i = 0; i < n; ++i) {
      bool minimal = true;
      for (int z = 0; z < n; ++z)
        if (z != i && pp.rel[z][i]) { minimal = false; break; }
      if (minimal) p.covers.push_back({bot, i});
    }
  }
  return p;
}
}  // namespace

std::string pair_id(const WeylElement& v, const WeylElement& w) {
  return "(" + word_id(v) + "|" + word_id(w) + ")";
}

namespace {
PairPoset build_jq_pairs(const WeylElement& v, const WeylElement& w,
                         const std::vector<int>& J) {
  auto xs = twisted_interval(v, w, J);
  PairPoset pp;
  int m = static_cast<int>(xs.size());
  std::vector<std::vector<bool>> tleq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) tleq[i][j] = twisted_leq(xs[i], xs[j], J);
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (tleq[i][j]) {
        pp.pairs.push_back({xs[i], xs[j]});
        idx.push_back({i, j});
      }
  int n = static_cast<int>(pp.pairs.size());
  pp.rel.assign(n, std::vector<bool>(n, false));
  // (v1,w1) ≤ (v2,w2) iff v2 ^J≤ v1 and w1 ^J≤ w2 (nesting).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      pp.rel[a][b] = tleq[idx[b].first][idx[a].first] && tleq[idx[a].second][idx[b].second];
  return pp;
}
}  // namespace

GradedPoset build_jq_poset(const WeylElement& v, const WeylElement& w,
                           const std::vector<int>& J, bool adjoin_bottom) {
  auto pp = build_jq_pairs(v, w, J);
  std::vector<int> ranks;
  for (auto& [pv, pw] : pp.pairs)
    ranks.push_back(twisted_length(pw, J) - twisted_length(pv, J));
  return pair_poset_to_graded(pp, ranks, adjoin_bottom);
}

std::string jq_poset_json(const WeylElement& v, const WeylElement& w,
                          const std::vector<int>& J, bool adjoin_bottom) {
  auto pp = build_jq_pairs(v, w, J);
  std::vector<int> ranks;
  for (auto& [pv, pw] : pp.pairs)
    ranks.push_back(twisted_length(pw, J) - twisted_length(pv, J));
  GradedPoset p = pair_poset_to_graded(pp, ranks, adjoin_bottom);
  json j;
  j["elements"] = json::array();
  for (int i = 0; i < p.size(); ++i) {
    json e = {{"id", p.elements[i].id}, {"rank", p.elements[i].rank}};
    if (i < static_cast<int>(pp.pairs.size())) {
      e["v"] = word_id(pp.pairs[i].first);
      e["w"] = word_id(pp.pairs[i].second);
    }
    j["elements"].push_back(e);
  }
  j["covers"] = json::array();
  for (auto [a, b] : p.covers)
    j["covers"].push_back({p.elements[a].id, p.elements[b].id});
  return j.dump(2);
}

bool in_wk_min_right(const WeylElement& w, const std::vector<int>& K) {
  for (int i : K)
    if (has_right_descent(w, i)) return false;
  return true;
}

bool qk_leq(const WeylElement& v1, const WeylElement& w1, const WeylElement& v2,
            const WeylElement& w2, const std::vector<int>& K) {
  int bound = length(w2) - length(w1);
  if (bound < 0) return false;
  for (const auto& u : enumerate_parabolic_upto(w1.ctx, K, bound)) {
    WeylElement vu = weyl_mul(v1, u), wu = weyl_mul(w1, u);
    if (bruhat_leq(v2, vu) && bruhat_leq(vu, wu) && bruhat_leq(wu, w2)) return true;
  }
  return false;
}

std::vector<std::pair<WeylElement, WeylElement>> qk_pairs_below(const WeylElement& v,
                                                                const WeylElement& w,
                                                                const std::vector<int>& K) {
  if (!bruhat_leq(v, w) || !in_wk_min_right(w, K))
    throw std::invalid_argument("top pair not in the projected index set");
  auto below = interval(weyl_identity(w.ctx), w);
  std::vector<WeylElement> tops;
  for (const auto& x : below)
    if (in_wk_min_right(x, K)) tops.push_back(x);
  std::vector<std::pair<WeylElement, WeylElement>> pairs;
  for (const auto& wp : tops)
    for (const auto& vp : below)
      if (bruhat_leq(vp, wp) && qk_leq(vp, wp, v, w, K)) pairs.push_back({vp, wp});
  return pairs;
}

GradedPoset build_qk_poset(const WeylElement& v, const WeylElement& w,
                           const std::vector<int>& K) {
  PairPoset pp;
  pp.pairs = qk_pairs_below(v, w, K);
  int n = static_cast<int>(pp.pairs.size());
  pp.rel.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      pp.rel[a][b] = qk_leq(pp.pairs[a].first, pp.pairs[a].second, pp.pairs[b].first,
                            pp.pairs[b].second, K);
  std::vector<int> ranks;
  for (auto& [pv, pw] : pp.pairs) ranks.push_back(length(pw) - length(pv));
  return pair_poset_to_graded(pp, ranks, false);
}

WeylElement map_to_glued(const GlueResult& g, std::shared_ptr<const CartanData> glued_ctx,
                         const WeylElement& w, bool sharp) {
  const auto& m = sharp ? g.sharp_map : g.flat_map;
  WeylElement out = weyl_identity(glued_ctx);
  for (int i : canonical_word(w)) {
    const std::string& glued_label = m.at(w.ctx->nodes[i]);
    out = weyl_mul(out, simple_reflection(glued_ctx, glued_ctx->node_index(glued_label)));
  }
  return out;
}

WeylElement tilde_nu(const GlueResult& g, std::shared_ptr<const CartanData> glued_ctx,
                     const WeylElement& v, const WeylElement& w) {
  return weyl_mul(map_to_glued(g, glued_ctx, v, false),
                  map_to_glued(g, glued_ctx, weyl_inverse(w), true));
}

SpadeResult spadesuit_map(std::shared_ptr<const CartanData> base, const std::vector<int>& J,
                          const WeylElement& v, const WeylElement& x) {
  auto bang = std::make_shared<const CartanData>(extend_shriek(*base));
  std::vector<std::string> j_labels;
  for (int i : J) j_labels.push_back(base->nodes[i]);
  SpadeResult res{nullptr, glue(*bang, j_labels), {}, {}, false, false};
  res.spade_ctx = std::make_shared<const CartanData>(res.glue_data.glued);

  auto lift = [&](const WeylElement& w) {  // base group -> extended group
    WeylElement out = weyl_identity(bang);
    for (int i : canonical_word(w))
      out = weyl_mul(out, simple_reflection(bang, bang->node_index(w.ctx->nodes[i])));
    return out;
  };
  WeylElement s0 = simple_reflection(bang, bang->node_index("0"));
  WeylElement s0x = weyl_mul(s0, lift(x));

  res.image = weyl_mul(map_to_glued(res.glue_data, res.spade_ctx, lift(v), true),
                       map_to_glued(res.glue_data, res.spade_ctx, s0x, true));

  auto dec = coset_decompose(v, J);
  WeylElement sharp_part = weyl_mul(lift(dec.right_part), s0x);
  res.decomposition =
      weyl_mul(map_to_glued(res.glue_data, res.spade_ctx, lift(dec.left_part), false),
               map_to_glued(res.glue_data, res.spade_ctx, sharp_part, true));
  res.identity_holds = (res.image == res.decomposition);

  WeylElement sp = map_to_glued(res.glue_data, res.spade_ctx, sharp_part, true);
  res.sharp_part_minimal = true;
  for (const auto& [old_label, glued_label] : res.glue_data.flat_map)
    if (has_left_descent(sp, res.spade_ctx->node_index(glued_label)))
      res.sharp_part_minimal = false;
  return res;
}

}  // namespace tnn
