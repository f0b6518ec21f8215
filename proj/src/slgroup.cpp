#include "tnn/slgroup.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

using nlohmann::json;

namespace tnn {

Perm perm_identity(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[i] = a[b[i]];
  return p;
}

Perm perm_inverse(const Perm& a) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[a[i]] = static_cast<int>(i);
  return p;
}

int perm_length(const Perm& a) {
  int inv = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

Perm perm_gen(int m, int i) {
  Perm p = perm_identity(m);
  std::swap(p[i - 1], p[i]);
  return p;
}

bool perm_right_descent(const Perm& a, int i) { return a[i - 1] > a[i]; }

std::vector<int> perm_word(const Perm& a) {
  Perm p = a;
  int m = static_cast<int>(a.size());
  std::vector<int> rev;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < m; ++i)
      if (perm_right_descent(p, i)) {
        std::swap(p[i - 1], p[i]);
        rev.push_back(i);
        moved = true;
        break;
      }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Perm weyl_to_perm(const WeylElement& w, int m) {
  Perm p = perm_identity(m);
  for (int node : canonical_word(w)) p = perm_mul(p, perm_gen(m, node + 1));
  return p;
}

WeylElement perm_to_weyl(std::shared_ptr<const CartanData> ctx, const Perm& p) {
  WeylElement w = weyl_identity(ctx);
  for (int i : perm_word(p)) w = weyl_mul(w, simple_reflection(ctx, i - 1));
  return w;
}

RatMat gen_x(int m, int i, const Rat& a) {
  RatMat g = RatMat::identity(m);
  g(i - 1, i) = a;
  return g;
}

RatMat gen_y(int m, int i, const Rat& a) {
  RatMat g = RatMat::identity(m);
  g(i, i - 1) = a;
  return g;
}

RatMat gen_torus(int m, int i, const Rat& b) {
  if (b == 0) throw std::invalid_argument("torus parameter must be nonzero");
  RatMat g = RatMat::identity(m);
  g(i - 1, i - 1) = b;
  g(i, i) = Rat(1) / b;
  return g;
}

RatMat sdot_mat(int m, int i) {
  RatMat g = RatMat::identity(m);
  g(i - 1, i - 1) = 0;
  g(i, i) = 0;
  g(i - 1, i) = -1;
  g(i, i - 1) = 1;
  return g;
}

RatMat sdot_inv_mat(int m, int i) {
  RatMat g = RatMat::identity(m);
  g(i - 1, i - 1) = 0;
  g(i, i) = 0;
  g(i - 1, i) = 1;
  g(i, i - 1) = -1;
  return g;
}

RatMat wdot(int m, const std::vector<int>& word) {
  RatMat g = RatMat::identity(m);
  for (int i : word) g = g * sdot_mat(m, i);
  return g;
}

RatMat perm_wdot(const Perm& p) { return wdot(static_cast<int>(p.size()), perm_word(p)); }

RatMat iota(const RatMat& g) {
  RatMat r = g;
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      if ((i - j) % 2 != 0) r(i, j) = -r(i, j);
  return r;
}

bool in_b_plus(const RatMat& g) {
  if (!is_upper_triangular(g)) return false;
  for (int i = 0; i < g.rows; ++i)
    if (g(i, i) == 0) return false;
  return true;
}

bool in_b_minus(const RatMat& g) {
  if (!is_lower_triangular(g)) return false;
  for (int i = 0; i < g.rows; ++i)
    if (g(i, i) == 0) return false;
  return true;
}

bool in_torus(const RatMat& g) {
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      if (i == j && g(i, j) == 0) return false;
      if (i != j && g(i, j) != 0) return false;
    }
  return true;
}

bool in_torus_pos(const RatMat& g) {
  if (!in_torus(g)) return false;
  for (int i = 0; i < g.rows; ++i)
    if (g(i, i) <= 0) return false;
  return true;
}

LeviContext make_levi(int m, std::vector<int> J) {
  LeviContext ctx;
  ctx.m = m;
  std::sort(J.begin(), J.end());
  ctx.J = J;
  ctx.block.assign(m, 0);
  std::vector<bool> joined(m, false);
  for (int i : J) {
    if (i < 1 || i >= m) throw std::out_of_range("Levi index out of range");
    joined[i] = true;  // positions i-1 and i share a block
  }
  int b = 0;
  for (int pos = 0; pos < m; ++pos) {
    if (pos > 0 && !joined[pos]) ++b;
    ctx.block[pos] = b;
  }
  return ctx;
}

bool in_p_minus(const LeviContext& ctx, const RatMat& g) {
  for (int r = 0; r < ctx.m; ++r)
    for (int c = 0; c < ctx.m; ++c)
      if (ctx.block[r] < ctx.block[c] && g(r, c) != 0) return false;
  return true;
}

bool in_levi(const LeviContext& ctx, const RatMat& g) {
  for (int r = 0; r < ctx.m; ++r)
    for (int c = 0; c < ctx.m; ++c)
      if (ctx.block[r] != ctx.block[c] && g(r, c) != 0) return false;
  return true;
}

namespace {
enum class DiagBlockShape { lower_unit, lower_inv, upper_unit, upper_inv };

bool j_pattern(const LeviContext& ctx, const RatMat& g, bool block_upper,
               DiagBlockShape shape) {
  for (int r = 0; r < ctx.m; ++r)
    for (int c = 0; c < ctx.m; ++c) {
      if (ctx.block[r] == ctx.block[c]) {
        bool above = r < c, below = r > c;
        switch (shape) {
          case DiagBlockShape::lower_unit:
            if (above && g(r, c) != 0) return false;
            if (r == c && g(r, c) != 1) return false;
            break;
          case DiagBlockShape::lower_inv:
            if (above && g(r, c) != 0) return false;
            if (r == c && g(r, c) == 0) return false;
            break;
          case DiagBlockShape::upper_unit:
            if (below && g(r, c) != 0) return false;
            if (r == c && g(r, c) != 1) return false;
            break;
          case DiagBlockShape::upper_inv:
            if (below && g(r, c) != 0) return false;
            if (r == c && g(r, c) == 0) return false;
            break;
        }
      } else if (block_upper) {
        if (ctx.block[r] > ctx.block[c] && g(r, c) != 0) return false;
      } else {
        if (ctx.block[r] < ctx.block[c] && g(r, c) != 0) return false;
      }
    }
  return true;
}
}  // namespace

bool in_ju_plus(const LeviContext& ctx, const RatMat& g) {
  return j_pattern(ctx, g, true, DiagBlockShape::lower_unit);
}
bool in_ju_minus(const LeviContext& ctx, const RatMat& g) {
  return j_pattern(ctx, g, false, DiagBlockShape::upper_unit);
}
bool in_jb_plus(const LeviContext& ctx, const RatMat& g) {
  return j_pattern(ctx, g, true, DiagBlockShape::lower_inv);
}
bool in_jb_minus(const LeviContext& ctx, const RatMat& g) {
  return j_pattern(ctx, g, false, DiagBlockShape::upper_inv);
}

RatMat pi_J(const LeviContext& ctx, const RatMat& p) {
  if (!in_p_minus(ctx, p)) throw std::domain_error("pi_J input is not block lower triangular");
  RatMat out(ctx.m, ctx.m);
  for (int r = 0; r < ctx.m; ++r)
    for (int c = 0; c < ctx.m; ++c)
      if (ctx.block[r] == ctx.block[c]) out(r, c) = p(r, c);
  return out;
}

RatMat p_plus_J(const LeviContext& ctx, const RatMat& b) {
  if (!in_jb_plus(ctx, b)) throw std::domain_error("p_plus_J input is not in the twisted Borel");
  // Diagonal blocks are lower triangular L_k; the U_J^- component has blocks
  // L_k · diag(L_k)^{-1}.
  RatMat out = RatMat::identity(ctx.m);
  for (int r = 0; r < ctx.m; ++r)
    for (int c = 0; c < ctx.m; ++c)
      if (ctx.block[r] == ctx.block[c] && r >= c) out(r, c) = b(r, c) / b(c, c);
  return out;
}

Perm longest_parabolic(int m, const std::vector<int>& J) {
  LeviContext ctx = make_levi(m, J);
  Perm p(m);
  int start = 0;
  for (int pos = 0; pos < m; ++pos) {
    if (pos + 1 == m || ctx.block[pos + 1] != ctx.block[pos]) {
      for (int k = start; k <= pos; ++k) p[k] = pos - (k - start);
      start = pos + 1;
    }
  }
  return p;
}

RatMat wdot_J(const LeviContext& ctx) { return perm_wdot(longest_parabolic(ctx.m, ctx.J)); }

namespace {
// rank of the submatrix rows r0..m-1, cols 0..c1 (southwest) or
// rows 0..r1, cols 0..c1 (northwest).
int corner_rank(const RatMat& g, bool southwest, int rbound, int cbound) {
  int m = g.rows;
  int rows = southwest ? (m - rbound) : (rbound + 1);
  RatMat sub(rows, cbound + 1);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c <= cbound; ++c) sub(r, c) = g(southwest ? rbound + r : r, c);
  return rank(sub);
}
}  // namespace

Perm bruhat_cell(const RatMat& g) {
  int m = g.rows;
  if (det(g) == 0) throw std::domain_error("cell identification of singular matrix");
  Perm w(m, -1);
  for (int j = 0; j < m; ++j) {
    // w(j) = max{k : adding column j raises the rank of rows k..m-1}.
    for (int k = m - 1; k >= 0; --k) {
      int with = corner_rank(g, true, k, j);
      int without = (j == 0) ? 0 : corner_rank(g, true, k, j - 1);
      if (with == without + 1) { w[j] = k; break; }
    }
  }
  return w;
}

Perm birkhoff_cell(const RatMat& g) {
  int m = g.rows;
  if (det(g) == 0) throw std::domain_error("cell identification of singular matrix");
  Perm v(m, -1);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      int with = corner_rank(g, false, k, j);
      int without = (j == 0) ? 0 : corner_rank(g, false, k, j - 1);
      if (with == without + 1) { v[j] = k; break; }
    }
  }
  return v;
}

std::pair<Perm, Perm> twisted_cell(const LeviContext& ctx, const RatMat& g) {
  Perm wj = longest_parabolic(ctx.m, ctx.J);
  RatMat conj = inverse(wdot_J(ctx)) * g;
  return {perm_mul(wj, birkhoff_cell(conj)), perm_mul(wj, bruhat_cell(conj))};
}

bool chart_membership(const Perm& u, const RatMat& g) {
  return all_leading_minors_nonzero(inverse(perm_wdot(u)) * g);
}

namespace {
void require_in_conjugated_uminus(const Perm& r, const RatMat& g, const char* who) {
  RatMat rd = perm_wdot(r);
  if (!is_unipotent_lower(inverse(rd) * g * rd))
    throw std::domain_error(std::string(who) + ": element not in the conjugated unipotent group");
}
}  // namespace

std::pair<RatMat, RatMat> sigma_factor_minus_plus(const Perm& r, const LeviContext& ctx,
                                                  const RatMat& g) {
  require_in_conjugated_uminus(r, g, "sigma_factor");
  RatMat wj = wdot_J(ctx), wji = inverse(wj);
  auto f = ldu_factor(wji * g * wj);
  if (!f || !f->D.is_identity())
    throw std::domain_error("sigma_factor: degenerate factorization");
  RatMat h1 = wj * f->L * wji, h2 = wj * f->U * wji;
  require_in_conjugated_uminus(r, h1, "sigma_factor (first component)");
  require_in_conjugated_uminus(r, h2, "sigma_factor (second component)");
  return {h1, h2};
}

std::pair<RatMat, RatMat> sigma_factor_plus_minus(const Perm& r, const LeviContext& ctx,
                                                  const RatMat& g) {
  require_in_conjugated_uminus(r, g, "sigma_factor");
  RatMat wj = wdot_J(ctx), wji = inverse(wj);
  auto f = udl_factor(wji * g * wj);
  if (!f || !f->D.is_identity())
    throw std::domain_error("sigma_factor: degenerate factorization");
  RatMat first = wj * f->U * wji;   // ^JU^+ component
  RatMat second = wj * f->L * wji;  // ^JU^- component
  require_in_conjugated_uminus(r, first, "sigma_factor (first component)");
  require_in_conjugated_uminus(r, second, "sigma_factor (second component)");
  return {first, second};
}

namespace {
// Representative in ṙU^-ṙ^{-1} of a chart point: ṙ^{-1}M = L·(DU) with
// DU ∈ B^+, so the flag is (ṙLṙ^{-1})·ṙ·B^+.
RatMat chart_unipotent_rep(const Perm& r, const RatMat& M) {
  RatMat rd = perm_wdot(r);
  auto f = ldu_factor(inverse(rd) * M);
  if (!f) throw std::domain_error("flag point outside the chart");
  return rd * f->L * inverse(rd);
}
}  // namespace

ChartSplit jc_chart(const Perm& r, const LeviContext& ctx, const RatMat& p) {
  RatMat g = chart_unipotent_rep(r, p);
  RatMat rd = perm_wdot(r);
  auto [h1, h2] = sigma_factor_minus_plus(r, ctx, g);
  auto [g1, g2] = sigma_factor_plus_minus(r, ctx, g);
  return {h2 * rd, g2 * rd};
}

RatMat jc_chart_inv(const Perm& r, const LeviContext& ctx, const RatMat& plus,
                    const RatMat& minus) {
  RatMat a = chart_unipotent_rep(r, plus);
  RatMat b = chart_unipotent_rep(r, minus);
  RatMat wj = wdot_J(ctx), wji = inverse(wj);
  auto f = ldu_factor(wji * (a * inverse(b)) * wj);
  if (!f || !f->D.is_identity())
    throw std::domain_error("chart reassembly: degenerate factorization");
  RatMat ell = wj * f->L * wji;  // ^JU^- factor of a·b^{-1}
  return inverse(ell) * a * perm_wdot(r);
}

CheckReport verify_xy_identities(int m, const std::vector<std::array<Rat, 3>>& triples) {
  CheckReport rep;
  auto record = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back(what);
    }
  };
  for (const auto& t : triples) {
    const Rat &a = t[0], &b = t[1], &c = t[2];
    for (int i = 1; i < m; ++i) {
      Rat s = b + c, d1 = a * s + 1, d2 = a * b + 1;
      record(gen_x(m, i, a) * gen_y(m, i, s) ==
                 gen_y(m, i, s / d1) * gen_torus(m, i, d1) * gen_x(m, i, a / d1),
             "product identity (second display) at i=" + std::to_string(i));
      record(gen_x(m, i, a / d1) * gen_y(m, i, -c) ==
                 gen_y(m, i, -c * d1 / d2) * gen_torus(m, i, d2 / d1) * gen_x(m, i, a / d2),
             "product identity (third display) at i=" + std::to_string(i));
      for (int j = 1; j < m; ++j) {
        if (j == i) continue;
        record(gen_x(m, i, a) * gen_y(m, j, b) == gen_y(m, j, b) * gen_x(m, i, a) &&
                   gen_x(m, i, a) * gen_y(m, j, -b) == gen_y(m, j, -b) * gen_x(m, i, a),
               "commutation at i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
  return rep;
}

RatMat rat_mat_from_json(const std::string& text) {
  json j = json::parse(text);
  int rows = static_cast<int>(j.size());
  if (rows == 0) return RatMat(0, 0);
  int cols = static_cast<int>(j[0].size());
  RatMat g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (e.is_string())
        g(r, c) = rat_from_string(e.get<std::string>());
      else
        g(r, c) = Rat(e.get<long long>());
    }
  return g;
}

std::string rat_mat_to_json(const RatMat& g) {
  json j = json::array();
  for (int r = 0; r < g.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < g.cols; ++c) row.push_back(rat_to_string(g(r, c)));
    j.push_back(row);
  }
  return j.dump();
}

}  // namespace tnn
