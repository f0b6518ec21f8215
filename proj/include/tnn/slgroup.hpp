#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tnn/matrix.hpp"
#include "tnn/weyl.hpp"

namespace tnn {

// Permutation of {0..m-1}; p[i] is the image of i.  Simple generators are
// indexed 1..m-1, s_i swapping i-1 and i.
using Perm = std::vector<int>;

Perm perm_identity(int m);
Perm perm_mul(const Perm& a, const Perm& b);  // (ab)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
int perm_length(const Perm& a);  // inversion count
Perm perm_gen(int m, int i);     // s_i
bool perm_right_descent(const Perm& a, int i);
std::vector<int> perm_word(const Perm& a);  // reduced word, 1-based generators

// Conversions against a type-A Cartan context whose node k (0-based) is the
// generator k+1.
Perm weyl_to_perm(const WeylElement& w, int m);
WeylElement perm_to_weyl(std::shared_ptr<const CartanData> ctx, const Perm& p);

// Pinned generators of SL(m), 1 ≤ i ≤ m-1.
RatMat gen_x(int m, int i, const Rat& a);      // I + a·E_{i,i+1}
RatMat gen_y(int m, int i, const Rat& a);      // I + a·E_{i+1,i}
RatMat gen_torus(int m, int i, const Rat& b);  // diag(..., b, 1/b, ...)
RatMat sdot_mat(int m, int i);                 // [[0,-1],[1,0]] block at i
RatMat sdot_inv_mat(int m, int i);
RatMat wdot(int m, const std::vector<int>& word);  // product of sdot over the word
RatMat perm_wdot(const Perm& p);

// ι: identity on the torus, x_i(a) ↦ x_i(-a), y_i(a) ↦ y_i(-a); entrywise
// this is g_{jk} ↦ (-1)^{j-k} g_{jk}.
RatMat iota(const RatMat& g);

bool in_b_plus(const RatMat& g);
bool in_b_minus(const RatMat& g);
bool in_torus(const RatMat& g);
bool in_torus_pos(const RatMat& g);

// Block structure cut out by J ⊆ {1..m-1}: positions i-1, i share a block
// exactly when i ∈ J.
struct LeviContext {
  int m = 0;
  std::vector<int> J;
  std::vector<int> block;  // block id per position, nondecreasing
};
LeviContext make_levi(int m, std::vector<int> J);

bool in_p_minus(const LeviContext& ctx, const RatMat& g);  // block lower
bool in_levi(const LeviContext& ctx, const RatMat& g);     // block diagonal
// ^JU^+ = ẇ_J U^+ ẇ_J^{-1}: block upper with lower-unitriangular diagonal
// blocks; ^JU^- likewise with the patterns flipped; ^JB^± allow invertible
// triangular diagonal blocks.
bool in_ju_plus(const LeviContext& ctx, const RatMat& g);
bool in_ju_minus(const LeviContext& ctx, const RatMat& g);
bool in_jb_plus(const LeviContext& ctx, const RatMat& g);
bool in_jb_minus(const LeviContext& ctx, const RatMat& g);

RatMat pi_J(const LeviContext& ctx, const RatMat& p);  // P_J^- -> L_J, errors outside
// Projection ^JB^+ = U_J^- ⋉ T·U_{P_J^+} -> U_J^-: unit-lower normalization
// of the (lower-triangular) diagonal blocks.
RatMat p_plus_J(const LeviContext& ctx, const RatMat& b);

Perm longest_parabolic(int m, const std::vector<int>& J);  // w_J (block reversal)
RatMat wdot_J(const LeviContext& ctx);

// g ∈ B^+ ẇ B^+ via southwest corner ranks; g ∈ B^- v̇ B^+ via northwest ranks.
Perm bruhat_cell(const RatMat& g);
Perm birkhoff_cell(const RatMat& g);
// J-twisted cell indices: M ∈ ^JB^- v̇ B^+ ∩ ^JB^+ ẇ B^+, computed by
// ẇ_J-conjugation; returns (v, w).
std::pair<Perm, Perm> twisted_cell(const LeviContext& ctx, const RatMat& g);

// gB^+ ∈ u̇ U^- B^+: all leading principal minors of u̇^{-1} g nonzero.
bool chart_membership(const Perm& u, const RatMat& g);

// For g in ṙU^-ṙ^{-1}: the unique factorizations g = h1·h2 with
// h1 ∈ ^JU^-, h2 ∈ ^JU^+ (minus_plus) and g = g1·g2 with g1 ∈ ^JU^+,
// g2 ∈ ^JU^- (plus_minus); computed by ẇ_J-conjugated unit LU / UL
// factorization.  Throws when a pivot degenerates or g fails the
// subgroup pattern.
std::pair<RatMat, RatMat> sigma_factor_minus_plus(const Perm& r, const LeviContext& ctx,
                                                  const RatMat& g);
std::pair<RatMat, RatMat> sigma_factor_plus_minus(const Perm& r, const LeviContext& ctx,
                                                  const RatMat& g);

struct ChartSplit {
  RatMat plus_rep;   // flag in the (v, r) cell
  RatMat minus_rep;  // flag in the (r, w) cell
};
// Chart factorization at r: for a flag p = M·B^+ in ṙU^-B^+/B^+, recover
// g ∈ ṙU^-ṙ^{-1} with p = gṙB^+ and return (h2·ṙ, g2·ṙ) from the two
// sigma factorizations.  Throws when p is outside the chart.
ChartSplit jc_chart(const Perm& r, const LeviContext& ctx, const RatMat& p);
// Inverse: recover a, b ∈ ṙU^-ṙ^{-1} from the component flags, factor
// a·b^{-1} = ℓ·u' (ℓ ∈ ^JU^-, u' ∈ ^JU^+) and return ℓ^{-1}·a·ṙ.
RatMat jc_chart_inv(const Perm& r, const LeviContext& ctx, const RatMat& plus,
                    const RatMat& minus);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  int checks = 0;
};

// The three x/y product identities plus the disjoint-support commutation,
// verified as exact matrix equalities for the given parameter triples.
CheckReport verify_xy_identities(int m, const std::vector<std::array<Rat, 3>>& triples);

RatMat rat_mat_from_json(const std::string& text);
std::string rat_mat_to_json(const RatMat& g);

}  // namespace tnn
