#pragma once

#include <optional>

#include "tnn/orders.hpp"
#include "tnn/report.hpp"
#include "tnn/slgroup.hpp"

namespace tnn {

// Shared type-A Cartan context of SL(m) (nodes "1".."m-1"); cached per m.
std::shared_ptr<const CartanData> type_a_ctx(int m);

// Bridges between permutations and Weyl-group computations.
WeylElement perm_weyl(int m, const Perm& p);
std::vector<int> levi_to_nodes(const std::vector<int>& J);  // 1-based gens -> node ids

Perm coset_min_left(const Perm& p, const std::vector<int>& J);   // ^Jp
Perm coset_left_part(const Perm& p, const std::vector<int>& J);  // p_J = p·(^Jp)^{-1}
Perm coset_min_right(const Perm& p, const std::vector<int>& K);  // p^K
bool in_min_left(const Perm& p, const std::vector<int>& J);      // p ∈ ^JW

bool twisted_leq_perm(int m, const std::vector<int>& J, const Perm& v, const Perm& w);
int twisted_length_perm(int m, const std::vector<int>& J, const Perm& w);
std::vector<Perm> twisted_interval_perm(int m, const std::vector<int>& J, const Perm& v,
                                        const Perm& w);

// Right-greedy mask on a reduced word: letter positions multiply to v, with
// every right-to-left step length-decreasing.
struct PositiveSubexpression {
  std::vector<int> word;     // reduced word, 1-based generators
  std::vector<bool> letter;  // per position
  Perm target;
  int free_count() const {
    int c = 0;
    for (bool b : letter)
      if (!b) ++c;
    return c;
  }
};
PositiveSubexpression positive_subexpression(int m, const std::vector<int>& word_of_w,
                                             const Perm& v);

enum class MrSign { pos, neg };

// Product over the masked word: ṡ_i (pos) or ṡ_i^{-1} (neg) at letter
// positions, y_i(raw) at free positions.  raw holds the actual y-arguments
// (positive for the pos family, negative for neg).
RatMat mr_matrix(int m, const PositiveSubexpression& pe, const std::vector<Rat>& raw,
                 MrSign sign);

struct CellSample {
  RatMat point;
  std::vector<Rat> raw_params;
};
// Random sample with cell-index assertions (bruhat = w, birkhoff = v).
CellSample mr_sample(int m, const std::vector<int>& word_of_w, const Perm& v, MrSign sign,
                     ParamRng& rng);

// Exact parameter extraction: peels the masked word off the flag M·B^+,
// solving each free parameter from the rank-drop condition of the Schubert
// suffix.  Returns the raw y-arguments, or nothing when M is not in the
// Richardson cell or the peel fails.  Membership in the signed family is
// extraction success + all raw values carrying the family sign.
std::optional<std::vector<Rat>> mr_extract(int m, const std::vector<int>& word_of_w,
                                           const Perm& v, MrSign sign, const RatMat& M);
bool mr_membership(int m, const std::vector<int>& word_of_w, const Perm& v, MrSign sign,
                   const RatMat& M);

// Exact group-level membership g ∈ U^-_{w,>0} (pos) or U^-_{w,<0} (neg),
// and the U^+ counterparts via transpose.
bool in_u_minus_w_signed(int m, const Perm& w, MrSign sign, const RatMat& g);
bool in_u_plus_w_signed(int m, const Perm& w, MrSign sign, const RatMat& g);
RatMat u_minus_product(int m, const Perm& w, const std::vector<Rat>& raw);

// h1·π_J(h2)^{-1}·h2 with h1 ∈ U^-_{v,>0} (v ∈ W_J), h2 ∈ U^-_{w,<0}
// (w ∈ ^JW); raw parameter split is ℓ(v) then ℓ(w).
RatMat j_unipotent_matrix(const LeviContext& ctx, const Perm& v, const Perm& w,
                          const std::vector<Rat>& params_v, const std::vector<Rat>& params_w);

// h1·π_J(h2·(^Ju̇)^{-1})^{-1}·h2 with h1 ∈ U^-_{u_J,>0} and
// h2 ∈ G_{^Ju_+,w,<0}; requires u ^J≤ w and w ∈ ^JW.
RatMat jg_matrix(const LeviContext& ctx, const Perm& u, const Perm& w,
                 const std::vector<Rat>& params_levi, const std::vector<Rat>& params_cell);
CellSample jg_sample(const LeviContext& ctx, const Perm& u, const Perm& w, ParamRng& rng);

// Membership in the positive twisted cell with minimal-coset top (w ∈ ^JW):
// the two-condition characterization (negative-family test after splitting
// off the Levi-unipotent factor, positive-family test on the Levi
// projection), decided exactly.
bool jg_membership(const LeviContext& ctx, const Perm& u, const Perm& w, const RatMat& M);

// Positive sample of an arbitrary twisted cell (v ^J≤ w): direct when
// w ∈ ^JW, otherwise the plus-component of a chart split at w of a positive
// sample of (v, ^Jw).
RatMat twisted_positive_sample(const LeviContext& ctx, const Perm& v, const Perm& w,
                               ParamRng& rng);

// Exact positivity decision for a flag in the twisted cell (v, w): direct
// membership when w ∈ ^JW; otherwise reassemble with a fixed positive
// partner of (w, ^Jw) and decide in (v, ^Jw).  Throws when M is not in the
// stated cell.
bool positivity_test(const LeviContext& ctx, const Perm& v, const Perm& w, const RatMat& M);

// Partial-flag coset equality a·P_K^+ = b·P_K^+.
bool flag_quotient_equal(const LeviContext& K, const RatMat& a, const RatMat& b);

// Verification suites (deterministic given the seed embedded in rng).
SuiteReport suite_chart_containment(const LeviContext& ctx, const Perm& v, const Perm& w,
                                    int samples, ParamRng& rng);
SuiteReport suite_product_structure(const LeviContext& ctx, const Perm& v, const Perm& u,
                                    const Perm& w, int samples, ParamRng& rng);
SuiteReport suite_closure_poset(const LeviContext& ctx, const Perm& v, const Perm& w);
SuiteReport suite_identities(int m, int samples, ParamRng& rng);

// The four factorization memberships for ẇ^{-1}h, ẇ_1^{-1}h, ẇb, ẇ_2 b
// with h ∈ U^-_{w,>0}, b ∈ U^+_{w^{-1},>0}, w = w_1 w_2 length-additively.
CheckReport verify_gkl_memberships(int m, const Perm& w, const Perm& w1, int samples,
                                   ParamRng& rng);

}  // namespace tnn
