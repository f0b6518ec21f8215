#pragma once

#include "tnn/poset.hpp"
#include "tnn/weyl.hpp"

namespace tnn {

// All elements of the standard parabolic subgroup W_J up to length L.
std::vector<WeylElement> enumerate_parabolic_upto(std::shared_ptr<const CartanData> ctx,
                                                  const std::vector<int>& J, int L);

// J-twisted length ℓ(^Jw) − ℓ(w_J).
int twisted_length(const WeylElement& w, const std::vector<int>& J);

// v ≤ w in the J-twisted Bruhat order: some u in W_J satisfies
// w_J ≤ v_J u^{-1} and u·^Jv ≤ ^Jw.  The search is finite because
// ℓ(u·^Jv) = ℓ(u) + ℓ(^Jv) forces ℓ(u) ≤ ℓ(^Jw) − ℓ(^Jv).
bool twisted_leq(const WeylElement& v, const WeylElement& w, const std::vector<int>& J);

// {x : v ^J≤ x ^J≤ w}.  Candidates are a·b with b ∈ ^JW, b ≤ ^Jw, and
// a ∈ W_J of length ≤ ℓ(v_J) + ℓ(^Jw) − ℓ(^Jv): if v ^J≤ a·b then some
// u ∈ W_J has a ≤ v_J·u^{-1} and u·^Jv ≤ b, so ℓ(a) ≤ ℓ(v_J) + ℓ(u) and
// ℓ(u) ≤ ℓ(b) − ℓ(^Jv) ≤ ℓ(^Jw) − ℓ(^Jv); cross-checked against brute
// force in tests.
std::vector<WeylElement> twisted_interval(const WeylElement& v, const WeylElement& w,
                                          const std::vector<int>& J);

std::string pair_id(const WeylElement& v, const WeylElement& w);

// Poset of pairs {(v',w') : v ^J≤ v' ^J≤ w' ^J≤ w} ordered by nesting,
// rank = ^Jℓ(w') − ^Jℓ(v'); optionally with a bottom element adjoined at
// rank −1 (covered by every singleton pair).
GradedPoset build_jq_poset(const WeylElement& v, const WeylElement& w,
                           const std::vector<int>& J, bool adjoin_bottom = false);

// Same data plus the (v',w') words, for CLI output.
std::string jq_poset_json(const WeylElement& v, const WeylElement& w,
                          const std::vector<int>& J, bool adjoin_bottom = false);

bool in_wk_min_right(const WeylElement& w, const std::vector<int>& K);  // w ∈ W^K

// (v1,w1) ⪯ (v2,w2) in the projected-pair order: some u ∈ W_K has
// v2 ≤ v1·u ≤ w1·u ≤ w2; ℓ(u) ≤ ℓ(w2) − ℓ(w1) since w1 ∈ W^K.
bool qk_leq(const WeylElement& v1, const WeylElement& w1, const WeylElement& v2,
            const WeylElement& w2, const std::vector<int>& K);

// Poset of pairs {(v',w') : v' ≤ w', w' ∈ W^K, (v',w') ⪯ (v,w)},
// rank = ℓ(w') − ℓ(v').
GradedPoset build_qk_poset(const WeylElement& v, const WeylElement& w,
                           const std::vector<int>& K);
std::vector<std::pair<WeylElement, WeylElement>> qk_pairs_below(const WeylElement& v,
                                                                const WeylElement& w,
                                                                const std::vector<int>& K);

// Image of an element of the base Weyl group in the glued Weyl group under
// one of the two copy injections.
WeylElement map_to_glued(const GlueResult& g, std::shared_ptr<const CartanData> glued_ctx,
                         const WeylElement& w, bool sharp);

// ν̃(v,w) = v^♭ · (w^{-1})^♯ in the glued Weyl group; sends a nested pair
// order to the twisted order on the glued group, with rank ℓ(w) − ℓ(v).
WeylElement tilde_nu(const GlueResult& g, std::shared_ptr<const CartanData> glued_ctx,
                     const WeylElement& v, const WeylElement& w);

struct SpadeResult {
  std::shared_ptr<const CartanData> spade_ctx;  // glue(one-node extension, J)
  GlueResult glue_data;
  WeylElement image;          // v^♯ · (s_0 x)^♯
  WeylElement decomposition;  // v_J^♭ · (^Jv s_0 x)^♯
  bool identity_holds;        // image == decomposition
  bool sharp_part_minimal;    // (^Jv s_0 x)^♯ has no left descent in the flat copy
};

// The pair map into the Weyl group of the glued one-node extension; v and x
// live in the base Weyl group, J indexes base nodes.
SpadeResult spadesuit_map(std::shared_ptr<const CartanData> base, const std::vector<int>& J,
                          const WeylElement& v, const WeylElement& x);

}  // namespace tnn
