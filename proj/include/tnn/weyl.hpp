#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tnn/cartan.hpp"
#include "tnn/matrix.hpp"

namespace tnn {

using Word = std::vector<int>;  // node indices into the ambient CartanData

// A Weyl group element, represented faithfully by its integer action on the
// root lattice in the simple-root basis (columns are images of simple roots).
// The inverse matrix is carried along so descent tests need no inversion.
struct WeylElement {
  std::shared_ptr<const CartanData> ctx;
  Mat<long long> action;
  Mat<long long> inv;

  bool operator==(const WeylElement& o) const { return action == o.action; }
  bool operator!=(const WeylElement& o) const { return action != o.action; }
  bool is_identity() const { return action.is_identity(); }
};

WeylElement weyl_identity(std::shared_ptr<const CartanData> ctx);
WeylElement simple_reflection(std::shared_ptr<const CartanData> ctx, int i);
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const WeylElement& w);
WeylElement word_to_element(std::shared_ptr<const CartanData> ctx, const Word& word);

// ℓ(s_i w) < ℓ(w), i.e. w^{-1}(α_i) is a negative root.
bool has_left_descent(const WeylElement& w, int i);
// ℓ(w s_i) < ℓ(w), i.e. w(α_i) is a negative root.
bool has_right_descent(const WeylElement& w, int i);

// Greedy descent with smallest-node tie-breaking; the word multiplies left to
// right to w and is the canonical reduced word used everywhere downstream.
std::pair<int, Word> length_and_word(const WeylElement& w);
int length(const WeylElement& w);
Word canonical_word(const WeylElement& w);

// Subword criterion on the canonical word of w, scanned right to left.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

struct CosetDecomposition {
  WeylElement left_part;   // in W_J
  WeylElement right_part;  // in ^JW (no left descent in J)
};
CosetDecomposition coset_decompose(const WeylElement& w, const std::vector<int>& J);

WeylElement demazure_star(int i, const WeylElement& w);        // max{w, s_i w}
WeylElement demazure_circ_left(int i, const WeylElement& w);   // min{w, s_i w}
WeylElement demazure_circ_right(const WeylElement& w, int i);  // min{w, w s_i}
WeylElement demazure_star_word(std::shared_ptr<const CartanData> ctx, const Word& word);

// All elements of length ≤ L, sorted by (length, canonical word lex).
std::vector<WeylElement> enumerate_upto(std::shared_ptr<const CartanData> ctx, int L);

// {x : v ≤ x ≤ w} via subword products of the canonical word of w.
std::vector<WeylElement> interval(const WeylElement& v, const WeylElement& w);

// Word serialization using node labels.
std::vector<std::string> word_labels(const CartanData& ctx, const Word& word);
Word word_from_labels(const CartanData& ctx, const std::vector<std::string>& labels);

// Stable dedup/ordering key.
std::vector<long long> element_key(const WeylElement& w);

}  // namespace tnn
