#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "quonhom/errors.hpp"

namespace quonhom {

// One creation operator b_port^dag(mode). port is 1 or 2, mode indexes the
// frequency grid [0, modeCount).
struct OperatorLabel {
  int port;
  int mode;
  friend auto operator<=>(const OperatorLabel&, const OperatorLabel&) = default;
};

// Ordered product of creation operators applied to the vacuum; element 0 is
// the leftmost (last applied) operator. For |q| < 1 different orders are
// genuinely different vectors, so words are never reordered.
using CreationWord = std::vector<OperatorLabel>;

// Deformation parameter of the exchange relation
//   b(x) b^dag(y) - q b^dag(y) b(x) = delta_xy,
// q in [-1, 1]; q = -1, 0, 1 give fermions, Boltzmann statistics, bosons.
class QuonParameter {
 public:
  explicit QuonParameter(double q);
  double value() const { return q_; }

 private:
  double q_;
};

// Finite superposition of equal-length creation words.
class WordState {
 public:
  explicit WordState(int mode_count);

  // single empty word with coefficient 1
  static WordState vacuum(int mode_count);

  int mode_count() const { return mode_count_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // length of the stored words; only valid for non-empty states
  std::size_t word_length() const;

  const std::map<CreationWord, std::complex<double>>& terms() const { return terms_; }

  // coefficient of a word, zero if absent
  std::complex<double> coefficient(const CreationWord& word) const;

  // Accumulates coeff onto word. Terms whose running coefficient drops below
  // kPruneThreshold in magnitude are removed. Rejects labels outside the
  // mode grid and words whose length differs from the stored ones.
  void add(const CreationWord& word, std::complex<double> coeff);

  static constexpr double kPruneThreshold = 1e-15;

 private:
  int mode_count_;
  std::map<CreationWord, std::complex<double>> terms_;
};

// Deformed inner product of two creation words:
//   <w1|w2> = sum over label-preserving bijections sigma of q^inv(sigma),
// where sigma maps positions of w2 to matched positions of w1 and
// inv(sigma) counts pairs i < j with sigma(i) > sigma(j). Zero whenever the
// label multisets differ. At q = 1 this is the permanent of the label-match
// matrix, at q = -1 its determinant, at q = 0 the Kronecker delta of the
// ordered words.
std::complex<double> gram_entry(const CreationWord& w1, const CreationWord& w2,
                                QuonParameter q);

enum class OpKind { Create, Annihilate };

struct MixedOp {
  OpKind kind;
  OperatorLabel label;
  friend auto operator<=>(const MixedOp&, const MixedOp&) = default;
};

// Product of creation and annihilation operators, leftmost first.
using MixedWord = std::vector<MixedOp>;

MixedOp creation_op(OperatorLabel label);
MixedOp annihilation_op(OperatorLabel label);

// Vacuum expectation <vac| word |vac> evaluated by exhaustively rewriting
// every adjacent pair b(x) b^dag(y) into q b^dag(y) b(x) + delta_xy. Words
// with no such pair contribute 1 if empty and 0 otherwise. Exponential in
// the word length; this is the brute-force reference for gram_entry.
std::complex<double> reduce_word_oracle(const MixedWord& word, QuonParameter q);

// Mixed word representing <bra|ket|vac> sandwiches: the annihilators of bra
// in reverse order followed by the creators of ket.
MixedWord bra_ket_word(const CreationWord& bra, const CreationWord& ket);

// Occupation-number operator: scales each word by the number of labels on
// the given port (restricted to one mode when given). Diagonal on the word
// basis; this is the unique extension of the one-quantum counting rule that
// commutes into creation operators one delta at a time.
WordState number_apply(const WordState& state, int port,
                       std::optional<int> mode = std::nullopt);

// <s1|s2> under the deformed Gram form, conjugate-linear in s1.
std::complex<double> state_inner(const WordState& s1, const WordState& s2,
                                 QuonParameter q);

// b^dag(label) |state>: prepends the label to every word.
WordState apply_creation(const WordState& state, OperatorLabel label);

// b(label) |state>: removes one matching label per word with weight
// q^(number of creators passed over), i.e.
//   b(x) |y_0 ... y_n> = sum_p q^p delta(x, y_p) |y_0 ... y_p-hat ... y_n>.
WordState apply_annihilation(const WordState& state, OperatorLabel label,
                             QuonParameter q);

// All creation words over the given mode grid with length <= max_len, in
// lexicographic order by length.
std::vector<CreationWord> enumerate_words(int mode_count, int max_len);

}  // namespace quonhom
