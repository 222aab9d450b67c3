#include "quonhom/word_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quonhom {

namespace {

void check_label(const OperatorLabel& label, int mode_count) {
  if (label.port != 1 && label.port != 2) {
    throw validation_error("operator label port must be 1 or 2, got " +
                           std::to_string(label.port));
  }
  if (label.mode < 0 || label.mode >= mode_count) {
    throw validation_error("operator label mode " + std::to_string(label.mode) +
                           " outside [0, " + std::to_string(mode_count) + ")");
  }
}

}  // namespace

QuonParameter::QuonParameter(double q) : q_(q) {
  if (!(q >= -1.0 && q <= 1.0)) {
    throw validation_error("quon parameter must lie in [-1, 1]");
  }
}

WordState::WordState(int mode_count) : mode_count_(mode_count) {
  if (mode_count < 1) {
    throw validation_error("mode count must be positive");
  }
}

WordState WordState::vacuum(int mode_count) {
  WordState s(mode_count);
  s.add(CreationWord{}, 1.0);
  return s;
}

std::size_t WordState::word_length() const {
  if (terms_.empty()) {
    throw internal_error("word_length queried on an empty state");
  }
  return terms_.begin()->first.size();
}

std::complex<double> WordState::coefficient(const CreationWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

void WordState::add(const CreationWord& word, std::complex<double> coeff) {
  for (const auto& label : word) {
    check_label(label, mode_count_);
  }
  if (!terms_.empty() && word.size() != word_length()) {
    throw validation_error("all words of a state must have equal length");
  }
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
  }
  if (std::abs(it->second) <= kPruneThreshold) {
    terms_.erase(it);
  }
}

std::complex<double> gram_entry(const CreationWord& w1, const CreationWord& w2,
                                QuonParameter qp) {
  const std::size_t n = w1.size();
  if (n != w2.size()) {
    return 0.0;
  }
  if (n == 0) {
    return 1.0;
  }
  CreationWord s1 = w1;
  CreationWord s2 = w2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) {
    return 0.0;
  }
  const double q = qp.value();
  double total = 0.0;
  std::vector<bool> used(n, false);
  // Assign w2 positions in order to unused matching w1 positions; the
  // inversion count grows by the number of already used positions above the
  // chosen one, so q^inv factorizes along the assignment.
  auto assign = [&](auto&& self, std::size_t i, double partial) -> void {
    if (i == n) {
      total += partial;
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p] || w1[p] != w2[i]) {
        continue;
      }
      int inversions = 0;
      for (std::size_t r = p + 1; r < n; ++r) {
        if (used[r]) {
          ++inversions;
        }
      }
      if (inversions > 0 && q == 0.0) {
        continue;
      }
      double factor = partial;
      for (int t = 0; t < inversions; ++t) {
        factor *= q;
      }
      used[p] = true;
      self(self, i + 1, factor);
      used[p] = false;
    }
  };
  assign(assign, 0, 1.0);
  return total;
}

MixedOp creation_op(OperatorLabel label) { return {OpKind::Create, label}; }

MixedOp annihilation_op(OperatorLabel label) { return {OpKind::Annihilate, label}; }

namespace {

double reduce_impl(const MixedWord& word, double q) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i].kind != OpKind::Annihilate || word[i + 1].kind != OpKind::Create) {
      continue;
    }
    double value = 0.0;
    if (word[i].label == word[i + 1].label) {
      MixedWord contracted;
      contracted.reserve(word.size() - 2);
      contracted.insert(contracted.end(), word.begin(), word.begin() + i);
      contracted.insert(contracted.end(), word.begin() + i + 2, word.end());
      value += reduce_impl(contracted, q);
    }
    if (q != 0.0) {
      MixedWord swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      value += q * reduce_impl(swapped, q);
    }
    return value;
  }
  // normal ordered: creators precede annihilators, so the vacuum expectation
  // vanishes unless nothing is left
  return word.empty() ? 1.0 : 0.0;
}

}  // namespace

std::complex<double> reduce_word_oracle(const MixedWord& word, QuonParameter q) {
  return reduce_impl(word, q.value());
}

MixedWord bra_ket_word(const CreationWord& bra, const CreationWord& ket) {
  MixedWord out;
  out.reserve(bra.size() + ket.size());
  for (auto it = bra.rbegin(); it != bra.rend(); ++it) {
    out.push_back(annihilation_op(*it));
  }
  for (const auto& label : ket) {
    out.push_back(creation_op(label));
  }
  return out;
}

WordState number_apply(const WordState& state, int port, std::optional<int> mode) {
  if (port != 1 && port != 2) {
    throw validation_error("number operator port must be 1 or 2");
  }
  if (mode && (*mode < 0 || *mode >= state.mode_count())) {
    throw validation_error("number operator mode outside the grid");
  }
  WordState out(state.mode_count());
  for (const auto& [word, coeff] : state.terms()) {
    int count = 0;
    for (const auto& label : word) {
      if (label.port == port && (!mode || label.mode == *mode)) {
        ++count;
      }
    }
    if (count != 0) {
      out.add(word, coeff * static_cast<double>(count));
    }
  }
  return out;
}

std::complex<double> state_inner(const WordState& s1, const WordState& s2,
                                 QuonParameter q) {
  if (s1.mode_count() != s2.mode_count()) {
    throw validation_error("state_inner requires a common mode grid");
  }
  if (s1.empty() || s2.empty()) {
    return 0.0;
  }
  if (s1.word_length() != s2.word_length()) {
    throw validation_error("state_inner requires equal word lengths");
  }
  // Group both sides by label multiset; the Gram form is block diagonal in
  // that grouping, so mismatching blocks are skipped wholesale.
  using Group = std::vector<std::pair<const CreationWord*, std::complex<double>>>;
  auto group_terms = [](const WordState& s) {
    std::map<CreationWord, Group> groups;
    for (const auto& [word, coeff] : s.terms()) {
      CreationWord key = word;
      std::sort(key.begin(), key.end());
      groups[std::move(key)].emplace_back(&word, coeff);
    }
    return groups;
  };
  const auto g1 = group_terms(s1);
  const auto g2 = group_terms(s2);
  std::complex<double> total = 0.0;
  for (const auto& [key, left] : g1) {
    auto it = g2.find(key);
    if (it == g2.end()) {
      continue;
    }
    for (const auto& [w1, c1] : left) {
      for (const auto& [w2, c2] : it->second) {
        total += std::conj(c1) * c2 * gram_entry(*w1, *w2, q);
      }
    }
  }
  return total;
}

WordState apply_creation(const WordState& state, OperatorLabel label) {
  WordState out(state.mode_count());
  for (const auto& [word, coeff] : state.terms()) {
    CreationWord extended;
    extended.reserve(word.size() + 1);
    extended.push_back(label);
    extended.insert(extended.end(), word.begin(), word.end());
    out.add(extended, coeff);
  }
  return out;
}

WordState apply_annihilation(const WordState& state, OperatorLabel label,
                             QuonParameter qp) {
  const double q = qp.value();
  WordState out(state.mode_count());
  for (const auto& [word, coeff] : state.terms()) {
    double factor = 1.0;
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p] == label) {
        CreationWord shorter;
        shorter.reserve(word.size() - 1);
        shorter.insert(shorter.end(), word.begin(), word.begin() + p);
        shorter.insert(shorter.end(), word.begin() + p + 1, word.end());
        out.add(shorter, coeff * factor);
      }
      factor *= q;
    }
  }
  return out;
}

std::vector<CreationWord> enumerate_words(int mode_count, int max_len) {
  if (mode_count < 1 || max_len < 0) {
    throw validation_error("enumerate_words requires mode_count >= 1, max_len >= 0");
  }
  std::vector<OperatorLabel> alphabet;
  for (int port = 1; port <= 2; ++port) {
    for (int mode = 0; mode < mode_count; ++mode) {
      alphabet.push_back({port, mode});
    }
  }
  std::vector<CreationWord> words{CreationWord{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& label : alphabet) {
        CreationWord next = words[i];
        next.push_back(label);
        words.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return words;
}

}  // namespace quonhom
