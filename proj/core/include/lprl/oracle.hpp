// SPDX-License-Identifier: MIT
// Reference semantics on ultimately periodic words.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lprl/alphabet.hpp"
#include "lprl/ltl.hpp"
#include "lprl/sentence.hpp"

namespace lprl {

/// stem . loop^omega; `loop` is never empty.
struct LassoWord {
    std::vector<Letter> stem;
    std::vector<Letter> loop;

    std::size_t positions() const { return stem.size() + loop.size(); }
    std::size_t successor(std::size_t pos) const { return pos + 1 < positions() ? pos + 1 : stem.size(); }
    Letter at(std::size_t pos) const { return pos < stem.size() ? stem[pos] : loop[pos - stem.size()]; }
    /// Letter at an arbitrary index of the infinite word.
    Letter letter(std::size_t k) const
    {
        return k < stem.size() ? stem[k] : loop[(k - stem.size()) % loop.size()];
    }

    friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

using LassoTuple = std::vector<LassoWord>;

/// Same infinite word with a primitive loop and the shortest stem.
LassoWord canonical_lasso(LassoWord w);

/// Fixpoint labeling of the lasso positions.
bool eval_ltl_lasso(const Ltl& phi, const LassoWord& w);
/// Independent reference: memoized recursion on the word unrolled to
/// 2 * (|stem| + |loop|) positions.
bool eval_ltl_unrolled(const Ltl& phi, const LassoWord& w);

/// A projection is finite exactly when `loop` is empty.
struct ProjectedWord {
    std::vector<Letter> stem;
    std::vector<Letter> loop;

    bool finite() const { return loop.empty(); }
};

ProjectedWord project_lasso(const LassoWord& w, LetterSet a);
bool words_equal(const ProjectedWord& u, const ProjectedWord& v);

bool eval_atom(const AtomicFormula& a, const LassoTuple& sigma);
bool eval_matrix(const Matrix& m, const LassoTuple& sigma);

/// Quantifiers range over the given finite sets, slot by slot.
bool eval_sentence_finite(const NormalSentence& s, const std::vector<std::vector<LassoWord>>& models);
/// The same valuation rules applied directly to an un-normalized sentence;
/// models are keyed by variable name.
bool eval_raw_finite(const RawSentence& s, const std::map<std::string, std::vector<LassoWord>>& models);

/// `stem;loop` (or `stem|loop`), letters written as brace sets: `{p}{};{p,q}`.
LassoWord parse_lasso(std::string_view text, const Alphabet& alpha);
std::string format_lasso(const LassoWord& w, const Alphabet& alpha);

}  // namespace lprl
