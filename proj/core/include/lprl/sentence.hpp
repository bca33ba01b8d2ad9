// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lprl/alphabet.hpp"
#include "lprl/ltl.hpp"

namespace lprl {

enum class Quant { Exists, Forall };

// ---------------------------------------------------------------------------
// Raw sentences, as written.

enum class RawKind { Quantified, Not, And, Or, Implies, True, False, Pred, Equiv, NotEquiv, Eq, Neq };

struct RawNode;
using Raw = std::shared_ptr<const RawNode>;

/// `var`/`var2` name the bound variables an atom talks about; a Quantified
/// node binds `var` over `lhs`.
struct RawNode {
    RawKind kind;
    Quant quant = Quant::Exists;
    std::string var;
    std::string var2;
    Ltl phi;
    Ltl phi2;
    LetterSet letters;
    Raw lhs;
    Raw rhs;
};

struct RawSentence {
    Alphabet alphabet;
    Raw root;
};

/// Parses a sentence file: a `props: p, q;` header followed by one formula.
/// Rejects free and duplicate bound variables.
RawSentence parse_sentence(std::string_view text);

/// Bound variables in textual (left-to-right binder) order.
std::vector<std::string> binder_order(const RawSentence& s);

// ---------------------------------------------------------------------------
// Normal form: quantifier prefix and a DNF matrix of atomic formulas.

enum class AtomKind { True, False, Unary, Equiv, NotEquiv, Eq, Neq };

/// Slots are 0-based indices into the prefix.
struct AtomicFormula {
    AtomKind kind = AtomKind::True;
    Ltl phi;
    int i = 0;
    Ltl phi2;
    int k = 0;
    LetterSet letters;
};

using Clause = std::vector<AtomicFormula>;
using Matrix = std::vector<Clause>;

struct PrefixEntry {
    std::string var;
    Quant quant;
};
using QuantifierPrefix = std::vector<PrefixEntry>;

struct NormalSentence {
    Alphabet alphabet;
    QuantifierPrefix prefix;
    Matrix matrix;

    std::size_t width() const { return prefix.size(); }
};

NormalSentence normalize(const RawSentence& s);

/// The atomic formula's negation (closed under the atom kinds).
AtomicFormula negate_atom(const AtomicFormula& a);

bool atom_equal(const AtomicFormula& a, const AtomicFormula& b);
bool sentence_equal(const NormalSentence& a, const NormalSentence& b);

/// Concrete syntax that parses and normalizes back to the same sentence.
std::string to_string(const NormalSentence& s);
std::string to_string(const AtomicFormula& a, const NormalSentence& s);

/// A normal sentence viewed as a raw sentence (prefix over the matrix).
RawSentence as_raw(const NormalSentence& s);

// ---------------------------------------------------------------------------

struct CycleViolation {
    std::size_t clause;
    std::string description;
};

struct CycleFreeReport {
    bool ok = true;
    std::vector<CycleViolation> violations;
};

/// Per clause, the graph with one edge per Eq/Neq atom must have no repeated
/// pair and no cycle.
CycleFreeReport check_cycle_free(const NormalSentence& s);

}  // namespace lprl
