// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "lprl/alphabet.hpp"

namespace lprl {

enum class LtlKind { Atom, Not, Or, And, Next, Until };

struct LtlNode;
using Ltl = std::shared_ptr<const LtlNode>;

/// Immutable LTL syntax node. `atom` is used by Atom only; `lhs` by every
/// non-atom kind; `rhs` by Or, And and Until.
struct LtlNode {
    LtlKind kind;
    LetterSet atom;
    Ltl lhs;
    Ltl rhs;
};

Ltl ltl_atom(LetterSet letters);
Ltl ltl_not(Ltl f);
Ltl ltl_or(Ltl a, Ltl b);
Ltl ltl_and(Ltl a, Ltl b);
Ltl ltl_next(Ltl f);
Ltl ltl_until(Ltl a, Ltl b);

Ltl ltl_true(const Alphabet& alpha);
Ltl ltl_false();
Ltl ltl_eventually(const Alphabet& alpha, Ltl f);
Ltl ltl_globally(const Alphabet& alpha, Ltl f);
Ltl ltl_implies(Ltl a, Ltl b);

/// Negation that collapses a leading double negation.
Ltl ltl_negate(const Ltl& f);

bool ltl_equal(const Ltl& a, const Ltl& b);
std::size_t ltl_size(const Ltl& f);

/// Concrete syntax accepted back by parse_ltl.
std::string to_string(const Ltl& f, const Alphabet& alpha);

/// Operators: `!`, `X`, `F`, `G` (prefix), `U` (right assoc), `&`, `|`,
/// `->` (right assoc), in decreasing precedence. Atoms: `true`, `false`,
/// a proposition name, a letter `{p,q}`, a letter set `{{p},{}}`.
Ltl parse_ltl(std::string_view text, const Alphabet& alpha);

}  // namespace lprl
