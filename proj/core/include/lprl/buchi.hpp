// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lprl/alphabet.hpp"
#include "lprl/ltl.hpp"
#include "lprl/oracle.hpp"

namespace lprl {

struct BaEdge {
    LetterSet label;
    int dst;
};

/// Büchi word automaton with letter-set labels and a single initial state.
struct BuchiAutomaton {
    Alphabet alphabet;
    std::vector<std::vector<BaEdge>> out;
    std::vector<char> accepting;
    int initial = 0;

    std::size_t num_states() const { return out.size(); }
    std::size_t num_transitions() const;
};

/// Tableau translation over obligation sets with transition-based
/// generalized acceptance, degeneralized with a level counter.
BuchiAutomaton ltl_to_ba(const Ltl& phi, const Alphabet& alpha);

/// Searches (state, lasso position) for a reachable accepting cycle.
bool ba_accepts_lasso(const BuchiAutomaton& a, const LassoWord& w);

/// One transition per line: `src -- {letters} --> dst`.
std::string dump(const BuchiAutomaton& a);

}  // namespace lprl
