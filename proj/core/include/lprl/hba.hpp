// SPDX-License-Identifier: MIT
// Automata over epsilon-padded n-tuples of letters.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lprl/alphabet.hpp"
#include "lprl/buchi.hpp"
#include "lprl/ltl.hpp"
#include "lprl/oracle.hpp"

namespace lprl {

/// One slot of a tuple letter: a letter or the pause mark (nullopt).
using SlotEntry = std::optional<Letter>;

struct TupleLetter {
    std::vector<SlotEntry> entries;

    bool all_pause() const;
    friend bool operator==(const TupleLetter&, const TupleLetter&) = default;
    friend auto operator<=>(const TupleLetter&, const TupleLetter&) = default;
};

/// The admissible entries of one slot: some letters and possibly the pause.
struct SlotConstraint {
    LetterSet letters;
    bool pause = false;

    bool empty() const { return letters.empty() && !pause; }
    bool admits(const SlotEntry& e) const { return e ? letters.contains(*e) : pause; }
    SlotConstraint operator&(SlotConstraint o) const { return {letters & o.letters, pause && o.pause}; }
    friend bool operator==(SlotConstraint, SlotConstraint) = default;
};

/// Conjunction of per-slot constraints, minus the all-pause tuple.
struct TupleLabel {
    std::vector<SlotConstraint> slots;

    static TupleLabel any(std::size_t n, const Alphabet& alpha);
    bool satisfiable() const;
    bool admits(const TupleLetter& t) const;
    TupleLabel operator&(const TupleLabel& o) const;
    friend bool operator==(const TupleLabel&, const TupleLabel&) = default;
};

struct HbaEdge {
    TupleLabel label;
    int dst;
};

struct Hba {
    Alphabet alphabet;
    std::size_t width = 0;
    std::vector<std::vector<HbaEdge>> out;
    std::vector<char> accepting;
    int initial = 0;

    std::size_t num_states() const { return out.size(); }
    std::size_t num_transitions() const;
    /// Appends a transition unless its label is unsatisfiable.
    void add(int src, TupleLabel label, int dst);
    int add_state(bool acc);
};

Hba hba_true(std::size_t n, const Alphabet& alpha);
Hba hba_false(std::size_t n, const Alphabet& alpha);

/// Slots are 0-based.
Hba lift_ba(const BuchiAutomaton& a, std::size_t slot, std::size_t width);
Hba equiv_hba(const Ltl& phi_i, std::size_t i, const Ltl& phi_k, std::size_t k, std::size_t n, const Alphabet& alpha);
Hba nequiv_hba(const Ltl& phi_i, std::size_t i, const Ltl& phi_k, std::size_t k, std::size_t n, const Alphabet& alpha);
/// Projections onto `a` agree; one letter of lookahead.
Hba eq_hba(std::size_t i, std::size_t k, LetterSet a, std::size_t n, const Alphabet& alpha);
Hba neq_hba(std::size_t i, std::size_t k, LetterSet a, std::size_t n, const Alphabet& alpha);

Hba hba_union(const Hba& b1, const Hba& b2);
/// Product with a pending-index flag set; accepting when the set is empty.
Hba hba_intersection(const std::vector<Hba>& bs);

/// Drops states that are unreachable or cannot reach an accepting cycle
/// with progress in every slot. Language preserving.
Hba hba_trim(const Hba& b);

struct RunStep {
    int src;
    TupleLetter letter;
    int dst;
};

/// The loop returns to the state it leaves from.
struct LassoRun {
    std::vector<RunStep> stem;
    std::vector<RunStep> loop;
};

std::optional<LassoRun> hba_emptiness(const Hba& b);
bool hba_accepts_tuple(const Hba& b, const LassoTuple& sigma);
/// Pause marks erased slot by slot.
LassoTuple witness_traces(const LassoRun& r, std::size_t width);

std::string format_tuple_letter(const TupleLetter& t, const Alphabet& alpha);
/// Same transition-list format as the word automata, with slot lists.
std::string dump(const Hba& b);

}  // namespace lprl
