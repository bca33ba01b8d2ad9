// SPDX-License-Identifier: MIT
// Model checking a family of Kripke structures against a cycle-free sentence
// with the macro-state automaton.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lprl/hba.hpp"
#include "lprl/kripke.hpp"
#include "lprl/sentence.hpp"

namespace lprl {

struct MicroState {
    std::vector<int> kstates;
    int hstate = 0;

    friend bool operator==(const MicroState&, const MicroState&) = default;
    friend auto operator<=>(const MicroState&, const MicroState&) = default;
};

/// Sorted and deduplicated; never empty once built.
struct MacroState {
    std::vector<MicroState> micros;

    static MacroState canonical(std::vector<MicroState> ms);
    friend bool operator==(const MacroState&, const MacroState&) = default;
    friend auto operator<=>(const MacroState&, const MacroState&) = default;
};

struct Triple {
    MicroState src;
    TupleLetter letter;
    MicroState dst;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Sorted and deduplicated triples.
struct NextRelation {
    std::vector<Triple> triples;

    static NextRelation canonical(std::vector<Triple> ts);
    /// The set of targets.
    MacroState image() const;
    friend bool operator==(const NextRelation&, const NextRelation&) = default;
    friend auto operator<=>(const NextRelation&, const NextRelation&) = default;
};

/// `pending` holds the obligations still open since the last breakpoint:
/// bit 0 for visiting an accepting automaton state, bit 1 + i for a move in
/// slot i. A flagged macro state is accepting when nothing is pending.
struct FlaggedMicro {
    MicroState micro;
    std::uint32_t pending = 0;

    friend bool operator==(const FlaggedMicro&, const FlaggedMicro&) = default;
    friend auto operator<=>(const FlaggedMicro&, const FlaggedMicro&) = default;
};

struct FlaggedMacroState {
    std::vector<FlaggedMicro> micros;

    bool accepting() const;
    MacroState unflagged() const;
    friend bool operator==(const FlaggedMacroState&, const FlaggedMacroState&) = default;
    friend auto operator<=>(const FlaggedMacroState&, const FlaggedMacroState&) = default;
};

/// Family aligned to the sentence alphabet, together with the trimmed
/// sentence automaton.
struct McContext {
    KripkeFamily family;
    Hba automaton;
    QuantifierPrefix prefix;

    std::size_t width() const { return prefix.size(); }
    /// Length of the maximal prefix of existential quantifiers.
    std::size_t leading_exists() const;
    std::uint32_t full_mask() const { return (std::uint32_t{1} << (width() + 1)) - 1; }
    MicroState initial() const;
};

McContext make_context(const KripkeFamily& family, const NormalSentence& s);

/// Every (letter, successor) with per-slot pause or Kripke move, not all
/// pauses, matched by an automaton transition.
std::vector<std::pair<TupleLetter, MicroState>> micro_step(const McContext& ctx, const MicroState& ms);

struct RuleReport {
    bool tr0 = true;
    bool tr1 = true;
    bool tr2 = true;
    bool tr3 = true;
    bool tr4 = true;

    bool ok() const { return tr0 && tr1 && tr2 && tr3 && tr4; }
};

/// Checks each transition rule separately for u --r--> target.
RuleReport validate_next_relation(const McContext& ctx, const MacroState& u, const NextRelation& r,
                                  const MacroState& target);

/// Exhaustive enumeration of every relation allowed by the transition rules.
/// Throws CapExceeded when u has more than `max_candidates` candidate triples.
std::vector<std::pair<NextRelation, MacroState>> macro_successors(const McContext& ctx, const MacroState& u,
                                                                  std::size_t max_candidates = 22);

/// Relations built from one-step strategies: a common move for the leading
/// existential slots, then per micro state a tree that branches over all
/// successors of each moving universal slot and fixes one choice per
/// existential slot. Each result satisfies the transition rules.
std::vector<std::pair<NextRelation, MacroState>> policy_successors(const McContext& ctx, const MacroState& u,
                                                                   std::size_t cap = 1000000);

FlaggedMacroState initial_flagged(const McContext& ctx);
FlaggedMacroState flag_successor(const McContext& ctx, const FlaggedMacroState& u, const NextRelation& r);

enum class McVerdict { Holds, Fails };
enum class Generator { Policy, Baseline };

struct McOptions {
    std::size_t cap = 1000000;
    Generator generator = Generator::Policy;
    /// Candidate triples per macro state allowed in the baseline generator.
    std::size_t max_candidates = 22;
    /// Check the transition rules on every explored relation.
    bool validate = false;
};

struct McStats {
    std::size_t hba_states = 0;
    std::size_t macro_states = 0;
    std::size_t macro_transitions = 0;
    std::size_t max_micros = 0;
    double build_ms = 0;
    double explore_ms = 0;
};

struct McResult {
    McVerdict verdict = McVerdict::Fails;
    McStats stats;
};

/// Throws on arity mismatch, CycleFreeError, and CapExceeded.
McResult check_mc(const KripkeFamily& family, const NormalSentence& s, const McOptions& opt = {});

/// Evaluates the matrix on the unique trace tuple of a deterministic family.
McResult deterministic_family_fastpath(const KripkeFamily& family, const NormalSentence& s);

}  // namespace lprl
