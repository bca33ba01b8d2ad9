// SPDX-License-Identifier: MIT
// Satisfiability of cycle-free sentences via emptiness of the matrix automaton.
#pragma once

#include <cstddef>
#include <optional>

#include "lprl/error.hpp"
#include "lprl/hba.hpp"
#include "lprl/oracle.hpp"
#include "lprl/sentence.hpp"

namespace lprl {

class CycleFreeError : public Error {
public:
    explicit CycleFreeError(CycleFreeReport report);
    const CycleFreeReport& report() const { return report_; }

private:
    CycleFreeReport report_;
};

/// Throws CycleFreeError unless the sentence passes the gate.
void require_cycle_free(const NormalSentence& s);

/// The automaton of one atomic formula over n slots.
Hba atom_hba(const AtomicFormula& a, std::size_t n, const Alphabet& alpha);
/// Intersection of the atom automata of one clause.
Hba clause_hba(const Clause& c, std::size_t n, const Alphabet& alpha);
/// Union of the clause automata, untrimmed.
Hba build_sentence_hba(const NormalSentence& s);

enum class SatVerdict { Sat, Unsat };

struct SatStats {
    std::size_t clauses = 0;
    std::size_t atoms = 0;
    std::size_t hba_states = 0;
    std::size_t hba_transitions = 0;
    std::size_t trimmed_states = 0;
    double build_ms = 0;
    double emptiness_ms = 0;
};

struct SatResult {
    SatVerdict verdict = SatVerdict::Unsat;
    std::optional<LassoTuple> witness;
    SatStats stats;
};

/// The quantifier prefix plays no role: a sentence is satisfiable iff its
/// matrix is satisfied by a single tuple of traces, each quantifier then
/// ranging over a singleton model.
SatResult check_sat(const NormalSentence& s);

}  // namespace lprl
