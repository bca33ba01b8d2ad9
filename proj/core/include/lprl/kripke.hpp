// SPDX-License-Identifier: MIT
// Kripke structures, their traces, and networks of action-labeled systems.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lprl/alphabet.hpp"
#include "lprl/oracle.hpp"

namespace lprl {

struct Kripke {
    Alphabet alphabet;
    std::vector<std::string> names;
    std::vector<Letter> label;
    std::vector<std::vector<int>> succ;
    int initial = 0;

    std::size_t num_states() const { return names.size(); }
    /// Index of a named state, or -1.
    int state_index(std::string_view name) const;
};

using KripkeFamily = std::vector<Kripke>;

/// Totality, initial state in range, edges in range, labels within the alphabet.
void validate(const Kripke& k);

/// JSON: {"props": [...], "states": [{"id", "label"}], "initial", "edges": [[src, dst]]}.
Kripke parse_kripke(std::string_view json_text);
Kripke load_kripke(const std::string& path);
std::string to_json(const Kripke& k);

/// Relabels onto a larger alphabet; every proposition of `k` must occur in `target`.
Kripke align_kripke(const Kripke& k, const Alphabet& target);

/// (label of s, successor) pairs; the letter is the source state's label.
std::vector<std::pair<Letter, int>> micro_moves(const Kripke& k, int s);

/// Whether stem . loop^omega is a path from the initial state.
bool replay_path(const Kripke& k, const std::vector<int>& stem, const std::vector<int>& loop);
LassoWord path_trace(const Kripke& k, const std::vector<int>& stem, const std::vector<int>& loop);

/// Exactly one successor per state.
bool is_deterministic(const Kripke& k);
/// The single trace of a deterministic structure.
LassoWord unique_trace(const Kripke& k);

// ---------------------------------------------------------------------------
// Action-labeled transition systems.

struct ActionEdge {
    int src;
    int action;
    int dst;
};

struct TransitionSystem {
    std::string name;
    std::vector<std::string> actions;
    std::vector<std::string> states;
    int initial = 0;
    std::vector<ActionEdge> edges;

    int action_index(std::string_view a) const;
};

/// JSON: {"components": [{"name", "alphabet", "states", "initial", "edges": [[src, act, dst]]}]}.
std::vector<TransitionSystem> parse_network(std::string_view json_text);
std::vector<TransitionSystem> load_network(const std::string& path);

/// Adds a fresh action with a self-loop at every state without successors.
TransitionSystem pad_bottom(const TransitionSystem& ts, const std::string& bottom);

/// Global system over the union of the action alphabets: an action moves every
/// component that owns it and leaves the others unchanged. Only states
/// reachable from the initial tuple are kept.
TransitionSystem synchronized_product(const std::vector<TransitionSystem>& components);

/// Edge-split view: one state per edge, labeled with the singleton letter of
/// its action, behind a fresh initial state labeled with the empty letter.
/// Actions become propositions of `alpha`.
Kripke to_kripke(const TransitionSystem& ts, const Alphabet& alpha);

/// Alphabet whose propositions are the actions of all components, in order of
/// first appearance.
Alphabet action_alphabet(const std::vector<TransitionSystem>& components);

}  // namespace lprl
