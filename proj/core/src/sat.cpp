// SPDX-License-Identifier: MIT
#include "lprl/sat.hpp"

#include <chrono>

namespace lprl {

namespace {

std::string describe(const CycleFreeReport& r)
{
    std::string msg = "sentence is not cycle-free";
    for (const auto& v : r.violations)
        msg += "; clause " + std::to_string(v.clause + 1) + ": " + v.description;
    return msg;
}

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CycleFreeError::CycleFreeError(CycleFreeReport report) : Error(describe(report)), report_(std::move(report)) {}

void require_cycle_free(const NormalSentence& s)
{
    auto r = check_cycle_free(s);
    if (!r.ok)
        throw CycleFreeError(std::move(r));
}

Hba atom_hba(const AtomicFormula& a, std::size_t n, const Alphabet& alpha)
{
    const auto i = static_cast<std::size_t>(a.i);
    const auto k = static_cast<std::size_t>(a.k);
    switch (a.kind) {
    case AtomKind::True:
        return hba_true(n, alpha);
    case AtomKind::False:
        return hba_false(n, alpha);
    case AtomKind::Unary:
        return lift_ba(ltl_to_ba(a.phi, alpha), i, n);
    case AtomKind::Equiv:
        return equiv_hba(a.phi, i, a.phi2, k, n, alpha);
    case AtomKind::NotEquiv:
        return nequiv_hba(a.phi, i, a.phi2, k, n, alpha);
    case AtomKind::Eq:
        return eq_hba(i, k, a.letters, n, alpha);
    case AtomKind::Neq:
        return neq_hba(i, k, a.letters, n, alpha);
    }
    throw Error("unknown atom kind");
}

Hba clause_hba(const Clause& c, std::size_t n, const Alphabet& alpha)
{
    if (c.empty())
        return hba_true(n, alpha);
    std::vector<Hba> parts;
    for (const auto& a : c)
        parts.push_back(hba_trim(atom_hba(a, n, alpha)));
    if (parts.size() == 1)
        return parts.front();
    return hba_intersection(parts);
}

Hba build_sentence_hba(const NormalSentence& s)
{
    require_cycle_free(s);
    const std::size_t n = s.width();
    if (s.matrix.empty())
        return hba_false(n, s.alphabet);
    Hba acc = hba_trim(clause_hba(s.matrix.front(), n, s.alphabet));
    for (std::size_t j = 1; j < s.matrix.size(); ++j)
        acc = hba_union(acc, hba_trim(clause_hba(s.matrix[j], n, s.alphabet)));
    return acc;
}

SatResult check_sat(const NormalSentence& s)
{
    SatResult r;
    r.stats.clauses = s.matrix.size();
    for (const auto& c : s.matrix)
        r.stats.atoms += c.size();
    auto t0 = std::chrono::steady_clock::now();
    Hba b = build_sentence_hba(s);
    r.stats.hba_states = b.num_states();
    r.stats.hba_transitions = b.num_transitions();
    b = hba_trim(b);
    r.stats.trimmed_states = b.num_states();
    r.stats.build_ms = since(t0);
    t0 = std::chrono::steady_clock::now();
    auto run = hba_emptiness(b);
    r.stats.emptiness_ms = since(t0);
    if (run) {
        r.verdict = SatVerdict::Sat;
        r.witness = witness_traces(*run, s.width());
    }
    return r;
}

}  // namespace lprl
