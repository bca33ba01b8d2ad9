// SPDX-License-Identifier: MIT
// One line per acceptance criterion; exits non-zero when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "lprl/buchi.hpp"
#include "lprl/mc.hpp"
#include "lprl/sat.hpp"
#include "support/testkit.hpp"

using namespace lprl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail << "first failure: " << why << "; ";
        pass = false;
    }
};

bool is_policy(const std::string& name)
{
    for (const char* p : {"od_", "ni_", "gni_", "con_"})
        if (name.rfind(p, 0) == 0)
            return true;
    return false;
}

Outcome ltl_translation()
{
    Outcome o;
    auto r = testkit::make_rng(101);
    const Alphabet alphas[] = {Alphabet({"p"}), Alphabet({"p", "q"})};
    auto t0 = Clock::now();
    int agree = 0;
    const int total = 1000;
    for (int j = 0; j < total; ++j) {
        const auto& a = alphas[j % 2];
        auto f = testkit::random_ltl(r, a, testkit::uniform(r, 1, 8));
        auto w = testkit::random_lasso(r, a);
        if (ltl_size(f) > 8)
            o.fail("formula larger than 8 nodes");
        if (ba_accepts_lasso(ltl_to_ba(f, a), w) == eval_ltl_lasso(f, w))
            ++agree;
        else
            o.fail(to_string(f, a) + " on " + format_lasso(w, a));
    }
    double s = seconds_since(t0);
    if (s >= 60)
        o.fail("runtime");
    o.detail << agree << "/" << total << " agree in " << s << " s";
    return o;
}

Outcome equality_automata()
{
    Outcome o;
    const Alphabet pq({"p", "q"});
    auto r = testkit::make_rng(102);
    int agree = 0;
    const int total = 500;
    for (int j = 0; j < total; ++j) {
        auto a = testkit::random_nonempty_set(r, pq);
        auto u = testkit::random_lasso(r, pq);
        auto v = testkit::random_lasso(r, pq);
        bool eq = words_equal(project_lasso(u, a), project_lasso(v, a));
        bool ok = hba_accepts_tuple(eq_hba(0, 1, a, 2, pq), {u, v}) == eq &&
                  hba_accepts_tuple(neq_hba(0, 1, a, 2, pq), {u, v}) == !eq;
        if (ok)
            ++agree;
        else
            o.fail(pq.format_set(a) + " " + format_lasso(u, pq) + " " + format_lasso(v, pq));
    }
    auto u = parse_lasso("{p}{p}{q}{q};{}", pq);
    auto v = parse_lasso("{q}{q}{p}{p};{p,q}", pq);
    bool worked = hba_accepts_tuple(eq_hba(0, 1, LetterSet::single(1), 2, pq), {u, v});
    if (!worked)
        o.fail("worked example rejected");
    o.detail << agree << "/" << total << " agree; worked example " << (worked ? "accepted" : "rejected");
    return o;
}

Outcome boolean_algebra()
{
    Outcome o;
    const Alphabet pq({"p", "q"});
    auto r = testkit::make_rng(103);
    int checked = 0;
    while (checked < 500) {
        // A cycle-free clause split in two, so both laws apply.
        auto c = testkit::random_matrix(r, pq, 2, 1, 4)[0];
        if (c.size() < 2)
            continue;
        Clause c1(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2));
        Clause c2(c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.end());
        auto b1 = clause_hba(c1, 2, pq);
        auto b2 = clause_hba(c2, 2, pq);
        auto un = hba_union(b1, b2);
        auto in = hba_intersection({b1, b2});
        for (int m = 0; m < 10 && checked < 500; ++m, ++checked) {
            auto s = testkit::random_tuple(r, pq, 2);
            bool a1 = hba_accepts_tuple(b1, s);
            bool a2 = hba_accepts_tuple(b2, s);
            if (hba_accepts_tuple(un, s) != (a1 || a2))
                o.fail("union law");
            if (hba_accepts_tuple(in, s) != (a1 && a2))
                o.fail("intersection law");
        }
    }
    int empty = 0;
    for (int j = 0; j < 20; ++j) {
        auto phi = testkit::random_ltl(r, pq, testkit::uniform(r, 1, 6));
        AtomicFormula pos{AtomKind::Unary, phi, 0};
        AtomicFormula neg{AtomKind::Unary, ltl_negate(phi), 0};
        if (!hba_emptiness(clause_hba({pos, neg}, 1, pq)))
            ++empty;
        else
            o.fail("contradiction " + to_string(phi, pq) + " non-empty");
    }
    o.detail << checked << " tuples checked; " << empty << "/20 contradictions empty";
    return o;
}

Outcome sat_round_trip()
{
    Outcome o;
    auto corpus = testkit::sat_corpus();
    auto r = testkit::make_rng(104);
    int sat = 0;
    int unsat = 0;
    int policies = 0;
    double worst = 0;
    for (const auto& c : corpus) {
        auto s = normalize(parse_sentence(c.text));
        policies += is_policy(c.name);
        auto t0 = Clock::now();
        auto res = check_sat(s);
        worst = std::max(worst, seconds_since(t0));
        if ((res.verdict == SatVerdict::Sat) != c.expect_sat)
            o.fail(c.name + " verdict");
        if (res.verdict == SatVerdict::Sat) {
            ++sat;
            if (!res.witness || !eval_matrix(s.matrix, *res.witness)) {
                o.fail(c.name + " witness");
                continue;
            }
            std::vector<std::vector<LassoWord>> models;
            for (const auto& w : *res.witness)
                models.push_back({w});
            if (!eval_sentence_finite(s, models))
                o.fail(c.name + " singleton models");
        } else {
            ++unsat;
            for (int m = 0; m < 200; ++m)
                if (eval_matrix(s.matrix, testkit::random_tuple(r, s.alphabet, s.width()))) {
                    o.fail(c.name + " sampled model");
                    break;
                }
        }
    }
    if (corpus.size() < 20 || unsat < 5)
        o.fail("corpus too small");
    if (worst >= 10)
        o.fail("runtime");
    o.detail << corpus.size() << " sentences (" << policies << " policies), " << sat << " sat, " << unsat
             << " unsat; slowest " << worst << " s";
    return o;
}

Outcome quantifier_flips()
{
    Outcome o;
    int flips = 0;
    for (const auto& c : testkit::sat_corpus()) {
        auto s = normalize(parse_sentence(c.text));
        auto base = check_sat(s).verdict;
        for (auto& e : s.prefix) {
            e.quant = e.quant == Quant::Forall ? Quant::Exists : Quant::Forall;
            if (check_sat(s).verdict != base)
                o.fail(c.name + " flip " + e.var);
            e.quant = e.quant == Quant::Forall ? Quant::Exists : Quant::Forall;
            ++flips;
        }
    }
    o.detail << flips << " single flips, verdicts unchanged";
    return o;
}

Outcome deterministic_families()
{
    Outcome o;
    auto r = testkit::make_rng(106);
    const Alphabet alphas[] = {Alphabet({"p"}), Alphabet({"p", "q"})};
    auto t0 = Clock::now();
    int agree = 0;
    int holds = 0;
    for (int j = 0; j < 100; ++j) {
        const auto& a = alphas[j % 2];
        int n = testkit::uniform(r, 1, 3);
        std::vector<Quant> qs;
        for (int i = 0; i < n; ++i)
            qs.push_back(testkit::coin(r) ? Quant::Forall : Quant::Exists);
        auto s = testkit::make_sentence(a, qs, testkit::random_matrix(r, a, n));
        KripkeFamily fam;
        for (int i = 0; i < n; ++i)
            fam.push_back(testkit::random_deterministic_kripke(r, a, 4));
        try {
            auto got = check_mc(fam, s).verdict;
            auto want = deterministic_family_fastpath(fam, s).verdict;
            if (got == want)
                ++agree;
            else
                o.fail(to_string(s));
            holds += want == McVerdict::Holds;
        } catch (const Error& e) {
            o.fail(to_string(s) + ": " + e.what());
        }
    }
    double sec = seconds_since(t0);
    if (sec >= 300)
        o.fail("runtime");
    o.detail << agree << "/100 agree (" << holds << " hold) in " << sec << " s";
    return o;
}

Outcome mc_corpus()
{
    Outcome o;
    auto cases = testkit::mc_corpus();
    int match = 0;
    double worst = 0;
    bool od_holds = false;
    bool od_fails = false;
    bool con = false;
    for (const auto& c : cases) {
        auto t0 = Clock::now();
        try {
            auto v = check_mc(c.family, c.sentence).verdict == McVerdict::Holds ? "HOLDS" : "FAILS";
            if (v == c.expected)
                ++match;
            else
                o.fail(c.name);
        } catch (const Error& e) {
            o.fail(c.name + ": " + e.what());
        }
        worst = std::max(worst, seconds_since(t0));
        od_holds |= c.name.rfind("od_holds", 0) == 0;
        od_fails |= c.name.rfind("od_fails", 0) == 0;
        con |= c.name.rfind("con_", 0) == 0 && c.family.size() == 2;
    }
    if (cases.size() < 5 || !od_holds || !od_fails || !con)
        o.fail("corpus coverage");
    if (worst >= 60)
        o.fail("runtime");
    o.detail << match << "/" << cases.size() << " verdicts match; slowest " << worst << " s";
    return o;
}

Outcome cycle_free_gate()
{
    Outcome o;
    auto dup = normalize(parse_sentence("props: a, b; exists x. exists y. (x ={{a}} y) & (y ={{b}} x)"));
    auto rd = check_cycle_free(dup);
    if (rd.ok || rd.violations.size() != 1 || rd.violations[0].description != "duplicate constraint between x and y")
        o.fail("duplicate pair diagnostic");
    auto cyc = normalize(parse_sentence(
        "props: a, b, c; exists x. exists y. exists z. (x ={{a}} y) & (y ={{b}} z) & (z ={{c}} x)"));
    auto rc = check_cycle_free(cyc);
    if (rc.ok || rc.violations.size() != 1 || rc.violations[0].description.rfind("cycle ", 0) != 0)
        o.fail("cycle diagnostic");
    int policies = 0;
    for (const auto& c : testkit::sat_corpus()) {
        if (!is_policy(c.name))
            continue;
        ++policies;
        if (!check_cycle_free(normalize(parse_sentence(c.text))).ok)
            o.fail(c.name);
    }
    o.detail << "\"" << (rd.violations.empty() ? "" : rd.violations[0].description) << "\", \""
             << (rc.violations.empty() ? "" : rc.violations[0].description) << "\"; " << policies
             << " policies pass";
    return o;
}

Outcome structural_bounds()
{
    Outcome o;
    const Alphabet pq({"p", "q"});
    auto r = testkit::make_rng(109);
    int checked = 0;
    for (int j = 0; j < 100; ++j) {
        int n = testkit::uniform(r, 1, 3);
        auto m = testkit::random_matrix(r, pq, n, 3, 3);
        std::vector<Hba> atoms;
        double prod = 1;
        for (const auto& a : m[0]) {
            atoms.push_back(atom_hba(a, static_cast<std::size_t>(n), pq));
            prod *= static_cast<double>(atoms.back().num_states());
        }
        auto in = hba_intersection(atoms);
        if (static_cast<double>(in.num_states()) > std::ldexp(prod, static_cast<int>(atoms.size())))
            o.fail("intersection bound");
        auto b1 = clause_hba(m[0], static_cast<std::size_t>(n), pq);
        auto b2 = clause_hba(m.back(), static_cast<std::size_t>(n), pq);
        if (hba_union(b1, b2).num_states() > b1.num_states() + b2.num_states() + 1)
            o.fail("union bound");
        ++checked;
    }
    std::ostringstream sizes;
    for (const auto& c : testkit::sat_corpus()) {
        auto s = normalize(parse_sentence(c.text));
        auto b = build_sentence_hba(s);
        sizes << " " << c.name << "=" << b.num_states() << "/" << hba_trim(b).num_states();
    }
    o.detail << checked << " constructions within bounds; B(psi) states (built/trimmed):" << sizes.str();
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria = {
        ltl_translation,  equality_automata, boolean_algebra,   sat_round_trip,   quantifier_flips,
        deterministic_families, mc_corpus, cycle_free_gate, structural_bounds,
    };
    int failed = 0;
    std::printf("seed %llu\n", static_cast<unsigned long long>(testkit::seed()));
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        Outcome o;
        try {
            o = criteria[j]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::printf("criterion %zu: %s: %s\n", j + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
