// SPDX-License-Identifier: MIT
// lprl: satisfiability, model checking, evaluation and automaton dumps.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lprl/error.hpp"
#include "lprl/hba.hpp"
#include "lprl/kripke.hpp"
#include "lprl/mc.hpp"
#include "lprl/oracle.hpp"
#include "lprl/sat.hpp"
#include "lprl/sentence.hpp"

namespace {

using nlohmann::json;

enum Exit { kPositive = 0, kNegative = 1, kUsage = 2, kCap = 3 };

struct Config {
    std::string command;
    std::string formula;
    std::vector<std::string> kripke;
    std::vector<std::string> binds;
    std::vector<std::string> traces;
    std::string network;
    std::size_t cap = 1000000;
    std::string format = "human";
    std::string dump_dir;
};

class UsageError : public lprl::Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

lprl::NormalSentence load_sentence(const std::string& path)
{
    try {
        return lprl::normalize(lprl::parse_sentence(read_file(path)));
    } catch (const lprl::ParseError& e) {
        throw lprl::ParseError(path + ": " + e.what(), e.offset());
    }
}

std::pair<std::string, std::string> split_binding(const std::string& b)
{
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size())
        throw UsageError("expected VAR=VALUE, got " + b);
    return {b.substr(0, eq), b.substr(eq + 1)};
}

std::size_t slot_of(const lprl::NormalSentence& s, const std::string& var)
{
    for (std::size_t i = 0; i < s.prefix.size(); ++i)
        if (s.prefix[i].var == var)
            return i;
    throw UsageError("unknown variable " + var);
}

/// Explicit bindings first, then the positional values in prefix order.
std::vector<std::string> assign(const lprl::NormalSentence& s, const std::vector<std::string>& binds,
                                const std::vector<std::string>& positional, const std::string& what)
{
    const std::size_t n = s.width();
    std::vector<std::string> out(n);
    std::vector<char> set(n, 0);
    for (const auto& b : binds) {
        auto [var, value] = split_binding(b);
        auto i = slot_of(s, var);
        if (set[i])
            throw UsageError("variable " + var + " bound twice");
        out[i] = value;
        set[i] = 1;
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (set[i])
            continue;
        if (next == positional.size())
            break;
        out[i] = positional[next++];
        set[i] = 1;
    }
    const auto given = binds.size() + positional.size();
    if (given != n || std::find(set.begin(), set.end(), 0) != set.end())
        throw UsageError("arity mismatch: the sentence quantifies " + std::to_string(n) + " variables but " +
                         std::to_string(given) + " " + what + " were given");
    return out;
}


void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream out(p);
    if (!out)
        throw UsageError("cannot write " + p.string());
    out << text;
}

void dump_automata(const lprl::NormalSentence& s, const std::string& dir)
{
    std::filesystem::create_directories(dir);
    const auto n = s.width();
    for (std::size_t j = 0; j < s.matrix.size(); ++j) {
        for (std::size_t l = 0; l < s.matrix[j].size(); ++l)
            write_file(std::filesystem::path(dir) / ("clause" + std::to_string(j + 1) + "_atom" + std::to_string(l + 1) + ".hba"),
                       lprl::dump(lprl::atom_hba(s.matrix[j][l], n, s.alphabet)));
        write_file(std::filesystem::path(dir) / ("clause" + std::to_string(j + 1) + ".hba"),
                   lprl::dump(lprl::clause_hba(s.matrix[j], n, s.alphabet)));
    }
    write_file(std::filesystem::path(dir) / "sentence.hba", lprl::dump(lprl::hba_trim(lprl::build_sentence_hba(s))));
}

int run_sat(const Config& cfg)
{
    auto s = load_sentence(cfg.formula);
    if (!cfg.dump_dir.empty())
        dump_automata(s, cfg.dump_dir);
    auto r = lprl::check_sat(s);
    const bool sat = r.verdict == lprl::SatVerdict::Sat;
    if (cfg.format == "machine") {
        json out{{"command", "sat"}, {"verdict", sat ? "SAT" : "UNSAT"}};
        if (sat) {
            json w = json::object();
            for (std::size_t i = 0; i < s.width(); ++i)
                w[s.prefix[i].var] = lprl::format_lasso((*r.witness)[i], s.alphabet);
            out["witness"] = w;
        }
        out["stats"] = {{"clauses", r.stats.clauses},
                        {"atoms", r.stats.atoms},
                        {"hba_states", r.stats.hba_states},
                        {"hba_transitions", r.stats.hba_transitions},
                        {"trimmed_states", r.stats.trimmed_states},
                        {"build_ms", r.stats.build_ms},
                        {"emptiness_ms", r.stats.emptiness_ms}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (sat ? "SAT" : "UNSAT") << '\n';
        if (sat)
            for (std::size_t i = 0; i < s.width(); ++i)
                std::cout << s.prefix[i].var << " = " << lprl::format_lasso((*r.witness)[i], s.alphabet) << '\n';
        std::cout << "automaton: " << r.stats.hba_states << " states, " << r.stats.hba_transitions
                  << " transitions (" << r.stats.trimmed_states << " after trimming)\n";
    }
    return sat ? kPositive : kNegative;
}

lprl::KripkeFamily load_family(const Config& cfg, const lprl::NormalSentence& s)
{
    lprl::KripkeFamily family;
    if (!cfg.network.empty()) {
        if (!cfg.kripke.empty() || !cfg.binds.empty())
            throw UsageError("--network replaces the Kripke arguments");
        auto comps = lprl::load_network(cfg.network);
        if (comps.size() != s.width())
            throw UsageError("arity mismatch: the sentence quantifies " + std::to_string(s.width()) +
                             " variables but the network has " + std::to_string(comps.size()) + " components");
        for (auto& c : comps)
            c = lprl::pad_bottom(c, "bot_" + c.name);
        for (const auto& c : comps)
            family.push_back(lprl::to_kripke(c, s.alphabet));
        return family;
    }
    for (const auto& path : assign(s, cfg.binds, cfg.kripke, "Kripke structures"))
        family.push_back(lprl::load_kripke(path));
    return family;
}

int run_mc(const Config& cfg)
{
    auto s = load_sentence(cfg.formula);
    auto family = load_family(cfg, s);
    if (!cfg.dump_dir.empty())
        dump_automata(s, cfg.dump_dir);
    lprl::McOptions opt;
    opt.cap = cfg.cap;
    auto r = lprl::check_mc(family, s, opt);
    const bool holds = r.verdict == lprl::McVerdict::Holds;
    if (cfg.format == "machine") {
        json out{{"command", "mc"},
                 {"verdict", holds ? "HOLDS" : "FAILS"},
                 {"stats",
                  {{"hba_states", r.stats.hba_states},
                   {"macro_states", r.stats.macro_states},
                   {"macro_transitions", r.stats.macro_transitions},
                   {"max_micros", r.stats.max_micros},
                   {"build_ms", r.stats.build_ms},
                   {"explore_ms", r.stats.explore_ms}}}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (holds ? "HOLDS" : "FAILS") << '\n';
        std::cout << "explored " << r.stats.macro_states << " macro states, " << r.stats.macro_transitions
                  << " transitions, largest " << r.stats.max_micros << " micro states; automaton "
                  << r.stats.hba_states << " states; " << r.stats.build_ms + r.stats.explore_ms << " ms\n";
    }
    return holds ? kPositive : kNegative;
}

int run_eval(const Config& cfg)
{
    auto s = load_sentence(cfg.formula);
    std::vector<std::string> binds, positional;
    for (const auto& t : cfg.traces)
        (t.find('=') != std::string::npos && t.find('=') < t.find('{') ? binds : positional).push_back(t);
    auto literals = assign(s, binds, positional, "traces");
    lprl::LassoTuple sigma;
    for (const auto& lit : literals)
        sigma.push_back(lprl::parse_lasso(lit, s.alphabet));
    const bool ok = lprl::eval_matrix(s.matrix, sigma);
    if (cfg.format == "machine")
        std::cout << json{{"command", "eval"}, {"value", ok}}.dump() << '\n';
    else
        std::cout << (ok ? "TRUE" : "FALSE") << '\n';
    return ok ? kPositive : kNegative;
}

int run_dump(const Config& cfg)
{
    auto s = load_sentence(cfg.formula);
    auto report = lprl::check_cycle_free(s);
    if (cfg.format == "machine") {
        json out{{"command", "dump"}, {"normal_form", lprl::to_string(s)}, {"cycle_free", report.ok}};
        json v = json::array();
        for (const auto& x : report.violations)
            v.push_back({{"clause", x.clause + 1}, {"description", x.description}});
        out["violations"] = v;
        if (report.ok)
            out["automaton"] = lprl::dump(lprl::hba_trim(lprl::build_sentence_hba(s)));
        std::cout << out.dump() << '\n';
    } else {
        std::cout << lprl::to_string(s) << '\n';
        for (const auto& x : report.violations)
            std::cout << "clause " << x.clause + 1 << ": " << x.description << '\n';
        if (report.ok)
            std::cout << lprl::dump(lprl::hba_trim(lprl::build_sentence_hba(s)));
    }
    if (!cfg.dump_dir.empty() && report.ok)
        dump_automata(s, cfg.dump_dir);
    return report.ok ? kPositive : kUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"lprl: decision procedures for a hyper linear-time logic"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "machine"}));

    auto* sat = app.add_subcommand("sat", "Decide satisfiability and print a witness");
    sat->add_option("formula", cfg.formula, "Sentence file")->required();
    sat->add_option("--dump-automata", cfg.dump_dir, "Write automaton dumps to DIR");

    auto* mc = app.add_subcommand("mc", "Model check Kripke structures against a sentence");
    mc->add_option("formula", cfg.formula, "Sentence file")->required();
    mc->add_option("kripke", cfg.kripke, "Kripke files in prefix order");
    mc->add_option("--bind", cfg.binds, "VAR=PATH binding");
    mc->add_option("--network", cfg.network, "Network file; component i is bound to variable i");
    mc->add_option("--cap", cfg.cap, "Macro state cap")->check(CLI::PositiveNumber);
    mc->add_option("--dump-automata", cfg.dump_dir, "Write automaton dumps to DIR");

    auto* eval = app.add_subcommand("eval", "Evaluate the matrix on lasso literals");
    eval->add_option("formula", cfg.formula, "Sentence file")->required();
    eval->add_option("traces", cfg.traces, "Lasso literals `stem;loop`, positional or VAR=LASSO")->required();

    auto* dump = app.add_subcommand("dump", "Print the normal form and automata");
    dump->add_option("formula", cfg.formula, "Sentence file")->required();
    dump->add_option("--dump-automata", cfg.dump_dir, "Write automaton dumps to DIR");

    for (auto* sub : {sat, mc, eval, dump})
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    auto fail = [&](const char* kind, const std::string& msg, int code) {
        if (cfg.format == "machine")
            std::cout << json{{"command", cfg.command}, {"error", kind}, {"message", msg}}.dump() << '\n';
        std::cerr << "lprl: " << msg << '\n';
        return code;
    };
    try {
        if (cfg.command == "sat")
            return run_sat(cfg);
        if (cfg.command == "mc")
            return run_mc(cfg);
        if (cfg.command == "eval")
            return run_eval(cfg);
        return run_dump(cfg);
    } catch (const lprl::CapExceeded& e) {
        return fail("cap", std::string("inconclusive: ") + e.what(), kCap);
    } catch (const lprl::ParseError& e) {
        return fail("parse", e.what(), kUsage);
    } catch (const lprl::Error& e) {
        return fail("input", e.what(), kUsage);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kUsage);
    }
}
