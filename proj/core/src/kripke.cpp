// SPDX-License-Identifier: MIT
#include "lprl/kripke.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lprl/error.hpp"

namespace lprl {

using nlohmann::json;

namespace {

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw Error(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

std::string str(const json& v, const std::string& where)
{
    if (!v.is_string())
        throw Error(where + ": expected a string");
    return v.get<std::string>();
}

std::vector<std::string> strings(const json& v, const std::string& where)
{
    if (!v.is_array())
        throw Error(where + ": expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(str(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

int Kripke::state_index(std::string_view name) const
{
    for (std::size_t s = 0; s < names.size(); ++s)
        if (names[s] == name)
            return static_cast<int>(s);
    return -1;
}

void validate(const Kripke& k)
{
    const auto n = static_cast<int>(k.num_states());
    if (n == 0)
        throw Error("Kripke structure has no states");
    if (k.label.size() != k.names.size() || k.succ.size() != k.names.size())
        throw Error("Kripke structure has inconsistent state tables");
    if (k.initial < 0 || k.initial >= n)
        throw Error("initial state out of range");
    for (std::size_t s = 0; s < k.names.size(); ++s) {
        if (k.label[s] >= k.alphabet.num_letters())
            throw Error("state " + k.names[s] + " has a label outside the alphabet");
        if (k.succ[s].empty())
            throw Error("state " + k.names[s] + " has no successor");
        for (int d : k.succ[s])
            if (d < 0 || d >= n)
                throw Error("state " + k.names[s] + " has an edge out of range");
    }
}

Kripke parse_kripke(std::string_view json_text)
{
    const json doc = parse_json(json_text);
    Kripke k;
    k.alphabet = Alphabet(strings(field(doc, "props", "kripke"), "props"));
    const json& states = field(doc, "states", "kripke");
    if (!states.is_array())
        throw Error("states: expected an array");
    for (std::size_t s = 0; s < states.size(); ++s) {
        const std::string where = "states[" + std::to_string(s) + "]";
        std::string id = str(field(states[s], "id", where), where + ".id");
        if (k.state_index(id) >= 0)
            throw Error(where + ": duplicate state " + id);
        Letter a = 0;
        for (const auto& p : strings(field(states[s], "label", where), where + ".label")) {
            int idx = k.alphabet.prop_index(p);
            if (idx < 0)
                throw Error(where + ": unknown proposition " + p);
            a |= Letter{1} << idx;
        }
        k.names.push_back(std::move(id));
        k.label.push_back(a);
        k.succ.emplace_back();
    }
    const std::string init = str(field(doc, "initial", "kripke"), "initial");
    k.initial = k.state_index(init);
    if (k.initial < 0)
        throw Error("initial: unknown state " + init);
    const json& edges = field(doc, "edges", "kripke");
    if (!edges.is_array())
        throw Error("edges: expected an array");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string where = "edges[" + std::to_string(e) + "]";
        auto ends = strings(edges[e], where);
        if (ends.size() != 2)
            throw Error(where + ": expected [source, target]");
        int src = k.state_index(ends[0]);
        int dst = k.state_index(ends[1]);
        if (src < 0 || dst < 0)
            throw Error(where + ": unknown state " + (src < 0 ? ends[0] : ends[1]));
        auto& out = k.succ[static_cast<std::size_t>(src)];
        if (std::find(out.begin(), out.end(), dst) == out.end())
            out.push_back(dst);
    }
    validate(k);
    return k;
}

Kripke load_kripke(const std::string& path)
{
    try {
        return parse_kripke(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.offset());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string to_json(const Kripke& k)
{
    json doc;
    doc["props"] = k.alphabet.props();
    doc["states"] = json::array();
    for (std::size_t s = 0; s < k.num_states(); ++s) {
        json lab = json::array();
        for (std::size_t p = 0; p < k.alphabet.num_props(); ++p)
            if ((k.label[s] >> p) & 1U)
                lab.push_back(k.alphabet.props()[p]);
        doc["states"].push_back({{"id", k.names[s]}, {"label", lab}});
    }
    doc["initial"] = k.names[static_cast<std::size_t>(k.initial)];
    doc["edges"] = json::array();
    for (std::size_t s = 0; s < k.num_states(); ++s)
        for (int d : k.succ[s])
            doc["edges"].push_back({k.names[s], k.names[static_cast<std::size_t>(d)]});
    return doc.dump(2) + "\n";
}

Kripke align_kripke(const Kripke& k, const Alphabet& target)
{
    std::vector<int> map;
    for (const auto& p : k.alphabet.props()) {
        int idx = target.prop_index(p);
        if (idx < 0)
            throw Error("unknown proposition " + p + " in Kripke structure");
        map.push_back(idx);
    }
    Kripke r = k;
    r.alphabet = target;
    for (auto& a : r.label) {
        Letter b = 0;
        for (std::size_t p = 0; p < map.size(); ++p)
            if ((a >> p) & 1U)
                b |= Letter{1} << map[p];
        a = b;
    }
    return r;
}

std::vector<std::pair<Letter, int>> micro_moves(const Kripke& k, int s)
{
    if (s < 0 || static_cast<std::size_t>(s) >= k.num_states())
        throw Error("unknown state " + std::to_string(s));
    std::vector<std::pair<Letter, int>> out;
    for (int d : k.succ[static_cast<std::size_t>(s)])
        out.emplace_back(k.label[static_cast<std::size_t>(s)], d);
    return out;
}

bool replay_path(const Kripke& k, const std::vector<int>& stem, const std::vector<int>& loop)
{
    if (loop.empty())
        return false;
    std::vector<int> seq = stem;
    seq.insert(seq.end(), loop.begin(), loop.end());
    seq.push_back(loop.front());
    if (seq.front() != k.initial)
        return false;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        if (seq[j] < 0 || static_cast<std::size_t>(seq[j]) >= k.num_states())
            return false;
        const auto& out = k.succ[static_cast<std::size_t>(seq[j])];
        if (std::find(out.begin(), out.end(), seq[j + 1]) == out.end())
            return false;
    }
    return true;
}

LassoWord path_trace(const Kripke& k, const std::vector<int>& stem, const std::vector<int>& loop)
{
    if (!replay_path(k, stem, loop))
        throw Error("not a path of the Kripke structure");
    LassoWord w;
    for (int s : stem)
        w.stem.push_back(k.label[static_cast<std::size_t>(s)]);
    for (int s : loop)
        w.loop.push_back(k.label[static_cast<std::size_t>(s)]);
    return w;
}

bool is_deterministic(const Kripke& k)
{
    return std::all_of(k.succ.begin(), k.succ.end(), [](const auto& o) { return o.size() == 1; });
}

LassoWord unique_trace(const Kripke& k)
{
    if (!is_deterministic(k))
        throw Error("Kripke structure is not deterministic");
    std::vector<int> order;
    std::vector<int> seen(k.num_states(), -1);
    int s = k.initial;
    while (seen[static_cast<std::size_t>(s)] < 0) {
        seen[static_cast<std::size_t>(s)] = static_cast<int>(order.size());
        order.push_back(s);
        s = k.succ[static_cast<std::size_t>(s)].front();
    }
    const auto cut = static_cast<std::ptrdiff_t>(seen[static_cast<std::size_t>(s)]);
    return path_trace(k, {order.begin(), order.begin() + cut}, {order.begin() + cut, order.end()});
}

// ---------------------------------------------------------------------------

int TransitionSystem::action_index(std::string_view a) const
{
    for (std::size_t j = 0; j < actions.size(); ++j)
        if (actions[j] == a)
            return static_cast<int>(j);
    return -1;
}

std::vector<TransitionSystem> parse_network(std::string_view json_text)
{
    const json doc = parse_json(json_text);
    const json& comps = field(doc, "components", "network");
    if (!comps.is_array() || comps.empty())
        throw Error("components: expected a non-empty array");
    std::vector<TransitionSystem> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::string where = "components[" + std::to_string(c) + "]";
        TransitionSystem ts;
        ts.name = str(field(comps[c], "name", where), where + ".name");
        ts.actions = strings(field(comps[c], "alphabet", where), where + ".alphabet");
        ts.states = strings(field(comps[c], "states", where), where + ".states");
        if (ts.states.empty())
            throw Error(where + ": empty component");
        auto index = [&](const std::string& s) {
            auto it = std::find(ts.states.begin(), ts.states.end(), s);
            if (it == ts.states.end())
                throw Error(where + ": unknown state " + s);
            return static_cast<int>(it - ts.states.begin());
        };
        ts.initial = index(str(field(comps[c], "initial", where), where + ".initial"));
        const json& edges = field(comps[c], "edges", where);
        if (!edges.is_array())
            throw Error(where + ".edges: expected an array");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto parts = strings(edges[e], where + ".edges[" + std::to_string(e) + "]");
            if (parts.size() != 3)
                throw Error(where + ".edges[" + std::to_string(e) + "]: expected [source, action, target]");
            int act = ts.action_index(parts[1]);
            if (act < 0)
                throw Error(where + ": action " + parts[1] + " is not in the alphabet");
            ts.edges.push_back({index(parts[0]), act, index(parts[2])});
        }
        out.push_back(std::move(ts));
    }
    return out;
}

std::vector<TransitionSystem> load_network(const std::string& path)
{
    try {
        return parse_network(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.offset());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

TransitionSystem pad_bottom(const TransitionSystem& ts, const std::string& bottom)
{
    std::vector<char> stuck(ts.states.size(), 1);
    for (const auto& e : ts.edges)
        stuck[static_cast<std::size_t>(e.src)] = 0;
    if (std::none_of(stuck.begin(), stuck.end(), [](char c) { return c != 0; }))
        return ts;
    TransitionSystem r = ts;
    if (r.action_index(bottom) >= 0)
        throw Error("padding action " + bottom + " already in use");
    r.actions.push_back(bottom);
    const int act = static_cast<int>(r.actions.size()) - 1;
    for (std::size_t s = 0; s < stuck.size(); ++s)
        if (stuck[s])
            r.edges.push_back({static_cast<int>(s), act, static_cast<int>(s)});
    return r;
}

TransitionSystem synchronized_product(const std::vector<TransitionSystem>& components)
{
    if (components.empty())
        throw Error("product of no components");
    for (const auto& c : components)
        if (c.states.empty())
            throw Error("component " + c.name + " has no states");
    TransitionSystem g;
    for (const auto& c : components) {
        g.name += (g.name.empty() ? "" : "x") + c.name;
        for (const auto& a : c.actions)
            if (g.action_index(a) < 0)
                g.actions.push_back(a);
    }
    const std::size_t k = components.size();
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> tuples;
    auto intern = [&](std::vector<int> t) {
        auto [it, fresh] = index.emplace(t, static_cast<int>(tuples.size()));
        if (fresh) {
            std::string name;
            for (std::size_t i = 0; i < k; ++i)
                name += (i ? "." : "") + components[i].states[static_cast<std::size_t>(t[i])];
            g.states.push_back(name);
            tuples.push_back(std::move(t));
        }
        return it->second;
    };
    std::vector<int> init;
    for (const auto& c : components)
        init.push_back(c.initial);
    g.initial = intern(init);
    for (std::size_t code = 0; code < tuples.size(); ++code) {
        for (std::size_t a = 0; a < g.actions.size(); ++a) {
            // Successor tuples after `a`, built component by component.
            std::vector<std::vector<int>> next{{}};
            for (std::size_t i = 0; i < k && !next.empty(); ++i) {
                const auto& c = components[i];
                const int local = tuples[code][i];
                const int ca = c.action_index(g.actions[a]);
                std::vector<int> moves;
                if (ca < 0) {
                    moves.push_back(local);
                } else {
                    for (const auto& e : c.edges)
                        if (e.src == local && e.action == ca)
                            moves.push_back(e.dst);
                }
                std::vector<std::vector<int>> grown;
                for (const auto& base : next)
                    for (int m : moves) {
                        grown.push_back(base);
                        grown.back().push_back(m);
                    }
                next = std::move(grown);
            }
            for (auto& d : next) {
                const int dst = intern(std::move(d));
                g.edges.push_back({static_cast<int>(code), static_cast<int>(a), dst});
            }
        }
    }
    return g;
}

Kripke to_kripke(const TransitionSystem& ts, const Alphabet& alpha)
{
    std::vector<Letter> act_letter;
    for (const auto& a : ts.actions) {
        int p = alpha.prop_index(a);
        if (p < 0)
            throw Error("action " + a + " is not a proposition of the alphabet");
        act_letter.push_back(Letter{1} << p);
    }
    Kripke k;
    k.alphabet = alpha;
    k.names.push_back("init");
    k.label.push_back(0);
    k.succ.emplace_back();
    k.initial = 0;
    for (const auto& e : ts.edges) {
        k.names.push_back(ts.states[static_cast<std::size_t>(e.src)] + "-" + ts.actions[static_cast<std::size_t>(e.action)] +
                          "-" + ts.states[static_cast<std::size_t>(e.dst)]);
        k.label.push_back(act_letter[static_cast<std::size_t>(e.action)]);
        k.succ.emplace_back();
    }
    for (std::size_t j = 0; j < ts.edges.size(); ++j) {
        const int node = static_cast<int>(j) + 1;
        if (ts.edges[j].src == ts.initial)
            k.succ[0].push_back(node);
        for (std::size_t l = 0; l < ts.edges.size(); ++l)
            if (ts.edges[l].src == ts.edges[j].dst)
                k.succ[static_cast<std::size_t>(node)].push_back(static_cast<int>(l) + 1);
    }
    validate(k);
    return k;
}

Alphabet action_alphabet(const std::vector<TransitionSystem>& components)
{
    std::vector<std::string> props;
    for (const auto& c : components)
        for (const auto& a : c.actions)
            if (std::find(props.begin(), props.end(), a) == props.end())
                props.push_back(a);
    return Alphabet(props);
}

}  // namespace lprl
