#include "canbdi/ts.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace canbdi {

// ---------------------------------------------------------------- canonical form

namespace {

bool is_corr(const Node& n) { return (n.ctrl == Ctrl::Check || n.ctrl == Ctrl::CheckRes) && n.num != 0; }

void collect_paths(const NodeP& t, std::string& path, std::map<int, std::vector<std::string>>& out)
{
    std::size_t len = path.size();
    path += ctrl_name(t->ctrl);
    path += '/';
    if (is_corr(*t))
        out[t->num].push_back(path);
    for (auto& k : t->kids)
        collect_paths(k, path, out);
    path.resize(len);
}

struct Canon {
    std::map<int, std::uint64_t> desc; // correlation id -> descriptor hash

    struct Entry {
        NodeP node;           // sorted, original ids
        std::uint64_t hash;   // id-insensitive
    };

    static int cmp_insensitive(const Entry& a, const Entry& b, const Canon& c)
    {
        (void)c;
        if (a.hash != b.hash)
            return a.hash < b.hash ? -1 : 1;
        return cmp_nodes(a.node, b.node, c);
    }

    static int cmp_nodes(const NodeP& a, const NodeP& b, const Canon& c)
    {
        if (a->ctrl != b->ctrl)
            return a->ctrl < b->ctrl ? -1 : 1;
        if (a->neg != b->neg)
            return a->neg ? 1 : -1;
        if (int x = a->name.compare(b->name))
            return x < 0 ? -1 : 1;
        auto da = is_corr(*a) ? c.desc.at(a->num) : 0, db = is_corr(*b) ? c.desc.at(b->num) : 0;
        if (da != db)
            return da < db ? -1 : 1;
        if (a->kids.size() != b->kids.size())
            return a->kids.size() < b->kids.size() ? -1 : 1;
        for (std::size_t i = 0; i < a->kids.size(); ++i)
            if (int x = cmp_nodes(a->kids[i], b->kids[i], c))
                return x;
        return 0;
    }

    Entry sort(const NodeP& t) const
    {
        std::vector<Entry> kids;
        kids.reserve(t->kids.size());
        for (auto& k : t->kids)
            kids.push_back(sort(k));
        std::sort(kids.begin(), kids.end(),
                  [this](const Entry& a, const Entry& b) { return cmp_insensitive(a, b, *this) < 0; });
        std::uint64_t h = mix64(std::uint64_t(t->ctrl) * 131 + (t->neg ? 17 : 0));
        h ^= mix64(std::hash<std::string>{}(t->name));
        if (is_corr(*t))
            h ^= mix64(desc.at(t->num));
        std::uint64_t sum = 0;
        Nodes ns;
        ns.reserve(kids.size());
        for (auto& e : kids) {
            sum += mix64(e.hash);
            ns.push_back(e.node);
        }
        return {Node::make(t->ctrl, std::move(ns), t->name, t->ctrl == Ctrl::Intent ? 0 : t->num, t->neg),
                mix64(h + sum)};
    }
};

NodeP rename(const NodeP& t, std::map<int, int>& ids)
{
    Nodes kids;
    kids.reserve(t->kids.size());
    int num = t->num;
    if (is_corr(*t)) {
        auto it = ids.find(num);
        if (it == ids.end())
            it = ids.emplace(num, int(ids.size()) + 1).first;
        num = it->second;
    }
    for (auto& k : t->kids)
        kids.push_back(rename(k, ids));
    return Node::make(t->ctrl, std::move(kids), t->name, num, t->neg);
}

} // namespace

NodeP canonicalize(const NodeP& t)
{
    std::map<int, std::vector<std::string>> paths;
    std::string p;
    collect_paths(t, p, paths);
    Canon c;
    for (auto& [id, ps] : paths) {
        std::sort(ps.begin(), ps.end());
        std::string joined;
        for (auto& s : ps)
            joined += s + ";";
        c.desc[id] = mix64(std::hash<std::string>{}(joined));
    }
    NodeP sorted = c.sort(t).node;
    std::map<int, int> ids;
    return rename(sorted, ids);
}

bool exact_equal(const NodeP& a, const NodeP& b)
{
    if (a == b)
        return true;
    if (a->hash != b->hash || a->ctrl != b->ctrl || a->neg != b->neg || a->num != b->num || a->name != b->name ||
        a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!exact_equal(a->kids[i], b->kids[i]))
            return false;
    return true;
}

std::string canonical_key(const NodeP& t) { return print_term(canonicalize(t)); }

std::string mode_name(TSMode m) { return m == TSMode::Full ? "full" : "quotient"; }

// ---------------------------------------------------------------- transition system

std::vector<std::vector<int>> TransitionSystem::successors() const
{
    std::vector<std::vector<int>> s(states.size());
    for (auto& e : edges)
        s[std::size_t(e.src)].push_back(e.dst);
    for (auto& v : s) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return s;
}

std::vector<int> TransitionSystem::terminals() const
{
    std::vector<bool> out(states.size(), false);
    for (auto& e : edges)
        out[std::size_t(e.src)] = true;
    std::vector<int> r;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (!out[i])
            r.push_back(int(i));
    return r;
}

std::size_t default_budget()
{
    if (const char* v = std::getenv("CANBDI_BUDGET")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0)
            return std::size_t(n);
    }
    return 100000;
}

namespace {

struct StateIndex {
    std::unordered_map<std::uint64_t, std::vector<int>> by_hash;
    std::size_t collisions = 0;

    // Returns existing index or -1.
    int find(const std::vector<NodeP>& states, const NodeP& c)
    {
        auto it = by_hash.find(c->hash);
        if (it == by_hash.end())
            return -1;
        for (int i : it->second)
            if (exact_equal(states[std::size_t(i)], c))
                return i;
        return -1;
    }

    void insert(int i, const NodeP& c, bool hash_seen)
    {
        if (hash_seen)
            ++collisions;
        by_hash[c->hash].push_back(i);
    }
};

struct Succ {
    NodeP state;
    std::string rule;
};

std::vector<Succ> expand(const Catalog& rules, const NodeP& t)
{
    std::vector<Succ> out;
    for (auto& en : enabled_reactions(rules, t))
        out.push_back({canonicalize(apply_at(*en.rule, t, en.occ)), en.rule->name});
    return out;
}

} // namespace

TransitionSystem build_full(const NodeP& initial, const Catalog& rules, const BuildOptions& o)
{
    auto t0 = std::chrono::steady_clock::now();
    TransitionSystem ts;
    ts.mode = TSMode::Full;
    StateIndex index;
    NodeP c0 = canonicalize(initial);
    ts.states.push_back(c0);
    index.insert(0, c0, false);
    std::set<std::tuple<int, int, std::string>> seen_edges;
    std::vector<int> frontier{0};
    int jobs = std::max(1, o.jobs);
    while (!frontier.empty() && ts.closed) {
        std::vector<std::vector<Succ>> succs(frontier.size());
        auto work = [&](std::size_t w) {
            for (std::size_t i = w; i < frontier.size(); i += std::size_t(jobs))
                succs[i] = expand(rules, ts.states[std::size_t(frontier[i])]);
        };
        if (jobs == 1 || frontier.size() < 2) {
            for (int w = 0; w < jobs; ++w)
                work(std::size_t(w));
        } else {
            std::vector<std::thread> th;
            for (int w = 0; w < jobs; ++w)
                th.emplace_back(work, std::size_t(w));
            for (auto& x : th)
                x.join();
        }
        std::vector<int> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (auto& s : succs[i]) {
                int dst = index.find(ts.states, s.state);
                if (dst < 0) {
                    if (ts.states.size() >= o.budget) {
                        ts.closed = false;
                        break;
                    }
                    dst = int(ts.states.size());
                    bool hash_seen = index.by_hash.count(s.state->hash) > 0;
                    ts.states.push_back(s.state);
                    index.insert(dst, s.state, hash_seen);
                    next.push_back(dst);
                }
                if (seen_edges.emplace(frontier[i], dst, s.rule).second)
                    ts.edges.push_back({frontier[i], dst, s.rule});
            }
            if (!ts.closed)
                break;
        }
        frontier = std::move(next);
    }
    ts.hash_collisions = index.collisions;
    ts.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return ts;
}

TransitionSystem quotient_agent_level(const TransitionSystem& full)
{
    auto t0 = std::chrono::steady_clock::now();
    TransitionSystem q;
    q.mode = TSMode::Quotient;
    q.closed = full.closed;
    std::vector<int> map(full.states.size(), -1);
    // Resting states keep their relative order; the initial state comes first.
    std::vector<int> order{full.initial};
    for (std::size_t i = 0; i < full.states.size(); ++i)
        if (int(i) != full.initial)
            order.push_back(int(i));
    for (int i : order)
        if (!has_transient(full.states[std::size_t(i)])) {
            map[std::size_t(i)] = int(q.states.size());
            q.states.push_back(full.states[std::size_t(i)]);
        }
    q.initial = map[std::size_t(full.initial)];
    std::vector<std::vector<const TSEdge*>> out(full.states.size());
    for (auto& e : full.edges)
        out[std::size_t(e.src)].push_back(&e);
    std::set<std::tuple<int, int, std::string>> seen;
    for (int s : order) {
        if (map[std::size_t(s)] < 0)
            continue;
        for (auto* e : out[std::size_t(s)]) {
            std::vector<int> stack{e->dst};
            std::set<int> visited{e->dst};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (map[std::size_t(x)] >= 0) {
                    if (seen.emplace(map[std::size_t(s)], map[std::size_t(x)], e->rule).second)
                        q.edges.push_back({map[std::size_t(s)], map[std::size_t(x)], e->rule});
                    continue;
                }
                for (auto* f : out[std::size_t(x)])
                    if (visited.insert(f->dst).second)
                        stack.push_back(f->dst);
            }
        }
    }
    std::sort(q.edges.begin(), q.edges.end(), [](const TSEdge& a, const TSEdge& b) {
        return std::tie(a.src, a.dst, a.rule) < std::tie(b.src, b.dst, b.rule);
    });
    q.build_ms = full.build_ms + std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return q;
}

FullModeCheck check_micro_states(const TransitionSystem& ts)
{
    FullModeCheck r;
    std::size_t n = ts.states.size();
    std::vector<std::vector<int>> pred(n);
    std::vector<bool> has_out(n, false);
    for (auto& e : ts.edges) {
        pred[std::size_t(e.dst)].push_back(e.src);
        has_out[std::size_t(e.src)] = true;
    }
    std::vector<bool> good(n, false);
    std::vector<int> stack;
    for (std::size_t i = 0; i < n; ++i)
        if (!has_transient(ts.states[i])) {
            good[i] = true;
            stack.push_back(int(i));
        }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int p : pred[std::size_t(x)])
            if (!good[std::size_t(p)] && has_transient(ts.states[std::size_t(p)])) {
                good[std::size_t(p)] = true;
                stack.push_back(p);
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!has_transient(ts.states[i]))
            continue;
        if (!has_out[i])
            r.stuck.push_back(int(i));
        else if (!good[i])
            r.unresolved.push_back(int(i));
    }
    return r;
}

// ---------------------------------------------------------------- exports

std::string export_dot(const TransitionSystem& ts)
{
    std::ostringstream os;
    os << "digraph ts {\n";
    for (std::size_t i = 0; i < ts.states.size(); ++i) {
        os << "  s" << i << " [label=\"" << i << "\"";
        if (int(i) == ts.initial)
            os << ", shape=doublecircle";
        os << "];\n";
    }
    for (auto& e : ts.edges)
        os << "  s" << e.src << " -> s" << e.dst << " [label=\"" << e.rule << "\"];\n";
    os << "}\n";
    return os.str();
}

static std::string fmt_prob(double p)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

DtmcFiles export_dtmc(const TransitionSystem& ts, const std::vector<std::pair<std::string, std::vector<int>>>& labels)
{
    auto succ = ts.successors();
    std::size_t count = 0;
    for (auto& s : succ)
        count += s.empty() ? 1 : s.size();
    std::ostringstream tra;
    tra << ts.states.size() << " " << count << "\n";
    for (std::size_t i = 0; i < succ.size(); ++i) {
        if (succ[i].empty()) {
            tra << i << " " << i << " " << fmt_prob(1.0) << "\n";
            continue;
        }
        std::string p = fmt_prob(1.0 / double(succ[i].size()));
        for (int d : succ[i])
            tra << i << " " << d << " " << p << "\n";
    }
    std::vector<std::pair<std::string, std::vector<int>>> all{{"init", {ts.initial}}, {"deadlock", ts.terminals()}};
    all.insert(all.end(), labels.begin(), labels.end());
    std::ostringstream lab;
    for (std::size_t k = 0; k < all.size(); ++k)
        lab << (k ? " " : "") << k << "=\"" << all[k].first << "\"";
    lab << "\n";
    std::vector<std::vector<int>> per_state(ts.states.size());
    for (std::size_t k = 0; k < all.size(); ++k)
        for (int s : all[k].second)
            per_state[std::size_t(s)].push_back(int(k));
    for (std::size_t i = 0; i < per_state.size(); ++i) {
        if (per_state[i].empty())
            continue;
        lab << i << ":";
        for (int k : per_state[i])
            lab << " " << k;
        lab << "\n";
    }
    return {tra.str(), lab.str()};
}

std::string summary_json(const TransitionSystem& ts)
{
    nlohmann::ordered_json j;
    j["mode"] = mode_name(ts.mode);
    j["states"] = ts.states.size();
    j["transitions"] = ts.edges.size();
    j["closed"] = ts.closed;
    j["build_ms"] = ts.build_ms;
    j["hash_collisions"] = ts.hash_collisions;
    return j.dump();
}

} // namespace canbdi
