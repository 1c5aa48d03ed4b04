#include "canbdi/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace canbdi {

// ---------------------------------------------------------------- encoded successors

BrsSuccessors brs_agent_successors(const NodeP& t, const Catalog& rules, const HarnessOptions& o)
{
    BrsSuccessors r;
    struct Visit {
        NodeP state;
        int parent;
        std::string rule;
        std::size_t depth;
    };
    std::vector<Visit> seen;
    std::unordered_map<std::uint64_t, std::vector<int>> index;
    auto lookup = [&](const NodeP& c) {
        auto it = index.find(c->hash);
        if (it != index.end())
            for (int i : it->second)
                if (exact_equal(seen[std::size_t(i)].state, c))
                    return i;
        return -1;
    };
    auto path_of = [&](int i) {
        std::vector<std::string> p;
        for (; seen[std::size_t(i)].parent >= 0; i = seen[std::size_t(i)].parent)
            p.push_back(seen[std::size_t(i)].rule);
        std::reverse(p.begin(), p.end());
        return p;
    };
    NodeP start = canonicalize(t);
    seen.push_back({start, -1, {}, 0});
    index[start->hash].push_back(0);
    std::deque<int> queue{0};
    std::set<int> resting;
    int self_loop = -1;
    std::string self_rule;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        NodeP state = seen[std::size_t(cur)].state;
        std::size_t depth = seen[std::size_t(cur)].depth;
        auto enabled = enabled_reactions(rules, state);
        if (enabled.empty() && cur != 0) {
            r.violations.push_back("stuck micro-state after [" + [&] {
                std::string s;
                for (auto& x : path_of(cur))
                    s += (s.empty() ? "" : " ") + x;
                return s;
            }() + "]: " + print_term(state, {true, true, false}));
            continue;
        }
        if (depth + 1 > o.max_path) {
            r.violations.push_back("micro path exceeds " + std::to_string(o.max_path) + " steps");
            break;
        }
        for (auto& en : enabled) {
            NodeP next = canonicalize(apply_at(*en.rule, state, en.occ));
            if (int prev = lookup(next); prev >= 0) {
                // Returning to the resting start state is a self-loop successor.
                if (prev == 0 && !has_transient(next) && self_loop < 0) {
                    self_loop = cur;
                    self_rule = en.rule->name;
                }
                continue;
            }
            int id = int(seen.size());
            seen.push_back({next, cur, en.rule->name, depth + 1});
            index[next->hash].push_back(id);
            if (seen.size() > o.max_micro_states) {
                r.violations.push_back("micro state budget exceeded");
                queue.clear();
                break;
            }
            if (has_transient(next))
                queue.push_back(id);
            else
                resting.insert(id);
        }
    }
    r.micro_states = seen.size();
    std::vector<std::pair<NodeP, std::vector<std::string>>> found;
    if (self_loop >= 0 && !has_transient(start)) {
        auto p = path_of(self_loop);
        p.push_back(self_rule);
        found.emplace_back(start, std::move(p));
    }
    for (int id : resting)
        found.emplace_back(seen[std::size_t(id)].state, path_of(id));
    for (auto& [state, path] : found) {
        BrsSuccessor s;
        s.state = state;
        s.path = std::move(path);
        r.max_path = std::max(r.max_path, s.path.size());
        try {
            s.config = decode_config(s.state, false);
        } catch (const DecodeError& e) {
            r.violations.push_back(std::string("decode failed: ") + e.what());
            continue;
        }
        r.successors.push_back(std::move(s));
    }
    return r;
}

// ---------------------------------------------------------------- crosscheck

std::size_t CrosscheckReport::discrepancy_count() const
{
    std::size_t n = 0;
    for (auto& d : discrepancies)
        n += d.missing.size() + d.extra.size() + d.violations.size();
    return n;
}

std::size_t CrosscheckReport::violation_count() const
{
    std::size_t n = 0;
    for (auto& d : discrepancies)
        n += d.violations.size();
    return n;
}

std::string CrosscheckReport::json() const
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["depth"] = depth;
    j["configs_checked"] = configs_checked;
    j["oracle_edges"] = oracle_edges;
    j["encoded_edges"] = brs_edges;
    j["max_micro_path"] = max_micro_path;
    j["discrepancies"] = discrepancy_count();
    auto arr = nlohmann::ordered_json::array();
    for (auto& d : discrepancies) {
        nlohmann::ordered_json e;
        e["config"] = d.config;
        e["agent"] = d.config_text;
        e["missing"] = d.missing;
        e["extra"] = d.extra;
        e["violations"] = d.violations;
        arr.push_back(e);
    }
    j["entries"] = arr;
    return j.dump();
}

std::string CrosscheckReport::summary() const
{
    std::ostringstream os;
    os << (name.empty() ? "agent" : name) << ": depth " << depth << ", " << configs_checked << " configs, "
       << oracle_edges << " oracle / " << brs_edges << " encoded successors, max micro path " << max_micro_path
       << ", discrepancies " << discrepancy_count();
    return os.str();
}

namespace {

std::string describe(const AgentConfig& c)
{
    std::string s = print_agent(c);
    return s;
}

} // namespace

CrosscheckReport crosscheck(const AgentConfig& cfg, int depth, const Catalog& rules, const HarnessOptions& o, int jobs,
                            const std::string& name)
{
    CrosscheckReport rep;
    rep.name = name;
    rep.depth = depth;
    Reachable reach = reachable_configs(cfg, depth, {}, jobs);
    std::size_t n = reach.configs.size();
    rep.configs_checked = n;
    struct Result {
        CrosscheckEntry entry;
        std::size_t oracle = 0, brs = 0, max_path = 0;
    };
    std::vector<Result> results(n);
    auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += std::size_t(std::max(1, jobs))) {
            const AgentConfig& c = reach.configs[i];
            std::set<std::string> want, got;
            for (auto& s : agent_successors(c))
                want.insert(config_key(s.after));
            auto b = brs_agent_successors(encode_config(c, true), rules, o);
            for (auto& s : b.successors)
                got.insert(config_key(s.config));
            Result& res = results[i];
            res.oracle = want.size();
            res.brs = got.size();
            res.max_path = b.max_path;
            res.entry.config = int(i);
            for (auto& k : want)
                if (!got.count(k))
                    res.entry.missing.push_back(k);
            for (auto& k : got)
                if (!want.count(k))
                    res.entry.extra.push_back(k);
            res.entry.violations = b.violations;
            if (!res.entry.missing.empty() || !res.entry.extra.empty() || !res.entry.violations.empty())
                res.entry.config_text = describe(c);
        }
    };
    if (jobs <= 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < jobs; ++w)
            th.emplace_back(work, std::size_t(w));
        for (auto& x : th)
            x.join();
    }
    for (auto& r : results) {
        rep.oracle_edges += r.oracle;
        rep.brs_edges += r.brs;
        rep.max_micro_path = std::max(rep.max_micro_path, r.max_path);
        if (!r.entry.missing.empty() || !r.entry.extra.empty() || !r.entry.violations.empty())
            rep.discrepancies.push_back(std::move(r.entry));
    }
    return rep;
}

// ---------------------------------------------------------------- golden traces

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace

GoldenTrace parse_golden(const std::string& text)
{
    GoldenTrace g;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    std::vector<std::string> pending;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        line = trim(line);
        if (line.empty())
            continue;
        auto where = [&](const std::string& m) { return PatternError("line " + std::to_string(no) + ": " + m); };
        if (line.rfind("agent:", 0) == 0) {
            g.agent = trim(line.substr(6));
        } else if (line.rfind("->", 0) == 0) {
            std::istringstream rs(line.substr(2));
            std::string r;
            while (rs >> r)
                pending.push_back(r);
        } else if (line[0] == '(') {
            auto close = line.find(')');
            if (close == std::string::npos)
                throw where("expected `(n) term`");
            GoldenStep s;
            try {
                s.number = std::stoi(line.substr(1, close - 1));
            } catch (const std::exception&) {
                throw where("bad step number");
            }
            s.line = no;
            s.text = trim(line.substr(close + 1));
            try {
                s.term = parse_term(s.text);
            } catch (const PatternError& e) {
                throw where(e.what());
            }
            if (!g.steps.empty() && pending.empty())
                throw where("missing rule line before step " + std::to_string(s.number));
            s.rules_before = std::move(pending);
            pending.clear();
            g.steps.push_back(std::move(s));
        } else {
            throw where("unrecognised line");
        }
    }
    if (!pending.empty())
        throw PatternError("trailing rule line without a resulting term");
    return g;
}

NodeP strip_for_trace(const NodeP& t)
{
    Nodes kids;
    for (auto& k : t->kids)
        if (k->ctrl != Ctrl::CheckToken)
            kids.push_back(strip_for_trace(k));
    bool named = t->ctrl == Ctrl::Act || t->ctrl == Ctrl::Plan;
    return Node::make(t->ctrl, std::move(kids), named ? std::string() : t->name, 0, t->neg);
}

namespace {

bool trace_match(const NodeP& expected, const NodeP& state, std::string& actual)
{
    NodeP want = strip_for_trace(expected);
    PrintOptions po{true, true, true};
    if (want->ctrl == Ctrl::Root) {
        NodeP got = strip_for_trace(state);
        actual = print_term(got, po);
        return term_equal(want, got);
    }
    for (auto& region : state->kids) {
        if (region->ctrl != Ctrl::Intentions)
            continue;
        actual = print_nodes(region->kids, po);
        for (auto& k : region->kids)
            if (term_equal(want, strip_for_trace(k)))
                return true;
    }
    return false;
}

std::string group_of(const Catalog& rules, const std::string& name)
{
    for (auto& r : rules)
        if (r.name == name)
            return r.group;
    return {};
}

} // namespace

GoldenResult golden_trace_check(const GoldenTrace& trace, const AgentConfig& cfg, const Catalog& rules)
{
    GoldenResult res;
    NodeP state = encode_config(cfg, true);
    PrintOptions po{true, true, true};
    auto fail = [&](const GoldenStep& s, const std::string& msg, const std::string& actual) {
        res.ok = false;
        res.failed_step = s.number;
        res.message = msg;
        res.expected = print_term(strip_for_trace(s.term), po);
        res.actual = actual;
        return res;
    };
    for (auto& step : trace.steps) {
        for (auto& tok : step.rules_before) {
            if (!tok.empty() && tok.back() == '*') {
                std::string group = tok.substr(0, tok.size() - 1);
                for (;;) {
                    auto en = enabled_reactions(rules, state);
                    auto it = std::find_if(en.begin(), en.end(), [&](const Enabled& e) { return e.rule->group == group; });
                    if (it == en.end())
                        break;
                    state = apply_at(*it->rule, state, it->occ);
                    res.applied.push_back(it->rule->name);
                }
                continue;
            }
            auto en = enabled_reactions(rules, state);
            auto it = std::find_if(en.begin(), en.end(), [&](const Enabled& e) { return e.rule->name == tok; });
            if (it == en.end()) {
                std::string names;
                for (auto& e : en)
                    if (names.find(e.rule->name) == std::string::npos)
                        names += (names.empty() ? "" : ", ") + e.rule->name;
                return fail(step, "rule " + tok + (group_of(rules, tok).empty() ? " is not in the catalog" : " is not enabled") +
                                      " (enabled: " + (names.empty() ? "none" : names) + ")",
                            print_term(state, po));
            }
            state = apply_at(*it->rule, state, it->occ);
            res.applied.push_back(it->rule->name);
        }
        std::string actual;
        if (!trace_match(step.term, state, actual))
            return fail(step, "term mismatch at step " + std::to_string(step.number), actual);
        ++res.terms_matched;
    }
    return res;
}

// ---------------------------------------------------------------- random agents

namespace {

struct Gen {
    std::mt19937_64 rng;
    const GeneratorOptions& o;
    int atoms = 1, events = 1;
    std::vector<ActionSpec> actions;

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

    Literal lit() { return {"a" + std::to_string(pick(0, atoms - 1)), coin(0.25)}; }

    Formula formula(double p_true)
    {
        if (coin(p_true))
            return Formula::truth();
        std::vector<Literal> ls;
        int n = pick(1, 2);
        for (int i = 0; i < n; ++i)
            ls.push_back(lit());
        Formula f = Formula::conj(ls);
        return f;
    }

    ActionSpec action(int i)
    {
        ActionSpec a;
        a.name = "act" + std::to_string(i);
        a.pre = formula(0.5);
        int n = pick(0, 2);
        for (int k = 0; k < n; ++k) {
            Literal l = lit();
            (coin(0.6) ? a.add : a.del).insert(l);
        }
        for (auto& l : a.add)
            a.del.erase(l);
        return a;
    }

    // Events posted from a plan for event e must have a larger index (no recursion).
    Body leaf(int e)
    {
        int choice = pick(0, 9);
        if (choice < 5)
            return mk_act(actions[std::size_t(pick(0, int(actions.size()) - 1))]);
        if (choice < 7 && e + 1 < events)
            return mk_event("e" + std::to_string(pick(e + 1, events - 1)));
        if (choice == 7)
            return mk_act(desugar_basic(BasicOp::Query, formula(0.3)));
        return mk_act(desugar_basic(coin(0.5) ? BasicOp::Add : BasicOp::Del, lit()));
    }

    Body body(int e, int depth)
    {
        if (depth <= 1 || coin(0.4))
            return leaf(e);
        int k = pick(0, 5);
        if (k <= 2)
            return mk_seq(body(e, depth - 1), body(e, depth - 1));
        if (k <= 4)
            return mk_conc(body(e, depth - 1), body(e, depth - 1));
        return mk_goal(formula(0.0), body(e, depth - 1), formula(0.3));
    }
};

} // namespace

AgentConfig random_agent(std::uint64_t seed, const GeneratorOptions& o)
{
    for (std::uint64_t attempt = 0;; ++attempt) {
        Gen g{std::mt19937_64(seed * 1000003ULL + attempt), o, 1, 1, {}};
        g.atoms = g.pick(1, std::max(1, o.max_atoms));
        g.events = g.pick(1, std::max(1, o.max_events));
        AgentConfig c;
        int nact = g.pick(1, 4);
        for (int i = 0; i < nact; ++i) {
            g.actions.push_back(g.action(i + 1));
            c.actions[g.actions.back().name] = g.actions.back();
        }
        int plan_no = 0;
        for (int e = 0; e < g.events; ++e) {
            int np = g.pick(e == 0 ? 1 : 0, std::max(1, o.max_plans_per_event));
            for (int k = 0; k < np; ++k)
                c.plans.push_back({"P" + std::to_string(++plan_no), "e" + std::to_string(e), g.formula(0.5),
                                   g.body(e, g.pick(1, std::max(1, o.max_body_depth)))});
        }
        for (int a = 0; a < g.atoms; ++a)
            if (g.coin(0.5))
                c.beliefs.insert({"a" + std::to_string(a), g.coin(0.2)});
        int nev = g.pick(1, 2);
        for (int i = 0; i < nev; ++i)
            c.events.push_back("e0");
        // Drop declared actions that no plan uses.
        std::set<std::string> used;
        std::function<void(const Body&)> walk = [&](const Body& b) {
            if (!b)
                return;
            if (b->kind == PlanBody::Kind::Act)
                used.insert(b->act.name);
            walk(b->left);
            walk(b->right);
        };
        for (auto& p : c.plans)
            walk(p.body);
        for (auto it = c.actions.begin(); it != c.actions.end();)
            it = used.count(it->first) ? std::next(it) : c.actions.erase(it);
        c.intern();
        bool errors = false;
        for (auto& d : validate_agent(c))
            errors |= d.severity == Diagnostic::Severity::Error;
        if (!errors)
            return c;
    }
}

} // namespace canbdi
