#include "canbdi/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace canbdi {

bool entails(const Beliefs& b, const Formula& phi)
{
    switch (phi.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Conj:
        return std::all_of(phi.lits.begin(), phi.lits.end(), [&](const Literal& l) { return b.count(l) > 0; });
    }
    return false;
}

Beliefs revise(const Beliefs& b, const std::set<Literal>& add, const std::set<Literal>& del)
{
    Beliefs r;
    for (auto& l : b)
        if (!del.count(l))
            r.insert(l);
    r.insert(add.begin(), add.end());
    return r;
}

namespace {

std::string act_rule(const std::string& name)
{
    if (!name.empty()) {
        if (name[0] == '?')
            return "query";
        if (name[0] == '+')
            return "addb";
        if (name[0] == '-')
            return "delb";
    }
    return "act";
}

bool is_nil(const Body& p) { return p->kind == PlanBody::Kind::Nil; }

struct Stepper {
    const std::vector<Plan>& plans;
    const SemanticsOptions& opt;

    IntentionStep leaf(const char* rule, const Beliefs& b, const Beliefs& b2, const Body& p, Body p2) const
    {
        return {rule, {rule}, b, b2, p, std::move(p2)};
    }

    IntentionStep lift(const std::string& rule, const Body& p, const IntentionStep& inner, Body p2) const
    {
        IntentionStep s{rule, {rule}, inner.before_beliefs, inner.after_beliefs, p, std::move(p2)};
        s.chain.insert(s.chain.end(), inner.chain.begin(), inner.chain.end());
        return s;
    }

    std::vector<IntentionStep> succ(const Beliefs& b, const Body& p) const
    {
        using K = PlanBody::Kind;
        std::vector<IntentionStep> out;
        switch (p->kind) {
        case K::Nil: break;
        case K::Act:
            if (entails(b, p->act.pre)) {
                auto r = act_rule(p->act.name);
                out.push_back({r, {r}, b, revise(b, p->act.add, p->act.del), p, mk_nil()});
            }
            break;
        case K::Event: {
            std::vector<PlanEntry> delta;
            for (auto& pl : plans)
                if (pl.trigger == p->event)
                    delta.push_back({pl.id, pl.context, pl.body});
            out.push_back(leaf("event", b, b, p, mk_planset(p->event, std::move(delta))));
            break;
        }
        case K::PlanSet:
            for (std::size_t i = 0; i < p->plans.size(); ++i) {
                if (!entails(b, p->plans[i].context))
                    continue;
                std::vector<PlanEntry> rest;
                for (std::size_t j = 0; j < p->plans.size(); ++j)
                    if (j != i)
                        rest.push_back(p->plans[j]);
                out.push_back(leaf("select", b, b, p, mk_try(p->plans[i].body, mk_planset(p->event, std::move(rest)))));
            }
            break;
        case K::Try: {
            if (is_nil(p->left)) {
                out.push_back(leaf("tri_top", b, b, p, mk_nil()));
                break;
            }
            auto ls = succ(b, p->left);
            if (!ls.empty()) {
                for (auto& s : ls)
                    out.push_back(lift("tri_seq", p, s, mk_try(s.after, p->right)));
                break;
            }
            if (opt.wait_free_try) {
                out.push_back(leaf("tri_bot", b, b, p, p->right));
                break;
            }
            for (auto& s : succ(b, p->right))
                out.push_back(lift("tri_bot", p, s, s.after));
            break;
        }
        case K::Seq:
            if (is_nil(p->left)) {
                for (auto& s : succ(b, p->right))
                    out.push_back(lift("seq_top", p, s, s.after));
                break;
            }
            for (auto& s : succ(b, p->left))
                out.push_back(lift("seq", p, s, mk_seq(s.after, p->right)));
            break;
        case K::Conc:
            if (is_nil(p->left) && is_nil(p->right)) {
                out.push_back(leaf("par_top", b, b, p, mk_nil()));
                break;
            }
            for (auto& s : succ(b, p->left))
                out.push_back(lift("par1", p, s, mk_conc(s.after, p->right)));
            for (auto& s : succ(b, p->right))
                out.push_back(lift("par2", p, s, mk_conc(p->left, s.after)));
            break;
        case K::Goal: {
            bool sat = entails(b, p->succ), fail = entails(b, p->fail);
            if (sat)
                out.push_back(leaf("Gs", b, b, p, mk_nil()));
            if (fail)
                out.push_back(leaf("Gf", b, b, p, mk_act(desugar_basic(BasicOp::Query, Formula::falsity()))));
            if (sat || fail)
                break;
            const Body& inner = p->left;
            if (inner->kind != K::Try) {
                out.push_back(leaf("Ginit", b, b, p, mk_goal(p->succ, mk_try(inner, inner), p->fail)));
                break;
            }
            auto ls = succ(b, inner->left);
            if (!ls.empty()) {
                for (auto& s : ls)
                    out.push_back(lift("Gseq", p, s, mk_goal(p->succ, mk_try(s.after, inner->right), p->fail)));
            } else {
                out.push_back(leaf("Gtri", b, b, p, mk_goal(p->succ, mk_try(inner->right, inner->right), p->fail)));
            }
            break;
        }
        }
        return out;
    }
};

} // namespace

std::vector<IntentionStep> intention_successors(const Beliefs& b, const Body& p, const std::vector<Plan>& plans,
                                                const SemanticsOptions& o)
{
    return Stepper{plans, o}.succ(b, p);
}

bool is_blocked(const Beliefs& b, const Body& p, const std::vector<Plan>& plans, const SemanticsOptions& o)
{
    return intention_successors(b, p, plans, o).empty();
}

std::vector<AgentStep> agent_successors(const AgentConfig& cfg, const SemanticsOptions& o)
{
    std::vector<AgentStep> out;
    std::set<std::string> seen_events;
    for (std::size_t i = 0; i < cfg.events.size(); ++i) {
        if (!seen_events.insert(cfg.events[i]).second)
            continue;
        AgentConfig n = cfg;
        n.events.erase(n.events.begin() + long(i));
        int id = cfg.next_intention_id();
        n.intentions.push_back({id, mk_event(cfg.events[i])});
        out.push_back({"A_event", cfg.events[i], id, std::move(n)});
    }
    for (std::size_t i = 0; i < cfg.intentions.size(); ++i) {
        const auto& in = cfg.intentions[i];
        auto steps = intention_successors(cfg.beliefs, in.body, cfg.plans, o);
        if (steps.empty()) {
            AgentConfig n = cfg;
            n.intentions.erase(n.intentions.begin() + long(i));
            out.push_back({"A_update", "", in.id, std::move(n)});
            continue;
        }
        for (auto& s : steps) {
            AgentConfig n = cfg;
            n.beliefs = s.after_beliefs;
            n.intentions[i].body = s.after;
            std::string chain;
            for (auto& r : s.chain)
                chain += (chain.empty() ? "" : "/") + r;
            out.push_back({"A_step", chain, in.id, std::move(n)});
        }
    }
    return out;
}

std::vector<int> Reachable::terminals() const
{
    std::vector<bool> has_out(configs.size(), false);
    for (auto& e : edges)
        has_out[std::size_t(e.src)] = true;
    std::vector<int> r;
    for (std::size_t i = 0; i < configs.size(); ++i)
        if (!has_out[i] && expanded[i])
            r.push_back(int(i));
    return r;
}

Reachable reachable_configs(const AgentConfig& cfg, int bound, const SemanticsOptions& o, int jobs,
                            std::size_t max_states)
{
    Reachable r;
    std::unordered_map<std::string, int> index;
    r.configs.push_back(cfg);
    r.depth.push_back(0);
    r.expanded.push_back(0);
    index.emplace(config_key(cfg), 0);
    std::set<std::tuple<int, int, std::string>> edge_set;
    std::vector<int> frontier{0};
    int level = 0;
    jobs = std::max(1, jobs);
    while (!frontier.empty()) {
        std::vector<std::vector<AgentStep>> succs(frontier.size());
        auto work = [&](std::size_t w) {
            for (std::size_t i = w; i < frontier.size(); i += std::size_t(jobs))
                succs[i] = agent_successors(r.configs[std::size_t(frontier[i])], o);
        };
        if (jobs == 1 || frontier.size() < 2) {
            for (int w = 0; w < jobs; ++w)
                work(std::size_t(w));
        } else {
            std::vector<std::thread> ts;
            for (int w = 0; w < jobs; ++w)
                ts.emplace_back(work, std::size_t(w));
            for (auto& t : ts)
                t.join();
        }
        if (bound >= 0 && level == bound) {
            for (auto& s : succs)
                if (!s.empty())
                    r.bound_hit = true;
            break;
        }
        std::vector<int> next;
        for (int f : frontier)
            r.expanded[std::size_t(f)] = 1;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (auto& s : succs[i]) {
                std::string key = config_key(s.after);
                auto [it, fresh] = index.emplace(key, int(r.configs.size()));
                if (fresh) {
                    if (r.configs.size() >= max_states)
                        throw std::runtime_error("reachable_configs: state limit exceeded");
                    r.configs.push_back(s.after);
                    r.depth.push_back(level + 1);
                    r.expanded.push_back(0);
                    next.push_back(it->second);
                }
                if (edge_set.emplace(frontier[i], it->second, s.rule).second)
                    r.edges.push_back({frontier[i], it->second, s.rule});
            }
        }
        frontier = std::move(next);
        ++level;
    }
    return r;
}

std::string format_step(const IntentionStep& s)
{
    std::ostringstream os;
    os << print_body(s.before) << "  --" << s.rule << "-->  " << print_body(s.after);
    if (s.before_beliefs != s.after_beliefs) {
        os << "   B' = {";
        bool first = true;
        for (auto& l : s.after_beliefs) {
            os << (first ? "" : ", ") << l.str();
            first = false;
        }
        os << "}";
    }
    return os.str();
}

std::string format_agent_step(const AgentConfig& before, const AgentStep& s)
{
    std::ostringstream os;
    os << s.rule;
    if (!s.detail.empty())
        os << "[" << s.detail << "]";
    os << " intention " << s.intention << ": " << config_key(before) << "  =>  " << config_key(s.after);
    return os.str();
}

} // namespace canbdi
