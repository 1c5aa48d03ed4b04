#pragma once

#include "canbdi/syntax.hpp"

#include <set>
#include <string>
#include <vector>

namespace canbdi {

using Beliefs = std::set<Literal>;

struct SemanticsOptions {
    // Failure recovery without requiring the backup to step (the earlier published variant).
    bool wait_free_try = false;
};

bool entails(const Beliefs& b, const Formula& phi);
Beliefs revise(const Beliefs& b, const std::set<Literal>& add, const std::set<Literal>& del);

struct IntentionStep {
    std::string rule;                // outermost derivation rule
    std::vector<std::string> chain;  // outermost first
    Beliefs before_beliefs, after_beliefs;
    Body before, after;
};

std::vector<IntentionStep> intention_successors(const Beliefs& b, const Body& p, const std::vector<Plan>& plans,
                                                const SemanticsOptions& o = {});
bool is_blocked(const Beliefs& b, const Body& p, const std::vector<Plan>& plans, const SemanticsOptions& o = {});

struct AgentStep {
    std::string rule; // A_event | A_step | A_update
    std::string detail; // intention-level rule chain for A_step
    int intention = 0;
    AgentConfig after;
};

std::vector<AgentStep> agent_successors(const AgentConfig& cfg, const SemanticsOptions& o = {});

struct ReachEdge {
    int src, dst;
    std::string rule;
};

struct Reachable {
    std::vector<AgentConfig> configs; // index 0 is the initial config
    std::vector<int> depth;
    std::vector<char> expanded;
    std::vector<ReachEdge> edges;     // unique (src, dst, rule)
    bool bound_hit = false;           // frontier left unexpanded at the depth bound
    bool closed() const { return !bound_hit; }
    std::vector<int> terminals() const; // configs without successors (expanded only)
};

// depth < 0 means unbounded.
Reachable reachable_configs(const AgentConfig& cfg, int depth, const SemanticsOptions& o = {}, int jobs = 1,
                            std::size_t max_states = 1000000);

std::string format_step(const IntentionStep& s);
std::string format_agent_step(const AgentConfig& before, const AgentStep& s);

} // namespace canbdi
