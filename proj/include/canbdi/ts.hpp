#pragma once

#include "canbdi/engine.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace canbdi {

// Children sorted by an id-insensitive structural hash, correlation ids renamed by
// traversal order, intention ids cleared.
NodeP canonicalize(const NodeP& t);
// Ordered structural equality (for canonical terms).
bool exact_equal(const NodeP& a, const NodeP& b);
std::string canonical_key(const NodeP& t);

enum class TSMode { Full, Quotient };
std::string mode_name(TSMode m);

struct TSEdge {
    int src = 0, dst = 0;
    std::string rule;
};

struct TransitionSystem {
    TSMode mode = TSMode::Full;
    std::vector<NodeP> states;
    std::vector<TSEdge> edges;
    int initial = 0;
    bool closed = true;
    double build_ms = 0;
    std::size_t hash_collisions = 0;

    std::vector<std::vector<int>> successors() const; // distinct destinations, ascending
    std::vector<int> terminals() const;
};

struct BuildOptions {
    std::size_t budget = 100000;
    int jobs = 1;
};

std::size_t default_budget(); // environment CANBDI_BUDGET, else 100000

TransitionSystem build_full(const NodeP& initial, const Catalog& rules, const BuildOptions& o = {});
TransitionSystem quotient_agent_level(const TransitionSystem& full);

struct FullModeCheck {
    std::vector<int> stuck;        // auxiliary-bearing states without successors
    std::vector<int> unresolved;   // auxiliary-bearing states that cannot reach a resting state
    bool ok() const { return stuck.empty() && unresolved.empty(); }
};
FullModeCheck check_micro_states(const TransitionSystem& ts);

std::string export_dot(const TransitionSystem& ts);

struct DtmcFiles {
    std::string tra;
    std::string lab;
};
// labels: name -> sorted state ids. "init" and "deadlock" are always emitted first.
DtmcFiles export_dtmc(const TransitionSystem& ts, const std::vector<std::pair<std::string, std::vector<int>>>& labels = {});

std::string summary_json(const TransitionSystem& ts);

} // namespace canbdi
