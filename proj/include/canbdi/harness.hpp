#pragma once

#include "canbdi/semantics.hpp"
#include "canbdi/ts.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace canbdi {

struct BrsSuccessor {
    AgentConfig config;
    NodeP state;                     // canonical, auxiliary-free
    std::vector<std::string> path;   // rule names of one shortest micro path
};

struct BrsSuccessors {
    std::vector<BrsSuccessor> successors;
    std::vector<std::string> violations; // divergence, stuck micro-states, decode failures
    std::size_t micro_states = 0;
    std::size_t max_path = 0;
};

struct HarnessOptions {
    std::size_t max_path = 4096;        // divergence guard on micro-path length
    std::size_t max_micro_states = 200000;
};

// All auxiliary-free states reachable from t through auxiliary-bearing states.
BrsSuccessors brs_agent_successors(const NodeP& t, const Catalog& rules, const HarnessOptions& o = {});

struct CrosscheckEntry {
    int config = 0;
    std::string config_text;
    std::vector<std::string> missing;    // oracle successors the encoding cannot reach
    std::vector<std::string> extra;      // encoded successors the oracle does not have
    std::vector<std::string> violations;
};

struct CrosscheckReport {
    std::string name;
    int depth = 0;
    std::size_t configs_checked = 0;
    std::size_t oracle_edges = 0;
    std::size_t brs_edges = 0;
    std::size_t max_micro_path = 0;
    std::vector<CrosscheckEntry> discrepancies;

    std::size_t discrepancy_count() const;
    std::size_t violation_count() const;
    bool ok() const { return discrepancies.empty(); }
    std::string json() const;
    std::string summary() const;
};

CrosscheckReport crosscheck(const AgentConfig& cfg, int depth, const Catalog& rules, const HarnessOptions& o = {},
                            int jobs = 1, const std::string& name = {});

// Golden traces: numbered terms `(n) <term>` separated by rule lines `-> r1 r2 ...`.
// `group*` consumes a maximal run of rules from that catalog group.
struct GoldenStep {
    int number = 0;
    int line = 0;
    std::vector<std::string> rules_before;
    std::string text;
    NodeP term;
};

struct GoldenTrace {
    std::string agent;   // path relative to the trace file, may be empty
    std::vector<GoldenStep> steps;
};

GoldenTrace parse_golden(const std::string& text);

struct GoldenResult {
    bool ok = true;
    int failed_step = 0;
    std::string message;
    std::string expected, actual;
    std::vector<std::string> applied;
    int terms_matched = 0;
};

// Removes CheckTokens, correlation and intention ids, and Act/Plan names.
NodeP strip_for_trace(const NodeP& t);
GoldenResult golden_trace_check(const GoldenTrace& trace, const AgentConfig& cfg, const Catalog& rules);

struct GeneratorOptions {
    int max_atoms = 4;
    int max_events = 3;
    int max_plans_per_event = 3;
    int max_body_depth = 3;
};

// Seeded, validated random agent; print_agent() of the result is a replayable fixture.
AgentConfig random_agent(std::uint64_t seed, const GeneratorOptions& o = {});

} // namespace canbdi
