#pragma once

#include "canbdi/term.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace canbdi {

// Attribute slot of a pattern node: absent (wildcard in a lhs), literal, variable, or fresh id.
struct Attr {
    enum class Kind { None, Lit, Var, Fresh };
    Kind kind = Kind::None;
    std::string val;
};

struct PNode;
using PNodeP = std::shared_ptr<const PNode>;

// One entry of a pattern child list: a nested node or a site.
struct PItem {
    PNodeP node;
    int site = -1;
};

struct PNode {
    Ctrl ctrl = Ctrl::Root;
    Attr attr;               // name, signed literal or number, depending on ctrl
    std::vector<PItem> kids; // sites in a lhs list: at most one
};

// A list of regions; each region is a child list (a lhs region holds exactly one node).
struct Pattern {
    std::vector<std::vector<PItem>> regions;
    std::string text;
};

struct PatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Pattern parse_pattern(const std::string& text);
// Ground term without sites or variables.
NodeP parse_term(const std::string& text);
// Four regions separated by `||`, wrapped in Root.
NodeP parse_state(const std::string& text);

struct Binding {
    std::map<int, Nodes> sites;
    std::map<std::string, std::string> vars;
};

using Path = std::vector<int>;

struct Occurrence {
    std::vector<Path> paths; // one per region
    Binding binding;
};

struct Condition {
    int site = 0;
    PNodeP forbidden;
    std::string text;
};

struct ReactionRule {
    std::string name;
    std::string group;
    int priority = 0;
    Pattern lhs;
    Pattern rhs;
    std::vector<Condition> conds;
};

ReactionRule make_rule(std::string name, std::string group, int priority, const std::string& lhs,
                       const std::string& rhs, const std::vector<std::pair<int, std::string>>& conds = {});

// Occurrences of a single pattern node anywhere in t, deduplicated over equal siblings.
std::vector<std::pair<Path, Binding>> match_anywhere(const PNode& p, const NodeP& t, const Binding& seed = {});
// All occurrences of a lhs, conditions not filtered.
std::vector<Occurrence> find_matches(const Pattern& lhs, const NodeP& t);
bool conditions_hold(const ReactionRule& r, const Occurrence& o);
bool pattern_occurs(const Pattern& p, const NodeP& t);

struct ApplyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
NodeP apply_at(const ReactionRule& r, const NodeP& t, const Occurrence& o);

const NodeP& node_at(const NodeP& t, const Path& p);

using Catalog = std::vector<ReactionRule>;

struct Enabled {
    const ReactionRule* rule;
    Occurrence occ;
};
// Pairs from the highest priority class that has any enabled rule.
std::vector<Enabled> enabled_reactions(const Catalog& rules, const NodeP& t);

// The complete rule catalog. Names in `drop` are omitted (mutation testing).
Catalog can_ruleset(const std::set<std::string>& drop = {});
std::string catalog_report(const Catalog& c);
bool in_catalog(const Catalog& c, const std::string& name);

} // namespace canbdi
