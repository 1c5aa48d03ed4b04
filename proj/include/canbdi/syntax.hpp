#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace canbdi {

struct Literal {
    std::string atom;
    bool negative = false;

    auto operator<=>(const Literal&) const = default;
    std::string str() const { return negative ? "~" + atom : atom; }
};

struct Formula {
    enum class Kind { True, False, Conj };
    Kind kind = Kind::True;
    std::vector<Literal> lits; // sorted, duplicate-free, non-empty iff Conj

    static Formula truth() { return {}; }
    static Formula falsity() { return {Kind::False, {}}; }
    static Formula conj(std::vector<Literal> ls);

    bool operator==(const Formula&) const = default;
    std::string str() const;
};

struct ActionSpec {
    std::string name;
    Formula pre;
    std::set<Literal> add;
    std::set<Literal> del;

    bool operator==(const ActionSpec&) const = default;
};

struct PlanBody;
using Body = std::shared_ptr<const PlanBody>;

struct PlanEntry {
    std::string id;
    Formula context;
    Body body;
};

struct PlanBody {
    enum class Kind { Nil, Act, Event, Seq, Conc, Goal, Try, PlanSet };
    Kind kind = Kind::Nil;
    ActionSpec act;            // Act
    std::string event;         // Event, PlanSet
    Body left, right;          // Seq, Conc, Try; Goal uses left
    Formula succ, fail;        // Goal
    std::vector<PlanEntry> plans; // PlanSet (Delta, library order)
};

Body mk_nil();
Body mk_act(ActionSpec a);
Body mk_event(std::string e);
Body mk_seq(Body a, Body b);
Body mk_conc(Body a, Body b);
Body mk_goal(Formula s, Body p, Formula f);
Body mk_try(Body a, Body b);
Body mk_planset(std::string e, std::vector<PlanEntry> delta);

bool body_equal(const Body& a, const Body& b);
// Order-insensitive in Delta; used for keys and equality.
std::string body_key(const Body& b);
bool is_user_body(const Body& b);

struct Plan {
    std::string id;
    std::string trigger;
    Formula context;
    Body body;
};

struct Intention {
    int id = 0;
    Body body;
};

struct AgentConfig {
    std::vector<std::string> events;   // E^e, multiset
    std::set<Literal> beliefs;         // B
    std::vector<Intention> intentions; // Gamma
    std::vector<Plan> plans;           // Pi, library order
    std::map<std::string, ActionSpec> actions; // declared actions (symbol table)

    // Interning tables, rebuilt by intern().
    std::vector<std::string> atom_table;
    std::vector<std::string> event_table;

    void intern();
    int atom_index(const std::string& a) const; // 1-based, 0 if unknown
    int next_intention_id() const;
};

// Structural equality modulo intention ids, event order, and plan order.
std::string config_key(const AgentConfig& c);
bool config_equal(const AgentConfig& a, const AgentConfig& b);

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    int line = 0, col = 0;
    std::string message;
    std::string str(const std::string& file) const;
};

struct ParseResult {
    std::optional<AgentConfig> config;
    std::vector<Diagnostic> diags;
    bool ok() const { return config.has_value(); }
};

ParseResult parse_agent(const std::string& text);
std::vector<Diagnostic> validate_agent(const AgentConfig& cfg);

enum class BasicOp { Query, Add, Del };
ActionSpec desugar_basic(BasicOp op, const Formula& phi);
ActionSpec desugar_basic(BasicOp op, const Literal& b);

std::string print_agent(const AgentConfig& cfg);
std::string print_body(const Body& b);
std::string print_formula(const Formula& f);

} // namespace canbdi
