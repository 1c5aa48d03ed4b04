#pragma once

#include "canbdi/ts.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace canbdi {

struct PropertyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StatePattern {
    enum class Kind { Atomic, Not, And, Or };
    std::string name;
    Kind kind = Kind::Atomic;
    Pattern pattern;                   // Atomic
    std::vector<StatePattern> operands; // Not (one), And/Or (two or more)
};

// Atomic: the pattern occurs anywhere in the state; combinators applied on top.
bool pattern_holds(const StatePattern& p, const NodeP& state);

struct Ctl;
using CtlP = std::shared_ptr<const Ctl>;
struct Ctl {
    enum class Op { True, False, Atom, Not, And, Or, Implies, EX, AX, EF, AF, EG, AG, EU, AU, EFX, AFX };
    Op op = Op::True;
    std::string atom;
    std::vector<CtlP> kids;
};

// State operators: ! & | -> EX AX EF AF EG AG E[f U g] A[f U g].
// Bracketed path sugar: A[G F f] = AG AF f, E[F f], A[F(f & X g)], E[F(f & X g)], A[X f], ...
CtlP parse_ctl(const std::string& text);
std::string print_ctl(const CtlP& f);
void ctl_atoms(const CtlP& f, std::vector<std::string>& out);

struct NamedFormula {
    std::string name;
    std::string text;
    CtlP formula;
};

struct PropertySet {
    std::vector<StatePattern> patterns; // declaration order
    std::vector<NamedFormula> formulas;
    const StatePattern* find(const std::string& name) const;
};

// Lines: `pattern NAME = <term pattern>`, `let NAME = <boolean expression over names>`,
// `check NAME = <ctl>`. `#` starts a comment. Unknown names are errors.
PropertySet parse_properties(const std::string& text);

struct LabelledTS {
    const TransitionSystem* ts = nullptr;
    std::vector<std::string> names;           // one per pattern
    std::vector<std::vector<char>> holds;     // holds[pattern][state]
    const std::vector<char>& of(const std::string& name) const;
    std::vector<std::vector<std::string>> state_labels() const;
};

LabelledTS label_states(const TransitionSystem& ts, const std::vector<StatePattern>& patterns, int jobs = 1);

struct Verdict {
    std::string name;
    std::string formula;
    TSMode mode = TSMode::Full;
    bool holds = false;
    std::vector<int> path;   // witness if holds, counterexample otherwise; empty if none applies
    std::string path_kind;   // "witness", "counterexample" or "none"
    std::vector<char> sat;   // satisfying states
};

// Terminal states are treated as having a self-loop, matching the DTMC export.
std::vector<char> sat_states(const LabelledTS& lts, const CtlP& f);
Verdict check_ctl(const LabelledTS& lts, const CtlP& f, const std::string& name = {});
// Throws PropertyError when the verdicts were computed in different modes.
bool same_verdict(const Verdict& a, const Verdict& b);

std::string verdict_json(const Verdict& v);

} // namespace canbdi
