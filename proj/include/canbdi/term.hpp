#pragma once

#include "canbdi/syntax.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace canbdi {

enum class Ctrl : std::uint8_t {
    Root,
    Beliefs, B, False,
    Desires, E,
    Intentions, Intent,
    Plans, PlanSet, Plan, PB,
    Act, Pre, Add, Del,
    Seq, Try, Cons, Conc, L, R,
    Goal, SC, FC,
    Check, CheckRes, T, F, CheckToken, Reduce, ReduceF,
};
constexpr int kCtrlCount = int(Ctrl::ReduceF) + 1;

std::string_view ctrl_name(Ctrl c);
bool ctrl_from_name(std::string_view s, Ctrl& out);
bool is_atomic(Ctrl c);
bool is_auxiliary(Ctrl c); // Check, CheckRes, CheckToken, Reduce, ReduceF
bool has_name_attr(Ctrl c); // B, E, PlanSet, Act, Plan
bool has_num_attr(Ctrl c);  // Intent, Check, CheckRes

struct Node;
using NodeP = std::shared_ptr<const Node>;
using Nodes = std::vector<NodeP>;

// Immutable tree node. `hash` ignores intention ids and child order.
struct Node {
    Ctrl ctrl = Ctrl::Root;
    bool neg = false;   // B polarity
    int num = 0;        // intention id or correlation id (0 = unlinked)
    std::string name;   // atom, event, action or plan id
    Nodes kids;
    std::uint64_t hash = 0;

    static NodeP make(Ctrl c, Nodes kids = {}, std::string name = {}, int num = 0, bool neg = false);
    NodeP with_kids(Nodes k) const;
};

std::uint64_t mix64(std::uint64_t x);
// Equality with multiset children, ignoring intention ids.
bool term_equal(const NodeP& a, const NodeP& b);
int count_nodes(const NodeP& t);
bool contains_ctrl(const NodeP& t, Ctrl c);
int max_num(const NodeP& t, Ctrl c);

struct PrintOptions {
    bool hide_tokens = false;
    bool hide_ids = false;   // intention and correlation ids
    bool hide_names = false; // Act and Plan labels
};
// Algebraic notation, e.g. Act{act1}.(Pre.B(b3) | Add.B(b4) | Del.1)
std::string print_term(const NodeP& t, const PrintOptions& o = {});
std::string print_nodes(const Nodes& ns, const PrintOptions& o = {});

// Encoding of agent syntax.
Nodes encode_formula(const Formula& f);
Nodes encode_program(const Body& p, bool tokens = false);
NodeP encode_plan(const std::string& id, const Formula& ctx, const Body& body, bool tokens = false);
// Root.(Beliefs | Desires | Intentions | Plans). `tokens` seeds CheckTokens on every plan,
// including plan sets held by intentions.
NodeP encode_config(const AgentConfig& cfg, bool tokens = false);
NodeP seed_check_tokens(const NodeP& root);

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// strict: reject CheckToken too. Otherwise tokens are ignored.
AgentConfig decode_config(const NodeP& root, bool strict = true);
Body decode_program(const Nodes& ns, bool strict = true);

// Check/CheckRes/Reduce/ReduceF present, or a pending Add/Del in Beliefs (CheckTokens are resting state).
bool has_transient(const NodeP& t);

struct LintIssue {
    std::string path;
    std::string message;
};
std::vector<LintIssue> lint_term(const NodeP& root);

} // namespace canbdi
