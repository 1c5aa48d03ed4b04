#include "common.hpp"

#include <doctest.h>

#include <random>

using namespace canbdi;
using testutil::agent_text;
using testutil::model;

namespace {

const Catalog& rules()
{
    static const Catalog c = can_ruleset();
    return c;
}

// Children still pending inside Check/Add/Del entities of the belief region.
int set_ops_measure(const NodeP& root)
{
    int m = 0;
    for (auto& r : root->kids)
        if (r->ctrl == Ctrl::Beliefs)
            for (auto& k : r->kids)
                if (k->ctrl == Ctrl::Check || k->ctrl == Ctrl::Add || k->ctrl == Ctrl::Del)
                    m += 1 + int(k->kids.size());
    return m;
}

} // namespace

TEST_CASE("matching intentions and links")
{
    NodeP t = parse_state("Beliefs.1 || Desires.E{e1} || Intentions.(Intent{1}.E{e1} | Intent{2}.E{e2}) || Plans.1");
    CHECK(find_matches(parse_pattern("Intent.$0"), t).size() == 2);
    CHECK(find_matches(parse_pattern("Goal.$0"), t).empty());

    auto m = find_matches(parse_pattern("Desires.E{?x}"), t);
    REQUIRE(m.size() == 1);
    CHECK(m[0].binding.vars.at("x") == "e1");
}

TEST_CASE("site duplication and context-restricted matching")
{
    ReactionRule copy = make_rule("copy", "test", 1, "Try.($0 | Cons.$1)", "Try.($0 | Cons.$1 | Cons.$1)");
    NodeP t = parse_term("Intent.Seq.(Try.(E{a} | Cons.E{b}) | Cons.E{c})");
    auto occ = find_matches(copy.lhs, t);
    REQUIRE(occ.size() == 1);
    NodeP r = apply_at(copy, t, occ[0]);
    CHECK(term_equal(r, parse_term("Intent.Seq.(Try.(E{a} | Cons.E{b} | Cons.E{b}) | Cons.E{c})")));

    ReactionRule id = make_rule("id", "test", 1, "Cons.$0", "Cons.$0");
    for (auto& o : find_matches(id.lhs, t))
        CHECK(term_equal(apply_at(id, t, o), t));
}

TEST_CASE("the failed branch of a try is deleted")
{
    const ReactionRule* tf = nullptr;
    for (auto& r : rules())
        if (r.name == "try_failure")
            tf = &r;
    REQUIRE(tf);
    NodeP t = parse_term("Intent.Try.(ReduceF | Cons.PlanSet{e1}.1)");
    auto occ = find_matches(tf->lhs, t);
    REQUIRE(occ.size() == 1);
    CHECK(term_equal(apply_at(*tf, t, occ[0]), parse_term("Intent.Reduce.PlanSet{e1}.1")));
}

TEST_CASE("priority classes")
{
    NodeP pending = parse_state("Beliefs.(B(b1) | Check{1}.B(b1)) || Desires.E{e9} || "
                                "Intentions.Intent{1}.Reduce.Act.(CheckRes{1} | Pre.B(b1) | Add.1 | Del.1) || Plans.1");
    auto en = enabled_reactions(rules(), pending);
    REQUIRE_FALSE(en.empty());
    for (auto& e : en)
        CHECK(e.rule->group == "set_ops");

    AgentConfig one = agent_text("events: e1\nplan P: e1 : true <- +b\n");
    auto q = enabled_reactions(rules(), encode_config(one, true));
    REQUIRE(q.size() == 1);
    CHECK(q[0].rule->name == "A_event");

    CHECK(enabled_reactions(rules(), encode_config(AgentConfig{}, true)).empty());
}

TEST_CASE("catalog contents")
{
    std::set<std::string> names;
    int set_ops_prio = -1, others_max = -1;
    for (auto& r : rules()) {
        names.insert(r.name);
        if (r.group == "set_ops")
            set_ops_prio = r.priority;
        else
            others_max = std::max(others_max, r.priority);
    }
    CHECK(names.size() == rules().size());
    CHECK(rules().size() == 42);
    CHECK(set_ops_prio > others_max);
    for (auto n : {"intention_step", "reduce_event", "select_plan_check", "check_T", "check_end", "check_F",
                   "select_plan_T", "try_seq", "reduce_seq", "act_check", "act_F", "seq_fail", "try_failure"})
        CHECK(names.count(n) == 1);
    CHECK_FALSE(in_catalog(can_ruleset({"try_failure"}), "try_failure"));
}

TEST_CASE("random reaction walks: linter, set_ops termination, determinism")
{
    std::vector<AgentConfig> corpus{model("travel"), model("patrol"), model("sensing"), model("retrieval")};
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        corpus.push_back(random_agent(seed));
    std::mt19937_64 rng(3);
    std::size_t applications = 0, set_ops = 0;
    for (auto& a : corpus) {
        for (int walk = 0; walk < 5; ++walk) {
            NodeP t = encode_config(a, true);
            for (int step = 0; step < 400; ++step) {
                auto en = enabled_reactions(rules(), t);
                if (en.empty())
                    break;
                auto& pick = en[rng() % en.size()];
                NodeP next = apply_at(*pick.rule, t, pick.occ);
                NodeP again = apply_at(*pick.rule, t, pick.occ);
                CHECK(canonical_key(next) == canonical_key(again));
                auto issues = lint_term(next);
                if (!issues.empty()) {
                    CAPTURE(pick.rule->name);
                    CAPTURE(issues[0].path + ": " + issues[0].message);
                    CHECK(issues.empty());
                }
                if (pick.rule->group == "set_ops") {
                    CHECK(set_ops_measure(next) < set_ops_measure(t));
                    ++set_ops;
                }
                t = next;
                ++applications;
            }
        }
    }
    CHECK(applications > 1000);
    CHECK(set_ops > 100);
}
