#include "common.hpp"

#include <doctest.h>

#include <random>

using namespace canbdi;
using testutil::agent_text;
using testutil::model;

namespace {

Literal L(const std::string& a, bool neg = false) { return {a, neg}; }
Beliefs travel_beliefs() { return {L("b1"), L("b2"), L("b6"), L("b7")}; }

// Every rule name seen in any derivation chain over the example and generated agents.
std::set<std::string> g_rules_seen;

void record(const std::vector<IntentionStep>& steps)
{
    for (auto& s : steps)
        g_rules_seen.insert(s.chain.begin(), s.chain.end());
}

} // namespace

TEST_CASE("entailment of conjunctions")
{
    CHECK(entails(travel_beliefs(), Formula::conj({L("b1"), L("b2")})));
    CHECK(entails({}, Formula::truth()));
    CHECK_FALSE(entails(travel_beliefs(), Formula::conj({L("b3")})));
    CHECK_FALSE(entails(travel_beliefs(), Formula::falsity()));
}

TEST_CASE("entailment is monotone in the belief base")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Beliefs b, b2;
        std::vector<Literal> phi;
        for (int a = 0; a < 5; ++a) {
            Literal l = L("a" + std::to_string(a), rng() % 3 == 0);
            if (rng() % 2)
                b.insert(l);
            if (rng() % 3 == 0)
                phi.push_back(l);
        }
        b2 = b;
        for (int a = 0; a < 5; ++a)
            if (rng() % 2)
                b2.insert(L("a" + std::to_string(a), rng() % 2));
        Formula f = phi.empty() ? Formula::truth() : Formula::conj(phi);
        if (entails(b, f))
            CHECK(entails(b2, f));
    }
}

TEST_CASE("belief revision")
{
    AgentConfig c = model("travel");
    const ActionSpec& act3 = c.actions.at("act3");
    Beliefs r = revise(travel_beliefs(), act3.add, act3.del);
    CHECK(r == Beliefs{L("b1"), L("b2"), L("b6"), L("b7"), L("b8")});

    Beliefs pre = travel_beliefs();
    pre.insert(L("b8"));
    pre.insert(L("b10"));
    const ActionSpec& act6 = c.actions.at("act6");
    Beliefs r6 = revise(pre, act6.add, act6.del);
    CHECK(r6.count(L("b9")));
    CHECK_FALSE(r6.count(L("b8")));
    CHECK_FALSE(r6.count(L("b10")));

    CHECK(revise(travel_beliefs(), {}, {}) == travel_beliefs());
}

TEST_CASE("an event expands to its relevant plans in library order")
{
    AgentConfig c = model("travel");
    auto steps = intention_successors(travel_beliefs(), mk_event("e1"), c.plans);
    record(steps);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].rule == "event");
    const Body& ps = steps[0].after;
    REQUIRE(ps->kind == PlanBody::Kind::PlanSet);
    REQUIRE(ps->plans.size() == 2);
    CHECK(ps->plans[0].id == "Pl1");
    CHECK(ps->plans[1].id == "Pl2");
}

TEST_CASE("selection offers every applicable plan and removes it from the backups")
{
    AgentConfig c = model("travel");
    Body ps = intention_successors(travel_beliefs(), mk_event("e1"), c.plans)[0].after;
    auto steps = intention_successors(travel_beliefs(), ps, c.plans);
    record(steps);
    REQUIRE(steps.size() == 2);
    for (auto& s : steps) {
        CHECK(s.rule == "select");
        REQUIRE(s.after->kind == PlanBody::Kind::Try);
        REQUIRE(s.after->right->kind == PlanBody::Kind::PlanSet);
        CHECK(s.after->right->plans.size() == ps->plans.size() - 1);
    }
    CHECK(body_equal(steps[0].after->left, c.plans[0].body));
}

TEST_CASE("finished try and goal initialisation")
{
    AgentConfig c = model("travel");
    auto t = intention_successors({}, mk_try(mk_nil(), mk_event("e1")), c.plans);
    record(t);
    REQUIRE(t.size() == 1);
    CHECK(t[0].rule == "tri_top");
    CHECK(t[0].after->kind == PlanBody::Kind::Nil);

    Formula s = Formula::conj({L("done")}), f = Formula::conj({L("broken")});
    Body inner = mk_act(c.actions.at("act3"));
    auto g = intention_successors({}, mk_goal(s, inner, f), c.plans);
    record(g);
    REQUIRE(g.size() == 1);
    CHECK(g[0].rule == "Ginit");
    CHECK(body_equal(g[0].after, mk_goal(s, mk_try(inner, inner), f)));
}

TEST_CASE("goal restart duplicates the stored backup")
{
    AgentConfig c = model("travel");
    Formula s = Formula::conj({L("done")}), f = Formula::conj({L("broken")});
    Body blocked = mk_act(c.actions.at("act1"));
    Body backup = mk_act(c.actions.at("act3"));
    auto g = intention_successors(travel_beliefs(), mk_goal(s, mk_try(blocked, backup), f), c.plans);
    record(g);
    REQUIRE(g.size() == 1);
    CHECK(g[0].rule == "Gtri");
    const Body& p = g[0].after;
    REQUIRE(p->kind == PlanBody::Kind::Goal);
    REQUIRE(p->left->kind == PlanBody::Kind::Try);
    CHECK(body_equal(p->left->left, p->left->right));
    CHECK(body_equal(p->left->left, backup));
}

TEST_CASE("blocked programs")
{
    AgentConfig c = model("travel");
    CHECK(is_blocked(travel_beliefs(), mk_act(c.actions.at("act1")), c.plans));
    CHECK(is_blocked(travel_beliefs(), mk_nil(), c.plans));
    CHECK_FALSE(is_blocked(travel_beliefs(), mk_act(c.actions.at("act3")), c.plans));
}

TEST_CASE("agent level steps")
{
    AgentConfig c = model("travel");
    auto s = agent_successors(c);
    REQUIRE(s.size() == 1);
    CHECK(s[0].rule == "A_event");
    CHECK(s[0].after.events.empty());
    CHECK(s[0].after.intentions.size() == 1);

    AgentConfig n = agent_text("");
    n.intentions.push_back({1, mk_nil()});
    auto u = agent_successors(n);
    REQUIRE(u.size() == 1);
    CHECK(u[0].rule == "A_update");
    CHECK(u[0].after.intentions.empty());

    AgentConfig sensing = model("sensing");
    auto adopt = agent_successors(sensing);
    REQUIRE(adopt.size() == 1);
    CHECK(agent_successors(adopt[0].after).size() == 1);
}

TEST_CASE("conference travel reachability")
{
    auto r = reachable_configs(model("travel"), -1);
    CHECK(r.closed());
    bool b5_terminal = false;
    for (int t : r.terminals())
        b5_terminal |= r.configs[std::size_t(t)].beliefs.count(L("b5")) > 0;
    CHECK(b5_terminal);
    for (auto& cfg : r.configs)
        CHECK_FALSE(cfg.beliefs.count(L("b4")));

    auto empty = reachable_configs(agent_text(""), -1);
    CHECK(empty.configs.size() == 1);
    CHECK(empty.edges.empty());
}

TEST_CASE("blocked exactly when there are no successors, with rule coverage")
{
    std::vector<AgentConfig> corpus;
    for (auto name : {"travel", "patrol", "sensing", "retrieval"})
        corpus.push_back(model(name));
    for (std::uint64_t seed = 1; seed <= 60; ++seed)
        corpus.push_back(random_agent(seed));
    std::size_t checked = 0;
    for (auto& a : corpus) {
        auto r = reachable_configs(a, 8);
        for (auto& cfg : r.configs)
            for (auto& in : cfg.intentions) {
                auto steps = intention_successors(cfg.beliefs, in.body, cfg.plans);
                record(steps);
                CHECK(is_blocked(cfg.beliefs, in.body, cfg.plans) == steps.empty());
                for (auto& s : steps) {
                    // Premise re-check on the outermost and innermost rule.
                    const std::string& leaf = s.chain.back();
                    bool primitive = leaf == "act" || leaf == "addb" || leaf == "delb";
                    if (!primitive)
                        CHECK(s.before_beliefs == s.after_beliefs);
                    if (s.rule == "select")
                        CHECK(in.body->kind == PlanBody::Kind::PlanSet);
                    if (s.rule == "tri_top" || s.rule == "seq_top")
                        CHECK(in.body->left->kind == PlanBody::Kind::Nil);
                    if (s.rule == "par_top")
                        CHECK((in.body->left->kind == PlanBody::Kind::Nil &&
                               in.body->right->kind == PlanBody::Kind::Nil));
                    if (s.rule == "tri_bot" || s.rule == "Gtri")
                        CHECK(is_blocked(cfg.beliefs, s.rule == "Gtri" ? in.body->left->left : in.body->left,
                                         cfg.plans));
                    if (s.rule == "Gs")
                        CHECK(entails(cfg.beliefs, in.body->succ));
                    if (s.rule == "Gf")
                        CHECK(entails(cfg.beliefs, in.body->fail));
                }
                ++checked;
            }
    }
    CHECK(checked > 100);
    for (auto rule : {"act", "query", "addb", "delb", "event", "select", "tri_seq", "tri_top", "tri_bot", "seq",
                      "seq_top", "par1", "par2", "par_top", "Gs", "Gf", "Ginit", "Gseq", "Gtri"}) {
        CAPTURE(rule);
        CHECK(g_rules_seen.count(rule) == 1);
    }
}
