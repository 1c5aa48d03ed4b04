#include "common.hpp"

#include <doctest.h>

#include <functional>

using namespace canbdi;
using testutil::agent_text;
using testutil::has_error;
using testutil::model;

TEST_CASE("conference travel agent parses with the expected shape")
{
    AgentConfig c = model("travel");
    CHECK(c.beliefs.size() == 4);
    CHECK(c.plans.size() == 3);
    REQUIRE(c.events.size() == 1);
    CHECK(c.events[0] == "e1");
    CHECK(c.actions.size() == 6);
    CHECK(c.intentions.empty());
}

TEST_CASE("empty beliefs, one event, no plans")
{
    AgentConfig c = agent_text("events: e1\n");
    CHECK(c.beliefs.empty());
    CHECK(c.plans.empty());
    CHECK(c.events == std::vector<std::string>{"e1"});
}

TEST_CASE("sequences are right-nested")
{
    AgentConfig c = model("travel");
    const Body& b = c.plans[1].body; // act3; e2; act4
    REQUIRE(b->kind == PlanBody::Kind::Seq);
    CHECK(b->left->kind == PlanBody::Kind::Act);
    CHECK(b->left->act.name == "act3");
    REQUIRE(b->right->kind == PlanBody::Kind::Seq);
    CHECK(b->right->left->kind == PlanBody::Kind::Event);
    CHECK(b->right->left->event == "e2");
    CHECK(b->right->right->kind == PlanBody::Kind::Act);
    CHECK(b->right->right->act.name == "act4");

    Body hand = mk_seq(mk_act(c.actions.at("act3")), mk_seq(mk_event("e2"), mk_act(c.actions.at("act4"))));
    CHECK(body_equal(b, hand));
}

TEST_CASE("validation accepts the four example agents")
{
    for (auto name : {"travel", "patrol", "sensing", "retrieval"}) {
        CAPTURE(name);
        CHECK_FALSE(has_error(validate_agent(model(name))));
    }
}

TEST_CASE("self-recursive plan is an error")
{
    auto pr = parse_agent("events: e1\nplan P: e1 : true <- e1\n");
    REQUIRE(pr.ok());
    auto ds = validate_agent(*pr.config);
    REQUIRE(has_error(ds));
    bool mentions = false;
    for (auto& d : ds)
        mentions |= d.message.find("recursive plans") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("posting an event without plans is a warning")
{
    auto pr = parse_agent("events: e1\nplan P: e1 : true <- e9\n");
    REQUIRE(pr.ok());
    auto ds = validate_agent(*pr.config);
    CHECK_FALSE(has_error(ds));
    bool warned = false;
    for (auto& d : ds)
        warned |= d.severity == Diagnostic::Severity::Warning && d.message.find("e9") != std::string::npos;
    CHECK(warned);
}

TEST_CASE("garbage is rejected with a located diagnostic")
{
    auto pr = parse_agent("beliefs: b1 %%\n");
    CHECK_FALSE(pr.ok());
    REQUIRE_FALSE(pr.diags.empty());
    CHECK(pr.diags[0].line == 1);
}

TEST_CASE("basic belief operations desugar to actions")
{
    Literal b3{"b3", false}, b4{"b4", false};
    ActionSpec q = desugar_basic(BasicOp::Query, Formula::conj({b3}));
    CHECK(q.pre == Formula::conj({b3}));
    CHECK(q.add.empty());
    CHECK(q.del.empty());

    ActionSpec a = desugar_basic(BasicOp::Add, b4);
    CHECK(a.pre == Formula::truth());
    CHECK(a.add == std::set<Literal>{b4});
    CHECK(a.del.empty());

    ActionSpec d = desugar_basic(BasicOp::Del, b4);
    CHECK(d.pre == Formula::truth());
    CHECK(d.add.empty());
    CHECK(d.del == std::set<Literal>{b4});
}

TEST_CASE("interning lists every event exactly once")
{
    for (auto name : {"travel", "patrol", "sensing", "retrieval"}) {
        AgentConfig c = model(name);
        c.intern();
        std::set<std::string> uniq(c.event_table.begin(), c.event_table.end());
        CHECK(uniq.size() == c.event_table.size());
        std::function<void(const Body&)> walk = [&](const Body& b) {
            if (!b)
                return;
            if (b->kind == PlanBody::Kind::Event)
                CHECK(uniq.count(b->event) == 1);
            walk(b->left);
            walk(b->right);
        };
        for (auto& p : c.plans) {
            CHECK(uniq.count(p.trigger) == 1);
            walk(p.body);
        }
        for (auto& e : c.events)
            CHECK(uniq.count(e) == 1);
    }
}

TEST_CASE("parse after print is the identity on example and generated agents")
{
    for (auto name : {"travel", "travel_adopted", "patrol", "sensing", "retrieval"}) {
        AgentConfig c = model(name);
        AgentConfig back = agent_text(print_agent(c));
        CHECK(config_equal(c, back));
        CHECK(print_agent(back) == print_agent(c));
    }
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        AgentConfig c = random_agent(seed);
        AgentConfig back = agent_text(print_agent(c));
        CAPTURE(seed);
        CHECK(config_equal(c, back));
    }
}

TEST_CASE("parse after print preserves in-flight intentions")
{
    std::vector<AgentConfig> corpus{model("travel"), model("patrol"), model("sensing"), model("retrieval")};
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
        corpus.push_back(random_agent(seed));
    std::size_t n = 0;
    for (auto& a : corpus)
        for (auto& cfg : reachable_configs(a, 6).configs) {
            AgentConfig back = agent_text(print_agent(cfg));
            CHECK(config_equal(cfg, back));
            ++n;
        }
    CHECK(n > 200);
}
