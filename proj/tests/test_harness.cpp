#include "common.hpp"

#include <doctest.h>

#include <functional>

using namespace canbdi;
using testutil::agent_text;
using testutil::model;
using testutil::model_path;
using testutil::slurp;

namespace {

const Catalog& rules()
{
    static const Catalog c = can_ruleset();
    return c;
}

int body_depth(const Body& b)
{
    if (!b)
        return 0;
    switch (b->kind) {
    case PlanBody::Kind::Seq:
    case PlanBody::Kind::Conc:
    case PlanBody::Kind::Try: return 1 + std::max(body_depth(b->left), body_depth(b->right));
    case PlanBody::Kind::Goal: return 1 + body_depth(b->left);
    default: return 1;
    }
}

bool has_conc(const Body& b)
{
    if (!b)
        return false;
    if (b->kind == PlanBody::Kind::Conc)
        return true;
    if (has_conc(b->left) || has_conc(b->right))
        return true;
    for (auto& e : b->plans)
        if (has_conc(e.body))
            return true;
    return false;
}

} // namespace

TEST_CASE("encoded successors of an adopted event")
{
    AgentConfig c = model("travel");
    c.events.clear();
    c.intentions.push_back({1, mk_event("e1")});
    auto r = brs_agent_successors(encode_config(c, true), rules());
    CHECK(r.violations.empty());
    REQUIRE(r.successors.size() == 1);
    CHECK(r.successors[0].path == std::vector<std::string>{"intention_step", "reduce_event"});
    const AgentConfig& next = r.successors[0].config;
    REQUIRE(next.intentions.size() == 1);
    CHECK(next.intentions[0].body->kind == PlanBody::Kind::PlanSet);
    CHECK(next.intentions[0].body->plans.size() == 2);
}

TEST_CASE("a finished intention is removed")
{
    AgentConfig c = agent_text("");
    c.intentions.push_back({1, mk_nil()});
    auto r = brs_agent_successors(encode_config(c, true), rules());
    REQUIRE(r.successors.size() == 1);
    CHECK(r.successors[0].path == std::vector<std::string>{"intention_step", "intention_done_succ"});
    CHECK(r.successors[0].config.intentions.empty());

    CHECK(brs_agent_successors(encode_config(AgentConfig{}, true), rules()).successors.empty());
}

TEST_CASE("crosscheck of the example agents")
{
    for (auto name : {"travel", "travel_adopted", "patrol", "retrieval", "sensing"}) {
        CrosscheckReport r = crosscheck(model(name), 6, rules(), {}, 2, name);
        CAPTURE(r.summary());
        CHECK(r.ok());
        CHECK(r.configs_checked > 1);
    }
}

TEST_CASE("removing try_failure is detected")
{
    CrosscheckReport r = crosscheck(model("travel"), 6, can_ruleset({"try_failure"}));
    CHECK_FALSE(r.ok());
    std::size_t missing = 0;
    for (auto& d : r.discrepancies)
        missing += d.missing.size();
    CHECK(missing >= 1);
}

TEST_CASE("deeper sensing differs only by early failure of concurrent branches")
{
    // The encoding fails a concurrent composition as soon as one branch fails; the reference
    // semantics keeps stepping the other branch. Only extra encoded successors may appear.
    AgentConfig a = model("sensing");
    CrosscheckReport r = crosscheck(a, 8, rules(), {}, 2);
    Reachable reach = reachable_configs(a, 8, {}, 2);
    for (auto& d : r.discrepancies) {
        CHECK(d.missing.empty());
        CHECK(d.violations.empty());
        bool conc = false;
        for (auto& in : reach.configs[std::size_t(d.config)].intentions)
            conc |= has_conc(in.body);
        CHECK(conc);
    }
}

TEST_CASE("micro paths stay within the budget")
{
    for (auto name : {"travel", "patrol", "sensing", "retrieval"}) {
        CrosscheckReport r = crosscheck(model(name), 6, rules());
        CHECK(r.violation_count() == 0);
        CHECK(r.max_micro_path <= HarnessOptions{}.max_path);
    }
    HarnessOptions tight;
    tight.max_path = 1;
    AgentConfig c = model("travel");
    c.events.clear();
    c.intentions.push_back({1, mk_event("e1")});
    auto r = brs_agent_successors(encode_config(c, true), rules(), tight);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("golden trace of the conference travel agent")
{
    std::string text = slurp(model_path("golden/travel_recovery.trace"));
    GoldenTrace g = parse_golden(text);
    CHECK(g.steps.size() == 16);
    GoldenResult r = golden_trace_check(g, model("travel_adopted"), rules());
    CAPTURE(r.message);
    CHECK(r.ok);
    CHECK(r.terms_matched == 16);

    // Step 12 with a successful check contradicts the beliefs (b3 is not believed).
    std::string bad = text;
    auto at = bad.find("(12) ");
    REQUIRE(at != std::string::npos);
    auto f = bad.find("CheckRes.F", at);
    REQUIRE(f != std::string::npos);
    bad.replace(f, 10, "CheckRes.T");
    GoldenResult rb = golden_trace_check(parse_golden(bad), model("travel_adopted"), rules());
    CHECK_FALSE(rb.ok);
    CHECK(rb.failed_step == 12);

    CHECK(golden_trace_check(parse_golden(""), AgentConfig{}, rules()).ok);
}

TEST_CASE("golden trace syntax errors")
{
    CHECK_THROWS_AS(parse_golden("(1) Intent.E{e1}\n(2) Intent.E{e1}\n"), PatternError);
    CHECK_THROWS_AS(parse_golden("(1) Intent.E{e1}\n-> intention_step\n"), PatternError);
    CHECK_THROWS_AS(parse_golden("what\n"), PatternError);
}

TEST_CASE("random agents are seeded, bounded and valid")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        AgentConfig a = random_agent(seed);
        CHECK(print_agent(a) == print_agent(random_agent(seed)));
        CHECK_FALSE(testutil::has_error(validate_agent(a)));
        std::map<std::string, int> per_event;
        std::set<std::string> atoms;
        for (auto& p : a.plans) {
            ++per_event[p.trigger];
            CHECK(body_depth(p.body) <= 3);
        }
        for (auto& [e, n] : per_event)
            CHECK(n <= 3);
        a.intern();
        CHECK(a.atom_table.size() <= 4);
        AgentConfig back = agent_text(print_agent(a));
        CHECK(config_equal(a, back));
    }
    CHECK(print_agent(random_agent(1)) != print_agent(random_agent(2)));
}

TEST_CASE("report serialisation")
{
    CrosscheckReport r = crosscheck(model("travel"), 6, can_ruleset({"try_failure"}), {}, 1, "travel");
    std::string j = r.json();
    CHECK(j.find("\"name\":\"travel\"") != std::string::npos);
    CHECK(j.find("\"discrepancies\":" + std::to_string(r.discrepancy_count())) != std::string::npos);
    CHECK(r.summary().find("travel") == 0);
    CHECK(crosscheck(model("travel"), 6, rules(), {}, 1).json() == crosscheck(model("travel"), 6, rules(), {}, 4).json());
}
