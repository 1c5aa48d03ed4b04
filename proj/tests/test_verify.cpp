#include "common.hpp"

#include <doctest.h>

#include <deque>
#include <functional>
#include <random>

using namespace canbdi;
using testutil::model;
using testutil::slurp;
using testutil::model_path;

namespace {

const Catalog& rules()
{
    static const Catalog c = can_ruleset();
    return c;
}

struct Small {
    TransitionSystem ts;
    LabelledTS lts;
    std::vector<std::vector<int>> succ; // terminal states loop on themselves
};

Small random_system(std::mt19937_64& rng, int n)
{
    Small s;
    for (int i = 0; i < n; ++i)
        s.ts.states.push_back(Node::make(Ctrl::E, {}, "s" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng() % 4 == 0)
                s.ts.edges.push_back({i, j, "r"});
    s.lts.ts = &s.ts;
    s.lts.names = {"p", "q"};
    s.lts.holds.assign(2, std::vector<char>(std::size_t(n)));
    for (auto& h : s.lts.holds)
        for (auto& x : h)
            x = char(rng() % 2);
    s.succ.assign(std::size_t(n), {});
    for (auto& e : s.ts.edges)
        s.succ[std::size_t(e.src)].push_back(e.dst);
    for (int i = 0; i < n; ++i)
        if (s.succ[std::size_t(i)].empty())
            s.succ[std::size_t(i)].push_back(i);
    return s;
}

// Does some walk of exactly `len` edges from s stay inside `ok_state` and use only `ok_edge`?
bool long_walk(const Small& g, int s, int len, const std::function<bool(int)>& ok_state,
               const std::function<bool(int, int)>& ok_edge)
{
    if (!ok_state(s))
        return false;
    if (len == 0)
        return true;
    for (int t : g.succ[std::size_t(s)])
        if (ok_edge(s, t) && long_walk(g, t, len - 1, ok_state, ok_edge))
            return true;
    return false;
}

std::vector<char> reach_back(const Small& g, const std::vector<char>& target, const std::vector<char>& through)
{
    std::size_t n = g.ts.states.size();
    std::vector<char> r(n, 0);
    std::deque<int> q;
    for (std::size_t i = 0; i < n; ++i)
        if (target[i]) {
            r[i] = 1;
            q.push_back(int(i));
        }
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (std::size_t s = 0; s < n; ++s)
            if (!r[s] && through[s])
                for (int x : g.succ[s])
                    if (x == t) {
                        r[s] = 1;
                        q.push_back(int(s));
                        break;
                    }
    }
    return r;
}

bool valid_path(const Small& g, const std::vector<int>& path)
{
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto& ss = g.succ[std::size_t(path[i])];
        if (std::find(ss.begin(), ss.end(), path[i + 1]) == ss.end())
            return false;
    }
    return true;
}

LabelledTS labelled(const TransitionSystem& ts, const std::string& props_file, PropertySet& ps)
{
    ps = parse_properties(slurp(model_path(props_file)));
    return label_states(ts, ps.patterns, 2);
}

} // namespace

TEST_CASE("state patterns")
{
    PropertySet ps = parse_properties(slurp(model_path("patrol.ctl")));
    const StatePattern* phi1 = ps.find("phi1");
    REQUIRE(phi1);
    NodeP mid = parse_state("Beliefs.B(sc) || Desires.1 || Intentions.Intent{1}.Goal.(SC.False | FC.False | "
                            "Try.(Reduce.E{e_patrol_task} | Cons.E{e_patrol_task})) || Plans.1");
    CHECK(pattern_holds(*phi1, mid));
    NodeP other = parse_state("Beliefs.1 || Desires.1 || Intentions.Intent{1}.Goal.(SC.B(sc) | FC.False | "
                              "Try.(Reduce.E{e_patrol} | Cons.E{e_patrol})) || Plans.1");
    CHECK_FALSE(pattern_holds(*phi1, other));

    PropertySet s = parse_properties(slurp(model_path("sensing.ctl")));
    NodeP done = parse_state("Beliefs.1 || Desires.1 || Intentions.(Intent{1} | Intent{2}.E{e}) || Plans.1");
    CHECK(pattern_holds(*s.find("phi2"), done));
    CHECK_FALSE(pattern_holds(*s.find("phi4"), done));
    NodeP none = parse_state("Beliefs.1 || Desires.1 || Intentions.1 || Plans.1");
    CHECK(pattern_holds(*s.find("phi4"), none));
}

TEST_CASE("property file errors")
{
    CHECK_THROWS_AS(parse_properties("pattern p = Intent.1\ncheck x = AG q\n"), PropertyError);
    CHECK_THROWS_AS(parse_properties("check x = AG\n"), PropertyError);
    CHECK_THROWS_AS(parse_ctl("E[G F p]"), PropertyError);
    CHECK_THROWS_AS(parse_ctl("A[p]"), PropertyError);
    CHECK_NOTHROW(parse_ctl("A[G F p]"));
    CHECK_NOTHROW(parse_ctl("!E[p U (q & EX p)] -> AG ~q"));
}

TEST_CASE("print and parse of CTL formulas agree")
{
    for (auto text : {"AG AF p", "E[p U q]", "A[p U q]", "!(p & q) | EX p", "E[F(p & X q)]", "A[F(p & X q)]",
                      "p -> AX q", "EG true", "AF false"}) {
        CtlP f = parse_ctl(text);
        CHECK(print_ctl(parse_ctl(print_ctl(f))) == print_ctl(f));
    }
}

TEST_CASE("fixpoint labelling agrees with walk and reachability oracles")
{
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 300; ++round) {
        int n = 1 + int(rng() % 7);
        Small g = random_system(rng, n);
        auto& p = g.lts.holds[0];
        auto& q = g.lts.holds[1];
        auto P = [&](int s) { return p[std::size_t(s)] != 0; };
        auto Q = [&](int s) { return q[std::size_t(s)] != 0; };
        auto any = [](int, int) { return true; };
        const std::size_t sz = std::size_t(n);
        std::vector<char> all(sz, 1), notp(sz), notq(sz);
        for (int s = 0; s < n; ++s) {
            notp[std::size_t(s)] = !P(s);
            notq[std::size_t(s)] = !Q(s);
        }
        auto ef = reach_back(g, p, all);
        auto eu = reach_back(g, q, p);
        // E[F(p & X q)]: some p-state with a q-successor, reached by any path.
        std::vector<char> pxq(sz);
        for (int s = 0; s < n; ++s)
            for (int t : g.succ[std::size_t(s)])
                if (P(s) && Q(t))
                    pxq[std::size_t(s)] = 1;
        auto efx = reach_back(g, pxq, all);

        auto sat = [&](const char* f) { return sat_states(g.lts, parse_ctl(f)); };
        auto ex = sat("EX p"), ax = sat("AX p"), efs = sat("EF p"), afs = sat("AF p"), egs = sat("EG p"),
             ags = sat("AG p"), eus = sat("E[p U q]"), aus = sat("A[p U q]"), efxs = sat("E[F(p & X q)]"),
             afxs = sat("A[F(p & X q)]"), dual = sat("!EF !p"), gf = sat("A[G F p]");
        for (int s = 0; s < n; ++s) {
            CAPTURE(round);
            CAPTURE(s);
            auto& ss = g.succ[std::size_t(s)];
            bool o_ex = std::any_of(ss.begin(), ss.end(), P);
            bool o_ax = std::all_of(ss.begin(), ss.end(), P);
            bool o_eg = long_walk(g, s, n, P, any);
            bool o_af = !long_walk(g, s, n, [&](int x) { return !P(x); }, any);
            bool o_ag = !reach_back(g, notp, all)[std::size_t(s)];
            // A[p U q] fails iff a q-free walk reaches a state violating p, or runs forever.
            auto nq_np = notq;
            for (int x = 0; x < n; ++x)
                nq_np[std::size_t(x)] = notq[std::size_t(x)] && notp[std::size_t(x)];
            bool o_au = !(reach_back(g, nq_np, notq)[std::size_t(s)] ||
                          long_walk(g, s, n, [&](int x) { return !Q(x); }, any));
            bool o_afx = !long_walk(g, s, n, [](int) { return true; }, [&](int a, int b) { return !(P(a) && Q(b)); });
            // AG AF p: every reachable state satisfies AF p.
            bool o_gf = true;
            for (int t = 0; t < n; ++t) {
                std::vector<char> only(sz, 0);
                only[std::size_t(t)] = 1;
                if (reach_back(g, only, all)[std::size_t(s)] &&
                    long_walk(g, t, n, [&](int x) { return !P(x); }, any))
                    o_gf = false;
            }
            CHECK(bool(ex[std::size_t(s)]) == o_ex);
            CHECK(bool(ax[std::size_t(s)]) == o_ax);
            CHECK(bool(efs[std::size_t(s)]) == bool(ef[std::size_t(s)]));
            CHECK(bool(afs[std::size_t(s)]) == o_af);
            CHECK(bool(egs[std::size_t(s)]) == o_eg);
            CHECK(bool(ags[std::size_t(s)]) == o_ag);
            CHECK(bool(eus[std::size_t(s)]) == bool(eu[std::size_t(s)]));
            CHECK(bool(aus[std::size_t(s)]) == o_au);
            CHECK(bool(efxs[std::size_t(s)]) == bool(efx[std::size_t(s)]));
            CHECK(bool(afxs[std::size_t(s)]) == o_afx);
            CHECK(ags[std::size_t(s)] == dual[std::size_t(s)]);
            CHECK(bool(gf[std::size_t(s)]) == o_gf);
        }

        for (auto f : {"EF p", "AG p", "EG p", "AF p", "E[F(p & X q)]", "A[F(p & X q)]", "E[p U q]"}) {
            Verdict v = check_ctl(g.lts, parse_ctl(f), f);
            CHECK(valid_path(g, v.path));
            if (!v.path.empty())
                CHECK(v.path.front() == g.ts.initial);
            if (std::string(f) == "EF p" && v.holds)
                CHECK(P(v.path.back()));
            if (std::string(f) == "AG p" && !v.holds)
                CHECK_FALSE(P(v.path.back()));
        }
    }
}

TEST_CASE("EF and AG duality on built systems")
{
    for (auto name : {"patrol", "sensing", "retrieval"}) {
        TransitionSystem ts = build_full(encode_config(model(name), true), rules());
        PropertySet ps;
        LabelledTS lts = labelled(ts, std::string(name) + ".ctl", ps);
        for (auto& pat : ps.patterns) {
            auto ag = sat_states(lts, parse_ctl("AG " + pat.name));
            auto ef = sat_states(lts, parse_ctl("EF !" + pat.name));
            for (std::size_t s = 0; s < ag.size(); ++s)
                CHECK(bool(ag[s]) == !ef[s]);
        }
    }
}

TEST_CASE("paper verdicts that hold in both modes")
{
    TransitionSystem patrol = build_full(encode_config(model("patrol"), true), rules());
    PropertySet ps;
    LabelledTS lts = labelled(patrol, "patrol.ctl", ps);
    CHECK(check_ctl(lts, ps.formulas[0].formula).holds);

    TransitionSystem sensing = build_full(encode_config(model("sensing"), true), rules());
    PropertySet ss;
    LabelledTS sl = labelled(sensing, "sensing.ctl", ss);
    Verdict always = check_ctl(sl, ss.formulas[0].formula, "always_completes");
    Verdict may = check_ctl(sl, ss.formulas[1].formula, "may_fail");
    CHECK_FALSE(always.holds);
    CHECK(always.path_kind == "counterexample");
    CHECK(may.holds);
    CHECK(may.path_kind == "witness");

    TransitionSystem rq = quotient_agent_level(build_full(encode_config(model("retrieval"), true), rules()));
    PropertySet rs;
    LabelledTS rl = labelled(rq, "retrieval.ctl", rs);
    Verdict r = check_ctl(rl, rs.formulas[0].formula);
    CHECK(r.holds);
    CHECK(r.mode == TSMode::Quotient);
}

TEST_CASE("verdicts from different modes are not comparable")
{
    TransitionSystem full = build_full(encode_config(model("travel"), true), rules());
    TransitionSystem q = quotient_agent_level(full);
    std::vector<StatePattern> pats = parse_properties("pattern done = Intentions.1\n").patterns;
    LabelledTS lf = label_states(full, pats), lq = label_states(q, pats);
    Verdict a = check_ctl(lf, parse_ctl("EF done")), b = check_ctl(lq, parse_ctl("EF done"));
    CHECK_THROWS_AS(same_verdict(a, b), PropertyError);
    CHECK(same_verdict(a, a));
}

TEST_CASE("open systems are refused")
{
    BuildOptions o;
    o.budget = 3;
    TransitionSystem ts = build_full(encode_config(model("sensing"), true), rules(), o);
    REQUIRE_FALSE(ts.closed);
    LabelledTS l = label_states(ts, parse_properties("pattern x = Intentions.1\n").patterns);
    CHECK_THROWS_AS(check_ctl(l, parse_ctl("EF x")), PropertyError);
}
