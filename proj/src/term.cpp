#include "canbdi/term.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace canbdi {

namespace {

constexpr std::array<std::string_view, kCtrlCount> kNames = {
    "Root",   "Beliefs", "B",       "False",    "Desires", "E",          "Intentions", "Intent",
    "Plans",  "PlanSet", "Plan",    "PB",       "Act",     "Pre",        "Add",        "Del",
    "Seq",    "Try",     "Cons",    "Conc",     "L",       "R",          "Goal",       "SC",
    "FC",     "Check",   "CheckRes", "T",       "F",       "CheckToken", "Reduce",     "ReduceF",
};

std::uint64_t str_hash(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool is_ident(const std::string& s)
{
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum((unsigned char)c) || c == '_'; });
}

} // namespace

std::string_view ctrl_name(Ctrl c) { return kNames[std::size_t(c)]; }

bool ctrl_from_name(std::string_view s, Ctrl& out)
{
    for (int i = 0; i < kCtrlCount; ++i)
        if (kNames[i] == s) {
            out = Ctrl(i);
            return true;
        }
    return false;
}

bool is_atomic(Ctrl c)
{
    switch (c) {
    case Ctrl::B:
    case Ctrl::False:
    case Ctrl::E:
    case Ctrl::T:
    case Ctrl::F:
    case Ctrl::CheckToken:
    case Ctrl::ReduceF: return true;
    default: return false;
    }
}

bool is_auxiliary(Ctrl c)
{
    switch (c) {
    case Ctrl::Check:
    case Ctrl::CheckRes:
    case Ctrl::CheckToken:
    case Ctrl::Reduce:
    case Ctrl::ReduceF: return true;
    default: return false;
    }
}

bool has_name_attr(Ctrl c)
{
    return c == Ctrl::B || c == Ctrl::E || c == Ctrl::PlanSet || c == Ctrl::Act || c == Ctrl::Plan;
}

bool has_num_attr(Ctrl c) { return c == Ctrl::Intent || c == Ctrl::Check || c == Ctrl::CheckRes; }

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

NodeP Node::make(Ctrl c, Nodes kids, std::string name, int num, bool neg)
{
    auto n = std::make_shared<Node>();
    n->ctrl = c;
    n->neg = neg;
    n->num = num;
    n->name = std::move(name);
    n->kids = std::move(kids);
    std::uint64_t h = mix64(std::uint64_t(c) * 31 + (neg ? 7 : 0));
    h ^= mix64(str_hash(n->name));
    if (c != Ctrl::Intent)
        h ^= mix64(std::uint64_t(num) + 0x51ull);
    std::uint64_t sum = 0, x = 0;
    for (auto& k : n->kids) {
        sum += mix64(k->hash);
        x ^= mix64(k->hash ^ 0xabcdefull);
    }
    n->hash = mix64(h + sum * 3 + x);
    return n;
}

NodeP Node::with_kids(Nodes k) const { return make(ctrl, std::move(k), name, num, neg); }

bool term_equal(const NodeP& a, const NodeP& b)
{
    if (a == b)
        return true;
    if (a->hash != b->hash || a->ctrl != b->ctrl || a->neg != b->neg || a->name != b->name ||
        a->kids.size() != b->kids.size())
        return false;
    if (a->ctrl != Ctrl::Intent && a->num != b->num)
        return false;
    std::vector<bool> used(b->kids.size(), false);
    for (auto& ka : a->kids) {
        bool found = false;
        for (std::size_t j = 0; j < b->kids.size(); ++j)
            if (!used[j] && term_equal(ka, b->kids[j])) {
                used[j] = found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

int count_nodes(const NodeP& t)
{
    int n = 1;
    for (auto& k : t->kids)
        n += count_nodes(k);
    return n;
}

bool contains_ctrl(const NodeP& t, Ctrl c)
{
    if (t->ctrl == c)
        return true;
    return std::any_of(t->kids.begin(), t->kids.end(), [c](const NodeP& k) { return contains_ctrl(k, c); });
}

int max_num(const NodeP& t, Ctrl c)
{
    int m = t->ctrl == c ? t->num : 0;
    for (auto& k : t->kids)
        m = std::max(m, max_num(k, c));
    return m;
}

bool has_transient(const NodeP& t)
{
    if (t->ctrl == Ctrl::Check || t->ctrl == Ctrl::CheckRes || t->ctrl == Ctrl::Reduce || t->ctrl == Ctrl::ReduceF)
        return true;
    if (t->ctrl == Ctrl::Beliefs)
        return std::any_of(t->kids.begin(), t->kids.end(),
                           [](const NodeP& k) { return k->ctrl == Ctrl::Add || k->ctrl == Ctrl::Del; });
    return std::any_of(t->kids.begin(), t->kids.end(), [](const NodeP& k) { return has_transient(k); });
}

// ---------------------------------------------------------------- printing

static void print_rec(std::ostream& os, const NodeP& t, const PrintOptions& o);

static void print_list(std::ostream& os, const Nodes& ns, const PrintOptions& o)
{
    Nodes shown;
    for (auto& k : ns)
        if (!(o.hide_tokens && k->ctrl == Ctrl::CheckToken))
            shown.push_back(k);
    if (shown.empty()) {
        os << "1";
        return;
    }
    if (shown.size() == 1) {
        print_rec(os, shown[0], o);
        return;
    }
    os << "(";
    for (std::size_t i = 0; i < shown.size(); ++i) {
        if (i)
            os << " | ";
        print_rec(os, shown[i], o);
    }
    os << ")";
}

static std::string quoted(const std::string& s) { return is_ident(s) ? s : "\"" + s + "\""; }

static void print_rec(std::ostream& os, const NodeP& t, const PrintOptions& o)
{
    if (t->ctrl == Ctrl::B) {
        os << "B(" << (t->neg ? "~" : "") << quoted(t->name) << ")";
        return;
    }
    os << ctrl_name(t->ctrl);
    bool name_shown = !t->name.empty() &&
                      !(o.hide_names && (t->ctrl == Ctrl::Act || t->ctrl == Ctrl::Plan));
    if (name_shown)
        os << "{" << quoted(t->name) << "}";
    else if (has_num_attr(t->ctrl) && t->num != 0 && !o.hide_ids)
        os << "{" << t->num << "}";
    if (is_atomic(t->ctrl))
        return;
    os << ".";
    print_list(os, t->kids, o);
}

std::string print_term(const NodeP& t, const PrintOptions& o)
{
    std::ostringstream os;
    if (t->ctrl == Ctrl::Root) {
        for (std::size_t i = 0; i < t->kids.size(); ++i) {
            if (i)
                os << " || ";
            print_rec(os, t->kids[i], o);
        }
        return os.str();
    }
    print_rec(os, t, o);
    return os.str();
}

std::string print_nodes(const Nodes& ns, const PrintOptions& o)
{
    std::ostringstream os;
    print_list(os, ns, o);
    return os.str();
}

// ---------------------------------------------------------------- encoding

static NodeP lit_node(const Literal& l) { return Node::make(Ctrl::B, {}, l.atom, 0, l.negative); }

Nodes encode_formula(const Formula& f)
{
    switch (f.kind) {
    case Formula::Kind::True: return {};
    case Formula::Kind::False: return {Node::make(Ctrl::False)};
    case Formula::Kind::Conj: {
        Nodes r;
        for (auto& l : f.lits)
            r.push_back(lit_node(l));
        return r;
    }
    }
    return {};
}

static Nodes encode_lits(const std::set<Literal>& s)
{
    Nodes r;
    for (auto& l : s)
        r.push_back(lit_node(l));
    return r;
}

static NodeP wrap(Ctrl c, Nodes kids) { return Node::make(c, std::move(kids)); }

static Nodes concat(Nodes a, const Nodes& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

NodeP encode_plan(const std::string& id, const Formula& ctx, const Body& body, bool tokens)
{
    Nodes kids{wrap(Ctrl::Pre, encode_formula(ctx)), wrap(Ctrl::PB, encode_program(body, tokens))};
    if (tokens)
        kids.push_back(Node::make(Ctrl::CheckToken));
    return Node::make(Ctrl::Plan, std::move(kids), id);
}

Nodes encode_program(const Body& p, bool tokens)
{
    using K = PlanBody::Kind;
    switch (p->kind) {
    case K::Nil: return {};
    case K::Act:
        return {Node::make(Ctrl::Act,
                           {wrap(Ctrl::Pre, encode_formula(p->act.pre)), wrap(Ctrl::Add, encode_lits(p->act.add)),
                            wrap(Ctrl::Del, encode_lits(p->act.del))},
                           p->act.name)};
    case K::Event: return {Node::make(Ctrl::E, {}, p->event)};
    case K::Seq:
        return {wrap(Ctrl::Seq, concat(encode_program(p->left, tokens),
                                       {wrap(Ctrl::Cons, encode_program(p->right, tokens))}))};
    case K::Try:
        return {wrap(Ctrl::Try, concat(encode_program(p->left, tokens),
                                       {wrap(Ctrl::Cons, encode_program(p->right, tokens))}))};
    case K::Conc:
        return {wrap(Ctrl::Conc, {wrap(Ctrl::L, encode_program(p->left, tokens)),
                                  wrap(Ctrl::R, encode_program(p->right, tokens))})};
    case K::Goal: {
        Nodes kids{wrap(Ctrl::SC, encode_formula(p->succ))};
        kids = concat(kids, encode_program(p->left, tokens));
        kids.push_back(wrap(Ctrl::FC, encode_formula(p->fail)));
        return {wrap(Ctrl::Goal, std::move(kids))};
    }
    case K::PlanSet: {
        Nodes kids;
        for (auto& e : p->plans)
            kids.push_back(encode_plan(e.id, e.context, e.body, tokens));
        return {Node::make(Ctrl::PlanSet, std::move(kids), p->event)};
    }
    }
    return {};
}

static void body_events(const Body& b, std::vector<std::string>& out)
{
    using K = PlanBody::Kind;
    switch (b->kind) {
    case K::Event:
    case K::PlanSet:
        out.push_back(b->event);
        for (auto& e : b->plans)
            body_events(e.body, out);
        break;
    case K::Seq:
    case K::Conc:
    case K::Try:
        body_events(b->left, out);
        body_events(b->right, out);
        break;
    case K::Goal: body_events(b->left, out); break;
    default: break;
    }
}

NodeP encode_config(const AgentConfig& cfg, bool tokens)
{
    Nodes bel;
    for (auto& l : cfg.beliefs)
        bel.push_back(lit_node(l));
    Nodes des;
    for (auto& e : cfg.events)
        des.push_back(Node::make(Ctrl::E, {}, e));
    Nodes ints;
    for (auto& i : cfg.intentions)
        ints.push_back(Node::make(Ctrl::Intent, encode_program(i.body, tokens), {}, i.id));

    // Plan sets grouped by trigger in first-appearance order; referenced events without
    // plans get an empty plan set so that event reduction is never stuck.
    std::vector<std::string> order;
    std::map<std::string, Nodes> groups;
    for (auto& p : cfg.plans) {
        if (!groups.count(p.trigger))
            order.push_back(p.trigger);
        groups[p.trigger].push_back(encode_plan(p.id, p.context, p.body, tokens));
    }
    std::vector<std::string> refs(cfg.events.begin(), cfg.events.end());
    for (auto& i : cfg.intentions)
        body_events(i.body, refs);
    for (auto& p : cfg.plans)
        body_events(p.body, refs);
    for (auto& e : refs)
        if (!groups.count(e)) {
            order.push_back(e);
            groups[e];
        }
    Nodes pls;
    for (auto& e : order)
        pls.push_back(Node::make(Ctrl::PlanSet, groups[e], e));

    return wrap(Ctrl::Root, {wrap(Ctrl::Beliefs, bel), wrap(Ctrl::Desires, des), wrap(Ctrl::Intentions, ints),
                             wrap(Ctrl::Plans, pls)});
}

static NodeP seed_rec(const NodeP& t)
{
    Nodes kids;
    bool changed = false;
    for (auto& k : t->kids) {
        auto nk = seed_rec(k);
        changed |= nk != k;
        kids.push_back(nk);
    }
    if (t->ctrl == Ctrl::Plan &&
        std::none_of(kids.begin(), kids.end(), [](const NodeP& k) { return k->ctrl == Ctrl::CheckToken; })) {
        kids.push_back(Node::make(Ctrl::CheckToken));
        changed = true;
    }
    return changed ? t->with_kids(std::move(kids)) : t;
}

NodeP seed_check_tokens(const NodeP& root)
{
    Nodes kids;
    for (auto& r : root->kids)
        kids.push_back(r->ctrl == Ctrl::Plans ? seed_rec(r) : r);
    return root->with_kids(std::move(kids));
}

// ---------------------------------------------------------------- decoding

namespace {

struct Decoder {
    bool strict;

    void check_aux(const NodeP& n) const
    {
        if (n->ctrl == Ctrl::CheckToken && !strict)
            return;
        if (is_auxiliary(n->ctrl))
            throw DecodeError("auxiliary entity present: " + std::string(ctrl_name(n->ctrl)));
    }

    Nodes visible(const Nodes& ns) const
    {
        Nodes r;
        for (auto& k : ns) {
            check_aux(k);
            if (k->ctrl != Ctrl::CheckToken)
                r.push_back(k);
        }
        return r;
    }

    Literal lit(const NodeP& n) const
    {
        if (n->ctrl != Ctrl::B)
            throw DecodeError("expected B, found " + std::string(ctrl_name(n->ctrl)));
        return {n->name, n->neg};
    }

    Formula formula(const Nodes& ns) const
    {
        auto vs = visible(ns);
        if (vs.size() == 1 && vs[0]->ctrl == Ctrl::False)
            return Formula::falsity();
        std::vector<Literal> ls;
        for (auto& k : vs)
            ls.push_back(lit(k));
        return Formula::conj(std::move(ls));
    }

    std::set<Literal> lits(const Nodes& ns) const
    {
        std::set<Literal> r;
        for (auto& k : visible(ns))
            r.insert(lit(k));
        return r;
    }

    const NodeP& only(const Nodes& ns, Ctrl c, const char* where) const
    {
        const NodeP* hit = nullptr;
        for (auto& k : ns)
            if (k->ctrl == c) {
                if (hit)
                    throw DecodeError(std::string("duplicate ") + std::string(ctrl_name(c)) + " in " + where);
                hit = &k;
            }
        if (!hit)
            throw DecodeError(std::string("missing ") + std::string(ctrl_name(c)) + " in " + where);
        return *hit;
    }

    Body program(const Nodes& ns) const
    {
        auto vs = visible(ns);
        if (vs.empty())
            return mk_nil();
        if (vs.size() != 1)
            throw DecodeError("program position holds " + std::to_string(vs.size()) + " entities");
        return node(vs[0]);
    }

    // Seq/Try: one optional program plus one Cons.
    std::pair<Body, Body> split_cons(const NodeP& n) const
    {
        auto vs = visible(n->kids);
        const NodeP& cons = only(vs, Ctrl::Cons, std::string(ctrl_name(n->ctrl)).c_str());
        Nodes rest;
        for (auto& k : vs)
            if (k != cons)
                rest.push_back(k);
        return {program(rest), program(cons->kids)};
    }

    PlanEntry plan(const NodeP& n) const
    {
        if (n->ctrl != Ctrl::Plan)
            throw DecodeError("expected Plan, found " + std::string(ctrl_name(n->ctrl)));
        auto vs = visible(n->kids);
        if (vs.size() != 2)
            throw DecodeError("Plan must hold Pre and PB");
        return {n->name, formula(only(vs, Ctrl::Pre, "Plan")->kids), program(only(vs, Ctrl::PB, "Plan")->kids)};
    }

    Body node(const NodeP& n) const
    {
        check_aux(n);
        switch (n->ctrl) {
        case Ctrl::Act: {
            auto vs = visible(n->kids);
            if (vs.size() != 3)
                throw DecodeError("Act must hold Pre, Add and Del");
            ActionSpec a{n->name, formula(only(vs, Ctrl::Pre, "Act")->kids),
                         lits(only(vs, Ctrl::Add, "Act")->kids), lits(only(vs, Ctrl::Del, "Act")->kids)};
            return mk_act(std::move(a));
        }
        case Ctrl::E:
            if (!n->kids.empty())
                throw DecodeError("atomic E has children");
            return mk_event(n->name);
        case Ctrl::Seq: {
            auto [a, b] = split_cons(n);
            return mk_seq(a, b);
        }
        case Ctrl::Try: {
            auto [a, b] = split_cons(n);
            return mk_try(a, b);
        }
        case Ctrl::Conc: {
            auto vs = visible(n->kids);
            if (vs.size() != 2)
                throw DecodeError("Conc must hold L and R");
            return mk_conc(program(only(vs, Ctrl::L, "Conc")->kids), program(only(vs, Ctrl::R, "Conc")->kids));
        }
        case Ctrl::Goal: {
            auto vs = visible(n->kids);
            const NodeP& sc = only(vs, Ctrl::SC, "Goal");
            const NodeP& fc = only(vs, Ctrl::FC, "Goal");
            Nodes rest;
            for (auto& k : vs)
                if (k != sc && k != fc)
                    rest.push_back(k);
            return mk_goal(formula(sc->kids), program(rest), formula(fc->kids));
        }
        case Ctrl::PlanSet: {
            std::vector<PlanEntry> es;
            for (auto& k : visible(n->kids))
                es.push_back(plan(k));
            return mk_planset(n->name, std::move(es));
        }
        default:
            throw DecodeError("entity " + std::string(ctrl_name(n->ctrl)) + " cannot appear in a program position");
        }
    }
};

void gather_actions(const Body& b, std::map<std::string, ActionSpec>& out)
{
    using K = PlanBody::Kind;
    switch (b->kind) {
    case K::Act:
        if (!b->act.name.empty() && b->act.name[0] != '?' && b->act.name[0] != '+' && b->act.name[0] != '-')
            out.emplace(b->act.name, b->act);
        break;
    case K::Seq:
    case K::Conc:
    case K::Try:
        gather_actions(b->left, out);
        gather_actions(b->right, out);
        break;
    case K::Goal: gather_actions(b->left, out); break;
    case K::PlanSet:
        for (auto& e : b->plans)
            gather_actions(e.body, out);
        break;
    default: break;
    }
}

} // namespace

Body decode_program(const Nodes& ns, bool strict) { return Decoder{strict}.program(ns); }

AgentConfig decode_config(const NodeP& root, bool strict)
{
    if (root->ctrl != Ctrl::Root || root->kids.size() != 4)
        throw DecodeError("expected four regions");
    Decoder d{strict};
    AgentConfig cfg;
    std::set<Ctrl> seen;
    for (auto& r : root->kids) {
        if (!seen.insert(r->ctrl).second)
            throw DecodeError("duplicate region " + std::string(ctrl_name(r->ctrl)));
        switch (r->ctrl) {
        case Ctrl::Beliefs:
            for (auto& k : d.visible(r->kids)) {
                if (k->ctrl == Ctrl::False)
                    throw DecodeError("False in Beliefs is not representable");
                cfg.beliefs.insert(d.lit(k));
            }
            break;
        case Ctrl::Desires:
            for (auto& k : d.visible(r->kids)) {
                if (k->ctrl != Ctrl::E)
                    throw DecodeError("Desires holds " + std::string(ctrl_name(k->ctrl)));
                cfg.events.push_back(k->name);
            }
            break;
        case Ctrl::Intentions:
            for (auto& k : d.visible(r->kids)) {
                if (k->ctrl != Ctrl::Intent)
                    throw DecodeError("Intentions holds " + std::string(ctrl_name(k->ctrl)));
                cfg.intentions.push_back({k->num, d.program(k->kids)});
            }
            break;
        case Ctrl::Plans:
            for (auto& ps : d.visible(r->kids)) {
                if (ps->ctrl != Ctrl::PlanSet)
                    throw DecodeError("Plans holds " + std::string(ctrl_name(ps->ctrl)));
                for (auto& k : d.visible(ps->kids)) {
                    auto e = d.plan(k);
                    cfg.plans.push_back({e.id, ps->name, e.context, e.body});
                }
            }
            break;
        default: throw DecodeError("unexpected region " + std::string(ctrl_name(r->ctrl)));
        }
    }
    for (auto& i : cfg.intentions)
        gather_actions(i.body, cfg.actions);
    for (auto& p : cfg.plans)
        gather_actions(p.body, cfg.actions);
    cfg.intern();
    return cfg;
}

// ---------------------------------------------------------------- linting

namespace {

using CtrlSet = std::set<Ctrl>;

const CtrlSet& program_positions()
{
    static const CtrlSet s{Ctrl::Intent, Ctrl::PB,   Ctrl::Seq, Ctrl::Cons,  Ctrl::L,
                           Ctrl::R,      Ctrl::Goal, Ctrl::Try, Ctrl::Reduce};
    return s;
}

CtrlSet allowed_parents(Ctrl c)
{
    using C = Ctrl;
    CtrlSet pp = program_positions();
    switch (c) {
    case C::Root: return {};
    case C::Beliefs:
    case C::Desires:
    case C::Intentions:
    case C::Plans: return {C::Root};
    case C::B: return {C::Beliefs, C::Pre, C::Add, C::Del, C::SC, C::FC, C::Check};
    case C::False: return {C::Beliefs, C::Pre, C::SC, C::FC, C::Check};
    case C::E: pp.insert(C::Desires); return pp;
    case C::Intent: return {C::Intentions};
    case C::PlanSet: pp.insert(C::Plans); return pp;
    case C::Plan: return {C::PlanSet};
    case C::PB: return {C::Plan};
    case C::Pre: return {C::Plan, C::Act};
    case C::Add:
    case C::Del: return {C::Act, C::Beliefs};
    case C::Cons: return {C::Seq, C::Try};
    case C::L:
    case C::R: return {C::Conc};
    case C::SC:
    case C::FC: return {C::Goal};
    case C::Check: return {C::Beliefs};
    case C::CheckRes: return {C::Act, C::Plan, C::SC, C::FC};
    case C::T:
    case C::F: return {C::CheckRes};
    case C::CheckToken: return {C::Plan};
    default: return pp; // Act, Seq, Try, Conc, Goal, Reduce, ReduceF
    }
}

bool is_program(Ctrl c)
{
    switch (c) {
    case Ctrl::Act:
    case Ctrl::E:
    case Ctrl::PlanSet:
    case Ctrl::Seq:
    case Ctrl::Try:
    case Ctrl::Conc:
    case Ctrl::Goal:
    case Ctrl::Reduce:
    case Ctrl::ReduceF: return true;
    default: return false;
    }
}

struct Linter {
    std::vector<LintIssue> issues;

    void add(const std::string& path, std::string msg) { issues.push_back({path, std::move(msg)}); }

    std::pair<int, int> walk(const NodeP& n, const NodeP& parent, const std::string& path)
    {
        std::string here = path.empty() ? std::string(ctrl_name(n->ctrl)) : path + "/" + std::string(ctrl_name(n->ctrl));
        if (parent) {
            auto ps = allowed_parents(n->ctrl);
            if (!ps.count(parent->ctrl))
                add(here, std::string(ctrl_name(n->ctrl)) + " not allowed under " + std::string(ctrl_name(parent->ctrl)));
        } else if (n->ctrl != Ctrl::Root) {
            add(here, "top-level entity is not Root");
        }
        if (is_atomic(n->ctrl) && !n->kids.empty())
            add(here, "atomic entity has children");
        if (program_positions().count(n->ctrl)) {
            auto progs = std::count_if(n->kids.begin(), n->kids.end(), [](const NodeP& k) { return is_program(k->ctrl); });
            if (progs > 1)
                add(here, "more than one program in a program position");
        }
        int reduce = n->ctrl == Ctrl::Reduce, reducef = n->ctrl == Ctrl::ReduceF;
        for (auto& k : n->kids) {
            auto [r, f] = walk(k, n, here);
            reduce += r;
            reducef += f;
        }
        if (n->ctrl == Ctrl::Intent && (reduce > 1 || reducef > 1))
            add(here, "intention holds more than one Reduce or ReduceF");
        return {reduce, reducef};
    }
};

} // namespace

std::vector<LintIssue> lint_term(const NodeP& root)
{
    Linter l;
    l.walk(root, nullptr, "");
    if (root->ctrl == Ctrl::Root && root->kids.size() != 4)
        l.add("Root", "expected four regions");
    return std::move(l.issues);
}

} // namespace canbdi
