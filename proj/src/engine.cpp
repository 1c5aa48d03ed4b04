#include "canbdi/engine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace canbdi {

// ---------------------------------------------------------------- lexing and parsing

namespace {

struct Tok {
    enum Kind { Ident, Int, Site, Var, Fresh, Str, Sym, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Tok> lex(const std::string& s)
{
    std::vector<Tok> out;
    std::size_t i = 0;
    auto ident_char = [](char c) { return std::isalnum((unsigned char)c) || c == '_'; };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c == '|' && i + 1 < s.size() && s[i + 1] == '|') {
            out.push_back({Tok::Sym, "||", start});
            i += 2;
        } else if (std::string("{}().|~").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), start});
            ++i;
        } else if (c == '"') {
            std::size_t j = s.find('"', i + 1);
            if (j == std::string::npos)
                throw PatternError("unterminated string at " + std::to_string(i));
            out.push_back({Tok::Str, s.substr(i + 1, j - i - 1), start});
            i = j + 1;
        } else if (c == '$' || c == '?' || c == '!') {
            std::size_t j = i + 1;
            while (j < s.size() && ident_char(s[j]))
                ++j;
            if (j == i + 1)
                throw PatternError(std::string("expected name after '") + c + "' at " + std::to_string(i));
            Tok::Kind k = c == '$' ? Tok::Site : c == '?' ? Tok::Var : Tok::Fresh;
            out.push_back({k, s.substr(i + 1, j - i - 1), start});
            i = j;
        } else if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j]))
                ++j;
            std::string w = s.substr(i, j - i);
            bool digits = std::all_of(w.begin(), w.end(), [](char d) { return std::isdigit((unsigned char)d); });
            out.push_back({digits ? Tok::Int : Tok::Ident, w, start});
            i = j;
        } else {
            throw PatternError(std::string("unexpected character '") + c + "' at " + std::to_string(i));
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

struct Parser {
    std::vector<Tok> toks;
    std::size_t k = 0;

    const Tok& peek() const { return toks[k]; }
    bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw PatternError(msg + " at " + std::to_string(peek().pos));
    }
    void expect(const char* s)
    {
        if (!is_sym(s))
            fail(std::string("expected '") + s + "'");
        ++k;
    }

    Attr attr_value()
    {
        const Tok& t = peek();
        Attr a;
        switch (t.kind) {
        case Tok::Ident:
        case Tok::Int:
        case Tok::Str: a = {Attr::Kind::Lit, t.text}; break;
        case Tok::Var: a = {Attr::Kind::Var, t.text}; break;
        case Tok::Fresh: a = {Attr::Kind::Fresh, t.text}; break;
        default: fail("expected attribute");
        }
        ++k;
        return a;
    }

    PNodeP node()
    {
        if (peek().kind != Tok::Ident)
            fail("expected entity name");
        Ctrl c;
        if (!ctrl_from_name(peek().text, c))
            fail("unknown entity '" + peek().text + "'");
        ++k;
        auto n = std::make_shared<PNode>();
        n->ctrl = c;
        if (c == Ctrl::B) {
            expect("(");
            bool neg = false;
            if (is_sym("~")) {
                neg = true;
                ++k;
            }
            n->attr = attr_value();
            if (neg && n->attr.kind != Attr::Kind::Lit)
                fail("negation applies to literal atoms only");
            if (neg)
                n->attr.val = "~" + n->attr.val;
            expect(")");
            return n;
        }
        if (is_sym("{")) {
            ++k;
            n->attr = attr_value();
            expect("}");
        }
        if (is_sym(".")) {
            ++k;
            n->kids = body();
        }
        if (is_atomic(c) && !n->kids.empty())
            fail("atomic entity " + std::string(ctrl_name(c)) + " has children");
        return n;
    }

    std::vector<PItem> item_or_unit()
    {
        if (peek().kind == Tok::Int && peek().text == "1") {
            ++k;
            return {};
        }
        if (peek().kind == Tok::Site) {
            std::string v = peek().text;
            if (!std::all_of(v.begin(), v.end(), [](char d) { return std::isdigit((unsigned char)d); }))
                fail("site index must be numeric");
            ++k;
            return {PItem{nullptr, std::stoi(v)}};
        }
        return {PItem{node(), -1}};
    }

    std::vector<PItem> body()
    {
        if (is_sym("(")) {
            ++k;
            std::vector<PItem> items = item_or_unit();
            while (is_sym("|")) {
                ++k;
                auto more = item_or_unit();
                items.insert(items.end(), more.begin(), more.end());
            }
            expect(")");
            return items;
        }
        return item_or_unit();
    }

    std::vector<std::vector<PItem>> regions()
    {
        std::vector<std::vector<PItem>> rs{body()};
        while (is_sym("||")) {
            ++k;
            rs.push_back(body());
        }
        if (peek().kind != Tok::End)
            fail("trailing input");
        return rs;
    }
};

std::string attr_of(const Node& n)
{
    if (n.ctrl == Ctrl::B)
        return (n.neg ? "~" : "") + n.name;
    if (has_num_attr(n.ctrl))
        return std::to_string(n.num);
    return n.name;
}

} // namespace

Pattern parse_pattern(const std::string& text)
{
    Parser p{lex(text)};
    Pattern pat;
    pat.regions = p.regions();
    pat.text = text;
    return pat;
}

namespace {

struct Fresh {
    int corr = 0, intent = 0;
    std::map<std::string, int> vals;

    int get(const std::string& v, Ctrl c)
    {
        auto it = vals.find(v);
        if (it != vals.end())
            return it->second;
        int x = c == Ctrl::Intent ? ++intent : ++corr;
        vals[v] = x;
        return x;
    }
};

Nodes instantiate(const std::vector<PItem>& items, const Binding& b, Fresh* fresh);

NodeP instantiate_node(const PNode& p, const Binding& b, Fresh* fresh)
{
    std::string val;
    switch (p.attr.kind) {
    case Attr::Kind::None: break;
    case Attr::Kind::Lit: val = p.attr.val; break;
    case Attr::Kind::Var: {
        auto it = b.vars.find(p.attr.val);
        if (it == b.vars.end())
            throw ApplyError("unbound variable ?" + p.attr.val);
        val = it->second;
        break;
    }
    case Attr::Kind::Fresh:
        if (!fresh)
            throw ApplyError("fresh id outside a rule application");
        val = std::to_string(fresh->get(p.attr.val, p.ctrl));
        break;
    }
    Nodes kids = instantiate(p.kids, b, fresh);
    if (p.ctrl == Ctrl::B) {
        bool neg = !val.empty() && val[0] == '~';
        return Node::make(Ctrl::B, {}, neg ? val.substr(1) : val, 0, neg);
    }
    if (has_num_attr(p.ctrl))
        return Node::make(p.ctrl, std::move(kids), {}, val.empty() ? 0 : std::stoi(val));
    return Node::make(p.ctrl, std::move(kids), val);
}

Nodes instantiate(const std::vector<PItem>& items, const Binding& b, Fresh* fresh)
{
    Nodes out;
    for (auto& it : items) {
        if (it.node) {
            out.push_back(instantiate_node(*it.node, b, fresh));
        } else {
            auto s = b.sites.find(it.site);
            if (s == b.sites.end())
                throw ApplyError("unbound site $" + std::to_string(it.site));
            out.insert(out.end(), s->second.begin(), s->second.end());
        }
    }
    return out;
}

} // namespace

NodeP parse_term(const std::string& text)
{
    Pattern p = parse_pattern(text);
    if (p.regions.size() != 1)
        throw PatternError("expected a single region");
    Nodes ns = instantiate(p.regions[0], {}, nullptr);
    if (ns.size() != 1)
        throw PatternError("expected exactly one entity");
    return ns[0];
}

NodeP parse_state(const std::string& text)
{
    Pattern p = parse_pattern(text);
    Nodes regions;
    for (auto& r : p.regions) {
        Nodes ns = instantiate(r, {}, nullptr);
        if (ns.size() != 1)
            throw PatternError("each region must hold one entity");
        regions.push_back(ns[0]);
    }
    return Node::make(Ctrl::Root, std::move(regions));
}

// ---------------------------------------------------------------- matching

namespace {

void match_node(const PNode& p, const NodeP& t, const Binding& b, std::vector<Binding>& out);

void match_list(const std::vector<const PNode*>& pk, int site, const Nodes& tk, std::size_t i,
                std::vector<bool>& used, const Binding& b, std::vector<Binding>& out)
{
    if (i == pk.size()) {
        Nodes rest;
        for (std::size_t j = 0; j < tk.size(); ++j)
            if (!used[j])
                rest.push_back(tk[j]);
        if (site < 0) {
            if (rest.empty())
                out.push_back(b);
            return;
        }
        Binding nb = b;
        nb.sites[site] = std::move(rest);
        out.push_back(std::move(nb));
        return;
    }
    std::vector<NodeP> tried;
    for (std::size_t j = 0; j < tk.size(); ++j) {
        if (used[j] || tk[j]->ctrl != pk[i]->ctrl)
            continue;
        if (std::any_of(tried.begin(), tried.end(), [&](const NodeP& x) { return term_equal(x, tk[j]); }))
            continue;
        tried.push_back(tk[j]);
        std::vector<Binding> here;
        match_node(*pk[i], tk[j], b, here);
        if (here.empty())
            continue;
        used[j] = true;
        for (auto& hb : here)
            match_list(pk, site, tk, i + 1, used, hb, out);
        used[j] = false;
    }
}

void match_node(const PNode& p, const NodeP& t, const Binding& b, std::vector<Binding>& out)
{
    if (p.ctrl != t->ctrl)
        return;
    Binding nb = b;
    switch (p.attr.kind) {
    case Attr::Kind::None: break;
    case Attr::Kind::Lit:
        if (attr_of(*t) != p.attr.val)
            return;
        break;
    case Attr::Kind::Var: {
        auto it = nb.vars.find(p.attr.val);
        std::string v = attr_of(*t);
        if (it == nb.vars.end())
            nb.vars[p.attr.val] = v;
        else if (it->second != v)
            return;
        break;
    }
    case Attr::Kind::Fresh: return;
    }
    std::vector<const PNode*> pk;
    int site = -1;
    for (auto& it : p.kids) {
        if (it.node)
            pk.push_back(it.node.get());
        else
            site = it.site;
    }
    if (pk.size() > t->kids.size() || (site < 0 && pk.size() != t->kids.size()))
        return;
    std::vector<bool> used(t->kids.size(), false);
    match_list(pk, site, t->kids, 0, used, nb, out);
}

void anywhere(const PNode& p, const NodeP& t, Path& path, const Binding& seed,
              std::vector<std::pair<Path, Binding>>& out)
{
    std::vector<Binding> here;
    match_node(p, t, seed, here);
    for (auto& b : here)
        out.emplace_back(path, std::move(b));
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
        path.push_back(int(i));
        anywhere(p, t->kids[i], path, seed, out);
        path.pop_back();
    }
}

bool nested(const Path& a, const Path& b)
{
    std::size_t n = std::min(a.size(), b.size());
    return std::equal(a.begin(), a.begin() + n, b.begin());
}

const PNode& region_node(const std::vector<PItem>& r)
{
    if (r.size() != 1 || !r[0].node)
        throw PatternError("a lhs region must be a single entity");
    return *r[0].node;
}

void match_regions(const Pattern& lhs, const NodeP& t, std::size_t i, Occurrence& cur, std::vector<Occurrence>& out)
{
    if (i == lhs.regions.size()) {
        out.push_back(cur);
        return;
    }
    std::vector<std::pair<Path, Binding>> ms;
    Path p;
    anywhere(region_node(lhs.regions[i]), t, p, cur.binding, ms);
    for (auto& [path, b] : ms) {
        if (path.empty())
            continue;
        if (std::any_of(cur.paths.begin(), cur.paths.end(), [&](const Path& q) { return nested(q, path); }))
            continue;
        Occurrence next{cur.paths, b};
        next.paths.push_back(path);
        match_regions(lhs, t, i + 1, next, out);
    }
}

bool occurs_within(const PNode& p, const NodeP& t, const Binding& vars)
{
    std::vector<Binding> here;
    match_node(p, t, vars, here);
    if (!here.empty())
        return true;
    return std::any_of(t->kids.begin(), t->kids.end(), [&](const NodeP& k) { return occurs_within(p, k, vars); });
}

} // namespace

std::vector<std::pair<Path, Binding>> match_anywhere(const PNode& p, const NodeP& t, const Binding& seed)
{
    std::vector<std::pair<Path, Binding>> out;
    Path path;
    anywhere(p, t, path, seed, out);
    return out;
}

std::vector<Occurrence> find_matches(const Pattern& lhs, const NodeP& t)
{
    std::vector<Occurrence> out;
    Occurrence cur;
    match_regions(lhs, t, 0, cur, out);
    return out;
}

bool pattern_occurs(const Pattern& p, const NodeP& t)
{
    Occurrence cur;
    std::vector<Occurrence> out;
    match_regions(p, t, 0, cur, out);
    return !out.empty();
}

bool conditions_hold(const ReactionRule& r, const Occurrence& o)
{
    Binding vars;
    vars.vars = o.binding.vars;
    for (auto& c : r.conds) {
        auto it = o.binding.sites.find(c.site);
        if (it == o.binding.sites.end())
            continue;
        for (auto& n : it->second)
            if (occurs_within(*c.forbidden, n, vars))
                return false;
    }
    return true;
}

const NodeP& node_at(const NodeP& t, const Path& p)
{
    const NodeP* cur = &t;
    for (int i : p) {
        if (i < 0 || std::size_t(i) >= (*cur)->kids.size())
            throw ApplyError("stale occurrence path");
        cur = &(*cur)->kids[i];
    }
    return *cur;
}

static NodeP replace_at(const NodeP& t, const Path& p, std::size_t depth, const Nodes& repl)
{
    int idx = p[depth];
    if (idx < 0 || std::size_t(idx) >= t->kids.size())
        throw ApplyError("stale occurrence path");
    Nodes kids;
    kids.reserve(t->kids.size() + repl.size());
    for (std::size_t j = 0; j < t->kids.size(); ++j) {
        if (int(j) != idx) {
            kids.push_back(t->kids[j]);
        } else if (depth + 1 == p.size()) {
            kids.insert(kids.end(), repl.begin(), repl.end());
        } else {
            kids.push_back(replace_at(t->kids[j], p, depth + 1, repl));
        }
    }
    return t->with_kids(std::move(kids));
}

NodeP apply_at(const ReactionRule& r, const NodeP& t, const Occurrence& o)
{
    if (o.paths.size() != r.lhs.regions.size() || r.rhs.regions.size() != r.lhs.regions.size())
        throw ApplyError("occurrence does not fit rule " + r.name);
    for (std::size_t i = 0; i < o.paths.size(); ++i) {
        std::vector<Binding> here;
        match_node(region_node(r.lhs.regions[i]), node_at(t, o.paths[i]), o.binding, here);
        if (here.empty())
            throw ApplyError("stale occurrence for rule " + r.name);
    }
    if (!conditions_hold(r, o))
        throw ApplyError("application condition violated for rule " + r.name);

    Fresh fresh;
    fresh.corr = std::max(max_num(t, Ctrl::Check), max_num(t, Ctrl::CheckRes));
    fresh.intent = max_num(t, Ctrl::Intent);
    std::vector<std::pair<Path, Nodes>> reps;
    for (std::size_t i = 0; i < o.paths.size(); ++i)
        reps.emplace_back(o.paths[i], instantiate(r.rhs.regions[i], o.binding, &fresh));
    std::sort(reps.begin(), reps.end(), [](auto& a, auto& b) { return a.first > b.first; });
    NodeP cur = t;
    for (auto& [path, ns] : reps)
        cur = replace_at(cur, path, 0, ns);
    return cur;
}

std::vector<Enabled> enabled_reactions(const Catalog& rules, const NodeP& t)
{
    std::vector<const ReactionRule*> order;
    for (auto& r : rules)
        order.push_back(&r);
    std::stable_sort(order.begin(), order.end(),
                     [](const ReactionRule* a, const ReactionRule* b) { return a->priority > b->priority; });
    std::vector<Enabled> out;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && order[j]->priority == order[i]->priority) {
            for (auto& o : find_matches(order[j]->lhs, t))
                if (conditions_hold(*order[j], o))
                    out.push_back({order[j], std::move(o)});
            ++j;
        }
        if (!out.empty())
            return out;
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------- catalog

static void collect_sites(const std::vector<PItem>& items, std::vector<int>& out)
{
    for (auto& it : items) {
        if (it.node)
            collect_sites(it.node->kids, out);
        else
            out.push_back(it.site);
    }
}

static void check_lhs_lists(const std::vector<PItem>& items)
{
    int sites = 0;
    for (auto& it : items) {
        if (it.node)
            check_lhs_lists(it.node->kids);
        else
            ++sites;
        if (it.node && it.node->attr.kind == Attr::Kind::Fresh)
            throw PatternError("fresh ids are only allowed in a rhs");
    }
    if (sites > 1)
        throw PatternError("at most one site per lhs child list");
}

ReactionRule make_rule(std::string name, std::string group, int priority, const std::string& lhs,
                       const std::string& rhs, const std::vector<std::pair<int, std::string>>& conds)
{
    ReactionRule r{std::move(name), std::move(group), priority, parse_pattern(lhs), parse_pattern(rhs), {}};
    if (r.lhs.regions.size() != r.rhs.regions.size())
        throw PatternError(r.name + ": lhs and rhs region counts differ");
    std::vector<int> ls, rs;
    for (auto& reg : r.lhs.regions) {
        region_node(reg);
        check_lhs_lists(reg);
        collect_sites(reg, ls);
    }
    std::set<int> lset(ls.begin(), ls.end());
    if (lset.size() != ls.size())
        throw PatternError(r.name + ": lhs site indices must be distinct");
    for (auto& reg : r.rhs.regions)
        collect_sites(reg, rs);
    for (int s : rs)
        if (!lset.count(s))
            throw PatternError(r.name + ": rhs site $" + std::to_string(s) + " is not mapped");
    for (auto& [site, text] : conds) {
        if (!lset.count(site))
            throw PatternError(r.name + ": condition on unknown site");
        Pattern cp = parse_pattern(text);
        if (cp.regions.size() != 1)
            throw PatternError(r.name + ": condition must be a single entity");
        region_node(cp.regions[0]);
        r.conds.push_back({site, cp.regions[0][0].node, text});
    }
    return r;
}

Catalog can_ruleset(const std::set<std::string>& drop)
{
    Catalog c;
    auto add = [&](const char* name, const char* group, int prio, const char* lhs, const char* rhs,
                   std::vector<std::pair<int, std::string>> conds = {}) {
        if (!drop.count(name))
            c.push_back(make_rule(name, group, prio, lhs, rhs, conds));
    };

    // Belief entailment and update, applied atomically.
    add("check_T", "set_ops", 100, "Beliefs.($0 | Check{?l}.(B(?n) | $1) | B(?n))",
        "Beliefs.($0 | Check{?l}.$1 | B(?n))");
    add("check_end", "set_ops", 100, "Beliefs.($0 | Check{?l}) || CheckRes{?l}", "Beliefs.$0 || CheckRes.T");
    add("check_F", "set_ops", 100, "Beliefs.($0 | Check{?l}.(B(?n) | $1)) || CheckRes{?l}",
        "Beliefs.$0 || CheckRes.F", {{0, "B(?n)"}});
    add("check_false", "set_ops", 100, "Beliefs.($0 | Check{?l}.(False | $1)) || CheckRes{?l}",
        "Beliefs.$0 || CheckRes.F");
    add("add_in", "set_ops", 100, "Beliefs.($0 | Add.(B(?n) | $1) | B(?n))", "Beliefs.($0 | Add.$1 | B(?n))");
    add("add_notin", "set_ops", 100, "Beliefs.($0 | Add.(B(?n) | $1))", "Beliefs.($0 | Add.$1 | B(?n))",
        {{0, "B(?n)"}});
    add("add_end", "set_ops", 100, "Beliefs.($0 | Add)", "Beliefs.$0");
    add("del_in", "set_ops", 100, "Beliefs.($0 | Del.(B(?n) | $1) | B(?n))", "Beliefs.($0 | Del.$1)");
    add("del_notin", "set_ops", 100, "Beliefs.($0 | Del.(B(?n) | $1))", "Beliefs.($0 | Del.$1)", {{0, "B(?n)"}});
    add("delete_end", "set_ops", 100, "Beliefs.($0 | Del)", "Beliefs.$0");

    // Declarative goals.
    add("goal_persist", "goals", 95, "Goal.(SC.$0 | Try.(ReduceF | Cons.$1) | FC.$2)",
        "Goal.(SC.$0 | Try.($1 | Cons.$1) | FC.$2)");
    add("goal_persist_nil", "goals", 95,
        "Reduce.Goal.(SC.($0 | CheckRes.F) | Try.(Cons.$1) | FC.($2 | CheckRes.F))",
        "Goal.(SC.$0 | Try.($1 | Cons.$1) | FC.$2)");
    add("goal_check", "goals", 90, "Beliefs.$0 || Reduce.Goal.(SC.$1 | $2 | FC.$3)",
        "Beliefs.($0 | Check{!a}.$3 | Check{!b}.$1) || "
        "Reduce.Goal.(SC.($1 | CheckRes{!b}) | $2 | FC.($3 | CheckRes{!a}))",
        {{1, "CheckRes.$9"}, {3, "CheckRes.$9"}});
    add("goal_suc", "goals", 90, "Reduce.Goal.(SC.($0 | CheckRes.T) | $1)", "1");
    add("goal_fail", "goals", 90, "Reduce.Goal.(FC.($0 | CheckRes.T) | $1)", "Act{\"?false\"}.(Pre.False | Add | Del)");
    add("goal_reduce", "goals", 90,
        "Reduce.Goal.(SC.($0 | CheckRes.F) | Try.($1 | Cons.$2) | FC.($3 | CheckRes.F))",
        "Goal.(SC.$0 | Try.(Reduce.$1 | Cons.$2) | FC.$3)");
    add("goal_init", "goals", 85, "Reduce.Goal.(SC.($0 | CheckRes.F) | $1 | FC.($2 | CheckRes.F))",
        "Goal.(SC.$0 | Try.($1 | Cons.$1) | FC.$2)");

    // Concurrency.
    add("conc_suc", "concurrency", 80, "Reduce.Conc.(L | R)", "1");
    add("conc_fail_L", "concurrency", 80, "Conc.(L.ReduceF | $0)", "ReduceF");
    add("conc_fail_R", "concurrency", 80, "Conc.(R.ReduceF | $0)", "ReduceF");
    add("conc_nil_L", "concurrency", 75, "Reduce.Conc.(L.$0 | R)", "Conc.(L.Reduce.$0 | R)");
    add("conc_nil_R", "concurrency", 75, "Reduce.Conc.(L | R.$0)", "Conc.(L | R.Reduce.$0)");
    add("conc_L", "concurrency", 70, "Reduce.Conc.($0 | L.$1)", "Conc.($0 | L.Reduce.$1)");
    add("conc_R", "concurrency", 70, "Reduce.Conc.($0 | R.$1)", "Conc.($0 | R.Reduce.$1)");

    // Failure recovery.
    add("try_succ", "recovery", 65, "Reduce.Try.(Cons.$0)", "1");
    add("try_failure", "recovery", 65, "Try.(ReduceF | Cons.$0)", "Reduce.$0");
    add("try_seq", "recovery", 60, "Reduce.Try.($0 | Cons.$1)", "Try.(Reduce.$0 | Cons.$1)");

    // Sequencing.
    add("seq_succ", "sequencing", 55, "Reduce.Seq.(Cons.$0)", "Reduce.$0");
    add("seq_fail", "sequencing", 55, "Seq.(ReduceF | Cons.$0)", "ReduceF");
    add("reduce_seq", "sequencing", 50, "Reduce.Seq.($0 | Cons.$1)", "Seq.(Reduce.$0 | Cons.$1)");

    // Plan selection.
    add("select_plan_T", "selection", 45, "Reduce.PlanSet{?e}.($0 | Plan{?p}.(CheckRes.T | Pre.$1 | PB.$2))",
        "Try.($2 | Cons.PlanSet{?e}.$0)");
    add("select_plan_F", "selection", 45, "Reduce.PlanSet{?e}.$0", "ReduceF",
        {{0, "CheckToken"}, {0, "CheckRes.T"}});
    add("reset_planset", "selection", 45, "Try.($0 | Cons.PlanSet{?e}.($1 | Plan{?p}.(CheckRes.$2 | $3)))",
        "Try.($0 | Cons.PlanSet{?e}.($1 | Plan{?p}.(CheckToken | $3)))");
    add("select_plan_check", "selection", 40,
        "Beliefs.$0 || Reduce.PlanSet{?e}.($1 | Plan{?p}.(CheckToken | Pre.$2 | $3))",
        "Beliefs.($0 | Check{!l}.$2) || Reduce.PlanSet{?e}.($1 | Plan{?p}.(CheckRes{!l} | Pre.$2 | $3))");

    // Events.
    add("reduce_event", "event", 35, "Reduce.E{?e} || Plans.($0 | PlanSet{?e}.$1)",
        "PlanSet{?e}.$1 || Plans.($0 | PlanSet{?e}.$1)");

    // Actions.
    add("act_T", "act", 30, "Beliefs.$0 || Reduce.Act{?a}.(CheckRes.T | Add.$1 | Del.$2 | $3)",
        "Beliefs.($0 | Add.$1 | Del.$2) || 1");
    add("act_F", "act", 30, "Reduce.Act{?a}.(CheckRes.F | $0)", "ReduceF");
    add("act_check", "act", 25, "Beliefs.$0 || Reduce.Act{?a}.(Pre.$1 | $2)",
        "Beliefs.($0 | Check{!l}.$1) || Reduce.Act{?a}.(CheckRes{!l} | Pre.$1 | $2)", {{2, "CheckRes.$9"}});

    // Agent level.
    add("intention_done_F", "agent", 20, "Intent.ReduceF", "1");
    add("intention_done_succ", "agent", 20, "Intent.Reduce", "1");
    add("A_event", "agent", 10, "Desires.($0 | E{?e}) || Intentions.$1",
        "Desires.$0 || Intentions.($1 | Intent{!i}.E{?e})");
    add("intention_step", "agent", 10, "Intent{?i}.$0", "Intent{?i}.Reduce.$0", {{0, "Reduce.$9"}});
    return c;
}

bool in_catalog(const Catalog& c, const std::string& name)
{
    return std::any_of(c.begin(), c.end(), [&](const ReactionRule& r) { return r.name == name; });
}

std::string catalog_report(const Catalog& c)
{
    std::ostringstream os;
    os << "rules: " << c.size() << "\n";
    std::vector<const ReactionRule*> order;
    for (auto& r : c)
        order.push_back(&r);
    std::stable_sort(order.begin(), order.end(),
                     [](const ReactionRule* a, const ReactionRule* b) { return a->priority > b->priority; });
    for (auto* r : order) {
        os << r->priority << "\t" << r->group << "\t" << r->name << "\n\t" << r->lhs.text << "\n\t-> "
           << r->rhs.text << "\n";
        for (auto& cd : r->conds)
            os << "\tif $" << cd.site << " has no " << cd.text << "\n";
    }
    return os.str();
}

} // namespace canbdi
