#include "canbdi/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace canbdi {

Formula Formula::conj(std::vector<Literal> ls)
{
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    if (ls.empty())
        return truth();
    return {Kind::Conj, std::move(ls)};
}

std::string Formula::str() const
{
    switch (kind) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Conj: break;
    }
    std::string s;
    for (size_t i = 0; i < lits.size(); ++i) {
        if (i)
            s += " & ";
        s += lits[i].str();
    }
    return s;
}

std::string print_formula(const Formula& f) { return f.str(); }

namespace {

Body make(PlanBody p) { return std::make_shared<const PlanBody>(std::move(p)); }

} // namespace

Body mk_nil() { return make({}); }

Body mk_act(ActionSpec a)
{
    PlanBody p;
    p.kind = PlanBody::Kind::Act;
    p.act = std::move(a);
    return make(std::move(p));
}

Body mk_event(std::string e)
{
    PlanBody p;
    p.kind = PlanBody::Kind::Event;
    p.event = std::move(e);
    return make(std::move(p));
}

static Body mk_pair(PlanBody::Kind k, Body a, Body b)
{
    PlanBody p;
    p.kind = k;
    p.left = std::move(a);
    p.right = std::move(b);
    return make(std::move(p));
}

Body mk_seq(Body a, Body b) { return mk_pair(PlanBody::Kind::Seq, std::move(a), std::move(b)); }
Body mk_conc(Body a, Body b) { return mk_pair(PlanBody::Kind::Conc, std::move(a), std::move(b)); }
Body mk_try(Body a, Body b) { return mk_pair(PlanBody::Kind::Try, std::move(a), std::move(b)); }

Body mk_goal(Formula s, Body p, Formula f)
{
    PlanBody g;
    g.kind = PlanBody::Kind::Goal;
    g.succ = std::move(s);
    g.left = std::move(p);
    g.fail = std::move(f);
    return make(std::move(g));
}

Body mk_planset(std::string e, std::vector<PlanEntry> delta)
{
    PlanBody p;
    p.kind = PlanBody::Kind::PlanSet;
    p.event = std::move(e);
    p.plans = std::move(delta);
    return make(std::move(p));
}

static std::string lits_key(const std::set<Literal>& s)
{
    std::string r = "{";
    for (auto& l : s)
        r += l.str() + ",";
    return r + "}";
}

std::string body_key(const Body& b)
{
    using K = PlanBody::Kind;
    switch (b->kind) {
    case K::Nil: return "nil";
    case K::Act:
        return "act[" + b->act.name + "|" + b->act.pre.str() + "|" + lits_key(b->act.add) + "|" +
               lits_key(b->act.del) + "]";
    case K::Event: return "ev[" + b->event + "]";
    case K::Seq: return "seq(" + body_key(b->left) + "," + body_key(b->right) + ")";
    case K::Conc: return "conc(" + body_key(b->left) + "," + body_key(b->right) + ")";
    case K::Try: return "try(" + body_key(b->left) + "," + body_key(b->right) + ")";
    case K::Goal:
        return "goal(" + b->succ.str() + "," + body_key(b->left) + "," + b->fail.str() + ")";
    case K::PlanSet: {
        std::vector<std::string> es;
        for (auto& e : b->plans)
            es.push_back(e.id + ":" + e.context.str() + ":" + body_key(e.body));
        std::sort(es.begin(), es.end());
        std::string r = "ps[" + b->event + "](";
        for (auto& e : es)
            r += e + ";";
        return r + ")";
    }
    }
    return "?";
}

bool body_equal(const Body& a, const Body& b) { return body_key(a) == body_key(b); }

bool is_user_body(const Body& b)
{
    using K = PlanBody::Kind;
    switch (b->kind) {
    case K::Nil:
    case K::Try:
    case K::PlanSet: return false;
    case K::Act:
    case K::Event: return true;
    case K::Seq:
    case K::Conc: return is_user_body(b->left) && is_user_body(b->right);
    case K::Goal: return is_user_body(b->left);
    }
    return false;
}

static void collect_body(const Body& b, std::set<std::string>& atoms, std::set<std::string>& events)
{
    using K = PlanBody::Kind;
    auto fl = [&](const Formula& f) {
        for (auto& l : f.lits)
            atoms.insert(l.atom);
    };
    switch (b->kind) {
    case K::Nil: break;
    case K::Act:
        fl(b->act.pre);
        for (auto& l : b->act.add)
            atoms.insert(l.atom);
        for (auto& l : b->act.del)
            atoms.insert(l.atom);
        break;
    case K::Event: events.insert(b->event); break;
    case K::Seq:
    case K::Conc:
    case K::Try:
        collect_body(b->left, atoms, events);
        collect_body(b->right, atoms, events);
        break;
    case K::Goal:
        fl(b->succ);
        fl(b->fail);
        collect_body(b->left, atoms, events);
        break;
    case K::PlanSet:
        events.insert(b->event);
        for (auto& e : b->plans) {
            fl(e.context);
            collect_body(e.body, atoms, events);
        }
        break;
    }
}

void AgentConfig::intern()
{
    std::set<std::string> atoms, evs;
    for (auto& l : beliefs)
        atoms.insert(l.atom);
    for (auto& e : events)
        evs.insert(e);
    for (auto& i : intentions)
        collect_body(i.body, atoms, evs);
    for (auto& p : plans) {
        evs.insert(p.trigger);
        for (auto& l : p.context.lits)
            atoms.insert(l.atom);
        collect_body(p.body, atoms, evs);
    }
    for (auto& [n, a] : actions)
        collect_body(mk_act(a), atoms, evs);
    atom_table.assign(atoms.begin(), atoms.end());
    event_table.assign(evs.begin(), evs.end());
}

int AgentConfig::atom_index(const std::string& a) const
{
    auto it = std::lower_bound(atom_table.begin(), atom_table.end(), a);
    if (it == atom_table.end() || *it != a)
        return 0;
    return int(it - atom_table.begin()) + 1;
}

int AgentConfig::next_intention_id() const
{
    int m = 0;
    for (auto& i : intentions)
        m = std::max(m, i.id);
    return m + 1;
}

std::string config_key(const AgentConfig& c)
{
    std::vector<std::string> ev(c.events.begin(), c.events.end());
    std::sort(ev.begin(), ev.end());
    std::vector<std::string> in;
    for (auto& i : c.intentions)
        in.push_back(body_key(i.body));
    std::sort(in.begin(), in.end());
    std::vector<std::string> pl;
    for (auto& p : c.plans)
        pl.push_back(p.id + "@" + p.trigger + ":" + p.context.str() + ":" + body_key(p.body));
    std::sort(pl.begin(), pl.end());
    std::ostringstream os;
    os << "E{";
    for (auto& e : ev)
        os << e << ",";
    os << "}B{";
    for (auto& l : c.beliefs)
        os << l.str() << ",";
    os << "}G{";
    for (auto& i : in)
        os << i << ";";
    os << "}P{";
    for (auto& p : pl)
        os << p << ";";
    os << "}";
    return os.str();
}

bool config_equal(const AgentConfig& a, const AgentConfig& b) { return config_key(a) == config_key(b); }

std::string Diagnostic::str(const std::string& file) const
{
    std::ostringstream os;
    os << file << ":" << line << ":" << col << ": "
       << (severity == Severity::Error ? "error" : "warning") << ": " << message;
    return os.str();
}

ActionSpec desugar_basic(BasicOp op, const Formula& phi)
{
    ActionSpec a;
    switch (op) {
    case BasicOp::Query:
        a.pre = phi;
        a.name = (phi.kind == Formula::Kind::Conj && phi.lits.size() > 1) ? "?(" + phi.str() + ")"
                                                                         : "?" + phi.str();
        break;
    case BasicOp::Add:
    case BasicOp::Del:
        if (phi.kind != Formula::Kind::Conj || phi.lits.size() != 1)
            throw std::invalid_argument("belief update takes exactly one literal");
        return desugar_basic(op, phi.lits[0]);
    }
    return a;
}

ActionSpec desugar_basic(BasicOp op, const Literal& b)
{
    if (op == BasicOp::Query)
        return desugar_basic(op, Formula::conj({b}));
    ActionSpec a;
    if (op == BasicOp::Add) {
        a.name = "+" + b.str();
        a.add.insert(b);
    } else {
        a.name = "-" + b.str();
        a.del.insert(b);
    }
    return a;
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 0, col = 0;
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& m) : std::runtime_error(m), line(l), col(c) {}
};

std::vector<Token> lex_line(const std::string& s, int lineno)
{
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](Tok k, std::string t, size_t at) { out.push_back({k, std::move(t), lineno, int(at) + 1}); };
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/'))
            break;
        if (std::isalpha(c) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
                ++j;
            push(Tok::Ident, s.substr(i, j - i), i);
            i = j;
            continue;
        }
        if (s.compare(i, 2, "(|") == 0 || s.compare(i, 2, "|)") == 0 || s.compare(i, 2, "|>") == 0) {
            push(Tok::Sym, s.substr(i, 2), i);
            i += 2;
            continue;
        }
        if (s.compare(i, 2, "<-") == 0 || s.compare(i, 2, "||") == 0) {
            push(Tok::Sym, s.substr(i, 2), i);
            i += 2;
            continue;
        }
        // UTF-8 spellings of the logical symbols.
        if (s.compare(i, 3, "∧") == 0) { // and
            push(Tok::Sym, "&", i);
            i += 3;
            continue;
        }
        if (s.compare(i, 2, "¬") == 0) { // not
            push(Tok::Sym, "~", i);
            i += 2;
            continue;
        }
        if (s.compare(i, 3, "▷") == 0) { // try
            push(Tok::Sym, "|>", i);
            i += 3;
            continue;
        }
        if (s.compare(i, 3, "∥") == 0) { // parallel
            push(Tok::Sym, "||", i);
            i += 3;
            continue;
        }
        if (std::string(":;(),&~!?+-{}").find(char(c)) != std::string::npos) {
            push(Tok::Sym, std::string(1, char(c) == '!' ? '~' : char(c)), i);
            ++i;
            continue;
        }
        throw ParseError(lineno, int(i) + 1, std::string("unexpected character '") + char(c) + "'");
    }
    out.push_back({Tok::End, "", lineno, int(s.size()) + 1});
    return out;
}

struct LineParser {
    std::vector<Token> toks;
    size_t pos = 0;
    const std::map<std::string, ActionSpec>* actions = nullptr;

    const Token& peek() const { return toks[pos]; }
    bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& m) const { throw ParseError(peek().line, peek().col, m); }

    void expect(const char* s)
    {
        if (!at_sym(s))
            fail(std::string("expected '") + s + "'" + (peek().kind == Tok::End ? " at end of line" : " before '" + peek().text + "'"));
        ++pos;
    }

    std::string ident()
    {
        if (peek().kind != Tok::Ident)
            fail("expected identifier");
        return toks[pos++].text;
    }

    void end()
    {
        if (peek().kind != Tok::End)
            fail("unexpected '" + peek().text + "'");
    }

    Literal literal()
    {
        Literal l;
        if (at_sym("~")) {
            ++pos;
            l.negative = true;
        }
        l.atom = ident();
        if (l.atom == "true" || l.atom == "false")
            fail("'" + l.atom + "' is not an atom");
        return l;
    }

    Formula formula()
    {
        if (at_ident("true")) {
            ++pos;
            return Formula::truth();
        }
        if (at_ident("false")) {
            ++pos;
            return Formula::falsity();
        }
        std::vector<Literal> ls{literal()};
        while (at_sym("&")) {
            ++pos;
            ls.push_back(literal());
        }
        return Formula::conj(std::move(ls));
    }

    std::vector<Literal> lit_list(const char* close)
    {
        std::vector<Literal> ls;
        if (at_sym(close) || peek().kind == Tok::End)
            return ls;
        ls.push_back(literal());
        while (at_sym(",")) {
            ++pos;
            ls.push_back(literal());
        }
        return ls;
    }

    Body body()
    {
        Body a = conc();
        if (at_sym("|>")) {
            ++pos;
            return mk_try(a, body());
        }
        return a;
    }

    Body conc()
    {
        Body a = seq();
        if (at_sym("||")) {
            ++pos;
            return mk_conc(a, conc());
        }
        return a;
    }

    Body seq()
    {
        Body a = prim();
        if (at_sym(";")) {
            ++pos;
            return mk_seq(a, seq());
        }
        return a;
    }

    Body prim()
    {
        if (at_sym("(")) {
            ++pos;
            Body b = body();
            expect(")");
            return b;
        }
        if (at_sym("?")) {
            ++pos;
            Formula f;
            if (at_sym("(")) {
                ++pos;
                f = formula();
                expect(")");
            } else if (at_ident("true") || at_ident("false")) {
                f = formula();
            } else {
                f = Formula::conj({literal()});
            }
            return mk_act(desugar_basic(BasicOp::Query, f));
        }
        if (at_sym("+") || at_sym("-")) {
            bool add = at_sym("+");
            ++pos;
            return mk_act(desugar_basic(add ? BasicOp::Add : BasicOp::Del, literal()));
        }
        if (at_ident("goal")) {
            ++pos;
            expect("(");
            Formula s = formula();
            expect(",");
            Body p = body();
            expect(",");
            Formula f = formula();
            expect(")");
            return mk_goal(std::move(s), std::move(p), std::move(f));
        }
        std::string n = ident();
        if (n == "nil")
            return mk_nil();
        if (n == "true" || n == "false")
            fail("'" + n + "' is not a program");
        if (at_sym(":")) {
            ++pos;
            expect("(|");
            std::vector<PlanEntry> delta;
            while (!at_sym("|)")) {
                if (!delta.empty())
                    expect(",");
                PlanEntry e;
                e.id = ident();
                expect(":");
                e.context = formula();
                expect("<-");
                e.body = body();
                delta.push_back(std::move(e));
            }
            expect("|)");
            return mk_planset(n, std::move(delta));
        }
        auto it = actions->find(n);
        if (it != actions->end())
            return mk_act(it->second);
        return mk_event(n);
    }
};

} // namespace

ParseResult parse_agent(const std::string& text)
{
    ParseResult res;
    AgentConfig cfg;
    std::set<std::string> plan_ids;
    // Bodies reference actions that may be declared later: parse declarations first.
    struct Pending {
        int line;
        std::vector<Token> toks;
        size_t pos;
        enum { Plan, Intention } kind;
        std::string id, trigger;
        Formula ctx;
    };
    std::vector<Pending> pending;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        try {
            LineParser lp;
            lp.toks = lex_line(line, lineno);
            lp.actions = &cfg.actions;
            if (lp.peek().kind == Tok::End)
                continue;
            std::string kw = lp.ident();
            if (kw == "beliefs") {
                lp.expect(":");
                for (auto& l : lp.lit_list(""))
                    cfg.beliefs.insert(l);
                lp.end();
            } else if (kw == "events") {
                lp.expect(":");
                if (lp.peek().kind != Tok::End) {
                    cfg.events.push_back(lp.ident());
                    while (lp.at_sym(",")) {
                        ++lp.pos;
                        cfg.events.push_back(lp.ident());
                    }
                }
                lp.end();
            } else if (kw == "action") {
                int c = lp.peek().col;
                ActionSpec a;
                a.name = lp.ident();
                lp.expect(":");
                a.pre = lp.formula();
                lp.expect("<-");
                bool seen_add = false, seen_del = false;
                while (lp.at_sym("+") || lp.at_sym("-")) {
                    bool add = lp.at_sym("+");
                    if ((add && seen_add) || (!add && seen_del))
                        lp.fail("repeated update set");
                    (add ? seen_add : seen_del) = true;
                    ++lp.pos;
                    lp.expect("{");
                    for (auto& l : lp.lit_list("}"))
                        (add ? a.add : a.del).insert(l);
                    lp.expect("}");
                }
                lp.end();
                if (cfg.actions.count(a.name))
                    throw ParseError(lineno, c, "duplicate action '" + a.name + "'");
                cfg.actions.emplace(a.name, a);
            } else if (kw == "plan") {
                Pending p{lineno, {}, 0, Pending::Plan, {}, {}, {}};
                int c = lp.peek().col;
                p.id = lp.ident();
                if (!plan_ids.insert(p.id).second)
                    throw ParseError(lineno, c, "duplicate plan '" + p.id + "'");
                lp.expect(":");
                p.trigger = lp.ident();
                lp.expect(":");
                p.ctx = lp.formula();
                lp.expect("<-");
                p.toks = std::move(lp.toks);
                p.pos = lp.pos;
                pending.push_back(std::move(p));
            } else if (kw == "intention") {
                lp.expect(":");
                Pending p{lineno, std::move(lp.toks), lp.pos, Pending::Intention, {}, {}, {}};
                pending.push_back(std::move(p));
            } else {
                throw ParseError(lineno, lp.toks[0].col, "unknown section '" + kw + "'");
            }
        } catch (const ParseError& e) {
            res.diags.push_back({Diagnostic::Severity::Error, e.line, e.col, e.what()});
        } catch (const std::invalid_argument& e) {
            res.diags.push_back({Diagnostic::Severity::Error, lineno, 1, e.what()});
        }
    }
    for (auto& p : pending) {
        try {
            LineParser lp;
            lp.toks = std::move(p.toks);
            lp.pos = p.pos;
            lp.actions = &cfg.actions;
            Body b = lp.body();
            lp.end();
            if (p.kind == Pending::Plan)
                cfg.plans.push_back({p.id, p.trigger, p.ctx, b});
            else
                cfg.intentions.push_back({cfg.next_intention_id(), b});
        } catch (const ParseError& e) {
            res.diags.push_back({Diagnostic::Severity::Error, e.line, e.col, e.what()});
        }
    }
    if (!res.diags.empty()) {
        std::stable_sort(res.diags.begin(), res.diags.end(),
                         [](auto& a, auto& b) { return a.line < b.line; });
        return res;
    }
    cfg.intern();
    res.config = std::move(cfg);
    return res;
}

// ---------------------------------------------------------------- validation

static void body_events(const Body& b, std::set<std::string>& out)
{
    std::set<std::string> atoms;
    collect_body(b, atoms, out);
}

std::vector<Diagnostic> validate_agent(const AgentConfig& cfg)
{
    std::vector<Diagnostic> out;
    std::map<std::string, std::set<std::string>> calls;
    std::set<std::string> triggers, used;
    for (auto& p : cfg.plans) {
        triggers.insert(p.trigger);
        body_events(p.body, calls[p.trigger]);
        body_events(p.body, used);
    }
    for (auto& e : cfg.events)
        used.insert(e);
    for (auto& i : cfg.intentions)
        body_events(i.body, used);

    // Cycle detection over the trigger relation.
    std::map<std::string, int> colour;
    std::vector<std::string> stack;
    std::set<std::string> reported;
    std::function<void(const std::string&)> dfs = [&](const std::string& e) {
        colour[e] = 1;
        stack.push_back(e);
        for (auto& n : calls[e]) {
            if (colour[n] == 1) {
                auto it = std::find(stack.begin(), stack.end(), n);
                std::string cyc;
                for (; it != stack.end(); ++it)
                    cyc += *it + " -> ";
                cyc += n;
                if (reported.insert(n).second)
                    out.push_back({Diagnostic::Severity::Error, 0, 0, "recursive plans: " + cyc});
            } else if (colour[n] == 0) {
                dfs(n);
            }
        }
        stack.pop_back();
        colour[e] = 2;
    };
    for (auto& t : triggers)
        if (colour[t] == 0)
            dfs(t);

    for (auto& e : used)
        if (!triggers.count(e))
            out.push_back({Diagnostic::Severity::Warning, 0, 0, "event '" + e + "' has no relevant plans"});

    std::function<void(const Body&)> check_acts = [&](const Body& b) {
        using K = PlanBody::Kind;
        if (!b)
            return;
        if (b->kind == K::Act) {
            for (auto& l : b->act.add)
                if (b->act.del.count(l)) {
                    out.push_back({Diagnostic::Severity::Warning, 0, 0,
                                   "action '" + b->act.name + "' both adds and deletes " + l.str()});
                    break;
                }
        }
        check_acts(b->left);
        check_acts(b->right);
        for (auto& e : b->plans)
            check_acts(e.body);
    };
    for (auto& [n, a] : cfg.actions)
        check_acts(mk_act(a));
    return out;
}

// ---------------------------------------------------------------- printing

static std::string act_text(const ActionSpec& a) { return a.name; }

std::string print_body(const Body& b)
{
    using K = PlanBody::Kind;
    auto wrap = [](const Body& x, bool paren) {
        std::string s = print_body(x);
        return paren ? "(" + s + ")" : s;
    };
    switch (b->kind) {
    case K::Nil: return "nil";
    case K::Act: return act_text(b->act);
    case K::Event: return b->event;
    case K::Seq:
        return wrap(b->left, b->left->kind == K::Seq || b->left->kind == K::Conc || b->left->kind == K::Try) +
               "; " + wrap(b->right, b->right->kind == K::Conc || b->right->kind == K::Try);
    case K::Conc:
        return wrap(b->left, b->left->kind == K::Conc || b->left->kind == K::Try) + " || " +
               wrap(b->right, b->right->kind == K::Try);
    case K::Try: return wrap(b->left, b->left->kind != K::Act && b->left->kind != K::Event && b->left->kind != K::Nil &&
                                          b->left->kind != K::Goal && b->left->kind != K::PlanSet) +
                        " |> " + wrap(b->right, b->right->kind == K::Try);
    case K::Goal:
        return "goal(" + b->succ.str() + ", " + print_body(b->left) + ", " + b->fail.str() + ")";
    case K::PlanSet: {
        std::string s = b->event + ":(|";
        for (size_t i = 0; i < b->plans.size(); ++i) {
            if (i)
                s += ", ";
            s += b->plans[i].id + " : " + b->plans[i].context.str() + " <- " + print_body(b->plans[i].body);
        }
        return s + "|)";
    }
    }
    return "?";
}

static void gather_actions(const Body& b, std::map<std::string, ActionSpec>& out)
{
    if (!b)
        return;
    if (b->kind == PlanBody::Kind::Act) {
        char c = b->act.name.empty() ? 0 : b->act.name[0];
        if (c != '?' && c != '+' && c != '-')
            out.emplace(b->act.name, b->act);
    }
    gather_actions(b->left, out);
    gather_actions(b->right, out);
    for (auto& e : b->plans)
        gather_actions(e.body, out);
}

static std::string lit_set(const std::set<Literal>& s)
{
    std::string r;
    for (auto& l : s) {
        if (!r.empty())
            r += ", ";
        r += l.str();
    }
    return r;
}

std::string print_agent(const AgentConfig& cfg)
{
    std::ostringstream os;
    os << "beliefs: " << lit_set(cfg.beliefs) << "\n";
    os << "events: ";
    for (size_t i = 0; i < cfg.events.size(); ++i)
        os << (i ? ", " : "") << cfg.events[i];
    os << "\n";
    std::map<std::string, ActionSpec> acts = cfg.actions;
    for (auto& p : cfg.plans)
        gather_actions(p.body, acts);
    for (auto& i : cfg.intentions)
        gather_actions(i.body, acts);
    for (auto& [n, a] : acts) {
        os << "action " << n << ": " << a.pre.str() << " <-";
        if (!a.add.empty())
            os << " +{" << lit_set(a.add) << "}";
        if (!a.del.empty())
            os << " -{" << lit_set(a.del) << "}";
        os << "\n";
    }
    for (auto& p : cfg.plans)
        os << "plan " << p.id << ": " << p.trigger << " : " << p.context.str() << " <- " << print_body(p.body) << "\n";
    for (auto& i : cfg.intentions)
        os << "intention: " << print_body(i.body) << "\n";
    return os.str();
}

} // namespace canbdi
