#include "canbdi/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace canbdi {

bool pattern_holds(const StatePattern& p, const NodeP& state)
{
    using K = StatePattern::Kind;
    switch (p.kind) {
    case K::Atomic: return pattern_occurs(p.pattern, state);
    case K::Not: return !pattern_holds(p.operands.at(0), state);
    case K::And:
        return std::all_of(p.operands.begin(), p.operands.end(),
                           [&](const StatePattern& o) { return pattern_holds(o, state); });
    case K::Or:
        return std::any_of(p.operands.begin(), p.operands.end(),
                           [&](const StatePattern& o) { return pattern_holds(o, state); });
    }
    return false;
}

// ---------------------------------------------------------------- CTL syntax

namespace {

struct CtlTok {
    std::string text;
    bool ident = false;
};

std::vector<CtlTok> ctl_lex(const std::string& s)
{
    std::vector<CtlTok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({s.substr(i, j - i), true});
            i = j;
        } else if (s.compare(i, 2, "->") == 0) {
            out.push_back({"->", false});
            i += 2;
        } else if (std::string("!&|()[]~").find(c) != std::string::npos) {
            out.push_back({std::string(1, c == '~' ? '!' : c), false});
            ++i;
        } else {
            throw PropertyError("unexpected character '" + std::string(1, c) + "' in formula");
        }
    }
    return out;
}

CtlP mk(Ctl::Op op, std::vector<CtlP> kids = {}, std::string atom = {})
{
    auto c = std::make_shared<Ctl>();
    c->op = op;
    c->kids = std::move(kids);
    c->atom = std::move(atom);
    return c;
}

// Path-level node used only while parsing bracketed sugar.
enum class PathOp { State, F, G, X, And, U };
struct PathNode {
    PathOp op = PathOp::State;
    CtlP state;
    std::vector<std::shared_ptr<PathNode>> kids;
};
using PathP = std::shared_ptr<PathNode>;

const std::set<std::string> kReserved = {"EX", "AX", "EF", "AF", "EG", "AG", "E", "A", "F", "G", "X", "U", "true", "false"};

struct CtlParser {
    std::vector<CtlTok> t;
    std::size_t i = 0;

    bool at(const char* s) const { return i < t.size() && t[i].text == s; }
    void expect(const char* s)
    {
        if (!at(s))
            throw PropertyError(std::string("expected '") + s + "'" + (i < t.size() ? " before '" + t[i].text + "'" : " at end"));
        ++i;
    }

    CtlP formula()
    {
        CtlP l = disj();
        if (at("->")) {
            ++i;
            return mk(Ctl::Op::Implies, {l, formula()});
        }
        return l;
    }
    CtlP disj()
    {
        CtlP l = conj();
        while (at("|")) {
            ++i;
            l = mk(Ctl::Op::Or, {l, conj()});
        }
        return l;
    }
    CtlP conj()
    {
        CtlP l = unary();
        while (at("&")) {
            ++i;
            l = mk(Ctl::Op::And, {l, unary()});
        }
        return l;
    }
    CtlP unary()
    {
        if (i >= t.size())
            throw PropertyError("unexpected end of formula");
        const std::string s = t[i].text;
        static const std::map<std::string, Ctl::Op> un = {{"EX", Ctl::Op::EX}, {"AX", Ctl::Op::AX}, {"EF", Ctl::Op::EF},
                                                          {"AF", Ctl::Op::AF}, {"EG", Ctl::Op::EG}, {"AG", Ctl::Op::AG}};
        if (s == "!") {
            ++i;
            return mk(Ctl::Op::Not, {unary()});
        }
        if (auto it = un.find(s); it != un.end()) {
            ++i;
            return mk(it->second, {unary()});
        }
        if ((s == "E" || s == "A") && i + 1 < t.size() && t[i + 1].text == "[") {
            i += 2;
            PathP p = path();
            expect("]");
            return lower(s == "E", p);
        }
        if (s == "(") {
            ++i;
            CtlP f = formula();
            expect(")");
            return f;
        }
        if (s == "true") {
            ++i;
            return mk(Ctl::Op::True);
        }
        if (s == "false") {
            ++i;
            return mk(Ctl::Op::False);
        }
        if (t[i].ident && !kReserved.count(s)) {
            ++i;
            return mk(Ctl::Op::Atom, {}, s);
        }
        throw PropertyError("unexpected '" + s + "' in formula");
    }

    PathP path()
    {
        PathP l = path_conj();
        if (at("U")) {
            ++i;
            auto n = std::make_shared<PathNode>();
            n->op = PathOp::U;
            n->kids = {l, path_conj()};
            return n;
        }
        return l;
    }
    PathP path_conj()
    {
        PathP l = path_unary();
        while (at("&")) {
            ++i;
            auto n = std::make_shared<PathNode>();
            n->op = PathOp::And;
            n->kids = {l, path_unary()};
            l = n;
        }
        return l;
    }
    PathP path_unary()
    {
        auto n = std::make_shared<PathNode>();
        if (at("F") || at("G") || at("X")) {
            n->op = at("F") ? PathOp::F : at("G") ? PathOp::G : PathOp::X;
            ++i;
            n->kids = {path_unary()};
            return n;
        }
        if (at("(")) {
            // A parenthesised state formula, else a parenthesised path formula.
            std::size_t save = i;
            try {
                ++i;
                CtlP f = formula();
                expect(")");
                n->op = PathOp::State;
                n->state = f;
                return n;
            } catch (const PropertyError&) {
                i = save + 1;
            }
            PathP p = path();
            expect(")");
            return p;
        }
        n->op = PathOp::State;
        n->state = unary();
        return n;
    }

    static CtlP state_of(const PathP& p)
    {
        if (p->op == PathOp::And)
            return mk(Ctl::Op::And, {state_of(p->kids[0]), state_of(p->kids[1])});
        if (p->op != PathOp::State)
            throw PropertyError("unsupported path formula");
        return p->state;
    }

    static CtlP lower(bool exists, const PathP& p)
    {
        using O = Ctl::Op;
        switch (p->op) {
        case PathOp::State: throw PropertyError("path quantifier needs a temporal operator");
        case PathOp::X: return mk(exists ? O::EX : O::AX, {state_of(p->kids[0])});
        case PathOp::U: return mk(exists ? O::EU : O::AU, {state_of(p->kids[0]), state_of(p->kids[1])});
        case PathOp::G: {
            const PathP& k = p->kids[0];
            if (k->op == PathOp::F && !exists)
                return mk(O::AG, {mk(O::AF, {state_of(k->kids[0])})});
            return mk(exists ? O::EG : O::AG, {state_of(k)});
        }
        case PathOp::F: {
            const PathP& k = p->kids[0];
            if (k->op == PathOp::And && k->kids[1]->op == PathOp::X)
                return mk(exists ? O::EFX : O::AFX, {state_of(k->kids[0]), state_of(k->kids[1]->kids[0])});
            return mk(exists ? O::EF : O::AF, {state_of(k)});
        }
        case PathOp::And: break;
        }
        throw PropertyError("unsupported path formula");
    }
};

} // namespace

CtlP parse_ctl(const std::string& text)
{
    CtlParser p{ctl_lex(text)};
    if (p.t.empty())
        throw PropertyError("empty formula");
    CtlP f = p.formula();
    if (p.i != p.t.size())
        throw PropertyError("trailing '" + p.t[p.i].text + "' in formula");
    return f;
}

std::string print_ctl(const CtlP& f)
{
    using O = Ctl::Op;
    auto k = [&](std::size_t n) { return print_ctl(f->kids[n]); };
    switch (f->op) {
    case O::True: return "true";
    case O::False: return "false";
    case O::Atom: return f->atom;
    case O::Not: return "!" + k(0);
    case O::And: return "(" + k(0) + " & " + k(1) + ")";
    case O::Or: return "(" + k(0) + " | " + k(1) + ")";
    case O::Implies: return "(" + k(0) + " -> " + k(1) + ")";
    case O::EX: return "EX " + k(0);
    case O::AX: return "AX " + k(0);
    case O::EF: return "EF " + k(0);
    case O::AF: return "AF " + k(0);
    case O::EG: return "EG " + k(0);
    case O::AG: return "AG " + k(0);
    case O::EU: return "E[" + k(0) + " U " + k(1) + "]";
    case O::AU: return "A[" + k(0) + " U " + k(1) + "]";
    case O::EFX: return "E[F(" + k(0) + " & X " + k(1) + ")]";
    case O::AFX: return "A[F(" + k(0) + " & X " + k(1) + ")]";
    }
    return "?";
}

void ctl_atoms(const CtlP& f, std::vector<std::string>& out)
{
    if (f->op == Ctl::Op::Atom && std::find(out.begin(), out.end(), f->atom) == out.end())
        out.push_back(f->atom);
    for (auto& k : f->kids)
        ctl_atoms(k, out);
}

// ---------------------------------------------------------------- property files

const StatePattern* PropertySet::find(const std::string& name) const
{
    for (auto& p : patterns)
        if (p.name == name)
            return &p;
    return nullptr;
}

namespace {

StatePattern combine(const CtlP& e, const PropertySet& ps, const std::string& name)
{
    using O = Ctl::Op;
    StatePattern r;
    r.name = name;
    switch (e->op) {
    case O::Atom: {
        const StatePattern* p = ps.find(e->atom);
        if (!p)
            throw PropertyError("unknown pattern '" + e->atom + "'");
        r = *p;
        r.name = name;
        return r;
    }
    case O::Not:
        r.kind = StatePattern::Kind::Not;
        r.operands = {combine(e->kids[0], ps, {})};
        return r;
    case O::And:
    case O::Or:
        r.kind = e->op == O::And ? StatePattern::Kind::And : StatePattern::Kind::Or;
        r.operands = {combine(e->kids[0], ps, {}), combine(e->kids[1], ps, {})};
        return r;
    default: throw PropertyError("`let` accepts only !, & and | over pattern names");
    }
}

bool valid_name(const std::string& s)
{
    if (s.empty() || kReserved.count(s) || std::isdigit(static_cast<unsigned char>(s[0])))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace

PropertySet parse_properties(const std::string& text)
{
    PropertySet ps;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    std::set<std::string> names;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        line = trim(line);
        if (line.empty())
            continue;
        auto where = [&](const std::string& m) { return PropertyError("line " + std::to_string(no) + ": " + m); };
        auto sp = line.find(' ');
        auto eq = line.find('=');
        if (sp == std::string::npos || eq == std::string::npos || eq < sp)
            throw where("expected `pattern|let|check NAME = ...`");
        std::string kw = line.substr(0, sp), name = trim(line.substr(sp, eq - sp)), body = trim(line.substr(eq + 1));
        if (!valid_name(name))
            throw where("invalid name '" + name + "'");
        if (!names.insert(kw + ":" + name).second)
            throw where("duplicate name '" + name + "'");
        try {
            if (kw == "pattern") {
                if (ps.find(name))
                    throw PropertyError("duplicate name '" + name + "'");
                StatePattern p;
                p.name = name;
                p.pattern = parse_pattern(body);
                ps.patterns.push_back(std::move(p));
            } else if (kw == "let") {
                if (ps.find(name))
                    throw PropertyError("duplicate name '" + name + "'");
                ps.patterns.push_back(combine(parse_ctl(body), ps, name));
            } else if (kw == "check") {
                CtlP f = parse_ctl(body);
                std::vector<std::string> atoms;
                ctl_atoms(f, atoms);
                for (auto& a : atoms)
                    if (!ps.find(a))
                        throw PropertyError("unknown pattern '" + a + "'");
                ps.formulas.push_back({name, body, f});
            } else {
                throw PropertyError("unknown keyword '" + kw + "'");
            }
        } catch (const PatternError& e) {
            throw where(e.what());
        } catch (const PropertyError& e) {
            throw where(e.what());
        }
    }
    return ps;
}

// ---------------------------------------------------------------- labelling

const std::vector<char>& LabelledTS::of(const std::string& name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return holds[i];
    throw PropertyError("unknown pattern '" + name + "'");
}

std::vector<std::vector<std::string>> LabelledTS::state_labels() const
{
    std::vector<std::vector<std::string>> r(ts ? ts->states.size() : 0);
    for (std::size_t p = 0; p < names.size(); ++p)
        for (std::size_t s = 0; s < r.size(); ++s)
            if (holds[p][s])
                r[s].push_back(names[p]);
    return r;
}

LabelledTS label_states(const TransitionSystem& ts, const std::vector<StatePattern>& patterns, int jobs)
{
    LabelledTS l;
    l.ts = &ts;
    std::size_t n = ts.states.size();
    for (auto& p : patterns) {
        l.names.push_back(p.name);
        l.holds.emplace_back(n, 0);
    }
    jobs = std::max(1, jobs);
    auto work = [&](std::size_t w) {
        for (std::size_t s = w; s < n; s += std::size_t(jobs))
            for (std::size_t p = 0; p < patterns.size(); ++p)
                l.holds[p][s] = pattern_holds(patterns[p], ts.states[s]) ? 1 : 0;
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < jobs; ++w)
            th.emplace_back(work, std::size_t(w));
        for (auto& x : th)
            x.join();
    }
    return l;
}

// ---------------------------------------------------------------- checking

namespace {

using Set = std::vector<char>;

struct Graph {
    std::vector<std::vector<int>> succ, pred;

    explicit Graph(const TransitionSystem& ts) : succ(ts.successors()), pred(ts.states.size())
    {
        for (std::size_t s = 0; s < succ.size(); ++s) {
            if (succ[s].empty())
                succ[s].push_back(int(s));
            for (int d : succ[s])
                pred[std::size_t(d)].push_back(int(s));
        }
    }
    std::size_t size() const { return succ.size(); }
};

Set complement(Set a)
{
    for (auto& x : a)
        x = !x;
    return a;
}

Set ex(const Graph& g, const Set& f)
{
    Set r(g.size(), 0);
    for (std::size_t s = 0; s < g.size(); ++s)
        r[s] = std::any_of(g.succ[s].begin(), g.succ[s].end(), [&](int t) { return f[std::size_t(t)] != 0; });
    return r;
}

Set ax(const Graph& g, const Set& f)
{
    Set r(g.size(), 0);
    for (std::size_t s = 0; s < g.size(); ++s)
        r[s] = std::all_of(g.succ[s].begin(), g.succ[s].end(), [&](int t) { return f[std::size_t(t)] != 0; });
    return r;
}

Set eu(const Graph& g, const Set& f, const Set& h)
{
    Set z = h;
    std::deque<int> q;
    for (std::size_t s = 0; s < g.size(); ++s)
        if (z[s])
            q.push_back(int(s));
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int p : g.pred[std::size_t(x)])
            if (!z[std::size_t(p)] && f[std::size_t(p)]) {
                z[std::size_t(p)] = 1;
                q.push_back(p);
            }
    }
    return z;
}

Set au(const Graph& g, const Set& f, const Set& h)
{
    Set z = h;
    std::vector<std::size_t> left(g.size());
    std::deque<int> q;
    for (std::size_t s = 0; s < g.size(); ++s) {
        left[s] = g.succ[s].size();
        if (z[s])
            q.push_back(int(s));
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int p : g.pred[std::size_t(x)])
            if (!z[std::size_t(p)] && f[std::size_t(p)] && --left[std::size_t(p)] == 0) {
                z[std::size_t(p)] = 1;
                q.push_back(p);
            }
    }
    return z;
}

// Greatest fixpoint of states with an outgoing edge accepted by `good` into the set.
template <class Good>
Set eg_edges(const Graph& g, const Set& init, Good good)
{
    Set z = init;
    std::vector<std::size_t> cnt(g.size(), 0);
    std::deque<int> q;
    for (std::size_t s = 0; s < g.size(); ++s)
        if (z[s])
            for (int t : g.succ[s])
                if (z[std::size_t(t)] && good(int(s), t))
                    ++cnt[s];
    for (std::size_t s = 0; s < g.size(); ++s)
        if (z[s] && cnt[s] == 0) {
            z[s] = 0;
            q.push_back(int(s));
        }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int p : g.pred[std::size_t(x)])
            if (z[std::size_t(p)] && good(p, x) && --cnt[std::size_t(p)] == 0) {
                z[std::size_t(p)] = 0;
                q.push_back(p);
            }
    }
    return z;
}

Set eg(const Graph& g, const Set& f)
{
    return eg_edges(g, f, [](int, int) { return true; });
}

Set efx(const Graph& g, const Set& a, const Set& b)
{
    Set mid(g.size(), 0), nb = ex(g, b);
    for (std::size_t s = 0; s < g.size(); ++s)
        mid[s] = a[s] && nb[s];
    return eu(g, Set(g.size(), 1), mid);
}

// States with an infinite path on which no position satisfies a with its successor satisfying b.
Set avoid_fx(const Graph& g, const Set& a, const Set& b)
{
    return eg_edges(g, Set(g.size(), 1), [&](int s, int t) { return !a[std::size_t(s)] || !b[std::size_t(t)]; });
}

struct Checker {
    const LabelledTS& l;
    Graph g;

    Set sat(const CtlP& f) const
    {
        using O = Ctl::Op;
        std::size_t n = g.size();
        auto k = [&](std::size_t i) { return sat(f->kids[i]); };
        switch (f->op) {
        case O::True: return Set(n, 1);
        case O::False: return Set(n, 0);
        case O::Atom: return l.of(f->atom);
        case O::Not: return complement(k(0));
        case O::And:
        case O::Or:
        case O::Implies: {
            Set a = k(0), b = k(1), r(n, 0);
            for (std::size_t s = 0; s < n; ++s)
                r[s] = f->op == O::And ? (a[s] && b[s]) : f->op == O::Or ? (a[s] || b[s]) : (!a[s] || b[s]);
            return r;
        }
        case O::EX: return ex(g, k(0));
        case O::AX: return ax(g, k(0));
        case O::EF: return eu(g, Set(n, 1), k(0));
        case O::AF: return au(g, Set(n, 1), k(0));
        case O::EG: return eg(g, k(0));
        case O::AG: return complement(eu(g, Set(n, 1), complement(k(0))));
        case O::EU: return eu(g, k(0), k(1));
        case O::AU: return au(g, k(0), k(1));
        case O::EFX: return efx(g, k(0), k(1));
        case O::AFX: return complement(avoid_fx(g, k(0), k(1)));
        }
        return Set(n, 0);
    }

    // Shortest path from s through `via` states to a `to` state.
    std::vector<int> reach(int s, const Set& via, const Set& to) const
    {
        std::vector<int> parent(g.size(), -2);
        std::deque<int> q{s};
        parent[std::size_t(s)] = -1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (to[std::size_t(x)]) {
                std::vector<int> p;
                for (int y = x; y != -1; y = parent[std::size_t(y)])
                    p.push_back(y);
                std::reverse(p.begin(), p.end());
                return p;
            }
            if (!via[std::size_t(x)])
                continue;
            for (int t : g.succ[std::size_t(x)])
                if (parent[std::size_t(t)] == -2) {
                    parent[std::size_t(t)] = x;
                    q.push_back(t);
                }
        }
        return {s};
    }

    // Follow accepted edges inside z until a state repeats.
    template <class Good>
    std::vector<int> lasso(std::vector<int> prefix, const Set& z, Good good) const
    {
        std::set<int> seen(prefix.begin(), prefix.end() - 1);
        int x = prefix.back();
        while (seen.insert(x).second) {
            int next = -1;
            for (int t : g.succ[std::size_t(x)])
                if (z[std::size_t(t)] && good(x, t)) {
                    next = t;
                    break;
                }
            if (next < 0)
                break;
            prefix.push_back(next);
            x = next;
        }
        return prefix;
    }

    // Path explaining why f has value `val` at s.
    std::vector<int> explain(const CtlP& f, int s, bool val) const
    {
        using O = Ctl::Op;
        std::size_t n = g.size();
        auto all = Set(n, 1);
        auto never = [](int, int) { return true; };
        switch (f->op) {
        case O::Not: return explain(f->kids[0], s, !val);
        case O::EX:
        case O::AX: {
            bool exists = f->op == O::EX;
            if (exists != val)
                return {s};
            Set a = sat(f->kids[0]);
            for (int t : g.succ[std::size_t(s)])
                if (bool(a[std::size_t(t)]) == val)
                    return {s, t};
            return {s};
        }
        case O::EF:
        case O::AG: {
            bool witness = (f->op == O::EF) == val;
            if (!witness)
                return {s};
            Set a = sat(f->kids[0]);
            return reach(s, all, f->op == O::EF ? a : complement(a));
        }
        case O::EU: {
            if (!val)
                return {s};
            return reach(s, sat(f->kids[0]), sat(f->kids[1]));
        }
        case O::EG:
        case O::AF: {
            bool witness = (f->op == O::EG) == val;
            if (!witness)
                return {s};
            Set a = sat(f->kids[0]);
            Set z = eg(g, f->op == O::EG ? a : complement(a));
            return lasso({s}, z, never);
        }
        case O::EFX: {
            if (!val)
                return {s};
            Set a = sat(f->kids[0]), b = sat(f->kids[1]), nb = ex(g, b), mid(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                mid[i] = a[i] && nb[i];
            auto p = reach(s, all, mid);
            for (int t : g.succ[std::size_t(p.back())])
                if (b[std::size_t(t)]) {
                    p.push_back(t);
                    break;
                }
            return p;
        }
        case O::AFX: {
            if (val)
                return {s};
            Set a = sat(f->kids[0]), b = sat(f->kids[1]);
            Set z = avoid_fx(g, a, b);
            return lasso({s}, z, [&](int x, int t) { return !a[std::size_t(x)] || !b[std::size_t(t)]; });
        }
        default: return {s};
        }
    }
};

std::string path_kind_of(const CtlP& f, bool val)
{
    using O = Ctl::Op;
    if (f->op == O::Not)
        return path_kind_of(f->kids[0], !val);
    bool exists = f->op == O::EX || f->op == O::EF || f->op == O::EG || f->op == O::EU || f->op == O::EFX;
    bool universal = f->op == O::AX || f->op == O::AF || f->op == O::AG || f->op == O::AU || f->op == O::AFX;
    if (exists && val)
        return "witness";
    if (universal && !val)
        return "counterexample";
    return "none";
}

} // namespace

std::vector<char> sat_states(const LabelledTS& lts, const CtlP& f)
{
    if (!lts.ts)
        throw PropertyError("unlabelled transition system");
    if (!lts.ts->closed)
        throw PropertyError("transition system is not closed");
    return Checker{lts, Graph(*lts.ts)}.sat(f);
}

Verdict check_ctl(const LabelledTS& lts, const CtlP& f, const std::string& name)
{
    if (!lts.ts)
        throw PropertyError("unlabelled transition system");
    if (!lts.ts->closed)
        throw PropertyError("transition system is not closed");
    Checker c{lts, Graph(*lts.ts)};
    Verdict v;
    v.name = name;
    v.formula = print_ctl(f);
    v.mode = lts.ts->mode;
    v.sat = c.sat(f);
    v.holds = v.sat[std::size_t(lts.ts->initial)] != 0;
    v.path_kind = path_kind_of(f, v.holds);
    if (v.path_kind != "none")
        v.path = c.explain(f, lts.ts->initial, v.holds);
    return v;
}

bool same_verdict(const Verdict& a, const Verdict& b)
{
    if (a.mode != b.mode)
        throw PropertyError("verdicts computed in different modes (" + mode_name(a.mode) + " vs " + mode_name(b.mode) + ")");
    return a.holds == b.holds;
}

std::string verdict_json(const Verdict& v)
{
    nlohmann::ordered_json j;
    j["name"] = v.name;
    j["formula"] = v.formula;
    j["mode"] = mode_name(v.mode);
    j["verdict"] = v.holds ? "holds" : "fails";
    j["path_kind"] = v.path_kind;
    j["witness_or_counterexample_path"] = v.path;
    return j.dump();
}

} // namespace canbdi
