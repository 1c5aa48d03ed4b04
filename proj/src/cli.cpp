#include "canbdi/cli.hpp"

#include "canbdi/harness.hpp"
#include "canbdi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace canbdi {

using ojson = nlohmann::ordered_json;

std::string RunManifest::json() const
{
    ojson j;
    j["input"] = input;
    j["command"] = command;
    j["flags"] = ojson(flags);
    j["outputs"] = ojson(outputs);
    j["seed"] = seed;
    j["budget"] = budget;
    j["jobs"] = jobs;
    return j.dump(2);
}

RunManifest RunManifest::from_json(const std::string& text)
{
    auto j = ojson::parse(text);
    RunManifest m;
    m.input = j.value("input", "");
    m.command = j.at("command").get<std::string>();
    if (j.contains("flags"))
        m.flags = j["flags"].get<std::map<std::string, std::string>>();
    if (j.contains("outputs"))
        m.outputs = j["outputs"].get<std::map<std::string, std::string>>();
    m.seed = j.value("seed", std::uint64_t(0));
    m.budget = j.value("budget", std::size_t(0));
    m.jobs = j.value("jobs", 1);
    return m;
}

namespace {

struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kExitIo, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data))
        throw Failure{kExitIo, "cannot write " + path};
}

std::string flag(const RunManifest& m, const std::string& k, const std::string& dflt = {})
{
    auto it = m.flags.find(k);
    return it == m.flags.end() ? dflt : it->second;
}

int int_flag(const RunManifest& m, const std::string& k, int dflt)
{
    std::string v = flag(m, k);
    if (v.empty())
        return dflt;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw Failure{kExitUser, "invalid value for " + k + ": " + v};
    }
}

ojson diag_json(const Diagnostic& d)
{
    return ojson{{"severity", d.severity == Diagnostic::Severity::Error ? "error" : "warning"},
                 {"line", d.line},
                 {"col", d.col},
                 {"message", d.message}};
}

// Parses and validates; diagnostics go to err, errors raise a user failure.
AgentConfig load_agent(const std::string& path, std::ostream& err, std::vector<Diagnostic>* all = nullptr)
{
    std::string text = read_file(path);
    ParseResult pr = parse_agent(text);
    std::vector<Diagnostic> diags = pr.diags;
    if (pr.ok())
        for (auto& d : validate_agent(*pr.config))
            diags.push_back(d);
    bool errors = !pr.ok();
    for (auto& d : diags) {
        err << d.str(path) << "\n";
        errors |= d.severity == Diagnostic::Severity::Error;
    }
    if (all)
        *all = diags;
    if (errors)
        throw Failure{kExitUser, path + ": invalid agent"};
    return *pr.config;
}

ojson agent_json(const AgentConfig& c)
{
    ojson j;
    j["beliefs"] = ojson::array();
    for (auto& b : c.beliefs)
        j["beliefs"].push_back(b.str());
    j["events"] = c.events;
    j["actions"] = ojson::array();
    for (auto& [name, a] : c.actions) {
        ojson x;
        x["name"] = name;
        x["pre"] = print_formula(a.pre);
        x["add"] = ojson::array();
        x["del"] = ojson::array();
        for (auto& l : a.add)
            x["add"].push_back(l.str());
        for (auto& l : a.del)
            x["del"].push_back(l.str());
        j["actions"].push_back(x);
    }
    j["plans"] = ojson::array();
    for (auto& p : c.plans)
        j["plans"].push_back(
            {{"id", p.id}, {"trigger", p.trigger}, {"context", print_formula(p.context)}, {"body", print_body(p.body)}});
    j["intentions"] = ojson::array();
    for (auto& i : c.intentions)
        j["intentions"].push_back({{"id", i.id}, {"body", print_body(i.body)}});
    return j;
}

Catalog catalog_for(const RunManifest& m)
{
    std::set<std::string> drop;
    std::istringstream in(flag(m, "drop_rule"));
    std::string r;
    Catalog full = can_ruleset();
    while (std::getline(in, r, ',')) {
        if (r.empty())
            continue;
        if (!in_catalog(full, r))
            throw Failure{kExitUser, "unknown rule: " + r};
        drop.insert(r);
    }
    return can_ruleset(drop);
}

TSMode mode_of(const RunManifest& m)
{
    std::string v = flag(m, "mode", "full");
    if (v == "full")
        return TSMode::Full;
    if (v == "quotient")
        return TSMode::Quotient;
    throw Failure{kExitUser, "unknown mode: " + v};
}

TransitionSystem build_ts(const AgentConfig& cfg, const RunManifest& m, const Catalog& rules)
{
    BuildOptions bo;
    bo.budget = m.budget ? m.budget : default_budget();
    bo.jobs = m.jobs;
    TransitionSystem full = build_full(encode_config(cfg, true), rules, bo);
    if (!full.closed)
        throw Failure{kExitBudget, "state budget of " + std::to_string(bo.budget) + " exhausted"};
    if (mode_of(m) == TSMode::Quotient) {
        TransitionSystem q = quotient_agent_level(full);
        q.build_ms = full.build_ms;
        return q;
    }
    return full;
}

void ts_table(const TransitionSystem& ts, std::ostream& err)
{
    err << std::left << std::setw(10) << "mode" << std::setw(10) << "states" << std::setw(13) << "transitions"
        << "closed\n"
        << std::setw(10) << mode_name(ts.mode) << std::setw(10) << ts.states.size() << std::setw(13)
        << ts.edges.size() << (ts.closed ? "yes" : "no") << "\n";
}

int cmd_parse(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    std::vector<Diagnostic> diags;
    ojson j;
    j["input"] = m.input;
    try {
        AgentConfig c = load_agent(m.input, err, &diags);
        j["ok"] = true;
        j["agent"] = agent_json(c);
        j["diagnostics"] = ojson::array();
        for (auto& d : diags)
            j["diagnostics"].push_back(diag_json(d));
        out << j.dump() << "\n";
        return kExitOk;
    } catch (const Failure& f) {
        if (f.code != kExitUser)
            throw;
        j["ok"] = false;
        j["diagnostics"] = ojson::array();
        for (auto& d : diags)
            j["diagnostics"].push_back(diag_json(d));
        out << j.dump() << "\n";
        return kExitUser;
    }
}

int cmd_build(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    AgentConfig cfg = load_agent(m.input, err);
    TransitionSystem ts = build_ts(cfg, m, catalog_for(m));
    std::vector<std::pair<std::string, std::vector<int>>> labels;
    if (std::string props = flag(m, "properties"); !props.empty()) {
        PropertySet ps;
        try {
            ps = parse_properties(read_file(props));
        } catch (const PropertyError& e) {
            throw Failure{kExitUser, props + ": " + e.what()};
        }
        LabelledTS lts = label_states(ts, ps.patterns, m.jobs);
        for (std::size_t p = 0; p < lts.names.size(); ++p) {
            std::vector<int> ids;
            for (std::size_t s = 0; s < ts.states.size(); ++s)
                if (lts.holds[p][s])
                    ids.push_back(int(s));
            labels.emplace_back(lts.names[p], ids);
        }
    }
    ojson j = ojson::parse(summary_json(ts));
    if (auto it = m.outputs.find("dot"); it != m.outputs.end()) {
        write_file(it->second, export_dot(ts));
        j["dot"] = it->second;
    }
    if (auto it = m.outputs.find("dtmc"); it != m.outputs.end()) {
        DtmcFiles d = export_dtmc(ts, labels);
        write_file(it->second + ".tra", d.tra);
        write_file(it->second + ".lab", d.lab);
        j["dtmc"] = {it->second + ".tra", it->second + ".lab"};
    }
    j["manifest"] = ojson::parse(m.json());
    ts_table(ts, err);
    out << j.dump() << "\n";
    return kExitOk;
}

int cmd_check(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    std::string props = flag(m, "properties");
    if (props.empty())
        throw Failure{kExitUser, "check needs a properties file"};
    PropertySet ps;
    try {
        ps = parse_properties(read_file(props));
    } catch (const PropertyError& e) {
        throw Failure{kExitUser, props + ": " + e.what()};
    }
    AgentConfig cfg = load_agent(m.input, err);
    auto t0 = std::chrono::steady_clock::now();
    TransitionSystem ts = build_ts(cfg, m, catalog_for(m));
    LabelledTS lts = label_states(ts, ps.patterns, m.jobs);
    ojson j;
    j["input"] = m.input;
    j["properties"] = props;
    j["ts"] = ojson::parse(summary_json(ts));
    j["verdicts"] = ojson::array();
    err << std::left << std::setw(24) << "property" << std::setw(10) << "verdict" << "formula\n";
    for (auto& f : ps.formulas) {
        Verdict v = check_ctl(lts, f.formula, f.name);
        j["verdicts"].push_back(ojson::parse(verdict_json(v)));
        err << std::setw(24) << f.name << std::setw(10) << (v.holds ? "holds" : "fails") << f.text << "\n";
    }
    j["check_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out << j.dump() << "\n";
    return kExitOk;
}

int cmd_faithfulness(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    Catalog rules = catalog_for(m);
    int depth = int_flag(m, "depth", 6);
    std::vector<std::pair<std::string, AgentConfig>> agents;
    if (!m.input.empty())
        agents.emplace_back(m.input, load_agent(m.input, err));
    if (flag(m, "corpus") == "1") {
        int count = int_flag(m, "count", 20);
        for (int i = 0; i < count; ++i)
            agents.emplace_back("seed:" + std::to_string(m.seed + std::uint64_t(i)),
                                random_agent(m.seed + std::uint64_t(i)));
    }
    if (agents.empty())
        throw Failure{kExitUser, "faithfulness needs an agent file or --corpus"};
    ojson j;
    j["depth"] = depth;
    j["reports"] = ojson::array();
    std::size_t total = 0;
    for (auto& [name, cfg] : agents) {
        CrosscheckReport r = crosscheck(cfg, depth, rules, {}, m.jobs, name);
        total += r.discrepancy_count();
        j["reports"].push_back(ojson::parse(r.json()));
        err << r.summary() << "\n";
        for (auto& d : r.discrepancies) {
            err << "  config " << d.config << ": " << d.missing.size() << " missing, " << d.extra.size()
                << " extra, " << d.violations.size() << " violations\n";
            if (name.rfind("seed:", 0) == 0 && !d.config_text.empty())
                err << "  replay fixture:\n" << print_agent(cfg);
        }
    }
    j["discrepancies"] = total;
    j["manifest"] = ojson::parse(m.json());
    out << j.dump() << "\n";
    return total == 0 ? kExitOk : kExitFaithfulness;
}

int cmd_golden(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    GoldenTrace g;
    try {
        g = parse_golden(read_file(m.input));
    } catch (const PatternError& e) {
        throw Failure{kExitUser, m.input + ": " + e.what()};
    }
    std::string agent = flag(m, "agent");
    if (agent.empty()) {
        if (g.agent.empty())
            throw Failure{kExitUser, "golden trace names no agent"};
        agent = (std::filesystem::path(m.input).parent_path() / g.agent).string();
    }
    AgentConfig cfg = load_agent(agent, err);
    auto t0 = std::chrono::steady_clock::now();
    GoldenResult r = golden_trace_check(g, cfg, catalog_for(m));
    ojson j;
    j["trace"] = m.input;
    j["agent"] = agent;
    j["ok"] = r.ok;
    j["terms"] = g.steps.size();
    j["terms_matched"] = r.terms_matched;
    j["applied"] = r.applied;
    if (!r.ok) {
        j["failed_step"] = r.failed_step;
        j["message"] = r.message;
        j["expected"] = r.expected;
        j["actual"] = r.actual;
        err << "step " << r.failed_step << ": " << r.message << "\n  expected " << r.expected << "\n  actual   "
            << r.actual << "\n";
    }
    j["replay_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    err << r.terms_matched << "/" << g.steps.size() << " terms matched\n";
    out << j.dump() << "\n";
    return r.ok ? kExitOk : kExitFaithfulness;
}

int cmd_catalog(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    Catalog c = catalog_for(m);
    err << catalog_report(c);
    ojson j = ojson::array();
    for (auto& r : c)
        j.push_back({{"name", r.name}, {"group", r.group}, {"priority", r.priority}, {"lhs", r.lhs.text},
                     {"rhs", r.rhs.text}});
    out << j.dump() << "\n";
    return kExitOk;
}

} // namespace

int run_manifest(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    try {
        if (m.command == "parse")
            return cmd_parse(m, out, err);
        if (m.command == "build")
            return cmd_build(m, out, err);
        if (m.command == "check")
            return cmd_check(m, out, err);
        if (m.command == "faithfulness")
            return cmd_faithfulness(m, out, err);
        if (m.command == "golden")
            return cmd_golden(m, out, err);
        if (m.command == "catalog")
            return cmd_catalog(m, out, err);
        err << "unknown command: " << m.command << "\n";
        return kExitUser;
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const PropertyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUser;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"canbdi: BDI agents as reactive systems"};
    app.require_subcommand(1);
    RunManifest m;
    m.budget = 0;
    app.add_option("--jobs", m.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string mode = "full", props, dot, dtmc, drop, manifest_out, manifest_in, agent;
    int depth = 6, count = 20;
    std::size_t budget = 0;
    std::uint64_t corpus = 0;

    auto* parse = app.add_subcommand("parse", "validate an agent file and dump its AST");
    parse->add_option("file", m.input)->required();

    auto* build = app.add_subcommand("build", "build the transition system");
    build->add_option("file", m.input)->required();
    build->add_option("--mode", mode)->check(CLI::IsMember({"full", "quotient"}));
    build->add_option("--budget", budget, "state budget");
    build->add_option("--dot", dot, "Graphviz output path");
    build->add_option("--dtmc", dtmc, "DTMC output prefix (.tra/.lab)");
    build->add_option("--labels", props, "property file whose patterns label the DTMC");
    build->add_option("--drop-rule", drop, "comma separated rules to remove");

    auto* check = app.add_subcommand("check", "check CTL properties");
    check->add_option("file", m.input)->required();
    check->add_option("properties", props)->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"full", "quotient"}));
    check->add_option("--budget", budget, "state budget");

    auto* faith = app.add_subcommand("faithfulness", "crosscheck the encoding against the reference semantics");
    faith->add_option("file", m.input);
    auto* corpus_opt = faith->add_option("--corpus", corpus, "seed of a random agent corpus");
    faith->add_option("--count", count, "corpus size")->check(CLI::PositiveNumber);
    faith->add_option("--depth", depth, "exploration depth")->check(CLI::NonNegativeNumber);
    faith->add_option("--drop-rule", drop, "comma separated rules to remove");

    auto* golden = app.add_subcommand("golden", "replay a golden reduction trace");
    golden->add_option("trace", m.input)->required();
    golden->add_option("--agent", agent, "agent file (default: the one named in the trace)");

    auto* catalog = app.add_subcommand("catalog", "list the reaction rules");
    catalog->add_option("--drop-rule", drop, "comma separated rules to remove");

    auto* run = app.add_subcommand("run", "rerun a saved manifest");
    run->add_option("manifest", manifest_in)->required();

    for (auto* sc : {build, check, faith})
        sc->add_option("--manifest", manifest_out, "write the run manifest to this path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int rc = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return rc == 0 ? kExitOk : kExitUser;
    }

    if (run->parsed()) {
        try {
            std::ifstream in(manifest_in);
            if (!in) {
                err << "error: cannot read " << manifest_in << "\n";
                return kExitIo;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            return run_manifest(RunManifest::from_json(ss.str()), out, err);
        } catch (const std::exception& e) {
            err << "error: bad manifest: " << e.what() << "\n";
            return kExitUser;
        }
    }

    m.command = app.get_subcommands().front()->get_name();
    m.budget = budget ? budget : default_budget();
    if (build->parsed() || check->parsed())
        m.flags["mode"] = mode;
    if (!props.empty())
        m.flags["properties"] = props;
    if (!drop.empty())
        m.flags["drop_rule"] = drop;
    if (!agent.empty())
        m.flags["agent"] = agent;
    if (faith->parsed()) {
        m.flags["depth"] = std::to_string(depth);
        if (corpus_opt->count() > 0) {
            m.flags["corpus"] = "1";
            m.flags["count"] = std::to_string(count);
            m.seed = corpus;
        }
    }
    if (!dot.empty())
        m.outputs["dot"] = dot;
    if (!dtmc.empty())
        m.outputs["dtmc"] = dtmc;
    if (!manifest_out.empty()) {
        std::ofstream o(manifest_out);
        if (!o || !(o << m.json() << "\n")) {
            err << "error: cannot write " << manifest_out << "\n";
            return kExitIo;
        }
    }
    return run_manifest(m, out, err);
}

} // namespace canbdi
