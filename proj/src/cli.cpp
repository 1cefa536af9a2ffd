#include "regpump/cli.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "regpump/automata.hpp"
#include "regpump/config.hpp"
#include "regpump/enumerate.hpp"
#include "regpump/pumping.hpp"
#include "regpump/service.hpp"

namespace regpump {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "plain";
    std::string config_path;
    std::optional<std::size_t> max_len;

    std::string regex;
    std::string input;
    std::size_t count = 10;
    std::size_t offset = 0;
    std::string mode = "exact";
    std::string x, y, z;
    std::size_t i = 1;
    std::string host = "127.0.0.1";
    int port = 8080;
};

CliConfig resolve_config(const Options& opts) {
    CliConfig config;
    std::string path = opts.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    }
    if (!path.empty()) apply_config_file(config, path);
    if (opts.max_len) config.max_len = opts.max_len;
    config.format = opts.format == "json-lines" ? OutputFormat::JsonLines : OutputFormat::Plain;
    return config;
}

std::string shown(const std::string& s, const CliConfig& config) {
    return s.empty() ? std::string(1, config.reserved.epsilon) : s;
}

const char* verdict(bool b) {
    return b ? "True" : "False";
}

int cmd_member(const Options& o, const CliConfig& c, std::ostream& out) {
    const bool member = accepts(compile(o.regex, c.reserved), o.input);
    if (c.format == OutputFormat::JsonLines)
        out << json{{"member", member}}.dump() << '\n';
    else
        out << verdict(member) << '\n';
    return member ? kExitOk : kExitNotMember;
}

int cmd_gen(const Options& o, const CliConfig& c, std::ostream& out, std::ostream& err) {
    if (o.count == 0) throw std::invalid_argument("--count must be at least 1");
    const Nfa nfa = compile(o.regex, c.reserved);
    const auto batch = strings_at(nfa, o.offset, o.count, EnumerationOptions{c.limits.max_frontier, true, std::nullopt});
    if (c.format == OutputFormat::JsonLines) {
        for (const auto& s : batch.strings) out << json{{"string", s}, {"epsilon", s.empty()}}.dump() << '\n';
        out << json{{"next_offset", batch.next_offset}, {"exhausted", batch.exhausted}}.dump() << '\n';
    } else {
        for (const auto& s : batch.strings) out << shown(s, c) << '\n';
        if (batch.exhausted) err << "language exhausted after " << batch.next_offset << " strings\n";
    }
    return kExitOk;
}

int cmd_mpl(const Options& o, const CliConfig& c, std::ostream& out) {
    const Nfa nfa = compile(o.regex, c.reserved);
    MplResult result;
    if (o.mode == "sampled")
        result = min_pumping_length_sampled(nfa, c.max_len, c.limits);
    else
        result = min_pumping_length_exact(determinize(nfa, c.limits.state_cap), c.limits);

    if (c.format == OutputFormat::JsonLines) {
        out << mpl_to_json(result).dump() << '\n';
        return kExitOk;
    }
    out << "p=" << result.p << '\n';
    if (result.witness) out << "witness=" << shown(*result.witness, c) << '\n';
    if (result.split) {
        out << "x=" << shown(result.split->x, c) << '\n';
        out << "y=" << shown(result.split->y, c) << '\n';
        out << "z=" << shown(result.split->z, c) << '\n';
    }
    out << "mode=" << to_string(result.mode) << '\n';
    if (result.counterexample) out << "counterexample=" << shown(*result.counterexample, c) << '\n';
    return kExitOk;
}

int cmd_pump(const Options& o, const CliConfig& c, std::ostream& out) {
    if (o.y.empty()) throw std::invalid_argument("--y must be non-empty");
    const Nfa nfa = compile(o.regex, c.reserved);
    const auto pumped = pump(PumpSplit{o.x, o.y, o.z}, o.i);
    const bool member = accepts(nfa, pumped);
    if (c.format == OutputFormat::JsonLines) {
        out << json{{"pumped", pumped}, {"member", member}}.dump() << '\n';
    } else {
        out << "pumped=" << shown(pumped, c) << '\n';
        out << "member=" << verdict(member) << '\n';
    }
    return kExitOk;
}

int cmd_graph(const Options& o, const CliConfig& c, std::ostream& out) {
    out << export_graph(compile(o.regex, c.reserved), c.reserved);
    return kExitOk;
}

int cmd_serve(const Options& o, const CliConfig& c, std::ostream& out, std::ostream& err) {
    ServiceConfig sc;
    sc.reserved = c.reserved;
    sc.limits = c.limits;
    HttpServer server{Service(sc)};
    const auto port = server.bind(o.host, o.port);
    if (!port) {
        err << "cannot bind " << o.host << ':' << o.port << " (port in use?)\n";
        return kExitResource;
    }
    out << "listening on http://" << o.host << ':' << *port << std::endl;
    return server.listen() ? kExitOk : kExitResource;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Regular-language workbench: membership, string enumeration and pumping lengths", "regpump"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json-lines"}));
    app.add_option("--config", o.config_path, std::string("key=value config file (default: $") + kConfigEnvVar + ")");
    app.add_option("--max-len", o.max_len, "Sampling bound for sampled pumping-length mode")
        ->check(CLI::PositiveNumber);

    auto* member = app.add_subcommand("member", "Test whether a string belongs to the language");
    member->add_option("regex", o.regex)->required();
    member->add_option("input", o.input)->required();

    auto* gen = app.add_subcommand("gen", "List language strings in shortlex order");
    gen->add_option("regex", o.regex)->required();
    gen->add_option("--count", o.count, "Number of strings")->capture_default_str();
    gen->add_option("--offset", o.offset, "Shortlex position of the first string")->capture_default_str();

    auto* mpl = app.add_subcommand("mpl", "Minimum pumping length with a witness split");
    mpl->add_option("regex", o.regex)->required();
    mpl->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "sampled"}))->capture_default_str();

    auto* pump_cmd = app.add_subcommand("pump", "Pump a split x y z and test membership of x y^i z");
    pump_cmd->add_option("regex", o.regex)->required();
    pump_cmd->add_option("--x", o.x);
    pump_cmd->add_option("--y", o.y)->required();
    pump_cmd->add_option("--z", o.z);
    pump_cmd->add_option("--i", o.i)->required();

    auto* graph = app.add_subcommand("graph", "Print the NFA as a DOT digraph");
    graph->add_option("regex", o.regex)->required();

    auto* serve = app.add_subcommand("serve", "Run the HTTP JSON service");
    serve->add_option("--port", o.port)->capture_default_str();
    serve->add_option("--host", o.host)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const CliConfig config = resolve_config(o);
        if (member->parsed()) return cmd_member(o, config, out);
        if (gen->parsed()) return cmd_gen(o, config, out, err);
        if (mpl->parsed()) return cmd_mpl(o, config, out);
        if (pump_cmd->parsed()) return cmd_pump(o, config, out);
        if (graph->parsed()) return cmd_graph(o, config, out);
        if (serve->parsed()) return cmd_serve(o, config, out, err);
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace regpump
