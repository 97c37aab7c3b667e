#include "revadd/cli.hpp"

#include "revadd/analysis.hpp"
#include "revadd/builders.hpp"
#include "revadd/netlist_text.hpp"
#include "revadd/reports.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

namespace revadd::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string family;
    int width = -1; // -1: not given
    std::string file;
    std::string output;
    std::string inputs;
    std::string shape;
    bool exhaustive = false;
    bool sampled = false;
    uint64_t samples = 0;
    uint64_t seed = 42;
    int bound = 20;
    bool json = false;
    bool outputs_only = false;
};

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// Parses a .rnl file, printing every diagnostic with the file name.
/// Grammar errors leave no netlist; structural violations are printed and
/// also reject the netlist for every subcommand except `check`, which
/// wants them as its result.
std::optional<Netlist> load_netlist(const std::string& path, std::ostream& err,
                                    bool keep_invalid = false) {
    const std::optional<std::string> text = read_file(path, err);
    if (!text) {
        return std::nullopt;
    }
    ParseResult result = parse_netlist(*text);
    for (const Diagnostic& diag : result.diagnostics) {
        err << path << ":" << to_string(diag) << "\n";
    }
    if (!result.netlist) {
        return std::nullopt;
    }
    if (!result.diagnostics.empty() && !keep_invalid) {
        return std::nullopt;
    }
    return std::move(result.netlist);
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<AdderFamily> family = family_from_name(opt.family);
    if (!family) {
        err << "error: unknown adder family '" << opt.family << "'\n";
        return exit_usage;
    }
    if (opt.width != -1 && *family != AdderFamily::rca) {
        err << "error: --width only applies to rca\n";
        return exit_usage;
    }
    Netlist netlist;
    try {
        netlist = build_adder(*family, opt.width == -1 ? 4 : opt.width);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const std::string text = serialize(netlist);
    if (opt.output.empty()) {
        out << text;
        return exit_ok;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << opt.output << "'\n";
        return exit_usage;
    }
    file << text;
    out << "wrote " << netlist.name << " to " << opt.output << "\n";
    return exit_ok;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<Netlist> netlist = load_netlist(opt.file, err, /*keep_invalid=*/true);
    if (!netlist) {
        return exit_usage;
    }
    const ValidationReport report = validate(*netlist);
    if (!report.ok()) {
        out << "circuit " << netlist->name << ": INVALID\n";
        for (const Violation& v : report.violations) {
            out << "  [" << v.code << "] " << v.message << "\n";
        }
        return exit_fail;
    }

    const MetricsRecord record = metrics(*netlist);
    bool all_parity = true;
    for (const GateInstance& gate : netlist->gates) {
        all_parity = all_parity && gate_parity_preserving(gate.kind);
    }
    out << "circuit " << netlist->name << ": valid\n";
    out << "  gates: " << record.total_gates;
    if (record.total_gates > 0) {
        out << " (" << inventory_to_string(record.gate_counts) << ")";
    }
    out << "\n";
    out << "  line balance: " << netlist->inputs.size() + netlist->constants.size()
        << " input-side (" << netlist->inputs.size() << " inputs + " << netlist->constants.size()
        << " constants) = " << netlist->outputs.size() + record.garbage_outputs
        << " output-side (" << netlist->outputs.size() << " outputs + " << record.garbage_outputs
        << " garbage)\n";
    out << "  parity-preserving kinds only: " << (all_parity ? "yes" : "no") << "\n";

    ParityCheckOptions parity_options;
    parity_options.exhaustive_bound = opt.bound;
    parity_options.seed = opt.seed;
    const ParityCheckResult parity = circuit_parity_holds(*netlist, parity_options);
    switch (parity.status) {
    case ParityStatus::holds:
        out << "  parity law: holds over " << parity.vectors << " vectors"
            << (parity.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
        return exit_ok;
    case ParityStatus::unsupported_gates:
        out << "  parity law: not applicable (circuit contains non-parity-preserving gates)\n";
        return exit_ok;
    case ParityStatus::violated:
        out << "  parity law: VIOLATED at input pattern " << *parity.counterexample << "\n";
        return exit_fail;
    }
    return exit_ok;
}

int cmd_sim(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<Netlist> netlist = load_netlist(opt.file, err);
    if (!netlist) {
        return exit_usage;
    }
    const Simulator sim(*netlist);
    if (opt.inputs.size() != sim.primary_inputs().size()) {
        err << "error: circuit has " << sim.primary_inputs().size() << " primary inputs, got "
            << opt.inputs.size() << " bits\n";
        return exit_usage;
    }
    std::vector<uint8_t> bits;
    for (char ch : opt.inputs) {
        if (ch != '0' && ch != '1') {
            err << "error: --inputs must be a bitstring, got '" << ch << "'\n";
            return exit_usage;
        }
        bits.push_back(ch == '1' ? 1 : 0);
    }
    const Valuation vals = sim.run(bits);
    out << "circuit " << netlist->name << "\n";
    for (size_t w = 0; w < sim.wire_count(); ++w) {
        out << "  " << sim.wire_ids()[w] << " = " << static_cast<int>(vals[w]) << " ("
            << wire_role_name(sim.role(w)) << ")\n";
    }
    out << "outputs:";
    for (size_t w : sim.primary_outputs()) {
        out << " " << sim.wire_ids()[w] << "=" << static_cast<int>(vals[w]);
    }
    out << "\n";
    return exit_ok;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<Netlist> netlist = load_netlist(opt.file, err);
    if (!netlist) {
        return exit_usage;
    }
    const std::optional<AdderFamily> family = family_from_name(opt.shape);
    if (!family) {
        err << "error: unknown shape '" << opt.shape << "'\n";
        return exit_usage;
    }
    int width = opt.width == -1 ? 0 : opt.width;
    if (*family == AdderFamily::rca && width == 0) {
        // infer from the interface: 2w+1 primary inputs
        width = (static_cast<int>(netlist->inputs.size()) - 1) / 2;
    }

    AdderShape shape{};
    VerifyReport report;
    try {
        shape = shape_of(*family, width);
        VerifyOptions options;
        options.seed = opt.seed;
        if (opt.exhaustive) {
            options.exhaustive = true;
        } else if (opt.sampled) {
            options.exhaustive = false;
            options.samples = opt.samples;
        } else {
            options.exhaustive = 2 * shape.width + 1 <= opt.bound;
            if (opt.samples != 0) {
                options.samples = opt.samples;
            }
        }
        report = verify_adder(*netlist, shape, options);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    out << (opt.json ? verify_json(report) : verify_text(report));
    return report.pass ? exit_ok : exit_fail;
}

int cmd_metrics(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<Netlist> netlist = load_netlist(opt.file, err);
    if (!netlist) {
        return exit_usage;
    }
    const MetricsRecord record = metrics(*netlist);
    out << (opt.json ? metrics_json(netlist->name, record)
                     : metrics_text(netlist->name, record));
    return exit_ok;
}

int cmd_faults(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<Netlist> netlist = load_netlist(opt.file, err);
    if (!netlist) {
        return exit_usage;
    }
    FaultReport report;
    try {
        FaultSweepOptions options;
        options.exhaustive_bound = opt.bound;
        options.seed = opt.seed;
        if (opt.samples != 0) {
            options.samples = opt.samples;
        }
        report = fault_sweep(*netlist, options);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    out << (opt.json ? fault_json(report) : fault_text(report));
    if (opt.outputs_only) {
        // the outputs-only observation is reported without a pass threshold
        return exit_ok;
    }
    return report.full.undetected == 0 ? exit_ok : exit_fail;
}

int cmd_table1(const Options& opt, std::ostream& out) {
    const ComparisonTable table = table1_report();
    out << (opt.json ? comparison_json(table) : comparison_text(table));
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"revadd: build, simulate and verify parity-preserving reversible adders"};
    app.require_subcommand(1);
    app.footer("Input bitstrings list the operands most significant bit first, A then B then\n"
               "the carry-in, matching the declared primary-input order of built netlists.\n"
               "Cost vectors read Xa+Yb+Zd: X two-input XOR, Y two-input AND, Z NOT gates.");

    Options opt;
    std::function<int()> action;

    CLI::App* build = app.add_subcommand("build", "generate an adder netlist (.rnl)");
    build->add_option("family", opt.family, "one of ftfa|rca|cla2|csa4|hsa16")->required();
    build->add_option("--width", opt.width, "operand width (rca only, default 4)");
    build->add_option("-o,--output", opt.output, "output file (stdout when omitted)");
    build->callback([&] { action = [&] { return cmd_build(opt, out, err); }; });

    CLI::App* check = app.add_subcommand("check", "validate a netlist and report the parity law");
    check->add_option("file", opt.file, ".rnl netlist")->required();
    check->add_option("--bound", opt.bound, "exhaustive parity-check bound (primary inputs)");
    check->add_option("--seed", opt.seed, "seed for sampled parity checking");
    check->callback([&] { action = [&] { return cmd_check(opt, out, err); }; });

    CLI::App* sim = app.add_subcommand("sim", "simulate one input vector");
    sim->add_option("file", opt.file, ".rnl netlist")->required();
    sim->add_option("--inputs", opt.inputs, "bitstring over the primary inputs")->required();
    sim->callback([&] { action = [&] { return cmd_sim(opt, out, err); }; });

    CLI::App* verify = app.add_subcommand("verify", "check adder correctness against a + b + c");
    verify->add_option("file", opt.file, ".rnl netlist")->required();
    verify->add_option("--shape", opt.shape, "adder family of the netlist")->required();
    verify->add_option("--width", opt.width, "operand width (rca; inferred when omitted)");
    CLI::Option* vex = verify->add_flag("--exhaustive", opt.exhaustive, "force exhaustive mode");
    verify->add_option("--samples", opt.samples, "random vectors (implies sampled mode)")
        ->excludes(vex);
    verify->add_option("--seed", opt.seed, "sampling seed");
    verify->add_flag("--json", opt.json, "emit JSON");
    verify->callback([&] {
        opt.sampled = verify->count("--samples") > 0;
        action = [&] { return cmd_verify(opt, out, err); };
    });

    CLI::App* metrics_cmd = app.add_subcommand("metrics", "gate, constant, garbage and cost counts");
    metrics_cmd->add_option("file", opt.file, ".rnl netlist")->required();
    metrics_cmd->add_flag("--json", opt.json, "emit JSON");
    metrics_cmd->callback([&] { action = [&] { return cmd_metrics(opt, out, err); }; });

    CLI::App* faults = app.add_subcommand("faults", "single-wire fault-injection sweep");
    faults->add_option("file", opt.file, ".rnl netlist")->required();
    faults->add_flag("--outputs-only", opt.outputs_only,
                     "report the primary-outputs-only observation (no pass threshold)");
    faults->add_option("--samples", opt.samples, "sampled vectors above the exhaustive bound");
    faults->add_option("--seed", opt.seed, "sampling seed");
    faults->add_option("--bound", opt.bound, "exhaustive bound (primary inputs)");
    faults->add_flag("--json", opt.json, "emit JSON");
    faults->callback([&] { action = [&] { return cmd_faults(opt, out, err); }; });

    CLI::App* table = app.add_subcommand("report-table1",
                                         "compare built blueprints with the published results");
    table->add_flag("--json", opt.json, "emit JSON");
    table->callback([&] { action = [&] { return cmd_table1(opt, out); }; });

    std::vector<const char*> argv;
    argv.push_back("revadd");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace revadd::cli
