#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aec/report.hpp"

namespace {

struct CliArgs {
    std::string input;
    std::string format = "json";
    bool allow_invalid = false;
    aec::RunOptions run;
};

void emit(const aec::Json& report, const std::string& format) {
    if (format == "text")
        std::cout << aec::render_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

int emit_error(const std::string& command, const std::string& type, const std::string& message,
               const std::string& format, int code) {
    aec::Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["error"] = aec::Json{{"type", type}, {"message", message}};
    emit(j, format);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for finite presentations of abstract elementary classes"};
    app.require_subcommand(1);

    CliArgs a;
    const std::vector<std::string> commands = {"validate", "theories", "embeddings", "pullback",
                                               "expand",   "types",    "topology",   "check",
                                               "harness",  "glue-check", "generate"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", a.input, "workspace file in the line-oriented DSL");
        sub->add_option("--seed", a.run.seed, "seed echoed in reports and used by harness/generate");
        sub->add_option("--budget", a.run.budget, "enumeration budget for pullback construction");
        sub->add_flag("--allow-invalid", a.allow_invalid,
                      "load fragments and theories that fail their checks");
        sub->add_option("--format", a.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--lambda", a.run.lambda, "topology parameter");
        sub->add_flag("--timings", a.run.timings, "append wall-clock timings to the report");
        sub->add_option("--target", a.run.target, "restrict to one named fragment or config");
        sub->add_option("--member", a.run.member, "base-point index for types/topology");
        sub->add_option("--names", a.run.names, "index or constant names")->delimiter(',');
        if (name == "check")
            sub->add_option("--axiom", a.run.axiom, "ap|jep|lrp|gap|trp|grp|cip");
        if (name == "harness") {
            sub->add_option("--law", a.run.law,
                            "trp-grp|trp-cip|pullback-ls|reduct-equiv|types-dual|"
                            "embeddings-oracle|connection-oracle");
            sub->add_option("--seeds", a.run.seeds, "number of seeded instances");
        }
        if (name == "harness" || name == "generate") {
            sub->add_option("--max-size", a.run.profile.max_size, "largest structure size");
            sub->add_option("--max-structures", a.run.profile.max_structures,
                            "cap on listed structures per fragment");
            sub->add_option("--max-symbols", a.run.profile.max_symbols, "cap on language symbols");
            sub->add_option("--arity-cap", a.run.profile.arity_cap, "largest symbol arity");
            sub->add_option("--max-extras", a.run.profile.max_extras,
                            "cap on expansion symbols per leg");
        }
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    aec::Workspace ws;
    const bool needs_input = command != "harness" && command != "generate";
    if (needs_input) {
        if (a.input.empty())
            return emit_error(command, "input", "missing --input FILE", a.format, 2);
        std::ifstream in(a.input);
        if (!in)
            return emit_error(command, "input", "cannot open " + a.input, a.format, 2);
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            aec::ParseOptions popt;
            popt.allow_invalid = a.allow_invalid;
            ws = aec::parse_workspace(buf.str(), popt);
        } catch (const aec::ParseError& e) {
            return emit_error(command, "parse", e.what(), a.format, 2);
        } catch (const aec::UnresolvedReference& e) {
            return emit_error(command, "unresolved", e.what(), a.format, 2);
        } catch (const aec::ValidationFailure& e) {
            return emit_error(command, "validation", e.what(), a.format, 2);
        } catch (const std::exception& e) {
            return emit_error(command, "input", e.what(), a.format, 2);
        }
    }

    aec::RunResult res = aec::run_command(ws, command, a.run);
    emit(res.report, a.format);
    return res.exit_code;
}
