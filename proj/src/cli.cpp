#include "fuzzyreg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "fuzzyreg/error.hpp"
#include "fuzzyreg/inference.hpp"
#include "fuzzyreg/io.hpp"
#include "fuzzyreg/regulator.hpp"

namespace fuzzyreg::cli {

namespace {

// Errors raised while reading documents and data files map to exit 1; errors
// raised while running the inference map to exit 2.
int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InvalidUniverse:
    case ErrorKind::InvalidMembership:
    case ErrorKind::InvalidVariable:
    case ErrorKind::InvalidRuleBase:
    case ErrorKind::EmptyRuleBase:
    case ErrorKind::InvalidArgument:
        return kExitConfig;
    case ErrorKind::NonFiniteInput:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ZeroMass:
        return kExitRuntime;
    }
    return kExitRuntime;
}

class OutputSink {
public:
    OutputSink(const std::string& file, std::ostream& fallback) : fallback_(fallback) {
        if (!file.empty()) {
            file_.open(file, std::ios::binary | std::ios::trunc);
            if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write '" + file + "'", file);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void write_trace(std::ostream& out, const Regulator& reg, const EvalTrace& t) {
    out << "input: " << format_number(t.input) << '\n';
    out << "clamped_input: " << format_number(t.clamped_input) << '\n';
    out << "activations:";
    const auto& terms = reg.rulebase().input().terms();
    for (std::size_t k = 0; k < terms.size(); ++k) out << ' ' << terms[k].name << '=' << format_number(t.activations[k]);
    out << '\n';
    out << "aggregated: " << format_vector(t.aggregated.grades()) << '\n';
    out << "output: " << format_number(t.output) << '\n';
    if (t.fallback) out << "fallback: midpoint\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-input single-output Mamdani fuzzy regulator"};
    app.name(args.empty() ? "fuzzyreg" : args.front());
    app.require_subcommand(1);

    std::string config, relation_file, ap_file, out_file, var_name;
    std::string zero_mass;
    double input = 0.0;
    std::size_t steps = 0, samples = 0;
    bool trace = false;
    const std::map<std::string, ZeroMassPolicy> policies{{"error", ZeroMassPolicy::Error},
                                                         {"midpoint", ZeroMassPolicy::Midpoint}};

    auto* eval = app.add_subcommand("eval", "Evaluate the regulator at one crisp input");
    eval->add_option("--config", config, "Controller document")->required();
    eval->add_option("--input", input, "Crisp input value")->required();
    eval->add_flag("--trace", trace, "Print every pipeline stage");
    eval->add_option("--zero-mass", zero_mass, "Override the zero-mass policy")
        ->check(CLI::IsMember({"error", "midpoint"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate evenly spaced inputs across the input universe");
    sweep_cmd->add_option("--config", config, "Controller document")->required();
    sweep_cmd->add_option("--steps", steps, "Number of inputs (>= 2)")->required()->check(CLI::Range(2, 100000000));
    sweep_cmd->add_option("--out", out_file, "CSV destination (default: standard output)");
    sweep_cmd->add_option("--zero-mass", zero_mass, "Override the zero-mass policy")
        ->check(CLI::IsMember({"error", "midpoint"}));

    auto* mfplot = app.add_subcommand("mfplot", "Emit membership function plot data");
    mfplot->add_option("--config", config, "Controller document")->required();
    mfplot->add_option("--var", var_name, "Variable name")->required();
    mfplot->add_option("--samples", samples, "Rows to emit (>= 2)")->required()->check(CLI::Range(2, 100000000));
    mfplot->add_option("--out", out_file, "CSV destination (default: standard output)");

    auto* infer_cmd = app.add_subcommand("infer", "Max-min composition of a vector through a relation");
    infer_cmd->add_option("--relation", relation_file, "Relation matrix CSV")->required();
    infer_cmd->add_option("--ap", ap_file, "Input grade vector CSV")->required();

    auto* check = app.add_subcommand("check", "Validate a controller document");
    check->add_option("--config", config, "Controller document")->required();

    std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (infer_cmd->parsed()) {
            const FuzzyRelation r = parse_relation_csv(read_text_file(relation_file));
            const std::vector<double> ap = parse_vector_csv(read_text_file(ap_file));
            for (double g : ap) {
                if (!(g >= 0.0 && g <= 1.0)) throw Error(ErrorKind::InvalidArgument, "input grade outside [0, 1]");
            }
            out << format_vector(compose(r, ap)) << '\n';
            return kExitOk;
        }

        Regulator reg = load_config(config);
        if (!zero_mass.empty()) reg = reg.with_zero_mass_policy(policies.at(zero_mass));

        if (check->parsed()) {
            out << "ok: " << reg.rulebase().rules().size() << " rules\n";
            return kExitOk;
        }
        if (eval->parsed()) {
            const EvalTrace t = evaluate(reg, input);
            if (trace) {
                write_trace(out, reg, t);
            } else {
                out << format_number(t.output) << '\n';
                if (t.fallback) err << "warning: no rule fired; returned the output midpoint\n";
            }
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            const auto points = sweep(reg, steps);
            OutputSink sink(out_file, out);
            sink.stream() << emit_sweep_csv(points);
            return kExitOk;
        }
        if (mfplot->parsed()) {
            const RuleBase& rb = reg.rulebase();
            const LinguisticVariable* var = nullptr;
            if (rb.input().name() == var_name) var = &rb.input();
            else if (rb.output().name() == var_name) var = &rb.output();
            if (!var) {
                err << app.get_name() << ": no variable named '" << var_name << "' (have '" << rb.input().name()
                    << "', '" << rb.output().name() << "')\n";
                return kExitUsage;
            }
            const std::string csv = emit_mf_plot_data(*var, samples);
            OutputSink sink(out_file, out);
            sink.stream() << csv;
            return kExitOk;
        }
    } catch (const Error& e) {
        err << app.get_name() << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitUsage;
}

} // namespace fuzzyreg::cli
