// Command-line front end: check a configuration file against the full
// constraint catalogue, print built-in examples, or enumerate small
// admissible configurations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snc/constraints.hpp"
#include "snc/enumerate.hpp"
#include "snc/fixtures.hpp"
#include "snc/io.hpp"

namespace {

// exit codes: 0 all constraints pass, 1 constraint failure,
// 2 parse/validation failure, 3 I/O error
constexpr int kExitPass = 0;
constexpr int kExitConstraintFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

int run_check(const std::string& path, const std::string& format, bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        std::cerr << "error: failed reading " << path << "\n";
        return kExitIo;
    }

    snc::ParseResult parsed = snc::parse_configuration(buf.str());
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            std::cerr << e.code << ": " << e.detail << "\n";
        return kExitInvalid;
    }

    auto policy = lenient ? snc::TpfPolicy::Lenient : snc::TpfPolicy::Strict;
    snc::ValidationReport val = snc::validate(*parsed.config, policy);
    if (!val.ok()) {
        snc::ConstraintReport rep;
        rep.configuration = parsed.config->name;
        rep.validation = val;
        std::cout << snc::render_report(rep, format == "json" ? snc::ReportFormat::Machine
                                                              : snc::ReportFormat::Text);
        return kExitInvalid;
    }

    snc::ConstraintReport rep = snc::check_all(*parsed.config);
    rep.validation = val;  // carries lenient-mode warnings
    std::cout << snc::render_report(rep, format == "json" ? snc::ReportFormat::Machine
                                                          : snc::ReportFormat::Text);
    return rep.all_pass() ? kExitPass : kExitConstraintFail;
}

int run_example(const std::string& name, const std::string& write_path) {
    auto cfg = snc::builtin_fixture(name);
    if (!cfg) {
        std::cerr << "UNKNOWN_FIXTURE: " << name << "\n";
        return kExitInvalid;
    }
    std::string doc = snc::serialize(*cfg);
    if (write_path.empty()) {
        std::cout << doc;
        return kExitPass;
    }
    std::ofstream out(write_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << write_path << "\n";
        return kExitIo;
    }
    out << doc;
    return out.good() ? kExitPass : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"necessary-condition checker for semistable surface degenerations"};
    app.require_subcommand(1);

    std::string check_path, format = "text";
    bool lenient = false;
    auto* check = app.add_subcommand("check", "validate a configuration file and run C1-C7");
    check->add_option("file", check_path, "configuration file (JSON)")->required();
    check->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--lenient", lenient,
                    "demote triple point formula violations to warnings");

    std::string example_name, write_path;
    auto* example = app.add_subcommand("example", "print a built-in example configuration");
    example->add_option("name", example_name, "FIX-A .. FIX-E")->required();
    example->add_option("--write", write_path, "write to file instead of stdout");

    snc::EnumerationBounds bounds;
    std::string enum_format = "json";
    auto* enumerate = app.add_subcommand("enumerate",
                                         "exhaustively list small admissible configurations");
    enumerate->add_option("--max-components", bounds.max_components);
    enumerate->add_option("--b1-max", bounds.b1_max);
    enumerate->add_option("--b2-max", bounds.b2_max);
    enumerate->add_option("--selfint-min", bounds.selfint_min);
    enumerate->add_option("--selfint-max", bounds.selfint_max);
    enumerate->add_option("--max-curves", bounds.max_curves);
    enumerate->add_option("--max-triple-points", bounds.max_triple_points);
    enumerate->add_option("--format", enum_format, "json")->check(CLI::IsMember({"json"}));

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return run_check(check_path, format, lenient);
    if (example->parsed()) return run_example(example_name, write_path);
    if (enumerate->parsed()) {
        snc::EnumerationResult res = snc::enumerate_configs(bounds, std::cout);
        if (res.error) {
            std::cerr << *res.error << "\n";
            return kExitInvalid;
        }
        std::cerr << "admissible: " << res.emitted << " (examined " << res.examined << ")\n";
        return kExitPass;
    }
    return kExitInvalid;
}
