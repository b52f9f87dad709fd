#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hodgedr/corpus.hpp"
#include "hodgedr/errors.hpp"
#include "hodgedr/pipeline.hpp"

using namespace hodgedr;

namespace {

enum Exit { ok = 0, check_failure = 1, input_error = 2 };

void emit(const Json& doc, const std::string& text, const std::string& format)
{
    if (format == "json")
        std::cout << pretty(doc);
    else
        std::cout << text;
}

int run_analyze(const std::string& path, bool harmonic, const std::string& metric_path, bool non_nilpotent,
                const std::string& format)
{
    AnalysisInput in = parse_analysis_input(read_file(path));
    if (harmonic)
        in.flags.include_harmonic = true;
    if (non_nilpotent)
        in.flags.allow_non_nilpotent = true;
    if (!metric_path.empty())
        in.metric = parse_metric(read_file(metric_path));
    if (in.metric)
        validate_metric(*in.metric, in.algebra.dimension);
    const AnalysisResult r = analyze(in);
    emit(report_json(r), report_text(r), format);
    return r.passed() ? ok : check_failure;
}

int run_scan(const std::string& path, bool non_nilpotent, const std::string& format)
{
    ScanInput in = parse_scan_input(read_file(path));
    if (non_nilpotent)
        in.flags.allow_non_nilpotent = true;
    const ScanResult s = scan(in);
    emit(scan_json(s), scan_text(s), format);
    return s.passed() ? ok : check_failure;
}

int run_corpus(const std::string& format)
{
    const CorpusSummary s = corpus_verify();
    emit(corpus_json(s), corpus_text(s), format);
    return s.passed() ? ok : check_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hodge-de Rham numbers of left-invariant almost complex structures on 4-dimensional nilmanifolds"};
    app.set_version_flag("--version", std::string(engine_version));
    app.require_subcommand(1);

    std::string format = "text";
    auto format_option = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string input;
    std::string metric;
    bool harmonic = false;
    bool non_nilpotent = false;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze one structure");
    analyze_cmd->add_option("file", input, "Input JSON document")->required();
    analyze_cmd->add_flag("--include-harmonic", harmonic, "Add the left-invariant dbar-harmonic sidecar");
    analyze_cmd->add_option("--metric", metric, "Hermitian metric JSON document (implies --include-harmonic)");
    analyze_cmd->add_flag("--allow-non-nilpotent", non_nilpotent, "Accept solvable or other non-nilpotent algebras");
    format_option(analyze_cmd);

    CLI::App* scan_cmd = app.add_subcommand("scan", "Analyze a sampled family of structures");
    scan_cmd->add_option("file", input, "Scan JSON document")->required();
    scan_cmd->add_flag("--allow-non-nilpotent", non_nilpotent, "Accept non-nilpotent algebras");
    format_option(scan_cmd);

    CLI::App* corpus_cmd = app.add_subcommand("corpus-verify", "Check the built-in examples against expected values");
    format_option(corpus_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*analyze_cmd)
            return run_analyze(input, harmonic, metric, non_nilpotent, format);
        if (*scan_cmd)
            return run_scan(input, non_nilpotent, format);
        return run_corpus(format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return input_error;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return input_error;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return check_failure;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return check_failure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}
