#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "taxolint/annotations.hpp"
#include "taxolint/checker.hpp"
#include "taxolint/report.hpp"
#include "taxolint/restructure.hpp"
#include "taxolint/wordnet.hpp"

namespace fs = std::filesystem;
using namespace taxolint;

namespace {

struct Options {
    std::string input;
    std::string annotations_path;
    std::string out_path;
    std::string cleaned_out_path;
    std::string format = "native";  // prolog|native
    std::string report = "text";    // text|jsonl
    std::string concept_name;            // optional, for suggest
    bool keep_unknown_rigidity = true;
    bool strict = false;
};

std::ifstream open_or_die(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

struct LoadedTaxonomy {
    Taxonomy taxonomy;
    CorpusStats stats;
    std::vector<std::string> warnings;
};

LoadedTaxonomy load_taxonomy(const Options& opt) {
    LoadedTaxonomy out;
    if (opt.format == "native") {
        auto in = open_or_die(opt.input);
        out.taxonomy = read_native(in);
        out.stats = stats_of(out.taxonomy);
        return out;
    }

    // Prolog input: a directory with the standard wn_s/wn_hyp/wn_g files, or
    // one combined clause file.
    PrologParse parsed;
    if (fs::is_directory(opt.input)) {
        auto s = open_or_die(fs::path(opt.input) / "wn_s.pl");
        auto hyp = open_or_die(fs::path(opt.input) / "wn_hyp.pl");
        auto g = open_or_die(fs::path(opt.input) / "wn_g.pl");
        parsed = parse_prolog_db(s, hyp, g);
    } else {
        auto s = open_or_die(opt.input);
        auto hyp = open_or_die(opt.input);
        auto g = open_or_die(opt.input);
        parsed = parse_prolog_db(s, hyp, g);
    }
    const NameMap names = normalize_names(parsed.records);
    BuildResult built = build_taxonomy(parsed.records, parsed.hypernym_pairs, names);
    out.taxonomy = std::move(built.taxonomy);
    out.stats = built.stats;
    out.warnings = std::move(parsed.warnings);
    out.warnings.insert(out.warnings.end(), names.warnings.begin(), names.warnings.end());
    out.warnings.insert(out.warnings.end(), built.warnings.begin(), built.warnings.end());
    return out;
}

AnnotationSet load_annotations(const Options& opt, std::vector<std::string>& warnings) {
    if (opt.annotations_path.empty()) throw Error("--annotations is required for this command");
    auto in = open_or_die(opt.annotations_path);
    ParsedAnnotations parsed = parse_annotations(in);
    warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
    return std::move(parsed.annotations);
}

// Reports go to --out or stdout; diagnostics stay on stderr.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

ReportFormat report_format(const Options& opt) {
    if (opt.report == "text") return ReportFormat::Text;
    if (opt.report == "jsonl") return ReportFormat::JsonLines;
    throw Error("unknown report format '" + opt.report + "'");
}

int finish(const Options& opt, const std::vector<std::string>& warnings, int status) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    if (opt.strict && !warnings.empty()) return 2;
    return status;
}

int cmd_ingest(const Options& opt) {
    LoadedTaxonomy loaded = load_taxonomy(opt);
    OutputSink sink(opt.out_path);
    write_native(loaded.taxonomy, sink.stream());
    return finish(opt, loaded.warnings, 0);
}

int cmd_stats(const Options& opt) {
    LoadedTaxonomy loaded = load_taxonomy(opt);
    OutputSink sink(opt.out_path);
    write_stats(loaded.stats, report_format(opt), sink.stream());
    return finish(opt, loaded.warnings, 0);
}

int cmd_check(const Options& opt) {
    LoadedTaxonomy loaded = load_taxonomy(opt);
    AnnotationSet annotations = load_annotations(opt, loaded.warnings);
    const CheckReport report = full_check(loaded.taxonomy, annotations);
    loaded.warnings.insert(loaded.warnings.end(), report.warnings.begin(), report.warnings.end());
    OutputSink sink(opt.out_path);
    write_check_report(report, report_format(opt), sink.stream());
    return finish(opt, loaded.warnings, report.violations.empty() ? 0 : 1);
}

int cmd_suggest(const Options& opt) {
    LoadedTaxonomy loaded = load_taxonomy(opt);
    AnnotationSet annotations = load_annotations(opt, loaded.warnings);
    std::vector<std::pair<std::string, Suggestion>> rows;
    if (!opt.concept_name.empty()) {
        const ConceptId id = loaded.taxonomy.require(opt.concept_name);
        for (auto& s : suggest_from_children(id, loaded.taxonomy, annotations))
            rows.emplace_back(opt.concept_name, std::move(s));
    } else {
        for (ConceptId id : loaded.taxonomy.all_sorted())
            for (auto& s : suggest_from_children(id, loaded.taxonomy, annotations))
                rows.emplace_back(loaded.taxonomy.concept_of(id).name, std::move(s));
    }
    OutputSink sink(opt.out_path);
    write_suggestions(rows, report_format(opt), sink.stream());
    return finish(opt, loaded.warnings, 0);
}

int cmd_backbone(const Options& opt) {
    LoadedTaxonomy loaded = load_taxonomy(opt);
    AnnotationSet annotations = load_annotations(opt, loaded.warnings);
    const BackboneResult result =
        extract_backbone(loaded.taxonomy, annotations, opt.keep_unknown_rigidity);
    for (const auto& name : result.removed) std::cerr << "removed: " << name << '\n';
    OutputSink sink(opt.out_path);
    write_native(result.backbone, sink.stream());
    return finish(opt, loaded.warnings, 0);
}

int cmd_map(const Options& opt) {
    LoadedTaxonomy loaded = load_taxonomy(opt);
    AnnotationSet annotations = load_annotations(opt, loaded.warnings);
    const MappingResult result = apply_mapping(loaded.taxonomy, annotations);
    OutputSink sink(opt.out_path);
    write_mapping_report(result.report, report_format(opt), sink.stream());
    if (!opt.cleaned_out_path.empty()) {
        std::ofstream cleaned(opt.cleaned_out_path);
        if (!cleaned) throw Error("cannot open output file " + opt.cleaned_out_path);
        write_native(result.cleaned, cleaned);
    }
    return finish(opt, loaded.warnings, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"taxolint - taxonomy meta-property lint and restructuring"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_annotations) {
        cmd->add_option("input", opt.input, "taxonomy source (native file, prolog file or dir)")
            ->required();
        cmd->add_option("--format", opt.format, "input format: prolog|native")
            ->check(CLI::IsMember({"prolog", "native"}));
        cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
        cmd->add_option("--report", opt.report, "report format: text|jsonl")
            ->check(CLI::IsMember({"text", "jsonl"}));
        cmd->add_flag("--strict", opt.strict, "treat warnings as errors (exit 2)");
        if (needs_annotations)
            cmd->add_option("--annotations", opt.annotations_path, "annotation file")->required();
    };

    auto* ingest = app.add_subcommand("ingest", "parse a source and emit the native format");
    add_common(ingest, false);
    auto* stats = app.add_subcommand("stats", "corpus statistics");
    add_common(stats, false);
    auto* check = app.add_subcommand("check", "run all constraint checks");
    add_common(check, true);
    auto* suggest = app.add_subcommand("suggest", "children-inspection annotation constraints");
    add_common(suggest, true);
    suggest->add_option("concept", opt.concept_name, "restrict to one concept");
    auto* backbone = app.add_subcommand("backbone", "extract the rigid backbone taxonomy");
    add_common(backbone, true);
    backbone->add_option("--keep-unknown-rigidity", opt.keep_unknown_rigidity,
                         "retain concepts with unknown rigidity (default true)");
    auto* map_cmd = app.add_subcommand("map", "apply top-level category mapping directives");
    add_common(map_cmd, true);
    map_cmd->add_option("--cleaned-out", opt.cleaned_out_path,
                        "also write the cleaned taxonomy (native format) to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return cmd_ingest(opt);
        if (*stats) return cmd_stats(opt);
        if (*check) return cmd_check(opt);
        if (*suggest) return cmd_suggest(opt);
        if (*backbone) return cmd_backbone(opt);
        if (*map_cmd) return cmd_map(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
