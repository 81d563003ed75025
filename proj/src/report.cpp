#include "taxolint/report.hpp"

#include <json.hpp>

namespace taxolint {

namespace {

using nlohmann::json;

std::string join_path(const std::vector<std::string>& path) {
    if (path.empty()) return "-";
    std::string out;
    for (const auto& p : path) {
        if (!out.empty()) out += '>';
        out += p;
    }
    return out;
}

}  // namespace

std::string violation_text_line(const Violation& v) {
    return "V\t" + to_string(v.kind) + '\t' + v.subject + '\t' +
           (v.object.empty() ? "-" : v.object) + '\t' + join_path(v.path) + '\t' +
           to_string(v.suggested_repair) + '\t' + v.explanation;
}

std::string violation_json_line(const Violation& v) {
    json j;
    j["kind"] = to_string(v.kind);
    j["subject"] = v.subject;
    if (v.object.empty()) j["object"] = nullptr;
    else j["object"] = v.object;
    j["path"] = v.path;
    j["explanation"] = v.explanation;
    j["suggested_repair"] = to_string(v.suggested_repair);
    return j.dump();
}

void write_check_report(const CheckReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Text) {
        out << "# check report\n"
            << "# columns: V kind subject object path suggested_repair explanation (tab-separated)\n"
            << "# legend: ~U conflicts with both +U and *U; the concreteness rule extends the"
               " anti-F constraint list\n";
        for (const auto& v : report.violations) out << violation_text_line(v) << '\n';
        out << "# skipped: " << report.skipped << '\n';
        for (const auto& [kind, count] : report.stats)
            out << "# count " << to_string(kind) << ": " << count << '\n';
    } else {
        for (const auto& v : report.violations) out << violation_json_line(v) << '\n';
        json summary;
        summary["skipped"] = report.skipped;
        json stats = json::object();
        for (const auto& [kind, count] : report.stats) stats[to_string(kind)] = count;
        summary["stats"] = stats;
        out << json{{"summary", summary}}.dump() << '\n';
    }
}

void write_stats(const CorpusStats& stats, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Text) {
        out << "noun_entries\t" << stats.noun_entries << '\n';
        if (stats.equivalence_classes)
            out << "equivalence_classes\t" << *stats.equivalence_classes << '\n';
        out << "noun_synsets\t" << stats.noun_synsets << '\n'
            << "nouns\t" << stats.nouns << '\n'
            << "monosemous_nouns\t" << stats.monosemous_nouns << '\n'
            << "polysemous_nouns\t" << stats.polysemous_nouns << '\n'
            << "one_word_nouns\t" << stats.one_word_nouns << '\n'
            << "noun_phrases\t" << stats.noun_phrases << '\n';
    } else {
        json j;
        j["noun_entries"] = stats.noun_entries;
        if (stats.equivalence_classes) j["equivalence_classes"] = *stats.equivalence_classes;
        j["noun_synsets"] = stats.noun_synsets;
        j["nouns"] = stats.nouns;
        j["monosemous_nouns"] = stats.monosemous_nouns;
        j["polysemous_nouns"] = stats.polysemous_nouns;
        j["one_word_nouns"] = stats.one_word_nouns;
        j["noun_phrases"] = stats.noun_phrases;
        out << j.dump() << '\n';
    }
}

void write_suggestions(const std::vector<std::pair<std::string, Suggestion>>& suggestions,
                       ReportFormat format, std::ostream& out) {
    static const char* property_names[] = {"RIGIDITY", "UNITY", "EXTENSIONALITY", "CONCRETENESS"};
    if (format == ReportFormat::Text) {
        for (const auto& [name, s] : suggestions)
            out << "S\t" << name << '\t' << describe(s) << '\n';
    } else {
        for (const auto& [name, s] : suggestions) {
            json j;
            j["concept"] = name;
            j["property"] = property_names[static_cast<int>(s.property)];
            j["forbidden"] = s.forbid_anti ? "ANTI" : "POSITIVE_WITH_NECESSITY";
            j["witnesses"] = s.witnesses;
            out << j.dump() << '\n';
        }
    }
}

void write_mapping_report(const MappingReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Text) {
        out << "# mapping report\n";
        for (const auto& [cat, row] : report.rows) {
            for (const auto& name : row.covered)
                out << "R\t" << to_string(cat) << "\tCOVERED\t" << name << '\n';
            for (const auto& [name, reason] : row.rejected)
                out << "R\t" << to_string(cat) << "\tREJECTED\t" << name << '\t' << reason << '\n';
            for (const auto& entry : row.imported)
                out << "R\t" << to_string(cat) << "\tIMPORTED\t" << entry.name << '\t'
                    << entry.original_parent << '\n';
        }
        for (const auto& v : report.incompatibilities) out << violation_text_line(v) << '\n';
        out << "# skipped: " << report.skipped << '\n';
    } else {
        for (const auto& [cat, row] : report.rows) {
            for (const auto& name : row.covered)
                out << json{{"category", to_string(cat)}, {"bucket", "covered"}, {"name", name}}
                           .dump()
                    << '\n';
            for (const auto& [name, reason] : row.rejected)
                out << json{{"category", to_string(cat)},
                            {"bucket", "rejected"},
                            {"name", name},
                            {"reason", reason}}
                           .dump()
                    << '\n';
            for (const auto& entry : row.imported)
                out << json{{"category", to_string(cat)},
                            {"bucket", "imported"},
                            {"name", entry.name},
                            {"original_parent", entry.original_parent}}
                           .dump()
                    << '\n';
        }
        for (const auto& v : report.incompatibilities) out << violation_json_line(v) << '\n';
        out << json{{"summary", {{"skipped", report.skipped}}}}.dump() << '\n';
    }
}

}  // namespace taxolint
