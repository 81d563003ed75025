#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "taxolint/annotations.hpp"
#include "taxolint/checker.hpp"
#include "taxolint/restructure.hpp"
#include "taxolint/wordnet.hpp"

namespace taxolint {

enum class ReportFormat { Text, JsonLines };

// TEXT violation grammar (one per line, tab-separated):
//   V <kind> <subject> <object|-> <path names joined by '>'|-> <repair> <explanation>
std::string violation_text_line(const Violation& v);
std::string violation_json_line(const Violation& v);

void write_check_report(const CheckReport& report, ReportFormat format, std::ostream& out);
void write_stats(const CorpusStats& stats, ReportFormat format, std::ostream& out);
void write_suggestions(const std::vector<std::pair<std::string, Suggestion>>& suggestions,
                       ReportFormat format, std::ostream& out);
void write_mapping_report(const MappingReport& report, ReportFormat format, std::ostream& out);

}  // namespace taxolint
