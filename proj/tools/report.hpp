#ifndef DOCCLEAN_TOOLS_REPORT_HPP
#define DOCCLEAN_TOOLS_REPORT_HPP

#include "docclean/filters.hpp"
#include "docclean/metrics.hpp"
#include "docclean/noise.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docclean::report {

enum class Method { median, kfilter, binarize, pipeline };

std::string_view to_string(Method m);
/// Throws ParameterError on an unknown name.
Method parse_method(std::string_view name);

std::string_view to_string(FilterMode m);
FilterMode parse_mode(std::string_view name);

/// One evaluated image. Absent fields serialize as an empty CSV cell or a
/// JSON null.
struct RunRecord {
    std::string input_path;
    std::optional<Method> method;
    std::optional<FilterParams> filter;
    std::optional<FilterMode> mode;
    std::optional<NoiseSpec> noise;
    std::optional<QualityReport> metrics;
    std::string output_path;
};

bool operator==(const RunRecord& a, const RunRecord& b);

enum class Format { csv, json };

/// Column order shared by both formats.
const std::vector<std::string>& columns();

std::string to_csv(const std::vector<RunRecord>& records);
std::string to_json(const std::vector<RunRecord>& records);
std::string serialize(const std::vector<RunRecord>& records, Format format);

/// Inverse of the writers. Throws ParseError on malformed input.
std::vector<RunRecord> from_csv(std::string_view text);
std::vector<RunRecord> from_json(std::string_view text);

} // namespace docclean::report

#endif // DOCCLEAN_TOOLS_REPORT_HPP
