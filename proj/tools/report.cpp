#include "report.hpp"

#include "docclean/errors.hpp"

#include <json.hpp>

#include <array>
#include <string>

namespace docclean::report {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kInfinite = "inf";

const std::array<std::string_view, 4> kMethodNames = {"median", "kfilter", "binarize",
                                                      "pipeline"};

Json record_to_json(const RunRecord& r) {
    Json j = Json::object();
    j["input_path"] = r.input_path;
    j["method"] = r.method ? Json(std::string(to_string(*r.method))) : Json();
    j["matrix_size"] = r.filter ? Json(r.filter->matrix_size()) : Json();
    j["k"] = r.filter ? Json(r.filter->k()) : Json();
    j["mode"] = r.mode ? Json(std::string(to_string(*r.mode))) : Json();
    j["density"] = r.noise ? Json(r.noise->density) : Json();
    j["salt_fraction"] = r.noise ? Json(r.noise->salt_fraction) : Json();
    j["seed"] = r.noise ? Json(r.noise->seed) : Json();

    const QualityReport* m = r.metrics ? &*r.metrics : nullptr;
    const Confusion* c = m && m->confusion ? &*m->confusion : nullptr;
    j["mse"] = m ? Json(m->mse) : Json();
    if (!m) {
        j["psnr"] = Json();
    } else if (m->psnr.is_infinite()) {
        j["psnr"] = std::string(kInfinite);
    } else {
        j["psnr"] = m->psnr.value();
    }
    j["changed_pixels"] = m ? Json(m->changed_pixels) : Json();
    j["tp"] = c ? Json(c->tp) : Json();
    j["fp"] = c ? Json(c->fp) : Json();
    j["fn"] = c ? Json(c->fn) : Json();
    j["tn"] = c ? Json(c->tn) : Json();
    j["precision"] = c ? Json(c->precision()) : Json();
    j["recall"] = c ? Json(c->recall()) : Json();
    j["f1"] = c ? Json(c->f1()) : Json();
    j["output_path"] = r.output_path;
    return j;
}

[[noreturn]] void malformed(const std::string& what, std::size_t offset = 0) {
    throw ParseError("malformed report: " + what, offset);
}

const Json& field(const Json& j, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end()) malformed("missing field '" + key + "'");
    return *it;
}

template <typename T>
T number(const Json& j, const std::string& key) {
    const Json& v = field(j, key);
    if (!v.is_number()) malformed("field '" + key + "' is not a number");
    return v.get<T>();
}

RunRecord record_from_json_unchecked(const Json& j) {
    if (!j.is_object()) malformed("record is not an object");
    RunRecord r;
    if (!field(j, "input_path").is_string() || !field(j, "output_path").is_string()) {
        malformed("paths must be strings");
    }
    r.input_path = j["input_path"].get<std::string>();
    r.output_path = j["output_path"].get<std::string>();

    if (const Json& v = field(j, "method"); !v.is_null()) r.method = parse_method(v.get<std::string>());
    if (!field(j, "matrix_size").is_null()) {
        r.filter = FilterParams(number<int>(j, "matrix_size"), number<int>(j, "k"));
    }
    if (const Json& v = field(j, "mode"); !v.is_null()) r.mode = parse_mode(v.get<std::string>());
    if (!field(j, "density").is_null()) {
        r.noise = NoiseSpec{number<double>(j, "density"), number<double>(j, "salt_fraction"),
                            number<std::uint64_t>(j, "seed")};
    }
    if (!field(j, "mse").is_null()) {
        QualityReport m;
        m.mse = number<double>(j, "mse");
        const Json& p = field(j, "psnr");
        if (p.is_string() && p.get<std::string>() == kInfinite) {
            m.psnr = Psnr::infinite();
        } else if (p.is_number()) {
            m.psnr = Psnr::decibels(p.get<double>());
        } else {
            malformed("psnr must be a number or \"inf\"");
        }
        m.changed_pixels = number<std::uint64_t>(j, "changed_pixels");
        if (!field(j, "tp").is_null()) {
            // precision, recall and f1 are derived from the counts
            m.confusion = Confusion{number<std::uint64_t>(j, "tp"), number<std::uint64_t>(j, "fp"),
                                    number<std::uint64_t>(j, "fn"), number<std::uint64_t>(j, "tn")};
        }
        r.metrics = m;
    }
    return r;
}

RunRecord record_from_json(const Json& j) {
    try {
        return record_from_json_unchecked(j);
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    } catch (const ParameterError& e) {
        malformed(e.what());
    }
}

bool needs_quotes(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return {};
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (!needs_quotes(s)) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + '"';
    }
    return v.dump();
}

// RFC 4180 fields. Quoted cells are reported so an empty quoted string is
// not mistaken for an absent value.
struct CsvCell {
    std::string text;
    bool quoted = false;
};

std::vector<std::vector<CsvCell>> split_csv(std::string_view text) {
    std::vector<std::vector<CsvCell>> rows;
    std::vector<CsvCell> row;
    CsvCell cell;
    std::size_t i = 0;
    auto end_row = [&] {
        row.push_back(std::move(cell));
        cell = {};
        rows.push_back(std::move(row));
        row.clear();
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '"' && cell.text.empty() && !cell.quoted) {
            cell.quoted = true;
            ++i;
            while (true) {
                if (i >= text.size()) malformed("unterminated quoted field", i);
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        cell.text += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                cell.text += text[i++];
            }
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell = {};
            ++i;
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            end_row();
            i += 2;
        } else if (c == '\n') {
            end_row();
            ++i;
        } else {
            if (cell.quoted) malformed("text after closing quote", i);
            cell.text += c;
            ++i;
        }
    }
    if (!cell.text.empty() || cell.quoted || !row.empty()) end_row();
    return rows;
}

bool is_string_column(const std::string& name) {
    return name == "input_path" || name == "method" || name == "mode" ||
           name == "output_path";
}

} // namespace

std::string_view to_string(Method m) { return kMethodNames[static_cast<std::size_t>(m)]; }

Method parse_method(std::string_view name) {
    for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
        if (kMethodNames[i] == name) return static_cast<Method>(i);
    }
    throw ParameterError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(FilterMode m) {
    return m == FilterMode::buffered ? "buffered" : "paper-literal";
}

FilterMode parse_mode(std::string_view name) {
    if (name == "buffered") return FilterMode::buffered;
    if (name == "paper-literal") return FilterMode::paper_literal;
    throw ParameterError("unknown filter mode '" + std::string(name) + "'");
}

bool operator==(const RunRecord& a, const RunRecord& b) {
    return a.input_path == b.input_path && a.method == b.method && a.filter == b.filter &&
           a.mode == b.mode && a.noise == b.noise && a.metrics == b.metrics &&
           a.output_path == b.output_path;
}

const std::vector<std::string>& columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        const Json blank = record_to_json(RunRecord{});
        for (const auto& item : blank.items()) out.push_back(item.key());
        return out;
    }();
    return names;
}

std::string to_csv(const std::vector<RunRecord>& records) {
    std::string out;
    const auto& cols = columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += '\n';
    for (const auto& r : records) {
        const Json j = record_to_json(r);
        bool first = true;
        for (const auto& item : j.items()) {
            if (!first) out += ',';
            first = false;
            out += csv_cell(item.value());
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<RunRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::string serialize(const std::vector<RunRecord>& records, Format format) {
    return format == Format::csv ? to_csv(records) : to_json(records);
}

std::vector<RunRecord> from_csv(std::string_view text) {
    const auto rows = split_csv(text);
    const auto& cols = columns();
    if (rows.empty()) malformed("missing header row");
    if (rows.front().size() != cols.size()) malformed("unexpected header");
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (rows.front()[i].text != cols[i]) malformed("unexpected column '" + rows.front()[i].text + "'");
    }

    std::vector<RunRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != cols.size()) {
            malformed("row " + std::to_string(r) + " has " + std::to_string(row.size()) + " cells");
        }
        Json j = Json::object();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto& cell = row[i];
            if (is_string_column(cols[i])) {
                const bool path = cols[i] == "input_path" || cols[i] == "output_path";
                j[cols[i]] = (cell.text.empty() && !cell.quoted && !path) ? Json() : Json(cell.text);
            } else if (cell.text.empty()) {
                j[cols[i]] = Json();
            } else if (cell.text == kInfinite) {
                j[cols[i]] = cell.text;
            } else {
                const Json v = Json::parse(cell.text, nullptr, false);
                if (v.is_discarded() || !v.is_number()) {
                    malformed("column '" + cols[i] + "' holds '" + cell.text + "'");
                }
                j[cols[i]] = v;
            }
        }
        records.push_back(record_from_json(j));
    }
    return records;
}

std::vector<RunRecord> from_json(std::string_view text) {
    const Json arr = Json::parse(text, nullptr, false);
    if (arr.is_discarded()) malformed("not valid JSON");
    if (!arr.is_array()) malformed("top level is not an array");
    std::vector<RunRecord> records;
    for (const auto& j : arr) records.push_back(record_from_json(j));
    return records;
}

} // namespace docclean::report
