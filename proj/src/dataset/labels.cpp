#include "codegraph/dataset/labels.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace codegraph::dataset {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Minimal CSV field splitter: commas, optional double-quoted fields with "" escapes.
std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct Accumulator {
    double weighted_sum = 0.0;
    std::uint64_t runs = 0;
};

}  // namespace

LabelSet parse_labels(std::string_view text, const std::filesystem::path& base_dir, const std::string& source_name) {
    namespace fs = std::filesystem;
    const fs::path base = fs::absolute(base_dir);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    bool has_runs = false;
    std::map<std::string, Accumulator> acc;
    LabelSet out;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (!have_header) {
            if (fields.size() < 2 || fields.size() > 3 || fields[0] != "path" || fields[1] != "seconds" ||
                (fields.size() == 3 && fields[2] != "runs")) {
                throw LabelError(source_name, line_no, "expected header 'path,seconds[,runs]'");
            }
            has_runs = fields.size() == 3;
            have_header = true;
            continue;
        }
        if (fields.size() < 2 || fields.size() > (has_runs ? 3u : 2u)) {
            throw LabelError(source_name, line_no, "expected " + std::string(has_runs ? "2 or 3" : "2") + " fields");
        }
        if (fields[0].empty()) throw LabelError(source_name, line_no, "empty path");

        double seconds = 0.0;
        const std::string& s = fields[1];
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), seconds);
        if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
            throw LabelError(source_name, line_no, "seconds '" + s + "' is not a number");
        }
        if (!(seconds > 0.0) || !std::isfinite(seconds)) {
            throw LabelError(source_name, line_no, "seconds must be positive, got '" + s + "'");
        }
        std::uint32_t runs = 1;
        if (fields.size() == 3 && !fields[2].empty()) {
            const std::string& r = fields[2];
            long long value = 0;
            auto [rend, rec] = std::from_chars(r.data(), r.data() + r.size(), value);
            if (rec != std::errc() || rend != r.data() + r.size() || value <= 0 || value > UINT32_MAX) {
                throw LabelError(source_name, line_no, "runs must be a positive integer, got '" + r + "'");
            }
            runs = static_cast<std::uint32_t>(value);
        }

        fs::path p(fields[0]);
        if (p.is_relative()) p = base / p;
        const std::string key = p.lexically_normal().generic_string();
        Accumulator& a = acc[key];
        a.weighted_sum += seconds * runs;
        a.runs += runs;
    }
    if (!have_header) throw LabelError(source_name, line_no, "empty label file");

    for (const auto& [path, a] : acc) {
        if (!fs::exists(path)) out.warnings.push_back("labelled file not found: " + path);
        out.records.push_back(LabelRecord{path, a.weighted_sum / static_cast<double>(a.runs),
                                          static_cast<std::uint32_t>(std::min<std::uint64_t>(a.runs, UINT32_MAX))});
    }
    return out;
}

LabelSet ingest_labels(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw LabelError(csv_path.string(), 0, "cannot open label file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_labels(buf.str(), csv_path.parent_path().empty() ? "." : csv_path.parent_path(), csv_path.string());
}

}  // namespace codegraph::dataset
