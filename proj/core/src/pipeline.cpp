#include "sigvis/pipeline.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "sigvis/errors.hpp"
#include "sigvis/signature.hpp"
#include "sigvis/tensor.hpp"

namespace sigvis {

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

StreamRecord parse_record(const std::string& line, std::size_t line_no) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        fail_line(line_no, e.what());
    }
    if (!j.is_object()) fail_line(line_no, "expected a JSON object");
    if (!j.contains("id") || !j["id"].is_string())
        fail_line(line_no, "missing string field 'id'");

    StreamRecord rec;
    rec.id = j["id"].get<std::string>();
    if (j.contains("label") && !j["label"].is_null()) {
        if (!j["label"].is_string())
            fail_line(line_no, "field 'label' must be a string or null");
        rec.label = j["label"].get<std::string>();
    }
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        fail_line(line_no, "missing non-empty array field 'points'");

    std::size_t width = 0;
    for (const auto& row : j["points"]) {
        if (!row.is_array() || row.empty())
            fail_line(line_no, "points rows must be non-empty arrays");
        if (width == 0) width = row.size();
        if (row.size() != width)
            fail_line(line_no, "points rows have unequal widths");
        std::vector<double> values;
        values.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number())
                fail_line(line_no, "points entries must be numbers");
            values.push_back(v.get<double>());
        }
        rec.stream.points.push_back(std::move(values));
    }
    return rec;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<StreamRecord> read_streams(std::istream& in) {
    std::vector<StreamRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        records.push_back(parse_record(line, line_no));
    }
    return records;
}

FeatureLayout layout_for(int dim, const RunConfig& config) {
    return {chain_output_dim(dim, config.chain), config.depth,
            config.include_constant};
}

std::vector<FeatureRecord> extract(const std::vector<StreamRecord>& records,
                                   const RunConfig& config) {
    if (config.depth < 1) throw ConfigError("depth must be at least 1");
    validate_chain(config.chain);

    int width = 0;
    std::vector<FeatureRecord> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        if (width == 0) width = rec.stream.dim();
        if (rec.stream.dim() != width)
            throw ConfigError("stream '" + rec.id + "' has width " +
                              std::to_string(rec.stream.dim()) +
                              ", run expects " + std::to_string(width));
        try {
            const Stream transformed = apply_chain(rec.stream, config.chain);
            const PiecewiseLinearPath path = path_from_stream(transformed);
            const TensorSeries series = config.feature == FeatureKind::Signature
                                            ? signature(path, config.depth)
                                            : log_signature(path, config.depth);
            out.push_back(
                {rec.id, rec.label, series.flatten(config.include_constant)});
        } catch (const ShapeError& e) {
            throw ConfigError("stream '" + rec.id + "': " + e.what());
        }
    }
    return out;
}

void write_features(const std::vector<FeatureRecord>& records,
                    const FeatureLayout& layout, std::ostream& out) {
    std::size_t columns = 0;
    out << "id,label";
    if (layout.alphabet > 0) {
        if (layout.include_constant) {
            out << ",s_";
            ++columns;
        }
        for (int k = 1; k <= layout.depth; ++k) {
            std::size_t level_words = 1;
            for (int i = 0; i < k; ++i)
                level_words *= static_cast<std::size_t>(layout.alphabet);
            for (std::size_t idx = 0; idx < level_words; ++idx) {
                out << ",s_" << word_name(nth_word(layout.alphabet, k, idx),
                                          layout.alphabet);
                ++columns;
            }
        }
    }
    out << '\n';

    for (const auto& rec : records) {
        if (rec.features.size() != columns)
            throw std::logic_error("feature row '" + rec.id + "' has " +
                                   std::to_string(rec.features.size()) +
                                   " values, header has " +
                                   std::to_string(columns));
        out << csv_quote(rec.id) << ','
            << csv_quote(rec.label ? *rec.label : std::string());
        for (double v : rec.features) out << ',' << format_real(v);
        out << '\n';
    }
}

}  // namespace sigvis
