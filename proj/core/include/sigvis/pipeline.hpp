#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigvis/path.hpp"
#include "sigvis/transforms.hpp"

namespace sigvis {

/// One ingested stream with its identity and optional class label.
struct StreamRecord {
    std::string id;
    std::optional<std::string> label;
    Stream stream;
};

/// One extracted feature row, in canonical flatten order.
struct FeatureRecord {
    std::string id;
    std::optional<std::string> label;
    std::vector<double> features;
};

enum class FeatureKind { Signature, LogSignature };

struct RunConfig {
    int depth = 2;
    std::vector<TransformSpec> chain;
    FeatureKind feature = FeatureKind::Signature;
    bool include_constant = false;
    std::uint64_t seed = 0;
};

/// Column layout of a feature file: the post-transform alphabet and depth
/// that name the word columns. alphabet 0 marks a run with no feature
/// columns (empty input).
struct FeatureLayout {
    int alphabet = 0;
    int depth = 0;
    bool include_constant = false;
};

/// Reads one JSON object per line: {"id": string, "label": string or null
/// (optional), "points": array of equal-length numeric arrays}. Blank lines
/// are skipped. Throws ParseError naming the 1-based line on any defect.
std::vector<StreamRecord> read_streams(std::istream& in);

/// Layout an extraction run produces for width-dim input.
FeatureLayout layout_for(int dim, const RunConfig& config);

/// Per record: apply_chain, interpolate, signature or log-signature at the
/// configured depth, flatten. Output order equals input order. All streams
/// of a run must share one width; errors carry the offending stream id.
std::vector<FeatureRecord> extract(const std::vector<StreamRecord>& records,
                                   const RunConfig& config);

/// CSV: header `id,label` plus one `s_<letters>` column per word in
/// canonical order, rows in input order, reals with 17 significant digits.
void write_features(const std::vector<FeatureRecord>& records,
                    const FeatureLayout& layout, std::ostream& out);

}  // namespace sigvis
