#include "sigvis/transforms.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "sigvis/errors.hpp"

namespace sigvis {

namespace {

bool is_visibility(TransformKind k) {
    return k == TransformKind::VisI || k == TransformKind::VisT;
}

TransformSpec parse_one(const std::string& token) {
    if (token == "time") return {TransformKind::Time};
    if (token == "leadlag") return {TransformKind::LeadLag};
    if (token == "vis_i") return {TransformKind::VisI};
    if (token == "vis_t") return {TransformKind::VisT};
    if (token == "basepoint") return {TransformKind::Basepoint};
    if (token.rfind("scale:", 0) == 0) {
        const std::string arg = token.substr(6);
        std::size_t used = 0;
        double factor = 0.0;
        try {
            factor = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad scale factor '" + arg + "'");
        }
        if (used != arg.size() || !std::isfinite(factor))
            throw ConfigError("bad scale factor '" + arg + "'");
        return {TransformKind::Scale, factor};
    }
    throw ConfigError("unknown transform '" + token + "'");
}

}  // namespace

std::vector<TransformSpec> parse_chain(const std::string& text) {
    std::vector<TransformSpec> chain;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string token = text.substr(start, end - start);
        const auto l = token.find_first_not_of(" \t");
        const auto r = token.find_last_not_of(" \t");
        token = (l == std::string::npos) ? "" : token.substr(l, r - l + 1);
        if (!token.empty()) chain.push_back(parse_one(token));
        else if (!text.empty())
            throw ConfigError("empty element in transform chain");
        start = end + 1;
        if (end == text.size()) break;
    }
    validate_chain(chain);
    return chain;
}

std::string format_chain(const std::vector<TransformSpec>& chain) {
    std::string out;
    for (const auto& spec : chain) {
        if (!out.empty()) out += ',';
        switch (spec.kind) {
            case TransformKind::Time: out += "time"; break;
            case TransformKind::LeadLag: out += "leadlag"; break;
            case TransformKind::VisI: out += "vis_i"; break;
            case TransformKind::VisT: out += "vis_t"; break;
            case TransformKind::Basepoint: out += "basepoint"; break;
            case TransformKind::Scale: {
                char buf[40];
                std::snprintf(buf, sizeof buf, "scale:%.17g", spec.factor);
                out += buf;
                break;
            }
        }
    }
    return out;
}

void validate_chain(const std::vector<TransformSpec>& chain) {
    int visibility_count = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!is_visibility(chain[i].kind)) continue;
        ++visibility_count;
        if (visibility_count > 1)
            throw ConfigError("transform chain has more than one visibility step");
        if (i + 1 != chain.size())
            throw ConfigError("visibility transform must be the last chain step");
    }
}

int chain_output_dim(int dim, const std::vector<TransformSpec>& chain) {
    for (const auto& spec : chain) {
        switch (spec.kind) {
            case TransformKind::Time: dim += 1; break;
            case TransformKind::LeadLag: dim *= 2; break;
            case TransformKind::VisI:
            case TransformKind::VisT: dim += 1; break;
            case TransformKind::Basepoint:
            case TransformKind::Scale: break;
        }
    }
    return dim;
}

Stream time_augment(const Stream& s) {
    validate_stream(s);
    const std::size_t n = s.points.size();
    Stream out;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row;
        row.reserve(s.points[i].size() + 1);
        row.push_back(n == 1 ? 0.0
                             : static_cast<double>(i) / static_cast<double>(n - 1));
        row.insert(row.end(), s.points[i].begin(), s.points[i].end());
        out.points.push_back(std::move(row));
    }
    return out;
}

Stream lead_lag(const Stream& s) {
    validate_stream(s);
    const std::size_t n = s.points.size();
    if (n < 2) throw ShapeError("lead_lag needs at least two rows");
    Stream out;
    out.points.reserve(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row = s.points[i];
        row.insert(row.end(), s.points[i].begin(), s.points[i].end());
        out.points.push_back(std::move(row));
        if (i + 1 < n) {
            std::vector<double> step = s.points[i + 1];
            step.insert(step.end(), s.points[i].begin(), s.points[i].end());
            out.points.push_back(std::move(step));
        }
    }
    return out;
}

Stream visibility_i_discrete(const Stream& s) {
    validate_stream(s);
    const std::size_t d = s.points[0].size();
    Stream out;
    out.points.reserve(s.points.size() + 2);
    out.points.emplace_back(d + 1, 0.0);
    std::vector<double> anchor = s.points[0];
    anchor.push_back(0.0);
    out.points.push_back(std::move(anchor));
    for (const auto& row : s.points) {
        std::vector<double> lifted = row;
        lifted.push_back(1.0);
        out.points.push_back(std::move(lifted));
    }
    return out;
}

Stream visibility_t_discrete(const Stream& s) {
    validate_stream(s);
    const std::size_t d = s.points[0].size();
    Stream out;
    out.points.reserve(s.points.size() + 2);
    for (const auto& row : s.points) {
        std::vector<double> lifted = row;
        lifted.push_back(1.0);
        out.points.push_back(std::move(lifted));
    }
    std::vector<double> anchor = s.points.back();
    anchor.push_back(0.0);
    out.points.push_back(std::move(anchor));
    out.points.emplace_back(d + 1, 0.0);
    return out;
}

Stream with_basepoint(const Stream& s) {
    validate_stream(s);
    Stream out;
    out.points.reserve(s.points.size() + 1);
    out.points.emplace_back(s.points[0].size(), 0.0);
    out.points.insert(out.points.end(), s.points.begin(), s.points.end());
    return out;
}

Stream scale_stream(const Stream& s, double factor) {
    validate_stream(s);
    Stream out = s;
    for (auto& row : out.points)
        for (double& v : row) v *= factor;
    return out;
}

PiecewiseLinearPath visibility_prefix_path(std::span<const double> x0) {
    const std::size_t d = x0.size();
    std::vector<double> positions((d + 1) * 3, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        positions[(d + 1) + j] = x0[j];
        positions[2 * (d + 1) + j] = x0[j];
    }
    positions[2 * (d + 1) + d] = 1.0;
    return PiecewiseLinearPath({0.0, 0.5, 1.0}, std::move(positions),
                               static_cast<int>(d) + 1);
}

PiecewiseLinearPath visibility_suffix_path(std::span<const double> x1) {
    return reverse(visibility_prefix_path(x1));
}

PiecewiseLinearPath lift_visible(const PiecewiseLinearPath& x) {
    const std::size_t d = static_cast<std::size_t>(x.dim());
    const std::size_t n = x.num_knots();
    std::vector<double> positions(n * (d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        const auto pos = x.position(i);
        std::copy(pos.begin(), pos.end(), positions.begin() + i * (d + 1));
        positions[i * (d + 1) + d] = 1.0;
    }
    return PiecewiseLinearPath(x.times(), std::move(positions), x.dim() + 1);
}

PiecewiseLinearPath visibility_lift_path(const PiecewiseLinearPath& x,
                                         Visibility v) {
    const PiecewiseLinearPath lifted = lift_visible(x);
    if (v == Visibility::Initial)
        return concat(visibility_prefix_path(x.initial_position()), lifted);
    return concat(lifted, visibility_suffix_path(x.tail_position()));
}

Stream apply_chain(const Stream& s, const std::vector<TransformSpec>& chain) {
    validate_chain(chain);
    Stream out = s;
    for (const auto& spec : chain) {
        switch (spec.kind) {
            case TransformKind::Time: out = time_augment(out); break;
            case TransformKind::LeadLag: out = lead_lag(out); break;
            case TransformKind::VisI: out = visibility_i_discrete(out); break;
            case TransformKind::VisT: out = visibility_t_discrete(out); break;
            case TransformKind::Basepoint: out = with_basepoint(out); break;
            case TransformKind::Scale: out = scale_stream(out, spec.factor); break;
        }
    }
    return out;
}

}  // namespace sigvis
