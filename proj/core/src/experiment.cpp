#include "sigvis/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "sigvis/errors.hpp"
#include "sigvis/rng.hpp"

namespace sigvis {

namespace {

constexpr int kBaseKnots = 8;
constexpr double kNoise = 0.1;
constexpr double kOffsets[3][2] = {{0.0, 0.0}, {5.0, 0.0}, {0.0, 5.0}};

/// Half circle of radius 1 starting at the origin and ending at (-2, 0).
std::vector<std::vector<double>> base_shape() {
    std::vector<std::vector<double>> knots(kBaseKnots);
    for (int k = 0; k < kBaseKnots; ++k) {
        const double theta = std::numbers::pi * k / (kBaseKnots - 1);
        knots[static_cast<std::size_t>(k)] = {std::cos(theta) - 1.0,
                                              std::sin(theta)};
    }
    return knots;
}

Stream refined_stream(const std::vector<std::vector<double>>& knots, int m) {
    Stream s;
    const std::size_t n = knots.size();
    s.points.reserve((n - 1) * static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const double w = static_cast<double>(j) / m;
            s.points.push_back({knots[i][0] + w * (knots[i + 1][0] - knots[i][0]),
                                knots[i][1] + w * (knots[i + 1][1] - knots[i][1])});
        }
    }
    s.points.push_back(knots[n - 1]);
    return s;
}

/// In-place Cholesky solve of the SPD system a * x = rhs (n x n, row-major,
/// multiple right-hand sides stored column-per-class in rhs).
void cholesky_solve(std::vector<double>& a, std::vector<double>& rhs,
                    std::size_t n, std::size_t nrhs) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k)
                sum -= a[i * n + k] * a[j * n + k];
            if (i == j) {
                if (sum <= 0.0)
                    throw std::runtime_error(
                        "ridge_fit: normal equations not positive definite");
                a[i * n + i] = std::sqrt(sum);
            } else {
                a[i * n + j] = sum / a[j * n + j];
            }
        }
    }
    for (std::size_t c = 0; c < nrhs; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = rhs[i * nrhs + c];
            for (std::size_t k = 0; k < i; ++k)
                sum -= a[i * n + k] * rhs[k * nrhs + c];
            rhs[i * nrhs + c] = sum / a[i * n + i];
        }
        for (std::size_t i = n; i-- > 0;) {
            double sum = rhs[i * nrhs + c];
            for (std::size_t k = i + 1; k < n; ++k)
                sum -= a[k * n + i] * rhs[k * nrhs + c];
            rhs[i * nrhs + c] = sum / a[i * n + i];
        }
    }
}

double accuracy(const LinearModel& model,
                const std::vector<FeatureRecord>& records) {
    const std::vector<std::string> predicted = ridge_predict(model, records);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].label && *records[i].label == predicted[i]) ++hits;
    return records.empty() ? 0.0
                           : static_cast<double>(hits) /
                                 static_cast<double>(records.size());
}

}  // namespace

SyntheticDataset synth_dataset(std::uint64_t seed, int per_class) {
    if (per_class < 2) throw ConfigError("synth_dataset: per_class must be >= 2");
    const auto base = base_shape();
    Rng rng(seed);
    SyntheticDataset data;
    data.num_classes = 3;
    data.noise = kNoise;
    data.knots_per_sample = kBaseKnots;
    data.samples.reserve(3 * static_cast<std::size_t>(per_class));
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < per_class; ++i) {
            std::vector<std::vector<double>> knots(base.size());
            for (std::size_t k = 0; k < base.size(); ++k)
                knots[k] = {base[k][0] + kOffsets[c][0] + rng.normal(0.0, kNoise),
                            base[k][1] + kOffsets[c][1] + rng.normal(0.0, kNoise)};
            const int m = rng.uniform_int(1, 3);
            data.samples.push_back({"c" + std::to_string(c) + "_" + std::to_string(i),
                                    std::to_string(c), refined_stream(knots, m)});
        }
    }
    return data;
}

LinearModel ridge_fit(const std::vector<FeatureRecord>& records, double lambda) {
    if (records.empty()) throw ConfigError("ridge_fit: no records");
    if (!(lambda > 0.0)) throw ConfigError("ridge_fit: lambda must be positive");

    std::map<std::string, std::size_t> classes;
    for (const auto& rec : records) {
        if (!rec.label)
            throw ConfigError("ridge_fit: record '" + rec.id + "' has no label");
        classes.emplace(*rec.label, 0);
    }
    if (classes.size() < 2) throw ConfigError("ridge_fit: need at least 2 classes");
    LinearModel model;
    for (auto& [label, index] : classes) {
        index = model.class_labels.size();
        model.class_labels.push_back(label);
    }
    model.feature_len = records[0].features.size();
    model.lambda = lambda;

    const std::size_t f = model.feature_len;
    const std::size_t n = f + 1;  // bias column appended last
    const std::size_t nc = model.class_labels.size();
    std::vector<double> gram(n * n, 0.0);
    std::vector<double> moments(n * nc, 0.0);
    std::vector<double> row(n, 1.0);
    for (const auto& rec : records) {
        if (rec.features.size() != f)
            throw ShapeError("ridge_fit: record '" + rec.id +
                             "' has inconsistent feature length");
        std::copy(rec.features.begin(), rec.features.end(), row.begin());
        const std::size_t target = classes[*rec.label];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j)
                gram[i * n + j] += row[i] * row[j];
            moments[i * nc + target] += row[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) gram[i * n + j] = gram[j * n + i];
    for (std::size_t i = 0; i < f; ++i) gram[i * n + i] += lambda;  // bias unpenalized

    cholesky_solve(gram, moments, n, nc);

    model.weights.resize(nc * f);
    model.biases.resize(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t i = 0; i < f; ++i)
            model.weights[c * f + i] = moments[i * nc + c];
        model.biases[c] = moments[f * nc + c];
    }
    return model;
}

std::vector<std::string> ridge_predict(const LinearModel& model,
                                       const std::vector<FeatureRecord>& records) {
    const std::size_t f = model.feature_len;
    const std::size_t nc = model.class_labels.size();
    std::vector<std::string> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        if (rec.features.size() != f)
            throw ShapeError("ridge_predict: record '" + rec.id +
                             "' has feature length " +
                             std::to_string(rec.features.size()) + ", model has " +
                             std::to_string(f));
        std::size_t best = 0;
        double best_score = 0.0;
        for (std::size_t c = 0; c < nc; ++c) {
            double score = model.biases[c];
            const double* w = model.weights.data() + c * f;
            for (std::size_t i = 0; i < f; ++i) score += w[i] * rec.features[i];
            if (c == 0 || score > best_score) {
                best = c;
                best_score = score;
            }
        }
        out.push_back(model.class_labels[best]);
    }
    return out;
}

BenchReport run_benchmark(std::uint64_t seed) {
    const auto started = std::chrono::steady_clock::now();
    const int per_class = 60;
    const SyntheticDataset data = synth_dataset(seed, per_class);

    // stratified 80/20 split
    Rng split_rng(seed + 1);
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < data.samples.size(); ++i)
        by_class[*data.samples[i].label].push_back(i);
    std::vector<bool> is_test(data.samples.size(), false);
    for (auto& [label, indices] : by_class) {
        for (std::size_t i = indices.size(); i-- > 1;) {
            const std::size_t j = static_cast<std::size_t>(
                split_rng.uniform_int(0, static_cast<int>(i)));
            std::swap(indices[i], indices[j]);
        }
        const std::size_t test_count = indices.size() / 5;
        for (std::size_t i = 0; i < test_count; ++i) is_test[indices[i]] = true;
    }

    BenchReport report;
    report.seed = seed;
    double* accuracies[2] = {&report.accuracy_plain, &report.accuracy_vis};
    std::size_t* lengths[2] = {&report.feature_len_plain, &report.feature_len_vis};
    const std::vector<TransformSpec> chains[2] = {
        {{TransformKind::LeadLag}},
        {{TransformKind::LeadLag}, {TransformKind::VisI}},
    };
    for (int cfg = 0; cfg < 2; ++cfg) {
        RunConfig config;
        config.depth = 3;
        config.chain = chains[cfg];
        config.seed = seed;
        const std::vector<FeatureRecord> features = extract(data.samples, config);
        std::vector<FeatureRecord> train, test;
        for (std::size_t i = 0; i < features.size(); ++i)
            (is_test[i] ? test : train).push_back(features[i]);
        const LinearModel model = ridge_fit(train, 1e-3);
        *accuracies[cfg] = accuracy(model, test);
        *lengths[cfg] = features[0].features.size();
    }

    report.passed = report.accuracy_plain >= 0.20 && report.accuracy_plain <= 0.55 &&
                    report.accuracy_vis >= 0.95;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

std::string bench_report_json(const BenchReport& report) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["accuracy_plain"] = report.accuracy_plain;
    j["accuracy_vis"] = report.accuracy_vis;
    j["feature_len_plain"] = report.feature_len_plain;
    j["feature_len_vis"] = report.feature_len_vis;
    j["elapsed_ms"] = report.elapsed_ms;
    j["passed"] = report.passed;
    return j.dump();
}

}  // namespace sigvis
