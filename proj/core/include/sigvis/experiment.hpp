#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sigvis/pipeline.hpp"

namespace sigvis {

/// Synthetic classification task: one base shape, three classes that differ
/// only by where the shape is planted. Plain signatures cannot see the
/// difference; visibility-lifted ones can.
struct SyntheticDataset {
    std::vector<StreamRecord> samples;  // labels "0", "1", "2"
    int num_classes = 0;
    double noise = 0.0;
    int knots_per_sample = 0;  // before the random collinear refinement
};

/// 3 classes of 2-D streams sharing an 8-knot half-circle polyline planted
/// at (0,0), (5,0), (0,5); per sample, knot noise of scale 0.1 and a random
/// collinear refinement factor in {1,2,3}.
SyntheticDataset synth_dataset(std::uint64_t seed, int per_class);

/// One-vs-rest ridge regressor over feature vectors. Class order is the
/// lexicographic order of the labels seen at fit time.
struct LinearModel {
    std::vector<std::string> class_labels;
    std::size_t feature_len = 0;
    double lambda = 0.0;
    std::vector<double> weights;  // class-major, feature_len per class
    std::vector<double> biases;   // one per class
};

/// Normal-equations fit with an unpenalized bias column, solved by a dense
/// symmetric (Cholesky) solve. Deterministic given input order. Every
/// record must carry a label; at least two classes required.
LinearModel ridge_fit(const std::vector<FeatureRecord>& records, double lambda);

/// Argmax of the per-class scores; ties go to the lowest class index.
std::vector<std::string> ridge_predict(const LinearModel& model,
                                       const std::vector<FeatureRecord>& records);

struct BenchReport {
    std::uint64_t seed = 0;
    double accuracy_plain = 0.0;
    double accuracy_vis = 0.0;
    std::size_t feature_len_plain = 0;
    std::size_t feature_len_vis = 0;
    double elapsed_ms = 0.0;
    bool passed = false;
};

/// The position-vs-shape experiment: 60 samples per class, stratified 80/20
/// split, depth-3 features under two chains — plain lead-lag, and lead-lag
/// followed by the visibility step — each fed to ridge (lambda 1e-3).
/// passed requires plain accuracy in [0.20, 0.55] (chance band) and lifted
/// accuracy >= 0.95.
BenchReport run_benchmark(std::uint64_t seed);

/// One JSON object with fields seed, accuracy_plain, accuracy_vis,
/// feature_len_plain, feature_len_vis, elapsed_ms, passed.
std::string bench_report_json(const BenchReport& report);

}  // namespace sigvis
