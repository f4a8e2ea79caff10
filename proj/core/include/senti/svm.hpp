#ifndef SENTI_SVM_HPP
#define SENTI_SVM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "senti/features.hpp"
#include "senti/label.hpp"

namespace senti {

struct SvmHyperParams {
    double lambda = 1e-4;
    int epochs = 20;
    std::uint64_t seed = 0;
};

/// One hyperplane per class pair: (pos, neg), (neg, neu), (pos, neu).
/// The first label of each pair is the +1 side.
struct PairwisePlane {
    Label positive_class = Label::Positive;
    Label negative_class = Label::Negative;
    std::vector<double> weights;
    double bias = 0.0;

    double decision(const FeatureVector& v) const;
};

struct LinearSvmModel {
    std::array<PairwisePlane, 3> planes;
    std::size_t total_columns = 0;
    SvmHyperParams hyper;
};

/// Trains the three pairwise hyperplanes with stochastic subgradient descent
/// on L2-regularized hinge loss, step size 1/(lambda t). Each example's loss
/// is scaled by its instance weight (all 1 when absent, which reproduces the
/// unweighted objective exactly). Deterministic for a given seed.
LinearSvmModel train_svm(std::span<const FeatureVector> vectors,
                         std::span<const Label> labels,
                         std::span<const double> instance_weights,
                         const SvmHyperParams& hyper, std::size_t total_columns);

LinearSvmModel train_svm(std::span<const FeatureVector> vectors,
                         std::span<const Label> labels,
                         const SvmHyperParams& hyper, std::size_t total_columns);

/// Majority vote of the pairwise planes. A zero decision value abstains. Ties
/// go to the winner of the pair with the largest |decision| among the tied
/// labels, then to label order.
Label predict_svm(const LinearSvmModel& model, const FeatureVector& v);

/// Decision value of each plane, in plane order; exposed for diagnostics.
std::array<double, 3> svm_decision_values(const LinearSvmModel& model,
                                          const FeatureVector& v);

/// Mean regularized hinge objective of one plane over its pair subset.
double svm_pair_objective(const PairwisePlane& plane, double lambda,
                          std::span<const FeatureVector> vectors,
                          std::span<const Label> labels,
                          std::span<const double> instance_weights);

}  // namespace senti

#endif  // SENTI_SVM_HPP
