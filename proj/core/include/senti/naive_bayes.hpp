#ifndef SENTI_NAIVE_BAYES_HPP
#define SENTI_NAIVE_BAYES_HPP

#include <array>
#include <span>
#include <vector>

#include "senti/features.hpp"
#include "senti/label.hpp"

namespace senti {

/// Bernoulli Naive Bayes over binarized features (value != 0 counts as
/// present). Laplace smoothing with the two outcomes present/absent:
/// P(present|c) = (count + alpha) / (n_c + 2 alpha).
struct NaiveBayesModel {
    double alpha = 1.0;
    std::size_t total_columns = 0;
    std::vector<Label> classes;  // classes seen in training, label order
    std::vector<double> log_prior;
    std::vector<std::vector<double>> log_present;  // [class][column]
    std::vector<std::vector<double>> log_absent;
    std::vector<double> log_absent_sum;  // per class, over all columns
};

NaiveBayesModel train_nb(std::span<const FeatureVector> vectors,
                         std::span<const Label> labels, double alpha,
                         std::size_t total_columns);

struct NbPrediction {
    Label label = Label::Negative;
    std::array<double, kNumLabels> posterior{};  // sums to 1; 0 for unseen classes
};

/// Argmax of the posterior over the trained classes; exact ties resolve in
/// label order (Negative first).
NbPrediction predict_nb(const NaiveBayesModel& model, const FeatureVector& v);

}  // namespace senti

#endif  // SENTI_NAIVE_BAYES_HPP
