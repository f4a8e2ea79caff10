#include "senti/naive_bayes.hpp"

#include <algorithm>
#include <cmath>

#include "senti/errors.hpp"

namespace senti {

NaiveBayesModel train_nb(std::span<const FeatureVector> vectors,
                         std::span<const Label> labels, double alpha,
                         std::size_t total_columns) {
    if (vectors.size() != labels.size()) {
        throw LengthMismatchError("vectors and labels differ in length");
    }
    if (vectors.empty()) throw EmptyTrainingDataError();
    if (alpha <= 0) throw ConfigError("alpha must be > 0");

    std::array<std::size_t, kNumLabels> class_counts{};
    for (auto l : labels) class_counts[label_index(l)]++;

    NaiveBayesModel model;
    model.alpha = alpha;
    model.total_columns = total_columns;
    for (Label l : kAllLabels) {
        if (class_counts[label_index(l)] > 0) model.classes.push_back(l);
    }
    if (model.classes.size() < 2) throw SingleClassDataError();

    std::size_t n_classes = model.classes.size();
    std::vector<std::vector<std::size_t>> present_counts(
        n_classes, std::vector<std::size_t>(total_columns, 0));
    std::vector<std::size_t> docs_per_class(n_classes, 0);

    std::array<int, kNumLabels> class_slot;
    class_slot.fill(-1);
    for (std::size_t c = 0; c < n_classes; ++c) {
        class_slot[label_index(model.classes[c])] = static_cast<int>(c);
    }

    for (std::size_t i = 0; i < vectors.size(); ++i) {
        int slot = class_slot[label_index(labels[i])];
        docs_per_class[slot]++;
        for (const auto& [col, value] : vectors[i].values) {
            if (col >= total_columns) {
                throw DimensionMismatchError("feature column out of range");
            }
            if (value != 0.0) present_counts[slot][col]++;
        }
    }

    model.log_prior.resize(n_classes);
    model.log_present.resize(n_classes);
    model.log_absent.resize(n_classes);
    model.log_absent_sum.resize(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        model.log_prior[c] = std::log(static_cast<double>(docs_per_class[c]) /
                                      vectors.size());
        model.log_present[c].resize(total_columns);
        model.log_absent[c].resize(total_columns);
        double absent_sum = 0.0;
        double denom = docs_per_class[c] + 2.0 * alpha;
        for (std::size_t f = 0; f < total_columns; ++f) {
            double p_present = (present_counts[c][f] + alpha) / denom;
            model.log_present[c][f] = std::log(p_present);
            model.log_absent[c][f] = std::log(1.0 - p_present);
            absent_sum += model.log_absent[c][f];
        }
        model.log_absent_sum[c] = absent_sum;
    }
    return model;
}

NbPrediction predict_nb(const NaiveBayesModel& model, const FeatureVector& v) {
    std::size_t n_classes = model.classes.size();
    std::vector<double> log_post(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        // All-columns product: start from the all-absent sum and swap in the
        // present terms.
        double lp = model.log_prior[c] + model.log_absent_sum[c];
        for (const auto& [col, value] : v.values) {
            if (col >= model.total_columns) {
                throw DimensionMismatchError("feature column out of range");
            }
            if (value != 0.0) {
                lp += model.log_present[c][col] - model.log_absent[c][col];
            }
        }
        log_post[c] = lp;
    }

    double max_lp = *std::max_element(log_post.begin(), log_post.end());
    double total = 0.0;
    std::vector<double> un_normalized(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        un_normalized[c] = std::exp(log_post[c] - max_lp);
        total += un_normalized[c];
    }

    NbPrediction prediction;
    double best = -1.0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        double p = un_normalized[c] / total;
        prediction.posterior[label_index(model.classes[c])] = p;
        // Strict comparison + label order of model.classes: ties stay on the
        // earlier (lower) label.
        if (p > best) {
            best = p;
            prediction.label = model.classes[c];
        }
    }
    return prediction;
}

}  // namespace senti
