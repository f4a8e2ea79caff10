#ifndef SENTI_EVAL_HPP
#define SENTI_EVAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/label.hpp"

namespace senti {

struct ConfusionMatrix {
    std::array<std::array<std::size_t, kNumLabels>, kNumLabels> counts{};  // [true][pred]

    std::size_t total() const;
    std::size_t at(Label truth, Label predicted) const {
        return counts[label_index(truth)][label_index(predicted)];
    }
};

struct EvaluationReport {
    double accuracy = 0.0;
    std::array<double, kNumLabels> precision{};
    std::array<double, kNumLabels> recall{};
    std::array<double, kNumLabels> f1{};
    double semeval_f = 0.0;  // mean of positive and negative F1
    double macro_f1 = 0.0;
    ConfusionMatrix confusion;

    /// Headline number for --metric {accuracy, semeval-f, macro-f1}.
    double metric(const std::string& name) const;
};

/// Accuracy, per-class precision/recall/F1 (0 on zero denominators), the
/// mean positive/negative F1, and the confusion matrix.
EvaluationReport evaluate(std::span<const Label> predicted,
                          std::span<const Label> gold);

std::string format_report(const EvaluationReport& r);

struct CrossValidationResult {
    EvaluationReport pooled;                     // metrics over pooled predictions
    std::vector<EvaluationReport> fold_reports;
    std::vector<Label> pooled_predictions;       // one per labeled document
    std::vector<Label> pooled_gold;
};

/// Runs the fold callback on every stratified split and pools the
/// predictions before computing metrics. The callback receives the train and
/// test subsets and returns one label per test document.
CrossValidationResult cross_validate(
    const Dataset& d, int k, std::uint64_t seed,
    const std::function<std::vector<Label>(const Dataset& train,
                                           const Dataset& test)>& run_fold);

}  // namespace senti

#endif  // SENTI_EVAL_HPP
