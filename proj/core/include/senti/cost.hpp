#ifndef SENTI_COST_HPP
#define SENTI_COST_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "senti/label.hpp"

namespace senti {

/// cost[true][predicted], all entries >= 0, zero diagonal.
struct CostMatrix {
    std::array<std::array<double, kNumLabels>, kNumLabels> cost{};

    double at(Label truth, Label predicted) const {
        return cost[label_index(truth)][label_index(predicted)];
    }
    void validate() const;  // throws ConfigError on a bad matrix
};

/// All off-diagonal costs 1: cost-sensitive prediction degenerates to the
/// plain posterior argmax.
CostMatrix uniform_cost_matrix();

/// Off-diagonal 1 except misclassifying positive or negative documents as
/// neutral, which costs 2.5. Counters the dominant failure mode on
/// neutral-heavy corpora.
CostMatrix default_cost_matrix();

/// 3 lines of 3 numbers, rows/columns in label order negative, neutral,
/// positive.
CostMatrix load_cost_matrix(const std::string& path);
std::string serialize_cost_matrix(const CostMatrix& c);

/// Minimum expected cost decision: argmin over p of sum_t posterior[t] *
/// cost[t][p]. The posterior must sum to 1 (within 1e-6) with no negative
/// entries. Ties resolve in label order.
Label cost_sensitive_predict(const std::array<double, kNumLabels>& posterior,
                             const CostMatrix& c);

/// Per-document training weights: weight = sum of the true label's
/// off-diagonal costs divided by (K - 1). A uniform matrix gives weight 1
/// everywhere.
std::vector<double> labels_to_instance_weights(std::span<const Label> labels,
                                               const CostMatrix& c);

}  // namespace senti

#endif  // SENTI_COST_HPP
