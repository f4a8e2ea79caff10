#ifndef SENTI_DECISION_TREE_HPP
#define SENTI_DECISION_TREE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "senti/features.hpp"
#include "senti/label.hpp"

namespace senti {

struct TreeNode {
    std::int32_t column = -1;  // -1 marks a leaf
    double threshold = 0.5;    // value <= threshold goes left
    std::int32_t left = -1;
    std::int32_t right = -1;
    Label leaf_label = Label::Negative;
    std::array<std::uint32_t, kNumLabels> class_counts{};
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::size_t total_columns = 0;
    int max_depth = 0;
    int min_leaf = 1;
};

struct TreeParams {
    int max_depth = 20;
    int min_leaf = 2;
};

/// Greedy top-down induction maximizing information gain; binary columns
/// split at 0.5, real-valued ones at midpoints between observed values.
/// Recursion stops on depth, purity, min_leaf, or when no split partitions
/// the node. An impure node with a legal zero-gain split still splits, so
/// parity-style concepts (XOR) remain learnable.
DecisionTreeModel train_tree(std::span<const FeatureVector> vectors,
                             std::span<const Label> labels,
                             const TreeParams& params, std::size_t total_columns);

Label predict_tree(const DecisionTreeModel& model, const FeatureVector& v);

/// Leaf class distribution for the instance; feeds cost-sensitive prediction.
std::array<double, kNumLabels> tree_posterior(const DecisionTreeModel& model,
                                              const FeatureVector& v);

}  // namespace senti

#endif  // SENTI_DECISION_TREE_HPP
