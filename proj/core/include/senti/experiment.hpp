#ifndef SENTI_EXPERIMENT_HPP
#define SENTI_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/cost.hpp"
#include "senti/decision_tree.hpp"
#include "senti/eval.hpp"
#include "senti/features.hpp"
#include "senti/lexicon.hpp"
#include "senti/naive_bayes.hpp"
#include "senti/pipeline_config.hpp"
#include "senti/svm.hpp"

namespace senti {

enum class ClassifierKind { NaiveBayes, LinearSvm, DecisionTree };

std::string classifier_kind_name(ClassifierKind k);
ClassifierKind parse_classifier_kind(const std::string& name);

struct SelectionOptions {
    bool enabled = true;
    double ig_threshold = 0.0;
};

/// Everything needed to turn a labeled dataset into a model.
struct ExperimentConfig {
    PipelineConfig pipeline;
    FeatureSpaceOptions features;
    SelectionOptions selection;
    ClassifierKind classifier = ClassifierKind::NaiveBayes;
    double nb_alpha = 1.0;
    SvmHyperParams svm;
    TreeParams tree;
    bool cost_sensitive = false;
    CostMatrix cost = default_cost_matrix();
    std::uint64_t seed = 0;
};

/// A trained classifier plus the state needed to vectorize new documents.
struct SentimentModel {
    ExperimentConfig config;
    Lexicon lexicon;
    FeatureSpace space;
    std::variant<NaiveBayesModel, LinearSvmModel, DecisionTreeModel> classifier;

    ClassifierKind kind() const;
};

/// Feature space construction, information-gain selection and classifier
/// training, all on the given dataset only. Cost-sensitive SVM training uses
/// per-document instance weights derived from the cost matrix; NB and tree
/// apply minimum-expected-cost prediction instead.
SentimentModel train_model(const Dataset& train, const Lexicon& lex,
                           const ExperimentConfig& cfg);

Label predict_one(const SentimentModel& model, const Document& doc);
std::vector<Label> predict_all(const SentimentModel& model, const Dataset& d);

/// Stratified k-fold cross-validation of one configuration. Feature space
/// and selection are rebuilt inside every fold; the per-fold SVM seed is
/// derived from cfg.seed and the fold index.
CrossValidationResult cross_validate_config(const Dataset& d, const Lexicon& lex,
                                            const ExperimentConfig& cfg, int k);

}  // namespace senti

#endif  // SENTI_EXPERIMENT_HPP
