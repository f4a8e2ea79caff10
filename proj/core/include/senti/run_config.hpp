#ifndef SENTI_RUN_CONFIG_HPP
#define SENTI_RUN_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "senti/experiment.hpp"

namespace senti {

/// CLI-facing run settings: the experiment configuration plus file inputs.
struct RunConfig {
    ExperimentConfig experiment;
    std::vector<std::pair<std::string, int>> lexicon_paths;  // (path, priority)
    std::string stop_words_path;
    std::string cost_matrix_path;
    std::string metric = "accuracy";
    int folds = 5;
    int min_occurrences = 5;  // gen-lexicon floor

    /// Loads every referenced lexicon and merges them (priority order).
    Lexicon load_merged_lexicon() const;
};

/// Parses `key = value` lines ('#' starts a comment). Unknown keys raise
/// ConfigError. Later assignments win, so CLI flags can be layered on top.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies one key/value pair onto the run config; ConfigError on unknown
/// keys or unparsable values. Keys mirror the CLI flags (classifier, ngrams,
/// select-ig, svm.lambda, svm.epochs, nb.alpha, tree.max-depth,
/// tree.min-leaf, cost-sensitive, cost-matrix, seed, metric, folds,
/// min-occurrences, features, lexicon, stop-words, strip-syntax, pos-filter,
/// but-flip, pretagged, min-df).
void apply_config_entry(RunConfig& rc, const std::string& key,
                        const std::string& value);

void apply_config_file(RunConfig& rc, const std::string& path);

}  // namespace senti

#endif  // SENTI_RUN_CONFIG_HPP
