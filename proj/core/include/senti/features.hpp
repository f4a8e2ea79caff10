#ifndef SENTI_FEATURES_HPP
#define SENTI_FEATURES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/lexicon.hpp"
#include "senti/pipeline_config.hpp"
#include "senti/token.hpp"

namespace senti {

enum class ManualFeatureKind : int {
    LexiconScore = 0,       // log score of the document
    MaxScore,               // largest effective token polarity
    MinScore,               // smallest effective token polarity
    ElongatedCount,         // tokens with a char repeated 3+ times
    HasPosEmoticon,         // 0/1
    HasNegEmoticon,         // 0/1
    LastTokenEmoticonSign,  // -1 / 0 / +1
    NegationCount,          // negation triggers with non-empty scope
    PosTagCount,            // one column per PosTag
    PunctuationCount,
    PosEmoticonCount,
    NegEmoticonCount,
    NegativeTokenCount,  // tokens with effective polarity < 0
    PositiveTokenCount,  // tokens with effective polarity > 0
};

struct ManualFeature {
    ManualFeatureKind kind;
    PosTag tag = PosTag::Other;  // meaningful only for PosTagCount

    std::string name() const;
    bool operator==(const ManualFeature&) const = default;
};

/// The canonical ordered list: 13 scalar features plus one PosTagCount per tag.
std::vector<ManualFeature> default_manual_features();

/// Parses a name produced by ManualFeature::name().
ManualFeature parse_manual_feature(const std::string& name);

/// Sparse vector: strictly increasing column ids, no explicit zeros. N-gram
/// columns only ever carry the value 1.
struct FeatureVector {
    std::vector<std::pair<std::uint32_t, double>> values;

    double value_at(std::uint32_t col) const;
    void push(std::uint32_t col, double v) {
        if (v != 0.0) values.emplace_back(col, v);
    }
};

/// N-gram vocabulary (columns 0..n-1, first-occurrence order) followed by the
/// manual feature columns. Immutable once built.
struct FeatureSpace {
    std::vector<std::string> ngram_terms;
    std::unordered_map<std::string, std::uint32_t> ngram_index;
    std::vector<ManualFeature> manual;
    int ngram_min = 1;
    int ngram_max = 2;

    std::size_t total_columns() const { return ngram_terms.size() + manual.size(); }
    std::string column_name(std::size_t col) const;

    /// FNV-1a over the serialized layout; used to detect tampered model files.
    std::uint64_t fingerprint() const;

    static FeatureSpace from_terms(std::vector<std::string> terms,
                                   std::vector<ManualFeature> manual, int n_min,
                                   int n_max);
};

struct FeatureSpaceOptions {
    int ngram_min = 1;
    int ngram_max = 2;
    int min_df = 1;             // minimum document frequency for an n-gram
    bool include_manual = true; // off reproduces the plain bag-of-ngrams setup
};

/// Collects the n-gram vocabulary from the labeled training documents.
/// Deterministic: columns follow first occurrence in document order.
FeatureSpace build_feature_space(const Dataset& train, const PipelineConfig& cfg,
                                 const Lexicon& lex, const FeatureSpaceOptions& opt);

FeatureVector vectorize(const Document& doc, const FeatureSpace& space,
                        const Lexicon& lex, const PipelineConfig& cfg);

/// Vectorizes already-preprocessed tokens. negation_contexts is the trigger
/// count the pipeline observed before filtering.
FeatureVector vectorize_tokens(std::span<const Token> tokens,
                               std::size_t negation_contexts,
                               const FeatureSpace& space, const Lexicon& lex);

/// Entropy decrease of the label distribution when conditioning on a binary
/// partition, in bits. Shared by feature ranking and decision-tree splits.
double split_information_gain(const std::array<std::size_t, kNumLabels>& left,
                              const std::array<std::size_t, kNumLabels>& right);

/// Information gain of every column: presence (value != 0) vs absence against
/// the label distribution, base-2 entropy. Requires at least two classes.
std::vector<double> information_gain(std::span<const FeatureVector> vectors,
                                     std::span<const Label> labels,
                                     std::size_t total_columns);

/// Keeps columns with gain strictly above the threshold and re-densifies ids.
/// Manual features obey the same rule as n-grams.
FeatureSpace select_features(const FeatureSpace& space,
                             std::span<const double> gain, double threshold = 0.0);

/// `name <TAB> gain` lines sorted by descending gain (ties: column order).
std::string ig_report(const FeatureSpace& space, std::span<const double> gain);

}  // namespace senti

#endif  // SENTI_FEATURES_HPP
