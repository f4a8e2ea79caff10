#ifndef SENTI_LEXICON_HPP
#define SENTI_LEXICON_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/pipeline_config.hpp"
#include "senti/token.hpp"

namespace senti {

/// Term -> polarity map. Terms are lowercase, polarities finite in [-1, 1].
/// priority decides merge conflicts: the lower number wins.
struct Lexicon {
    std::string name;
    std::unordered_map<std::string, double> entries;
    int priority = 0;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }

    /// 0.0 for unknown terms.
    double polarity(const std::string& term) const {
        auto it = entries.find(term);
        return it == entries.end() ? 0.0 : it->second;
    }
    bool contains(const std::string& term) const { return entries.count(term) > 0; }
};

/// Reads `term <TAB> polarity` lines. Terms are lowercased on load; polarities
/// outside [-1, 1] are rejected.
Lexicon load_lexicon(const std::string& path, int priority = 0);
Lexicon parse_lexicon(const std::string& content, const std::string& name,
                      int priority = 0);

/// Writes entries sorted by term so output files are reproducible.
void save_lexicon(const Lexicon& lex, const std::string& path);
std::string serialize_lexicon(const Lexicon& lex);

/// Union of entries; on term conflict the lexicon with the lowest priority
/// number wins (ties: earlier in the list). The merged name concatenates the
/// input names with '+'.
Lexicon merge_lexicons(const std::vector<Lexicon>& lexicons);

/// Builds a lexicon from labeled data: for every term seen at least
/// min_occurrences times in positive or negative documents, the share of
/// positive occurrences p = pos/(pos+neg) is computed, terms with p inside the
/// neutral band [0.4, 0.6] are dropped, and survivors are stored with polarity
/// 2p - 1. Neutral documents are ignored. The emoticon lexicon, when given,
/// controls pos_emo/neg_emo replacement during tokenization.
Lexicon generate_auto_lexicon(const Dataset& d, const PipelineConfig& cfg = {},
                              const Lexicon& emo = {}, int min_occurrences = 5);

/// Mean polarity over sentiment-bearing tokens. A token's polarity is the
/// lexicon value of its normalized form, sign-flipped once per active marker
/// (negated, but_flipped). Returns 0 when no token has a lexicon entry.
double score_avg(std::span<const Token> tokens, const Lexicon& lex);

/// Log-scaled score: 0 for |avg| <= 0.1, else sign(avg) * log10(10|avg|).
/// Odd, monotone on [0, 1], and stays inside [-1, 1].
double score_log(double avg);

struct ScorePair {
    double avg = 0.0;
    double log = 0.0;
};

/// avg + log score of one raw document, running the full pipeline.
ScorePair score_document(const std::string& text, const Lexicon& lex,
                         const PipelineConfig& cfg);

struct LexiconClassifyResult {
    std::vector<Label> predicted;           // one per document
    std::vector<ScorePair> scores;          // one per document
    std::optional<double> accuracy;         // against gold labels, when present
};

/// Lexicon-only classification: scores every document, clusters the
/// (avg, log) pairs with k-means (k = 3), and maps clusters to labels by
/// ascending centroid log score: Negative, Neutral, Positive.
LexiconClassifyResult lexicon_classify(const Dataset& d, const Lexicon& lex,
                                       const PipelineConfig& cfg,
                                       std::uint64_t seed);

}  // namespace senti

#endif  // SENTI_LEXICON_HPP
