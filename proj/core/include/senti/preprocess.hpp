#ifndef SENTI_PREPROCESS_HPP
#define SENTI_PREPROCESS_HPP

#include <span>
#include <string>
#include <vector>

#include "senti/lexicon.hpp"
#include "senti/pipeline_config.hpp"
#include "senti/token.hpp"

namespace senti {

/// Strips Twitter syntax (URLs, @-mentions, #hashtags, standalone RT) when
/// cfg.strip_syntax is set, collapses whitespace, and lowercases everything
/// except emoticon glyphs, which are kept verbatim.
std::string normalize(const std::string& text, const PipelineConfig& cfg);

/// Whitespace split followed by peeling leading/trailing punctuation into
/// single-character tokens. Character sequences found in the emoticon lexicon
/// are kept whole (longest match first) and renamed pos_emo / neg_emo by the
/// sign of their polarity. URL / @-mention / #hashtag chunks stay whole and
/// receive the matching tag; everything else is tagged Other.
std::vector<Token> tokenize(const std::string& text, const Lexicon& emo);

/// Parses `token/TAG` pairs, one document per line of input, for corpora that
/// were tagged by an external tool. Chunks without a recognized tag become
/// Other-tagged tokens. Emoticon replacement is applied afterwards.
std::vector<Token> tokenize_pretagged(const std::string& text, const Lexicon& emo);

/// Marks tokens between a negation word and the next clause punctuation.
/// Exception 1: a negation word that begins a configured exception phrase
/// ("not only", ...) is skipped. Exception 2: a rhetorical question (final
/// token "?" with a negation word among the first three tokens) suppresses
/// negation in the whole document. The trigger itself is never marked.
std::vector<Token> mark_negation(std::vector<Token> tokens,
                                 const PipelineConfig& cfg);

/// Number of negation triggers with a non-empty scope, after exceptions.
std::size_t count_negation_contexts(std::span<const Token> tokens,
                                    const PipelineConfig& cfg);

/// Sets but_flipped on every token after the first contrast phrase. A "not
/// only ... but also" construction consumes the following contrast phrase, so
/// no flip happens there.
std::vector<Token> apply_but_clause(std::vector<Token> tokens,
                                    const PipelineConfig& cfg);

/// Drops stop words and, when the POS filter is active, tokens whose tag is
/// known but not allowed. Other-tagged tokens always pass.
std::vector<Token> filter_tokens(std::vector<Token> tokens,
                                 const PipelineConfig& cfg);

/// Contiguous n-grams of normalized forms joined by single spaces, negated
/// tokens rendered with the _NEG suffix. All n-grams of size n_min come
/// first, then n_min+1, and so on.
std::vector<std::string> ngrams(std::span<const Token> tokens, int n_min, int n_max);

/// Render one token the way ngrams() does ("word" or "word_NEG").
std::string render_token(const Token& t);

struct PipelineResult {
    std::vector<Token> tokens;
    /// Negation triggers with non-empty scope, counted before filtering.
    std::size_t negation_contexts = 0;
};

/// The full per-document pipeline: normalize, tokenize (pretagged or not),
/// negation marking, optional but-clause flips, stop-word/POS filtering.
PipelineResult preprocess_full(const std::string& text, const PipelineConfig& cfg,
                               const Lexicon& emo);

std::vector<Token> preprocess(const std::string& text, const PipelineConfig& cfg,
                              const Lexicon& emo);

}  // namespace senti

#endif  // SENTI_PREPROCESS_HPP
