#ifndef SENTI_PIPELINE_CONFIG_HPP
#define SENTI_PIPELINE_CONFIG_HPP

#include <set>
#include <string>

#include "senti/token.hpp"

namespace senti {

/// Every knob of the text pipeline. All phrase sets hold lowercase entries.
struct PipelineConfig {
    std::set<std::string> stop_words;  // empty by default: nothing is dropped
    std::set<std::string> negation_words = default_negation_words();
    std::set<std::string> negation_exception_phrases = {
        "not only", "not just", "no question", "not to mention", "no wonder"};
    std::set<std::string> but_phrases = {"but", "with the exception of",
                                         "except that", "except for"};
    std::set<std::string> clause_punctuation = {".", ",", "!", "?", ":", ";"};
    std::set<PosTag> allowed_tags = {PosTag::N, PosTag::V,    PosTag::A, PosTag::R,
                                     PosTag::Bang, PosTag::E, PosTag::G};
    bool strip_syntax = true;      // remove URLs, @-mentions, #hashtags, RT
    bool apply_pos_filter = true;  // drop tokens with a tag outside allowed_tags
    bool apply_but_flip = false;   // feed contrast flips into lexicon scoring
    bool pretagged = false;        // input text is `token/TAG` pairs

    static std::set<std::string> default_negation_words();
};

/// Loads a stop-word list, one lowercase word per line. Blank lines ignored.
std::set<std::string> load_stop_words(const std::string& path);

}  // namespace senti

#endif  // SENTI_PIPELINE_CONFIG_HPP
