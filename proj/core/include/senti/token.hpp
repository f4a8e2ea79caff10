#ifndef SENTI_TOKEN_HPP
#define SENTI_TOKEN_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace senti {

/// Coarse Twitter part-of-speech tag set. Other marks untagged tokens and is
/// never filtered out, so a pipeline without a tagger stays total.
enum class PosTag : int {
    N = 0,      // common noun
    V,          // verb
    A,          // adjective
    R,          // adverb
    Bang,       // interjection ("!")
    E,          // emoticon
    G,          // abbreviation, foreign word, possessive ending
    AtMention,  // @user
    Hashtag,    // #topic
    U,          // URL or email address
    Tilde,      // discourse marker ("~")
    O,          // pronoun
    P,          // pre- or postposition, subordinating conjunction
    D,          // determiner
    Caret,      // proper noun ("^")
    Other,      // untagged
};

inline constexpr int kNumPosTags = 16;

std::string_view pos_tag_name(PosTag t);

/// Parses the one-character tag notation ("N", "V", "!", "@", "#", "^", "~",
/// ...). Unknown strings map to Other.
PosTag parse_pos_tag(std::string_view s);

struct Token {
    std::string surface;     // as it appeared in the (normalized) text
    std::string normalized;  // lowercase form; "pos_emo"/"neg_emo" for emoticons
    PosTag tag = PosTag::Other;
    bool negated = false;     // inside a negation scope
    bool but_flipped = false; // after a contrast phrase
    std::size_t position = 0; // strictly increasing within a document
};

}  // namespace senti

#endif  // SENTI_TOKEN_HPP
