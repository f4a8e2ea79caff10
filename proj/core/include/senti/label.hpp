#ifndef SENTI_LABEL_HPP
#define SENTI_LABEL_HPP

#include <array>
#include <optional>
#include <string_view>

namespace senti {

/// The three sentiment classes. The numeric order Negative < Neutral < Positive
/// is part of the contract: it drives tie-breaking and cluster-to-label mapping.
enum class Label : int { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr std::array<Label, 3> kAllLabels = {Label::Negative, Label::Neutral,
                                                    Label::Positive};
inline constexpr int kNumLabels = 3;

constexpr int label_index(Label l) { return static_cast<int>(l); }

constexpr std::string_view to_string(Label l) {
    switch (l) {
        case Label::Negative: return "negative";
        case Label::Neutral: return "neutral";
        case Label::Positive: return "positive";
    }
    return "?";
}

/// Parses a lowercase label token. "?" and unknown strings return nullopt vs
/// throwing; callers decide which of the two is an error.
constexpr std::optional<Label> parse_label(std::string_view s) {
    if (s == "negative") return Label::Negative;
    if (s == "neutral") return Label::Neutral;
    if (s == "positive") return Label::Positive;
    return std::nullopt;
}

}  // namespace senti

#endif  // SENTI_LABEL_HPP
