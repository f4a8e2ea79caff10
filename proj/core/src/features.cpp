#include "senti/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "senti/errors.hpp"
#include "senti/preprocess.hpp"

namespace senti {

std::string ManualFeature::name() const {
    switch (kind) {
        case ManualFeatureKind::LexiconScore: return "LexiconScore";
        case ManualFeatureKind::MaxScore: return "maxScore";
        case ManualFeatureKind::MinScore: return "minScore";
        case ManualFeatureKind::ElongatedCount: return "elongWords";
        case ManualFeatureKind::HasPosEmoticon: return "hasPosEmo";
        case ManualFeatureKind::HasNegEmoticon: return "hasNegEmo";
        case ManualFeatureKind::LastTokenEmoticonSign: return "lastTokenScore";
        case ManualFeatureKind::NegationCount: return "negationCount";
        case ManualFeatureKind::PosTagCount:
            return "pos" + std::string(pos_tag_name(tag));
        case ManualFeatureKind::PunctuationCount: return "punctCount";
        case ManualFeatureKind::PosEmoticonCount: return "posEmoCount";
        case ManualFeatureKind::NegEmoticonCount: return "negEmoCount";
        case ManualFeatureKind::NegativeTokenCount: return "negTokens";
        case ManualFeatureKind::PositiveTokenCount: return "posTokens";
    }
    return "?";
}

std::vector<ManualFeature> default_manual_features() {
    std::vector<ManualFeature> features = {
        {ManualFeatureKind::LexiconScore},
        {ManualFeatureKind::MaxScore},
        {ManualFeatureKind::MinScore},
        {ManualFeatureKind::ElongatedCount},
        {ManualFeatureKind::HasPosEmoticon},
        {ManualFeatureKind::HasNegEmoticon},
        {ManualFeatureKind::LastTokenEmoticonSign},
        {ManualFeatureKind::NegationCount},
    };
    for (int t = 0; t < kNumPosTags; ++t) {
        features.push_back({ManualFeatureKind::PosTagCount, static_cast<PosTag>(t)});
    }
    features.push_back({ManualFeatureKind::PunctuationCount});
    features.push_back({ManualFeatureKind::PosEmoticonCount});
    features.push_back({ManualFeatureKind::NegEmoticonCount});
    features.push_back({ManualFeatureKind::NegativeTokenCount});
    features.push_back({ManualFeatureKind::PositiveTokenCount});
    return features;
}

ManualFeature parse_manual_feature(const std::string& name) {
    for (const auto& f : default_manual_features()) {
        if (f.name() == name) return f;
    }
    throw ConfigError("unknown manual feature: '" + name + "'");
}

double FeatureVector::value_at(std::uint32_t col) const {
    auto it = std::lower_bound(
        values.begin(), values.end(), col,
        [](const auto& pair, std::uint32_t c) { return pair.first < c; });
    if (it != values.end() && it->first == col) return it->second;
    return 0.0;
}

std::string FeatureSpace::column_name(std::size_t col) const {
    if (col < ngram_terms.size()) return ngram_terms[col];
    return manual[col - ngram_terms.size()].name();
}

std::uint64_t FeatureSpace::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1f;
        h *= 1099511628211ull;
    };
    mix(std::to_string(ngram_min));
    mix(std::to_string(ngram_max));
    for (const auto& t : ngram_terms) mix(t);
    mix("|manual|");
    for (const auto& m : manual) mix(m.name());
    return h;
}

FeatureSpace FeatureSpace::from_terms(std::vector<std::string> terms,
                                      std::vector<ManualFeature> manual_features,
                                      int n_min, int n_max) {
    FeatureSpace space;
    space.ngram_terms = std::move(terms);
    space.manual = std::move(manual_features);
    space.ngram_min = n_min;
    space.ngram_max = n_max;
    space.ngram_index.reserve(space.ngram_terms.size());
    for (std::uint32_t i = 0; i < space.ngram_terms.size(); ++i) {
        space.ngram_index.emplace(space.ngram_terms[i], i);
    }
    return space;
}

FeatureSpace build_feature_space(const Dataset& train, const PipelineConfig& cfg,
                                 const Lexicon& lex, const FeatureSpaceOptions& opt) {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::size_t> doc_freq;
    bool any_labeled = false;
    for (const auto& doc : train.documents) {
        if (!doc.label) continue;
        any_labeled = true;
        auto tokens = preprocess(doc.text, cfg, lex);
        std::unordered_map<std::string, bool> seen_in_doc;
        for (auto& gram : ngrams(tokens, opt.ngram_min, opt.ngram_max)) {
            if (!seen_in_doc.emplace(gram, true).second) continue;
            auto [it, inserted] = doc_freq.emplace(gram, 1);
            if (inserted) {
                terms.push_back(gram);
            } else {
                it->second++;
            }
        }
    }
    if (!any_labeled) throw EmptyTrainingDataError();

    if (opt.min_df > 1) {
        std::erase_if(terms, [&](const std::string& t) {
            return doc_freq[t] < static_cast<std::size_t>(opt.min_df);
        });
    }
    return FeatureSpace::from_terms(
        std::move(terms),
        opt.include_manual ? default_manual_features() : std::vector<ManualFeature>{},
        opt.ngram_min, opt.ngram_max);
}

namespace {

bool has_elongation(const std::string& s) {
    int run = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        run = (s[i] == s[i - 1]) ? run + 1 : 1;
        if (run >= 3) return true;
    }
    return false;
}

bool is_punctuation_token(const Token& t) {
    if (t.tag == PosTag::E || t.normalized.empty()) return false;
    return std::all_of(t.normalized.begin(), t.normalized.end(), [](char c) {
        unsigned char u = static_cast<unsigned char>(c);
        return u < 0x80 && !std::isalnum(u);
    });
}

struct ManualStats {
    double lexicon_score = 0.0;
    double max_score = 0.0;
    double min_score = 0.0;
    double elongated = 0.0;
    double has_pos_emo = 0.0;
    double has_neg_emo = 0.0;
    double last_token_sign = 0.0;
    double negation_contexts = 0.0;
    std::array<double, kNumPosTags> tag_counts{};
    double punctuation = 0.0;
    double pos_emo_count = 0.0;
    double neg_emo_count = 0.0;
    double negative_tokens = 0.0;
    double positive_tokens = 0.0;
};

ManualStats compute_manual_stats(std::span<const Token> tokens,
                                 std::size_t negation_contexts,
                                 const Lexicon& lex) {
    ManualStats s;
    s.negation_contexts = static_cast<double>(negation_contexts);

    bool any_polarity = false;
    for (const auto& t : tokens) {
        double w = lex.polarity(t.normalized);
        if (w != 0.0) {
            if (t.negated) w = -w;
            if (t.but_flipped) w = -w;
            if (!any_polarity) {
                s.max_score = s.min_score = w;
                any_polarity = true;
            } else {
                s.max_score = std::max(s.max_score, w);
                s.min_score = std::min(s.min_score, w);
            }
            if (w < 0) s.negative_tokens++;
            if (w > 0) s.positive_tokens++;
        }
        if (has_elongation(t.normalized)) s.elongated++;
        if (t.normalized == "pos_emo") {
            s.has_pos_emo = 1.0;
            s.pos_emo_count++;
        } else if (t.normalized == "neg_emo") {
            s.has_neg_emo = 1.0;
            s.neg_emo_count++;
        }
        s.tag_counts[static_cast<int>(t.tag)]++;
        if (is_punctuation_token(t)) s.punctuation++;
    }
    s.lexicon_score = score_log(score_avg(tokens, lex));
    if (!tokens.empty()) {
        const auto& last = tokens.back();
        if (last.normalized == "pos_emo") s.last_token_sign = 1.0;
        if (last.normalized == "neg_emo") s.last_token_sign = -1.0;
    }
    return s;
}

double manual_value(const ManualFeature& f, const ManualStats& s) {
    switch (f.kind) {
        case ManualFeatureKind::LexiconScore: return s.lexicon_score;
        case ManualFeatureKind::MaxScore: return s.max_score;
        case ManualFeatureKind::MinScore: return s.min_score;
        case ManualFeatureKind::ElongatedCount: return s.elongated;
        case ManualFeatureKind::HasPosEmoticon: return s.has_pos_emo;
        case ManualFeatureKind::HasNegEmoticon: return s.has_neg_emo;
        case ManualFeatureKind::LastTokenEmoticonSign: return s.last_token_sign;
        case ManualFeatureKind::NegationCount: return s.negation_contexts;
        case ManualFeatureKind::PosTagCount:
            return s.tag_counts[static_cast<int>(f.tag)];
        case ManualFeatureKind::PunctuationCount: return s.punctuation;
        case ManualFeatureKind::PosEmoticonCount: return s.pos_emo_count;
        case ManualFeatureKind::NegEmoticonCount: return s.neg_emo_count;
        case ManualFeatureKind::NegativeTokenCount: return s.negative_tokens;
        case ManualFeatureKind::PositiveTokenCount: return s.positive_tokens;
    }
    return 0.0;
}

}  // namespace

FeatureVector vectorize_tokens(std::span<const Token> tokens,
                               std::size_t negation_contexts,
                               const FeatureSpace& space, const Lexicon& lex) {
    FeatureVector v;
    std::vector<std::uint32_t> cols;
    for (const auto& gram : ngrams(tokens, space.ngram_min, space.ngram_max)) {
        auto it = space.ngram_index.find(gram);
        if (it != space.ngram_index.end()) cols.push_back(it->second);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (auto c : cols) v.values.emplace_back(c, 1.0);

    if (!space.manual.empty()) {
        ManualStats stats = compute_manual_stats(tokens, negation_contexts, lex);
        std::uint32_t base = static_cast<std::uint32_t>(space.ngram_terms.size());
        for (std::uint32_t i = 0; i < space.manual.size(); ++i) {
            v.push(base + i, manual_value(space.manual[i], stats));
        }
    }
    return v;
}

FeatureVector vectorize(const Document& doc, const FeatureSpace& space,
                        const Lexicon& lex, const PipelineConfig& cfg) {
    auto result = preprocess_full(doc.text, cfg, lex);
    return vectorize_tokens(result.tokens, result.negation_contexts, space, lex);
}

double split_information_gain(const std::array<std::size_t, kNumLabels>& left,
                              const std::array<std::size_t, kNumLabels>& right) {
    auto entropy = [](const std::array<std::size_t, kNumLabels>& counts,
                      std::size_t total) {
        if (total == 0) return 0.0;
        double h = 0.0;
        for (auto c : counts) {
            if (c == 0) continue;
            double p = static_cast<double>(c) / total;
            h -= p * std::log2(p);
        }
        return h;
    };
    std::size_t n_left = 0, n_right = 0;
    std::array<std::size_t, kNumLabels> combined{};
    for (int c = 0; c < kNumLabels; ++c) {
        n_left += left[c];
        n_right += right[c];
        combined[c] = left[c] + right[c];
    }
    std::size_t n = n_left + n_right;
    if (n == 0) return 0.0;
    double gain = entropy(combined, n) -
                  (static_cast<double>(n_left) / n) * entropy(left, n_left) -
                  (static_cast<double>(n_right) / n) * entropy(right, n_right);
    return std::max(0.0, gain);
}

std::vector<double> information_gain(std::span<const FeatureVector> vectors,
                                     std::span<const Label> labels,
                                     std::size_t total_columns) {
    if (vectors.size() != labels.size()) {
        throw LengthMismatchError("vectors and labels differ in length");
    }
    std::array<std::size_t, kNumLabels> class_totals{};
    for (auto l : labels) class_totals[label_index(l)]++;
    int classes_present = 0;
    for (auto c : class_totals) {
        if (c > 0) classes_present++;
    }
    if (classes_present < 2) throw SingleClassDataError();

    std::vector<std::array<std::size_t, kNumLabels>> present(total_columns);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        int cls = label_index(labels[i]);
        for (const auto& [col, value] : vectors[i].values) {
            if (col >= total_columns) {
                throw DimensionMismatchError("feature column out of range");
            }
            if (value != 0.0) present[col][cls]++;
        }
    }

    std::vector<double> gain(total_columns);
    for (std::size_t col = 0; col < total_columns; ++col) {
        std::array<std::size_t, kNumLabels> absent{};
        for (int c = 0; c < kNumLabels; ++c) {
            absent[c] = class_totals[c] - present[col][c];
        }
        gain[col] = split_information_gain(present[col], absent);
    }
    return gain;
}

FeatureSpace select_features(const FeatureSpace& space,
                             std::span<const double> gain, double threshold) {
    if (threshold < 0) throw ConfigError("selection threshold must be >= 0");
    if (gain.size() != space.total_columns()) {
        throw DimensionMismatchError("gain vector does not match feature space");
    }
    std::vector<std::string> kept_terms;
    for (std::size_t i = 0; i < space.ngram_terms.size(); ++i) {
        if (gain[i] > threshold) kept_terms.push_back(space.ngram_terms[i]);
    }
    std::vector<ManualFeature> kept_manual;
    for (std::size_t i = 0; i < space.manual.size(); ++i) {
        if (gain[space.ngram_terms.size() + i] > threshold) {
            kept_manual.push_back(space.manual[i]);
        }
    }
    if (kept_terms.empty() && kept_manual.empty()) throw NoFeaturesSurviveError();
    return FeatureSpace::from_terms(std::move(kept_terms), std::move(kept_manual),
                                    space.ngram_min, space.ngram_max);
}

std::string ig_report(const FeatureSpace& space, std::span<const double> gain) {
    if (gain.size() != space.total_columns()) {
        throw DimensionMismatchError("gain vector does not match feature space");
    }
    std::vector<std::size_t> order(gain.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return gain[a] > gain[b];
    });
    std::ostringstream out;
    out.precision(10);
    for (auto col : order) {
        out << space.column_name(col) << '\t' << gain[col] << '\n';
    }
    return out.str();
}

}  // namespace senti
