#include "senti/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "senti/errors.hpp"
#include "senti/kmeans.hpp"
#include "senti/preprocess.hpp"

namespace senti {

namespace {

std::string lowercase(std::string s) {
    for (char& c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 0x80) c = static_cast<char>(std::tolower(u));
    }
    return s;
}

}  // namespace

Lexicon parse_lexicon(const std::string& content, const std::string& name,
                      int priority) {
    Lexicon lex;
    lex.name = name;
    lex.priority = priority;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        auto eol = content.find('\n', pos);
        std::string line = content.substr(
            pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? content.size() : eol + 1;
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw MalformedLineError(line_no, "expected `term<TAB>polarity`");
        }
        std::string term = lowercase(line.substr(0, tab));
        std::string value_str = line.substr(tab + 1);
        double value = 0.0;
        try {
            std::size_t consumed = 0;
            value = std::stod(value_str, &consumed);
            if (consumed != value_str.size()) {
                throw MalformedLineError(line_no, "bad polarity '" + value_str + "'");
            }
        } catch (const std::invalid_argument&) {
            throw MalformedLineError(line_no, "bad polarity '" + value_str + "'");
        } catch (const std::out_of_range&) {
            throw PolarityOutOfRangeError(term, 0.0);
        }
        if (!std::isfinite(value) || value < -1.0 || value > 1.0) {
            throw PolarityOutOfRangeError(term, value);
        }
        lex.entries[term] = value;
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path, int priority) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return parse_lexicon(buf.str(), name, priority);
}

std::string serialize_lexicon(const Lexicon& lex) {
    std::map<std::string, double> sorted(lex.entries.begin(), lex.entries.end());
    std::ostringstream out;
    for (const auto& [term, value] : sorted) {
        std::ostringstream v;
        v.precision(10);
        v << value;
        out << term << '\t' << v.str() << '\n';
    }
    return out.str();
}

void save_lexicon(const Lexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << serialize_lexicon(lex);
    if (!out) throw IoError("write failure: " + path);
}

Lexicon merge_lexicons(const std::vector<Lexicon>& lexicons) {
    if (lexicons.empty()) throw ConfigError("no lexicons to merge");
    // Stable sort keeps list order authoritative among equal priorities.
    std::vector<const Lexicon*> order;
    for (const auto& l : lexicons) order.push_back(&l);
    std::stable_sort(order.begin(), order.end(),
                     [](const Lexicon* a, const Lexicon* b) {
                         return a->priority < b->priority;
                     });
    Lexicon merged;
    merged.priority = order.front()->priority;
    for (const auto* l : order) {
        for (const auto& [term, value] : l->entries) {
            merged.entries.emplace(term, value);  // first writer wins
        }
    }
    std::string name;
    for (const auto& l : lexicons) {
        if (!name.empty()) name += '+';
        name += l.name;
    }
    merged.name = name;
    return merged;
}

Lexicon generate_auto_lexicon(const Dataset& d, const PipelineConfig& cfg,
                              const Lexicon& emo, int min_occurrences) {
    struct Counts {
        std::size_t pos = 0;
        std::size_t neg = 0;
    };
    std::unordered_map<std::string, Counts> stats;
    std::size_t pos_docs = 0;
    std::size_t neg_docs = 0;
    for (const auto& doc : d.documents) {
        if (!doc.label || *doc.label == Label::Neutral) continue;
        bool positive = *doc.label == Label::Positive;
        (positive ? pos_docs : neg_docs)++;
        for (const auto& token : preprocess(doc.text, cfg, emo)) {
            auto& c = stats[token.normalized];
            (positive ? c.pos : c.neg)++;
        }
    }
    if (pos_docs == 0 || neg_docs == 0) {
        throw EmptyTrainingDataError(
            "auto lexicon needs at least one positive and one negative document");
    }

    Lexicon lex;
    lex.name = "auto";
    lex.priority = 2;
    std::size_t floor = static_cast<std::size_t>(std::max(1, min_occurrences));
    for (const auto& [term, c] : stats) {
        std::size_t total = c.pos + c.neg;
        if (total < floor) continue;
        double positive_share = static_cast<double>(c.pos) / total;
        if (positive_share >= 0.4 && positive_share <= 0.6) continue;  // neutral band
        lex.entries[term] = 2.0 * positive_share - 1.0;
    }
    return lex;
}

double score_avg(std::span<const Token> tokens, const Lexicon& lex) {
    double sum = 0.0;
    std::size_t sentiment_bearing = 0;
    for (const auto& token : tokens) {
        double w = lex.polarity(token.normalized);
        if (w == 0.0) continue;
        sentiment_bearing++;
        if (token.negated) w = -w;
        if (token.but_flipped) w = -w;
        sum += w;
    }
    if (sentiment_bearing == 0) return 0.0;
    return sum / static_cast<double>(sentiment_bearing);
}

double score_log(double avg) {
    double magnitude = std::fabs(avg);
    if (magnitude <= 0.1) return 0.0;
    double value = std::log10(10.0 * magnitude);
    return avg < 0 ? -value : value;
}

ScorePair score_document(const std::string& text, const Lexicon& lex,
                         const PipelineConfig& cfg) {
    auto tokens = preprocess(text, cfg, lex);
    double avg = score_avg(tokens, lex);
    return {avg, score_log(avg)};
}

LexiconClassifyResult lexicon_classify(const Dataset& d, const Lexicon& lex,
                                       const PipelineConfig& cfg,
                                       std::uint64_t seed) {
    LexiconClassifyResult result;
    result.scores.reserve(d.size());
    for (const auto& doc : d.documents) {
        result.scores.push_back(score_document(doc.text, lex, cfg));
    }

    auto clustering = kmeans(result.scores, 3, seed);

    // Order clusters by log-score centroid; lowest becomes Negative.
    std::array<int, 3> rank = {0, 1, 2};
    std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
        return clustering.centroids[a].log < clustering.centroids[b].log;
    });
    std::array<Label, 3> cluster_label{};
    for (int i = 0; i < 3; ++i) {
        cluster_label[rank[i]] = kAllLabels[i];
    }

    result.predicted.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        result.predicted.push_back(cluster_label[clustering.assignments[i]]);
    }

    std::size_t labeled = 0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d.documents[i].label) continue;
        labeled++;
        if (*d.documents[i].label == result.predicted[i]) correct++;
    }
    if (labeled > 0) {
        result.accuracy = static_cast<double>(correct) / labeled;
    }
    return result;
}

}  // namespace senti
