#include "senti/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "senti/errors.hpp"

namespace senti {

std::string_view pos_tag_name(PosTag t) {
    switch (t) {
        case PosTag::N: return "N";
        case PosTag::V: return "V";
        case PosTag::A: return "A";
        case PosTag::R: return "R";
        case PosTag::Bang: return "!";
        case PosTag::E: return "E";
        case PosTag::G: return "G";
        case PosTag::AtMention: return "@";
        case PosTag::Hashtag: return "#";
        case PosTag::U: return "U";
        case PosTag::Tilde: return "~";
        case PosTag::O: return "O";
        case PosTag::P: return "P";
        case PosTag::D: return "D";
        case PosTag::Caret: return "^";
        case PosTag::Other: return "Other";
    }
    return "Other";
}

PosTag parse_pos_tag(std::string_view s) {
    if (s == "N") return PosTag::N;
    if (s == "V") return PosTag::V;
    if (s == "A") return PosTag::A;
    if (s == "R") return PosTag::R;
    if (s == "!") return PosTag::Bang;
    if (s == "E") return PosTag::E;
    if (s == "G") return PosTag::G;
    if (s == "@") return PosTag::AtMention;
    if (s == "#") return PosTag::Hashtag;
    if (s == "U") return PosTag::U;
    if (s == "~") return PosTag::Tilde;
    if (s == "O") return PosTag::O;
    if (s == "P") return PosTag::P;
    if (s == "D") return PosTag::D;
    if (s == "^") return PosTag::Caret;
    return PosTag::Other;
}

std::set<std::string> PipelineConfig::default_negation_words() {
    // "no" and "not" join the contraction list; the exception phrases all
    // start with one of them.
    return {"no",      "not",     "hardly",  "lack",    "lacking", "lacks",
            "neither", "nor",     "cannot",  "daren't", "don't",   "doesn't",
            "didn't",  "hadn't",  "shouldn't", "wasn't", "wouldn't", "weren't",
            "won't",   "without", "doesnt",  "didnt",   "hadnt",   "hasn't",
            "havn't",  "haven't"};
}

std::set<std::string> load_stop_words(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stop-word file: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) words.insert(line);
    }
    return words;
}

namespace {

bool is_word_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) || c == '\'' || c == '_';
}

// A character that can only belong to an emoticon or punctuation, never to a
// plain word. Underscore counts: it marks kaomoji like t_t.
bool is_glyph_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 0x80 && !std::isalnum(u) && c != '\'';
}

bool has_glyph_char(std::string_view s) {
    return std::any_of(s.begin(), s.end(), is_glyph_char);
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 0x80) c = static_cast<char>(std::tolower(u));
    }
    return out;
}

bool looks_like_emoticon(std::string_view chunk) {
    if (chunk.empty()) return false;
    if (!std::any_of(chunk.begin(), chunk.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c));
        })) {
        return true;  // pure glyphs: :-( =] ;;-)
    }
    static const std::regex sideways(
        R"(^[<>]?[:;=8xX*#%][-'o^*,]?[()\[\]{}dDpPsSoO/\\|@3*$&]+$)");
    static const std::regex reversed(
        R"(^[()\[\]{}dDpPsSoO/\\|@3*$&]+[-'o^*,]?[:;=8xX][<>]?$)");
    static const std::regex kaomoji(
        R"(^[<>^;.~tToOxXuU0-][_.]+[<>^;.~tToOxXuU0-]$)");
    std::string s(chunk);
    return std::regex_match(s, sideways) || std::regex_match(s, reversed) ||
           std::regex_match(s, kaomoji);
}

bool is_url_chunk(std::string_view s) {
    auto lower = ascii_lower(s);
    return lower.starts_with("http://") || lower.starts_with("https://") ||
           lower.starts_with("www.");
}

bool is_mention_chunk(std::string_view s) {
    if (s.size() < 2 || s[0] != '@') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool is_hashtag_chunk(std::string_view s) {
    if (s.size() < 2 || s[0] != '#') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> chunks;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) i++;
        if (i > start) chunks.push_back(text.substr(start, i - start));
    }
    return chunks;
}

}  // namespace

std::string normalize(const std::string& text, const PipelineConfig& cfg) {
    std::string work = text;
    if (cfg.strip_syntax) {
        static const std::regex url_re(R"((https?://\S+)|(www\.\S+))",
                                       std::regex::icase);
        static const std::regex mention_re(R"(@[A-Za-z0-9_]+)");
        static const std::regex hashtag_re(R"(#[A-Za-z0-9_]+)");
        work = std::regex_replace(work, url_re, " ");
        work = std::regex_replace(work, mention_re, " ");
        work = std::regex_replace(work, hashtag_re, " ");
    }
    std::string out;
    for (auto chunk : split_whitespace(work)) {
        if (cfg.strip_syntax && (chunk == "RT" || chunk == "rt")) continue;
        if (!out.empty()) out += ' ';
        if (looks_like_emoticon(chunk)) {
            out.append(chunk);
        } else {
            out += ascii_lower(chunk);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tokenization

namespace {

// Glyph-bearing lexicon entries, longest first, for whole/prefix/suffix
// matching during tokenization. Word-only entries (e.g. "lol") never act
// here; they stay ordinary tokens and are looked up at scoring time.
class EmoMatcher {
public:
    EmoMatcher() = default;
    explicit EmoMatcher(const Lexicon& lex) {
        for (const auto& [term, pol] : lex.entries) {
            if (has_glyph_char(term)) terms_.emplace_back(term, pol);
        }
        std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
            return a.first < b.first;
        });
    }

    bool empty() const { return terms_.empty(); }

    // Longest entry equal to / starting / ending the lowercased chunk.
    const std::pair<std::string, double>* match_whole(std::string_view lower) const {
        for (const auto& t : terms_) {
            if (t.first == lower) return &t;
        }
        return nullptr;
    }
    const std::pair<std::string, double>* match_prefix(std::string_view lower) const {
        for (const auto& t : terms_) {
            if (t.first.size() < lower.size() && lower.starts_with(t.first)) return &t;
        }
        return nullptr;
    }
    const std::pair<std::string, double>* match_suffix(std::string_view lower) const {
        for (const auto& t : terms_) {
            if (t.first.size() < lower.size() && lower.ends_with(t.first)) return &t;
        }
        return nullptr;
    }

private:
    std::vector<std::pair<std::string, double>> terms_;
};

Token make_word_token(std::string_view surface) {
    Token t;
    t.surface = std::string(surface);
    t.normalized = ascii_lower(surface);
    t.tag = PosTag::Other;
    return t;
}

Token make_emo_token(std::string_view surface, double polarity) {
    Token t;
    t.surface = std::string(surface);
    t.tag = PosTag::E;
    if (polarity > 0) {
        t.normalized = "pos_emo";
    } else if (polarity < 0) {
        t.normalized = "neg_emo";
    } else {
        t.normalized = ascii_lower(surface);
    }
    return t;
}

void process_chunk(std::string_view chunk, const EmoMatcher& emo,
                   std::vector<Token>& out) {
    if (chunk.empty()) return;
    std::string lower = ascii_lower(chunk);

    if (const auto* e = emo.match_whole(lower)) {
        out.push_back(make_emo_token(chunk, e->second));
        return;
    }
    if (is_url_chunk(chunk)) {
        Token t = make_word_token(chunk);
        t.tag = PosTag::U;
        out.push_back(std::move(t));
        return;
    }
    if (is_mention_chunk(chunk)) {
        Token t = make_word_token(chunk);
        t.tag = PosTag::AtMention;
        out.push_back(std::move(t));
        return;
    }
    if (is_hashtag_chunk(chunk)) {
        Token t = make_word_token(chunk);
        t.tag = PosTag::Hashtag;
        out.push_back(std::move(t));
        return;
    }
    if (const auto* e = emo.match_prefix(lower)) {
        out.push_back(make_emo_token(chunk.substr(0, e->first.size()), e->second));
        process_chunk(chunk.substr(e->first.size()), emo, out);
        return;
    }
    if (const auto* e = emo.match_suffix(lower)) {
        process_chunk(chunk.substr(0, chunk.size() - e->first.size()), emo, out);
        out.push_back(make_emo_token(chunk.substr(chunk.size() - e->first.size()),
                                     e->second));
        return;
    }
    if (!is_word_char(chunk.back())) {
        process_chunk(chunk.substr(0, chunk.size() - 1), emo, out);
        out.push_back(make_word_token(chunk.substr(chunk.size() - 1)));
        return;
    }
    if (!is_word_char(chunk.front())) {
        out.push_back(make_word_token(chunk.substr(0, 1)));
        process_chunk(chunk.substr(1), emo, out);
        return;
    }
    out.push_back(make_word_token(chunk));
}

void assign_positions(std::vector<Token>& tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].position = i;
}

}  // namespace

std::vector<Token> tokenize(const std::string& text, const Lexicon& emo) {
    EmoMatcher matcher(emo);
    std::vector<Token> tokens;
    for (auto chunk : split_whitespace(text)) {
        process_chunk(chunk, matcher, tokens);
    }
    assign_positions(tokens);
    return tokens;
}

std::vector<Token> tokenize_pretagged(const std::string& text, const Lexicon& emo) {
    EmoMatcher matcher(emo);
    std::vector<Token> tokens;
    for (auto chunk : split_whitespace(text)) {
        Token t;
        auto slash = chunk.rfind('/');
        PosTag tag = PosTag::Other;
        std::string_view word = chunk;
        if (slash != std::string_view::npos && slash > 0 &&
            slash + 1 < chunk.size()) {
            auto tag_part = chunk.substr(slash + 1);
            PosTag parsed = parse_pos_tag(tag_part);
            // Unknown tag strings leave the chunk intact (URLs contain '/').
            if (parsed != PosTag::Other || tag_part == "Other") {
                tag = parsed;
                word = chunk.substr(0, slash);
            }
        }
        std::string lower = ascii_lower(word);
        if (const auto* e = matcher.match_whole(lower)) {
            t = make_emo_token(word, e->second);
        } else {
            t = make_word_token(word);
            t.tag = tag;
        }
        tokens.push_back(std::move(t));
    }
    assign_positions(tokens);
    return tokens;
}

// ---------------------------------------------------------------------------
// Negation and but-clauses

namespace {

bool phrase_matches_at(std::span<const Token> tokens, std::size_t start,
                       const std::string& phrase) {
    std::istringstream words(phrase);
    std::string word;
    std::size_t i = start;
    while (words >> word) {
        if (i >= tokens.size() || tokens[i].normalized != word) return false;
        i++;
    }
    return true;
}

bool begins_exception_phrase(std::span<const Token> tokens, std::size_t i,
                             const PipelineConfig& cfg) {
    for (const auto& phrase : cfg.negation_exception_phrases) {
        if (phrase_matches_at(tokens, i, phrase)) return true;
    }
    return false;
}

struct NegationScope {
    std::size_t trigger;
    std::size_t begin;  // first marked token
    std::size_t end;    // exclusive; clause punctuation or end of document
};

std::vector<NegationScope> find_negation_scopes(std::span<const Token> tokens,
                                                const PipelineConfig& cfg) {
    std::vector<NegationScope> scopes;
    if (tokens.empty()) return scopes;

    // A negative rhetorical question suppresses negation entirely: it ends
    // with "?" and a negation word sits among its first three tokens.
    if (tokens.back().normalized == "?") {
        std::size_t limit = std::min<std::size_t>(3, tokens.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (cfg.negation_words.count(tokens[i].normalized)) return scopes;
        }
    }

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!cfg.negation_words.count(tokens[i].normalized)) continue;
        if (begins_exception_phrase(tokens, i, cfg)) continue;
        std::size_t end = i + 1;
        while (end < tokens.size() &&
               !cfg.clause_punctuation.count(tokens[end].normalized)) {
            end++;
        }
        scopes.push_back({i, i + 1, end});
    }
    return scopes;
}

}  // namespace

std::vector<Token> mark_negation(std::vector<Token> tokens,
                                 const PipelineConfig& cfg) {
    for (const auto& scope : find_negation_scopes(tokens, cfg)) {
        for (std::size_t j = scope.begin; j < scope.end; ++j) {
            // Negation words never carry the mark themselves.
            if (cfg.negation_words.count(tokens[j].normalized)) continue;
            tokens[j].negated = true;
        }
    }
    return tokens;
}

std::size_t count_negation_contexts(std::span<const Token> tokens,
                                    const PipelineConfig& cfg) {
    std::size_t n = 0;
    for (const auto& scope : find_negation_scopes(tokens, cfg)) {
        if (scope.end > scope.begin) n++;
    }
    return n;
}

std::vector<Token> apply_but_clause(std::vector<Token> tokens,
                                    const PipelineConfig& cfg) {
    int pending_not_only = 0;
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (phrase_matches_at(tokens, i, "not only")) {
            pending_not_only++;
            i += 2;
            continue;
        }
        std::size_t phrase_len = 0;
        for (const auto& phrase : cfg.but_phrases) {
            if (!phrase_matches_at(tokens, i, phrase)) continue;
            std::size_t words =
                1 + static_cast<std::size_t>(
                        std::count(phrase.begin(), phrase.end(), ' '));
            phrase_len = std::max(phrase_len, words);
        }
        if (phrase_len > 0) {
            if (pending_not_only > 0) {
                // "not only ... but also": this contrast carries no flip.
                pending_not_only--;
                i += phrase_len;
                continue;
            }
            for (std::size_t j = i + phrase_len; j < tokens.size(); ++j) {
                tokens[j].but_flipped = true;
            }
            break;
        }
        i++;
    }
    return tokens;
}

std::vector<Token> filter_tokens(std::vector<Token> tokens,
                                 const PipelineConfig& cfg) {
    std::erase_if(tokens, [&](const Token& t) {
        if (cfg.stop_words.count(t.normalized)) return true;
        if (cfg.apply_pos_filter && t.tag != PosTag::Other &&
            !cfg.allowed_tags.count(t.tag)) {
            return true;
        }
        return false;
    });
    return tokens;
}

std::string render_token(const Token& t) {
    return t.negated ? t.normalized + "_NEG" : t.normalized;
}

std::vector<std::string> ngrams(std::span<const Token> tokens, int n_min, int n_max) {
    if (n_min < 1 || n_min > n_max) {
        throw ConfigError("invalid n-gram range " + std::to_string(n_min) + ".." +
                          std::to_string(n_max));
    }
    std::vector<std::string> grams;
    std::vector<std::string> rendered;
    rendered.reserve(tokens.size());
    for (const auto& t : tokens) rendered.push_back(render_token(t));

    for (int n = n_min; n <= n_max; ++n) {
        if (rendered.size() < static_cast<std::size_t>(n)) continue;
        for (std::size_t i = 0; i + n <= rendered.size(); ++i) {
            std::string gram = rendered[i];
            for (int j = 1; j < n; ++j) {
                gram += ' ';
                gram += rendered[i + j];
            }
            grams.push_back(std::move(gram));
        }
    }
    return grams;
}

PipelineResult preprocess_full(const std::string& text, const PipelineConfig& cfg,
                               const Lexicon& emo) {
    std::vector<Token> tokens;
    if (cfg.pretagged) {
        tokens = tokenize_pretagged(text, emo);
        if (cfg.strip_syntax) {
            std::erase_if(tokens, [](const Token& t) {
                return t.tag == PosTag::U || t.tag == PosTag::AtMention ||
                       t.tag == PosTag::Hashtag || t.normalized == "rt";
            });
        }
    } else {
        tokens = tokenize(normalize(text, cfg), emo);
    }
    PipelineResult result;
    result.negation_contexts = count_negation_contexts(tokens, cfg);
    tokens = mark_negation(std::move(tokens), cfg);
    if (cfg.apply_but_flip) {
        tokens = apply_but_clause(std::move(tokens), cfg);
    }
    result.tokens = filter_tokens(std::move(tokens), cfg);
    return result;
}

std::vector<Token> preprocess(const std::string& text, const PipelineConfig& cfg,
                              const Lexicon& emo) {
    return preprocess_full(text, cfg, emo).tokens;
}

}  // namespace senti
