#include "senti/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "senti/errors.hpp"

namespace senti {

std::array<std::size_t, kNumLabels> Dataset::label_counts() const {
    std::array<std::size_t, kNumLabels> counts{};
    for (const auto& doc : documents) {
        if (doc.label) counts[label_index(*doc.label)]++;
    }
    return counts;
}

std::size_t Dataset::labeled_count() const {
    std::size_t n = 0;
    for (const auto& doc : documents) {
        if (doc.label) n++;
    }
    return n;
}

namespace {

Document parse_line(const std::string& line, std::size_t line_no) {
    auto tab1 = line.find('\t');
    if (tab1 == std::string::npos) {
        throw MalformedLineError(line_no, "expected `id<TAB>label<TAB>text`");
    }
    auto tab2 = line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
        throw MalformedLineError(line_no, "expected `id<TAB>label<TAB>text`");
    }
    Document doc;
    doc.id = line.substr(0, tab1);
    if (doc.id.empty()) {
        throw MalformedLineError(line_no, "empty document id");
    }
    std::string label_token = line.substr(tab1 + 1, tab2 - tab1 - 1);
    doc.text = line.substr(tab2 + 1);
    if (label_token != "?") {
        auto label = parse_label(label_token);
        if (!label) throw UnknownLabelError(label_token);
        doc.label = *label;
    }
    return doc;
}

}  // namespace

Dataset parse_dataset(const std::string& content) {
    Dataset d;
    std::unordered_set<std::string> seen_ids;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        auto eol = content.find('\n', pos);
        std::string line = content.substr(
            pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? content.size() : eol + 1;
        line_no++;
        if (line.empty()) continue;
        Document doc = parse_line(line, line_no);
        if (!seen_ids.insert(doc.id).second) {
            throw MalformedLineError(line_no, "duplicate document id '" + doc.id + "'");
        }
        d.documents.push_back(std::move(doc));
    }
    return d;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure: " + path);
    return parse_dataset(buf.str());
}

std::string serialize_dataset(const Dataset& d) {
    std::string out;
    for (const auto& doc : d.documents) {
        out += doc.id;
        out += '\t';
        out += doc.label ? to_string(*doc.label) : "?";
        out += '\t';
        out += doc.text;
        out += '\n';
    }
    return out;
}

void save_dataset(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << serialize_dataset(d);
    if (!out) throw IoError("write failure: " + path);
}

namespace {

// Fisher-Yates with explicit bounded draws; std::shuffle's output is not
// pinned down by the standard.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace

std::vector<FoldSplit> stratified_folds(const Dataset& d, int k, std::uint64_t seed) {
    if (k < 2) throw ConfigError("fold count must be >= 2");

    std::array<std::vector<std::size_t>, kNumLabels> by_class;
    for (std::size_t i = 0; i < d.documents.size(); ++i) {
        if (d.documents[i].label) {
            by_class[label_index(*d.documents[i].label)].push_back(i);
        }
    }
    for (Label l : kAllLabels) {
        const auto& members = by_class[label_index(l)];
        if (!members.empty() && members.size() < static_cast<std::size_t>(k)) {
            throw TooFewInstancesError(std::string(to_string(l)), members.size(), k);
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<FoldSplit> folds(k);
    for (auto& members : by_class) {
        deterministic_shuffle(members, rng);
        for (std::size_t i = 0; i < members.size(); ++i) {
            folds[i % k].test.push_back(members[i]);
        }
    }
    for (auto& fold : folds) {
        std::sort(fold.test.begin(), fold.test.end());
    }
    for (int f = 0; f < k; ++f) {
        for (int g = 0; g < k; ++g) {
            if (g == f) continue;
            folds[f].train.insert(folds[f].train.end(), folds[g].test.begin(),
                                  folds[g].test.end());
        }
        std::sort(folds[f].train.begin(), folds[f].train.end());
    }
    return folds;
}

Dataset subset(const Dataset& d, std::span<const std::size_t> indices) {
    Dataset out;
    out.documents.reserve(indices.size());
    for (auto i : indices) out.documents.push_back(d.documents[i]);
    return out;
}

}  // namespace senti
