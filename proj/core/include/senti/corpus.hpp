#ifndef SENTI_CORPUS_HPP
#define SENTI_CORPUS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "senti/label.hpp"

namespace senti {

struct Document {
    std::string id;
    std::string text;
    std::optional<Label> label;
};

/// Immutable after load; safe to share across threads read-only.
struct Dataset {
    std::vector<Document> documents;

    std::size_t size() const { return documents.size(); }
    bool empty() const { return documents.empty(); }

    /// Per-label tallies over labeled documents only.
    std::array<std::size_t, kNumLabels> label_counts() const;
    std::size_t labeled_count() const;
};

/// Reads a TSV dataset: one document per line, `id <TAB> label <TAB> text`,
/// label in {positive, negative, neutral, ?} where `?` means unlabeled.
/// Empty lines are skipped; line order is preserved.
Dataset load_dataset(const std::string& path);

/// Parses dataset lines from an in-memory string (same format as load_dataset).
Dataset parse_dataset(const std::string& content);

/// Writes the dataset back in the ingestion format. For well-formed inputs
/// load -> save round-trips byte-identically.
void save_dataset(const Dataset& d, const std::string& path);
std::string serialize_dataset(const Dataset& d);

struct FoldSplit {
    std::vector<std::size_t> train;  // document indices into Dataset::documents
    std::vector<std::size_t> test;
};

/// Splits the labeled documents into k stratified folds. Test folds are
/// disjoint, cover every labeled document, and per-class sizes across folds
/// differ by at most one. Deterministic for a given seed.
std::vector<FoldSplit> stratified_folds(const Dataset& d, int k, std::uint64_t seed);

/// Copies the selected documents into a new dataset (order = index order).
Dataset subset(const Dataset& d, std::span<const std::size_t> indices);

}  // namespace senti

#endif  // SENTI_CORPUS_HPP
