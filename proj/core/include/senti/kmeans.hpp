#ifndef SENTI_KMEANS_HPP
#define SENTI_KMEANS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "senti/lexicon.hpp"

namespace senti {

struct KmeansResult {
    std::vector<int> assignments;         // one per point
    std::vector<ScorePair> centroids;     // k entries
    int iterations = 0;
    std::vector<double> objective_history;  // WCSS after each assignment step
};

/// Lloyd iterations with k-means++ seeding on (avg, log) points.
/// Deterministic for a given seed; assignment ties go to the lowest centroid
/// index; empty clusters are re-seeded to the point farthest from its
/// centroid. Stops when assignments are stable or after max_iter rounds.
KmeansResult kmeans(std::span<const ScorePair> points, int k, std::uint64_t seed,
                    int max_iter = 100);

}  // namespace senti

#endif  // SENTI_KMEANS_HPP
