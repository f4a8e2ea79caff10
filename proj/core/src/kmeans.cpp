#include "senti/kmeans.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "senti/errors.hpp"

namespace senti {

namespace {

double sq_dist(const ScorePair& a, const ScorePair& b) {
    double dx = a.avg - b.avg;
    double dy = a.log - b.log;
    return dx * dx + dy * dy;
}

// Uniform double in [0, 1) with explicit bit arithmetic; the standard
// distributions are not bit-reproducible across library implementations.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<ScorePair> seed_plus_plus(std::span<const ScorePair> points, int k,
                                      std::mt19937_64& rng) {
    std::vector<ScorePair> centroids;
    centroids.reserve(k);
    centroids.push_back(points[rng() % points.size()]);

    std::vector<double> dist(points.size());
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = std::numeric_limits<double>::max();
            for (const auto& c : centroids) {
                best = std::min(best, sq_dist(points[i], c));
            }
            dist[i] = best;
            total += best;
        }
        std::size_t chosen;
        if (total <= 0.0) {
            chosen = rng() % points.size();  // all points coincide
        } else {
            double r = next_unit(rng) * total;
            chosen = points.size() - 1;
            double acc = 0.0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                acc += dist[i];
                if (r < acc) {
                    chosen = i;
                    break;
                }
            }
        }
        centroids.push_back(points[chosen]);
    }
    return centroids;
}

}  // namespace

KmeansResult kmeans(std::span<const ScorePair> points, int k, std::uint64_t seed,
                    int max_iter) {
    if (k < 1) throw ConfigError("k must be >= 1");
    if (points.size() < static_cast<std::size_t>(k)) {
        throw TooFewPointsError(points.size(), k);
    }

    std::mt19937_64 rng(seed);
    KmeansResult result;
    result.centroids = seed_plus_plus(points, k, rng);
    result.assignments.assign(points.size(), -1);

    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        double objective = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            int best = 0;
            double best_dist = sq_dist(points[i], result.centroids[0]);
            for (int c = 1; c < k; ++c) {
                double d2 = sq_dist(points[i], result.centroids[c]);
                if (d2 < best_dist) {
                    best_dist = d2;
                    best = c;
                }
            }
            objective += best_dist;
            if (result.assignments[i] != best) {
                result.assignments[i] = best;
                changed = true;
            }
        }
        result.objective_history.push_back(objective);
        result.iterations = iter + 1;
        if (!changed) break;

        std::vector<ScorePair> sums(k);
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            sums[result.assignments[i]].avg += points[i].avg;
            sums[result.assignments[i]].log += points[i].log;
            counts[result.assignments[i]]++;
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] == 0) {
                // Re-seed an empty cluster to the point farthest from its
                // centroid.
                std::size_t farthest = 0;
                double worst = -1.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    double d2 =
                        sq_dist(points[i], result.centroids[result.assignments[i]]);
                    if (d2 > worst) {
                        worst = d2;
                        farthest = i;
                    }
                }
                result.centroids[c] = points[farthest];
            } else {
                result.centroids[c] = {sums[c].avg / counts[c],
                                       sums[c].log / counts[c]};
            }
        }
    }
    return result;
}

}  // namespace senti
