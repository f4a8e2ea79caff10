#ifndef SENTI_MODEL_IO_HPP
#define SENTI_MODEL_IO_HPP

#include <string>

#include "senti/experiment.hpp"

namespace senti {

inline constexpr int kModelFormatVersion = 1;

/// Versioned JSON document: format_version, model_kind, pipeline_config,
/// feature_space (with fingerprint), lexicon, parameters, optional
/// cost_matrix. Serialization is deterministic, so equal models produce
/// byte-identical files.
std::string serialize_model(const SentimentModel& model);
void save_model(const SentimentModel& model, const std::string& path);

/// Rejects unknown format versions and fingerprint mismatches (ConfigError).
/// Round-trip is prediction-identical.
SentimentModel deserialize_model(const std::string& json_text);
SentimentModel load_model(const std::string& path);

}  // namespace senti

#endif  // SENTI_MODEL_IO_HPP
