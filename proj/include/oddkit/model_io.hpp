#pragma once

#include <string>

#include "oddkit/detector.hpp"

namespace oddkit {

// Fitted detectors persist as a self-describing JSON document:
//
//   { "format_version": 1, "algo": "...", "params": {...},
//     "train_stats": { "scores": [...], "threshold": ..., ... },
//     "state": {...} }
//
// Floats are written with round-trip precision, so a saved model scores
// exactly like the in-memory detector it came from.

inline constexpr int kModelFormatVersion = 1;

void save_model(const Detector& detector, const std::string& path);

/// Throws DataError for unreadable files, unknown versions or malformed
/// payloads.
Detector load_model(const std::string& path);

}  // namespace oddkit
