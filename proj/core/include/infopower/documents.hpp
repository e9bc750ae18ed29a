#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

// JSON documents with explicit [re, im] pairs for every complex entry and all
// numbers emitted with 17 significant digits (round-trip exact for doubles).
//
// POVM document:
//   { "type": "povm", "name": "...", "dim": D, "tolerance": 1e-9,
//     "elements": [ [ [[re,im], ...D pairs], ...D rows ], ...N matrices ] }
//
// Ensemble document:
//   { "type": "ensemble", "dim": D,
//     "states": [ { "prior": p, "vector": [[re,im], ...] }
//               | { "prior": p, "matrix": [[[re,im], ...], ...] }, ... ] }

std::string povm_to_json(const Povm& povm, const std::string& name = "");
void write_povm_document(const std::filesystem::path& path, const Povm& povm,
                         const std::string& name = "");

/// Parses and validates at the tolerance stored in the document (default
/// 1e-9). Malformed JSON or structure throws ParseError; an element list that
/// is not a POVM throws the corresponding validation error.
Povm povm_from_json(const std::string& text);
Povm read_povm_document(const std::filesystem::path& path);

std::string ensemble_to_json(const PureEnsemble& ensemble);
std::string ensemble_to_json(const Ensemble& ensemble);
void write_ensemble_document(const std::filesystem::path& path, const PureEnsemble& ensemble);
void write_ensemble_document(const std::filesystem::path& path, const Ensemble& ensemble);

/// Accepts both state encodings; "vector" entries become pure density
/// matrices.
Ensemble ensemble_from_json(const std::string& text);
Ensemble read_ensemble_document(const std::filesystem::path& path);

/// Requires every state to use the "vector" encoding.
PureEnsemble pure_ensemble_from_json(const std::string& text);
PureEnsemble read_pure_ensemble_document(const std::filesystem::path& path);

/// Density-matrix document { "dim": D, "matrix": [[[re,im],...],...] }.
DensityMatrix read_state_document(const std::filesystem::path& path);

/// %.17g rendering used for every number in documents and CSV output.
std::string format_double(double value);

}  // namespace infopower
