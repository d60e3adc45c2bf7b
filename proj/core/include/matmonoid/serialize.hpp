#pragma once

// JSON forms used by the CLI. Big integers are always decimal strings so
// they survive any JSON parser.

#include "matmonoid/extremal.hpp"
#include "matmonoid/hash.hpp"
#include "matmonoid/matrix.hpp"
#include "matmonoid/tree.hpp"

#include <nlohmann/json.hpp>

namespace matmonoid {

/// [["a","b"],["c","d"]]
nlohmann::json to_json(Mat2 const& m);
/// Inverse of to_json(Mat2). Throws std::invalid_argument on malformed input.
Mat2 mat2_from_json(nlohmann::json const& j);

/// {"depth": n, "cells": [matrix, ...]}
nlohmann::json to_json(TreeRow const& r);

/// Residue matrix in the same shape as to_json(Mat2).
nlohmann::json to_json(Digest const& d);

/// {"word": "...", "depth": n, "matrix": ..., "entry": [row, col], "value": "..."}
nlohmann::json to_json(Witness const& w);

} // namespace matmonoid
