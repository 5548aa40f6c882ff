#pragma once

#include "sheafex/complex.hpp"

#include <json.hpp>

#include <string>

namespace sheafex {

/**
 * Complex file format:
 *   {"dimension": d, "top_faces": [[v,...],...],
 *    "weights": {"face-key": "p/q"}, "partite": {"v": class}}
 * "weights" and "partite" are optional. Without weights the canonical weight
 * function is used; weights given for the top faces only are extended by (W2).
 */
WeightedComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const WeightedComplex& x);

WeightedComplex load_complex(const std::string& path);
void save_complex(const WeightedComplex& x, const std::string& path);

}  // namespace sheafex
