#pragma once

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "qham/polytope.hpp"

namespace qham {

using Json = nlohmann::ordered_json;

// Deterministic serialization: fixed key order (ordered_json), every
// floating value printed as %.16e (17 significant digits), 2-space indent.
// Reports with identical content are byte-identical.
std::string to_json_string(const Json& v);

void write_text_file(const std::string& path, const std::string& content);

// one row per sample: lambda_1..lambda_n then a source tag
std::string batch_to_csv(const SampleBatch& batch);

Json hull_to_json(const Hull& h);
Json alcove_to_json(const AlcovePoint& p);
Json tolerances_to_json(const Tolerances& t);

}  // namespace qham
