#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "contring/ball.hpp"
#include "contring/canonical.hpp"
#include "contring/geodesic.hpp"
#include "contring/mat.hpp"
#include "contring/poly.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

using json = nlohmann::json;

/// Square matrix from `p=<prime>; <row>; <row>; ...` or
/// {"p": 3, "rows": [[2, 1], [0, 1]]}. Throws ParseError.
Mat parse_matrix(std::string_view text);

/// Coefficients, lowest degree first, separated by spaces or commas, or a
/// JSON array. Throws ParseError.
Poly parse_poly(const Field& field, std::string_view text);

/// Contents of the named file if it exists, otherwise the argument itself.
std::string read_input(const std::string& arg);

json rows_json(const Mat& a);
json to_json(const Mat& a);
json to_json(const RankValue& r);
json to_json(const Poly& f);
json to_json(const GeodesicPath& path);
json to_json(const Rcf& r);
json to_json(const Witness& w);

/// Same matrix in the text format.
std::string to_text(const Mat& a);

}  // namespace contring
