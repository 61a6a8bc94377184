#pragma once

#include <json.hpp>

#include "nmweyl/alcove.hpp"
#include "nmweyl/characters.hpp"
#include "nmweyl/series.hpp"
#include "nmweyl/verify.hpp"

namespace nmweyl {

using json = nlohmann::json;

json weight_json(const Weight& w);
Weight weight_from_json(const json& j);

/// {"qmax": n, "terms": [{"wt": [...], "q": k, "c": "int"}, ...]} sorted by (wt, q).
/// Exact polynomials report their q-degree as qmax.
json series_json(const QSeriesPoly& p);
/// Univariate series use the same layout with empty weights.
json series_json(const QSeries& s);
QSeriesPoly series_from_json(const json& j);

json path_json(const AlcovePath& p);
json char_record_json(const CharRecord& r);
json report_json(const VerifyReport& r);

}  // namespace nmweyl
