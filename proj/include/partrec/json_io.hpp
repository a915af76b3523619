#pragma once

#include <json.hpp>

#include <string>

#include "partrec/analytic.hpp"
#include "partrec/partitions.hpp"
#include "partrec/rankin_cohen.hpp"
#include "partrec/trunc_series.hpp"

namespace partrec {

nlohmann::json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const PartitionTable& t);
PartitionTable table_from_json(const nlohmann::json& j);

nlohmann::json eigentable_to_json(const EigenformTable& t);
EigenformTable eigentable_from_json(const nlohmann::json& j);

/// {v, N, status, first_mismatch: n|null, alpha: "p/q", beta: "p/q"|null}
nlohmann::json theorem2_report_to_json(const Theorem2Report& r);

/// {v, n_max, M, N, prec, max_residual, tail_bound, status}
nlohmann::json theorem3_report_to_json(const Theorem3Report& r);

}  // namespace partrec
