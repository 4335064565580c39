#pragma once

#include <nlohmann/json.hpp>

#include "padcell/cells.hpp"
#include "padcell/decompose.hpp"
#include "padcell/oracle.hpp"
#include "padcell/rewrite.hpp"

namespace padcell {

// Cells serialize with term strings for the center and bounds, so any cell
// round-trips through parse/print:
//   {"var", "center", "lower": {"term", "strict"} | null, "upper": ...,
//    "coset": {"lambda", "kind", "n", "m"}}
nlohmann::json cell_to_json(const Cell& c);
Cell cell_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const Decomposition& d);

nlohmann::json qe_condition_to_json(const QECondition& q);

nlohmann::json equiv_report_to_json(const EquivReport& r, long prime);

nlohmann::json coset_table_to_json(long n, int m, long prime);

// linearize output: one entry per region with the linear part (q, c), the
// tail valuation bound, and the exact expansion when the region pins a ball.
nlohmann::json normal_forms_to_json(const std::vector<NormalForm>& nfs,
                                    const std::string& var);

} // namespace padcell
