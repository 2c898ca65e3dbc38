#pragma once

#include <string>
#include <vector>

#include "latgon/analysis.hpp"
#include "latgon/body.hpp"
#include "latgon/lattice.hpp"
#include "latgon/minimizer.hpp"
#include "latgon/variational.hpp"

namespace latgon {

// JSON formats (UTF-8):
//   body            {"type":"polygon","vertices":[[x,y],...]}
//                 | {"type":"radial","samples":[...]}
//                 | {"type":"ellipse_focus","p":...,"e":[ex,ey]}
//                 | {"type":"disk"}               (unit-area disk)
//   lattice polygon {"vertices":[[x,y],...]}      (integer coordinates)
//   edge set        {"edges":[[x,y],...]}
//
// Malformed input throws ValidationError with the offending context.

ConvexBody body_from_json(const std::string& json_text);
std::string body_to_json(const ConvexBody& body);
ConvexBody load_body(const std::string& path);

LatticePolygon lattice_polygon_from_json(const std::string& json_text);
std::string lattice_polygon_to_json(const LatticePolygon& polygon);
LatticePolygon load_lattice_polygon(const std::string& path);

std::vector<LatticeVector> edge_set_from_json(const std::string& json_text);
std::string edge_set_to_json(const std::vector<LatticeVector>& edges);

std::string minimizer_result_to_json(const MinimizerResult& result);
std::string vp_solution_to_json(const VPSolution& sol);
std::string limit_polygon_to_json(const LimitPolygon& lp);
LimitPolygon limit_polygon_from_json(const std::string& json_text);

std::string convergence_record_to_json(const ConvergenceRecord& rec);
// JSON-lines: one record per line, in n-order.
std::string convergence_records_to_jsonl(const std::vector<ConvergenceRecord>& records);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace latgon
