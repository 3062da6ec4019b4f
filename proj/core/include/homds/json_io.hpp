#ifndef HOMDS_JSON_IO_HPP
#define HOMDS_JSON_IO_HPP

#include <json.hpp>

#include "homds/codes.hpp"
#include "homds/listdec.hpp"
#include "homds/matrix.hpp"
#include "homds/mdsb.hpp"
#include "homds/patterns.hpp"
#include "homds/poly.hpp"
#include "homds/tensor.hpp"

namespace homds {

using json = nlohmann::json;

/// All set-like data is 1-based on the wire (matching the usual [n]
/// convention) and 0-based in memory.

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json elem_to_json(const Field& f, Fe v);
/// Accepts either the coefficient array or, for prime fields, a bare int.
Fe elem_from_json(const Field& f, const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json indices_to_json(ColSet s);
ColSet indices_from_json(const json& j, int n);

json pattern_to_json(const ZeroPattern& p);
ZeroPattern pattern_from_json(const json& j);

json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);

json config_to_json(const Config& c, const std::vector<int>* delta = nullptr);
Config config_from_json(const json& j, int n);

json points_to_json(const Field& f, const EvalPoints& pts);
EvalPoints points_from_json(const Field& f, const json& j, std::uint32_t expected_r = 0);

json codespec_to_json(const CodeSpec& s);
CodeSpec codespec_from_json(const json& j);

json erasure_to_json(const ErasurePattern& e);
ErasurePattern erasure_from_json(const json& j);

json polytuple_to_json(const PolyTuple& t);
PolyTuple polytuple_from_json(const json& j, const Field& f);

/// {"matrix": ...} or {"spec": ..., "points": ...} -> generator matrix.
Mat code_input_to_matrix(const json& j);

}  // namespace homds

#endif
