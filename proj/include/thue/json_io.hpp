#pragma once

#include <string>

#include <json.hpp>

#include "thue/colouring.hpp"
#include "thue/construct.hpp"
#include "thue/graph.hpp"
#include "thue/lll.hpp"
#include "thue/solver.hpp"

namespace thue {

using nlohmann::json;

// Graph JSON: {"vertices":[0..n-1],"edges":[[u,v],...]}; edge ids are the
// index into the edges array. Parse errors throw ParseError.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Colouring JSON: {"vertex_colours":{"0":1,...},"edge_colours":{"0":2,...}}.
// Colour values may be non-negative integers or strings; distinct strings are
// interned to fresh integer identifiers above every integer used (two-pass,
// first-appearance order over vertices then edges). Missing elements parse to
// uncoloured and are rejected by the checkers.
json colouring_to_json(const TotalColouring& c);
TotalColouring colouring_from_json(const json& j, const Graph& g);

// Sequence JSON: array of colour identifiers (integers or strings).
json sequence_to_json(const ColourSequence& s);
ColourSequence sequence_from_json(const json& j);

json witness_to_json(const Witness& w);

json bounds_to_json(const BoundsReport& r);
std::string bounds_to_csv(const BoundsReport& r);

json lll_report_to_json(const LllReport& r);
std::string lll_report_to_csv(const LllReport& r);

// {"vertex_lists":{"0":[...]},"edge_lists":{"0":[...]}}
ListAssignment list_assignment_from_json(const json& j, const Graph& g);

json solve_result_to_json(const SolveResult& r, Mode mode);

} // namespace thue
