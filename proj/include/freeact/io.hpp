#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "freeact/cvn.hpp"
#include "freeact/laminations.hpp"
#include "freeact/measures.hpp"
#include "freeact/soi.hpp"
#include "freeact/stallings.hpp"

namespace freeact::io {

using json = nlohmann::ordered_json;

// parse_error carrying "line L, column C".
json parse_document(std::string_view text);
// An optional "schema" field must name version 1.
void check_schema_version(const json& doc);
json read_document(const std::string& path);

// Scalars are JSON strings only. With a radicand in force every irrational
// scalar must use it (field_mismatch).
Scalar scalar_from(const json& j, unsigned long radicand = 0);
Word word_from(const json& j, int rank = kMaxRank);
std::vector<Word> words_from(const json& j, int rank);
int rank_from(const json& doc);

// {"rank", "generators"}
StallingsGraph subgroup_from(const json& doc);
// {"rank", "vertices", "edges":[{"id","ends":[u,v],"len"}], "spanning_tree":[ids],
//  "marking":{"edge_id":"word"}}, or {"rose":["1","1/2"]}.
MarkedMetricGraph metric_graph_from(const json& doc);
// {"D", "forest":[[lo,hi]...], "generators":[{"dom":[lo,hi], "orient", "offset" or "to", "label"}]},
// or {"corpus":"golden"}.
SoISystem system_from(const json& doc);
Interval interval_from(const json& j, unsigned long radicand = 0);
MultiInterval multi_interval_from(const json& j, unsigned long radicand = 0);
// {"pieces":[{"from","to","density"}]}
LengthMeasure measure_from(const json& doc, unsigned long radicand = 0);
// {"prefix","period"}
BoundaryRay ray_from(const json& j);
// {"rays":[ray, ray]} or {"periodic":"word"}
RationalLeaf leaf_from(const json& j);

unsigned long radicand_of(const json& doc);

json to_json(const Scalar& s);
json to_json(const Word& w);
json to_json(const std::vector<Word>& ws);
json to_json(const Interval& i);
json to_json(const MultiInterval& m);
json to_json(const StallingsGraph& g);
json to_json(const HallWitness& w);
json to_json(const BoundaryRay& r);
json to_json(const RationalLeaf& l);
json to_json(const LengthMeasure& mu);

}  // namespace freeact::io
