#include "freeact/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "freeact/corpus.hpp"
#include "freeact/error.hpp"

namespace freeact::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::schema_mismatch, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error, position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  check_schema_version(doc);
  return doc;
}

void check_schema_version(const json& doc) {
  if (!doc.is_object() || !doc.contains("schema")) return;
  const json& tag = doc.at("schema");
  const std::string s = tag.is_string() ? tag.get<std::string>() : tag.dump();
  const auto slash = s.rfind('/');
  if (!tag.is_string() || slash == std::string::npos || s.substr(slash + 1) != "1") {
    schema("unsupported schema version " + s + " (expected .../1)");
  }
}

json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

unsigned long radicand_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("D")) return 0;
  const int d = int_from(doc.at("D"), "D");
  if (d < 1 || !is_square_free(static_cast<unsigned long>(d))) schema("D must be a square-free positive integer");
  return static_cast<unsigned long>(d);
}

Scalar scalar_from(const json& j, unsigned long radicand) {
  if (!j.is_string()) {
    throw Error(ErrorKind::malformed_scalar, "scalars must be JSON strings, got " + j.dump());
  }
  Scalar s = Scalar::parse(j.get<std::string>());
  if (radicand != 0 && !s.is_rational() && s.radicand() != radicand) {
    throw Error(ErrorKind::field_mismatch, "scalar " + s.str() + " is not in Q(sqrt" + std::to_string(radicand) + ")");
  }
  return s;
}

Word word_from(const json& j, int rank) {
  if (!j.is_string()) throw Error(ErrorKind::malformed_word, "words must be JSON strings, got " + j.dump());
  return Word::parse(j.get<std::string>(), rank);
}

std::vector<Word> words_from(const json& j, int rank) {
  if (!j.is_array()) schema("expected an array of words");
  std::vector<Word> out;
  for (const json& w : j) out.push_back(word_from(w, rank));
  return out;
}

int rank_from(const json& doc) {
  const int rank = int_from(field(doc, "rank"), "rank");
  if (rank < 1 || rank > kMaxRank) schema("rank must lie in 1..26");
  return rank;
}

StallingsGraph subgroup_from(const json& doc) {
  const int rank = rank_from(doc);
  return build_core(words_from(field(doc, "generators"), rank), rank);
}

MarkedMetricGraph metric_graph_from(const json& doc) {
  const unsigned long d = radicand_of(doc);
  if (doc.contains("stabilizers")) {
    throw Error(ErrorKind::invalid_graph, "only free simplicial points are supported (no stabilizers)");
  }
  if (doc.is_object() && doc.contains("rose")) {
    std::vector<Scalar> lengths;
    for (const json& l : doc.at("rose")) lengths.push_back(scalar_from(l, d));
    return MarkedMetricGraph::rose(lengths);
  }
  const int rank = rank_from(doc);
  const int vertices = int_from(field(doc, "vertices"), "vertices");
  std::vector<MetricEdge> edges;
  std::map<std::string, int> ids;
  for (const json& e : field(doc, "edges")) {
    const std::string id = field(e, "id").is_string() ? e.at("id").get<std::string>() : e.at("id").dump();
    const json& ends = field(e, "ends");
    if (!ends.is_array() || ends.size() != 2) schema("edge ends must be [u, v]");
    if (!ids.emplace(id, static_cast<int>(edges.size())).second) schema("duplicate edge id " + id);
    edges.push_back({id, int_from(ends[0], "edge end"), int_from(ends[1], "edge end"), scalar_from(field(e, "len"), d)});
  }
  auto edge_index = [&](const json& j) {
    const std::string id = j.is_string() ? j.get<std::string>() : j.dump();
    const auto it = ids.find(id);
    if (it == ids.end()) schema("unknown edge id " + id);
    return it->second;
  };
  std::vector<int> tree;
  for (const json& t : field(doc, "spanning_tree")) tree.push_back(edge_index(t));
  std::vector<std::pair<int, Word>> marking;
  for (const auto& [key, value] : field(doc, "marking").items()) {
    marking.emplace_back(edge_index(json(key)), word_from(value, rank));
  }
  const int base = doc.contains("basepoint") ? int_from(doc.at("basepoint"), "basepoint") : 0;
  return MarkedMetricGraph(rank, vertices, std::move(edges), std::move(tree), std::move(marking), base);
}

Interval interval_from(const json& j, unsigned long radicand) {
  if (!j.is_array() || j.size() != 2) schema("intervals are [lo, hi], got " + j.dump());
  Interval i{scalar_from(j[0], radicand), scalar_from(j[1], radicand)};
  if (i.hi < i.lo) throw Error(ErrorKind::precondition_violated, "interval " + i.str() + " is reversed");
  return i;
}

MultiInterval multi_interval_from(const json& j, unsigned long radicand) {
  if (!j.is_array()) schema("expected a list of intervals");
  std::vector<Interval> pieces;
  for (const json& p : j) pieces.push_back(interval_from(p, radicand));
  return MultiInterval(std::move(pieces));
}

SoISystem system_from(const json& doc) {
  if (doc.is_object() && doc.contains("corpus")) return corpus::by_name(field(doc, "corpus").get<std::string>());
  const unsigned long d = radicand_of(doc);
  std::vector<Interval> comps;
  for (const json& c : field(doc, "forest")) comps.push_back(interval_from(c, d));
  std::vector<PartialIsometry> gens;
  for (const json& g : field(doc, "generators")) {
    PartialIsometry p;
    p.dom = interval_from(field(g, "dom"), d);
    p.orientation = g.contains("orient") ? int_from(g.at("orient"), "orient") : 1;
    if (p.orientation != 1 && p.orientation != -1) schema("orient must be 1 or -1");
    std::optional<Scalar> to;
    if (g.contains("to")) to = scalar_from(g.at("to"), d);
    if (g.contains("offset")) {
      p.offset = scalar_from(g.at("offset"), d);
      if (to && p.apply(p.dom.lo) != *to) schema("generator \"to\" disagrees with its offset");
    } else if (to) {
      p.offset = *to - (p.orientation > 0 ? p.dom.lo : -p.dom.lo);
    } else {
      schema("generator needs \"offset\" or \"to\"");
    }
    if (g.contains("label")) {
      const Word l = word_from(g.at("label"));
      if (l.size() != 1 || l[0] < 0) schema("labels are single basis letters");
      p.label = l[0];
    }
    gens.push_back(std::move(p));
  }
  return SoISystem(MultiInterval::forest(std::move(comps)), std::move(gens));
}

LengthMeasure measure_from(const json& doc, unsigned long radicand) {
  std::vector<DensityPiece> pieces;
  for (const json& p : field(doc, "pieces")) {
    pieces.push_back({{scalar_from(field(p, "from"), radicand), scalar_from(field(p, "to"), radicand)},
                      scalar_from(field(p, "density"), radicand)});
  }
  return LengthMeasure(std::move(pieces));
}

BoundaryRay ray_from(const json& j) {
  const Word u = j.contains("prefix") ? word_from(j.at("prefix")) : Word();
  return BoundaryRay::make(u, word_from(field(j, "period")));
}

RationalLeaf leaf_from(const json& j) {
  if (j.is_object() && j.contains("periodic")) return periodic_leaf(word_from(j.at("periodic")));
  const json& rays = field(j, "rays");
  if (!rays.is_array() || rays.size() != 2) schema("a leaf has exactly two rays");
  return {ray_from(rays[0]), ray_from(rays[1])};
}

json to_json(const Scalar& s) { return s.str(); }
json to_json(const Word& w) { return w.str(); }

json to_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

json to_json(const Interval& i) { return json::array({i.lo.str(), i.hi.str()}); }

json to_json(const MultiInterval& m) {
  json out = json::array();
  for (const Interval& i : m.components()) out.push_back(to_json(i));
  return out;
}

json to_json(const StallingsGraph& g) {
  json edges = json::array();
  for (const LabeledEdge& e : g.edges()) {
    edges.push_back(json::array({e.from, letter_char(e.label), e.to}));
  }
  return {{"rank", g.rank()}, {"vertices", g.vertex_count()}, {"edges", edges}, {"basis", to_json(g.basis())}};
}

json to_json(const HallWitness& w) {
  json out = {{"cover", to_json(w.cover)},
              {"index", w.cover.vertex_count()},
              {"vertex_map", w.vertex_map},
              {"edge_map", w.edge_map},
              {"subgroup_basis", to_json(w.subgroup_basis)},
              {"complement_basis", to_json(w.complement_basis)},
              {"vertex_bound", w.vertex_bound}};
  out["excluded"] = w.excluded ? json(w.excluded->str()) : json(nullptr);
  return out;
}

json to_json(const BoundaryRay& r) { return {{"prefix", r.prefix().str()}, {"period", r.period().str()}}; }

json to_json(const RationalLeaf& l) { return {{"rays", json::array({to_json(l.first()), to_json(l.second())})}}; }

json to_json(const LengthMeasure& mu) {
  json pieces = json::array();
  for (const DensityPiece& p : mu.pieces()) {
    pieces.push_back({{"from", p.span.lo.str()}, {"to", p.span.hi.str()}, {"density", p.density.str()}});
  }
  return {{"pieces", pieces}};
}

}  // namespace freeact::io
