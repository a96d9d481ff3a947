#include "freeact/cli.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "freeact/corpus.hpp"
#include "freeact/error.hpp"

namespace freeact::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::budget: return "budget-exhausted";
    case Status::error: return "error";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::budget: return 2;
    case Status::error: return 1;
  }
  return 1;
}

namespace {

using io::to_json;

Status worst(Status a, Status b) {
  auto rank = [](Status s) { return s == Status::error ? 2 : s == Status::budget ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

const json& need(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::schema_mismatch, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int int_param(const json& doc, const char* key, int fallback) {
  if (!doc.is_object() || !doc.contains(key)) return fallback;
  if (!doc.at(key).is_number_integer()) {
    throw Error(ErrorKind::schema_mismatch, std::string("\"") + key + "\" must be an integer");
  }
  return doc.at(key).get<int>();
}

Scalar epsilon_of(const json& doc, const Options& opt) {
  if (opt.epsilon) return *opt.epsilon;
  if (doc.is_object() && doc.contains("epsilon")) return io::scalar_from(doc.at("epsilon"), io::radicand_of(doc));
  throw Error(ErrorKind::precondition_violated, "epsilon required (--epsilon or \"epsilon\")");
}

json index_json(const SubgroupIndex& i) { return i.finite ? json(i.value) : json("infinite"); }

// ---- stallings

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    const Letter x = static_cast<Letter>(1 + rng() % static_cast<unsigned>(rank)) * (rng() % 2 ? 1 : -1);
    if (!letters.empty() && letters.back() == -x) continue;
    letters.push_back(x);
  }
  return Word::reduce(letters);
}

json hall_checks(const HallCheck& c) {
  return {{"finite_index", c.finite_index}, {"within_bound", c.within_bound}, {"embeds", c.embeds},
          {"euler_count", c.euler_count},   {"free_product_basis", c.free_product_basis}, {"excludes", c.excludes}};
}

Outcome stallings_command(const std::string& cmd, const json& doc, const Options& opt) {
  if (cmd == "hall-batch") {
    const int count = int_param(doc, "count", 200);
    const int max_rank = int_param(doc, "max_rank", 3);
    const int max_gens = int_param(doc, "max_generators", 3);
    const int max_len = int_param(doc, "max_length", 6);
    std::mt19937_64 rng(opt.seed);
    int verified = 0;
    json failures = json::array();
    for (int t = 0; t < count; ++t) {
      int n = 2;
      std::vector<Word> gens;
      StallingsGraph h(n);
      Word g;
      do {
        n = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, max_rank - 1)));
        gens.clear();
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_gens));
        for (int i = 0; i < k; ++i) gens.push_back(random_word(rng, n, max_len));
        h = build_core(gens, n);
        g = random_word(rng, n, max_len);
      } while (membership(h, g));
      const HallWitness w = hall_completion(h, g);
      const HallCheck c = verify_hall_witness(h, w);
      if (c.ok()) {
        ++verified;
      } else {
        failures.push_back({{"rank", n}, {"generators", to_json(gens)}, {"avoid", g.str()}, {"checks", hall_checks(c)}});
      }
    }
    return {{{"instances", count}, {"verified", verified}, {"failures", failures}},
            failures.empty() ? Status::ok : Status::error};
  }
  const StallingsGraph h = io::subgroup_from(doc);
  const int rank = h.rank();
  if (cmd == "core") return {{{"graph", to_json(h)}, {"subgroup_rank", h.subgroup_rank()}}};
  if (cmd == "member") {
    json out = {{"results", json::array()}};
    std::vector<Word> words = doc.contains("words") ? io::words_from(doc.at("words"), rank)
                                                    : std::vector<Word>{io::word_from(need(doc, "word"), rank)};
    for (const Word& w : words) out["results"].push_back({{"word", w.str()}, {"member", membership(h, w)}});
    return {out};
  }
  if (cmd == "index") return {{{"index", index_json(index(h))}}};
  if (cmd == "meet") {
    const StallingsGraph other = build_core(io::words_from(need(doc, "other"), rank), rank);
    const StallingsGraph m = fiber_product(h, other);
    return {{{"graph", to_json(m)}, {"index", index_json(index(m))}}};
  }
  if (cmd == "conj") {
    const Word g = io::word_from(need(doc, "by"), rank);
    return {{{"by", g.str()}, {"graph", to_json(conjugate(h, g))}}};
  }
  if (cmd == "hall") {
    std::optional<Word> g;
    if (doc.contains("avoid")) g = io::word_from(doc.at("avoid"), rank);
    const HallWitness w = hall_completion(h, g, int_param(doc, "vertex_bound", 0));
    const HallCheck c = verify_hall_witness(h, w);
    return {{{"witness", to_json(w)}, {"checks", hall_checks(c)}, {"verified", c.ok()}},
            c.ok() ? Status::ok : Status::error};
  }
  throw Error(ErrorKind::schema_mismatch, "unknown command stallings " + cmd);
}

// ---- cvn

StallingsGraph subgroup_in(const json& doc, int rank) {
  return build_core(io::words_from(need(doc, "subgroup"), rank), rank);
}

json path_json(const MarkedMetricGraph& t, const std::vector<int>& p) { return t.path_str(p); }

json intersection_json(const MarkedMetricGraph& t, const TranslateIntersection& r) {
  return {{"kind", to_string(r.kind)}, {"point", path_json(t, r.point)}, {"arc", path_json(t, r.arc)},
          {"arc_length", r.arc_length.str()}};
}

Outcome cvn_command(const std::string& cmd, const json& doc, const Options& opt) {
  const MarkedMetricGraph t = io::metric_graph_from(doc);
  if (cmd == "len") {
    std::vector<Word> words = doc.contains("words") ? io::words_from(doc.at("words"), t.rank())
                                                    : std::vector<Word>{io::word_from(need(doc, "word"), t.rank())};
    json rows = json::array();
    for (const Word& w : words) {
      rows.push_back({{"word", w.str()},
                      {"length", translation_length(t, w).str()},
                      {"axis", path_json(t, cyclically_tighten(t.path_of(w)))}});
    }
    return {{{"lengths", rows}}};
  }
  if (cmd == "vol") return {{{"volume", volume(t).str()}, {"bbt_constant", bbt_constant(t).str()}}};
  if (cmd == "minsub") {
    const MetricCoreGraph c = minimal_subtree(t, subgroup_in(doc, t.rank()));
    json edges = json::array();
    for (const auto& e : c.edges) {
      edges.push_back({{"from", e.from}, {"to", e.to}, {"base_edge", t.edges()[e.base_edge].id}, {"length", e.length.str()}});
    }
    return {{{"vertices", c.vertex_count},
             {"projection", c.projection},
             {"edges", edges},
             {"volume", c.volume.str()},
             {"surjective", c.surjective},
             {"covering", c.covering},
             {"degree", c.degree}}};
  }
  if (cmd == "omega") {
    const Scalar eps = epsilon_of(doc, opt);
    return {{{"epsilon", eps.str()}, {"max_word", opt.max_word}, {"words", to_json(omega_epsilon(t, eps, opt.max_word))}}};
  }
  if (cmd == "transverse") {
    const TransverseReport r = transverse_family_report(t, subgroup_in(doc, t.rank()), opt.max_word, opt.radius);
    json entries = json::array();
    for (const auto& e : r.entries) entries.push_back({{"g", e.g.str()}, {"intersection", intersection_json(t, e.result)}});
    const bool open = r.verdict == TransverseVerdict::transverse_up_to_budget || r.verdict == TransverseVerdict::inconclusive;
    return {{{"verdict", to_string(r.verdict)}, {"entries", entries}}, open ? Status::budget : Status::ok};
  }
  throw Error(ErrorKind::schema_mismatch, "unknown command cvn " + cmd);
}

// ---- soi

StallingsGraph subgroup_for(const SoISystem& s, const json& doc) {
  int rank = 1;
  for (const PartialIsometry& g : s.generators()) {
    if (g.label) rank = std::max(rank, *g.label);
  }
  rank = int_param(doc, "rank", rank);
  return build_core(io::words_from(need(doc, "subgroup"), rank), rank);
}

json orbit_json(const OrbitResult& o) {
  json pts = json::array();
  for (const Scalar& p : o.points) pts.push_back(p.str());
  return {{"closed", o.closed}, {"size", o.points.size()}, {"explored", o.explored}, {"points", pts}};
}

json families_json(const FamilyReport& f) {
  json fams = json::array();
  for (const OrbitFamily& fam : f.families) {
    json ivs = json::array();
    for (const Interval& i : fam.intervals) ivs.push_back(to_json(i));
    fams.push_back({{"intervals", ivs}, {"measure", fam.measure.str()}, {"cardinality", fam.cardinality}});
  }
  json unresolved = json::array();
  for (const Interval& i : f.unresolved) unresolved.push_back(to_json(i));
  return {{"status", f.complete ? "complete" : "partial"},
          {"singular_truncated", f.singular_truncated},
          {"e", f.e.str()},
          {"families", fams},
          {"unresolved", unresolved}};
}

json independence_json(const IndependenceResult& r) {
  json out = {{"ok", r.ok}, {"max_word", r.max_word}, {"compositions", r.compositions}};
  if (!r.ok) {
    out["violation"] = r.violation.str();
    out["fixed_arc"] = to_json(r.fixed_arc);
  }
  return out;
}

Outcome soi_command(const std::string& cmd, const json& doc, const Options& opt) {
  const SoISystem s = io::system_from(doc);
  const unsigned long d = io::radicand_of(doc);
  auto scalar = [&](const char* key) { return io::scalar_from(need(doc, key), d); };
  auto interval = [&](const char* key) { return io::interval_from(need(doc, key), d); };
  if (cmd == "orbit") {
    const OrbitResult o = orbit(s, scalar("x"), opt.budget);
    json out = orbit_json(o);
    out["x"] = scalar("x").str();
    return {out, o.closed ? Status::ok : Status::budget};
  }
  if (cmd == "families") {
    const FamilyReport f = finite_orbit_families(s, opt.budget);
    json out = families_json(f);
    json singular = json::array();
    for (const Scalar& c : singular_points(s)) singular.push_back(c.str());
    out["singular_points"] = singular;
    return {out, f.complete ? Status::ok : Status::budget};
  }
  if (cmd == "glp") {
    const GlpReport r = glp_report(s, opt.max_word, opt.budget);
    json out = {{"m", r.m.str()},
                {"d", r.d.str()},
                {"e", r.e.str()},
                {"residual", r.residual.str()},
                {"independence", independence_json(r.independence)},
                {"families", families_json(r.families)},
                {"verdict", to_string(r.verdict)}};
    Status st = Status::ok;
    if (r.verdict == GlpVerdict::identity_violated) st = Status::error;
    if (r.verdict == GlpVerdict::inconclusive) st = Status::budget;
    return {out, st};
  }
  if (cmd == "grow") {
    const GrowthReport r = grow_forest(s, io::multi_interval_from(need(doc, "f0"), d), int_param(doc, "steps", 8));
    json stages = json::array();
    for (const ForestStage& st : r.stages) {
      stages.push_back({{"forest", to_json(st.forest)}, {"m", st.m.str()}, {"d", st.d.str()}, {"residual", st.residual.str()}});
    }
    return {{{"monotone", r.monotone}, {"stages", stages}}, r.monotone ? Status::ok : Status::error};
  }
  if (cmd == "cover") {
    const CoverReport r = ae_support_check(s, io::multi_interval_from(need(doc, "f_eps"), d), interval("interval"),
                                           scalar("delta"), opt.max_word);
    return {{{"found", r.found}, {"words", to_json(r.words)}, {"uncovered", r.uncovered.str()},
             {"images", r.images}, {"max_word", r.max_word}},
            r.found ? Status::ok : Status::budget};
  }
  if (cmd == "indecomp") {
    const ChainReport r = indecomposability_search(s, interval("I"), interval("J"), int_param(doc, "r_max", 8), opt.max_word);
    json arcs = json::array(), overlaps = json::array();
    for (const Interval& a : r.arcs) arcs.push_back(to_json(a));
    for (const Interval& a : r.overlaps) overlaps.push_back(to_json(a));
    return {{{"found", r.found}, {"words", to_json(r.words)}, {"arcs", arcs}, {"overlaps", overlaps},
             {"arcs_examined", r.arcs_examined}},
            r.found ? Status::ok : Status::budget};
  }
  if (cmd == "sub-orbit") {
    const OrbitResult o = subgroup_constrained_orbit(s, subgroup_for(s, doc), scalar("x"), opt.budget);
    return {orbit_json(o), o.closed ? Status::ok : Status::budget};
  }
  if (cmd == "saturate") {
    const SaturationReport r = subgroup_saturation(s, subgroup_for(s, doc), interval("interval"), opt.max_word,
                                                   int_param(doc, "steps", 10));
    json measures = json::array();
    for (const Scalar& m : r.measures) measures.push_back(m.str());
    return {{{"saturated", r.saturated}, {"y", to_json(r.y)}, {"passes", r.passes}, {"elements", r.elements},
             {"measures", measures}},
            r.saturated ? Status::ok : Status::budget};
  }
  if (cmd == "discrete") {
    std::vector<Scalar> samples;
    for (const json& x : need(doc, "samples")) samples.push_back(io::scalar_from(x, d));
    std::optional<Scalar> threshold;
    if (doc.contains("threshold")) threshold = scalar("threshold");
    const DiscretenessReport r = discreteness_report(s, subgroup_for(s, doc), samples, opt.budget, threshold);
    json rows = json::array(), growth = json::array();
    for (const auto& x : r.samples) {
      rows.push_back({{"x", x.x.str()}, {"size", x.size}, {"closed", x.closed},
                      {"min_gap", x.min_gap ? json(x.min_gap->str()) : json(nullptr)}});
    }
    for (const auto& g : r.growth) growth.push_back({{"budget", g.budget}, {"sizes", g.sizes}});
    return {{{"verdict", to_string(r.verdict)},
             {"heuristic", true},
             {"min_gap", r.min_gap ? json(r.min_gap->str()) : json(nullptr)},
             {"threshold", r.threshold.str()},
             {"samples", rows},
             {"growth", growth}},
            r.verdict == DiscretenessVerdict::inconclusive ? Status::budget : Status::ok};
  }
  throw Error(ErrorKind::schema_mismatch, "unknown command soi " + cmd);
}

// ---- measure, lam

Outcome measure_command(const std::string& cmd, const json& doc, const Options&) {
  const unsigned long d = io::radicand_of(doc);
  if (cmd == "check") {
    const SoISystem s = io::system_from(need(doc, "system"));
    const InvarianceResult r = invariance_check(s, io::measure_from(need(doc, "measure"), d));
    json out = {{"invariant", r.invariant}};
    if (r.violation) {
      out["violation"] = {{"generator", r.violation->generator + 1},
                          {"piece", to_json(r.violation->piece)},
                          {"transported", r.violation->transported.str()},
                          {"actual", r.violation->actual.str()}};
    }
    return {out};
  }
  if (cmd == "combine") {
    const LengthMeasure mu = combine(io::scalar_from(need(doc, "c1"), d), io::measure_from(need(doc, "mu1"), d),
                                     io::scalar_from(need(doc, "c2"), d), io::measure_from(need(doc, "mu2"), d));
    return {{{"measure", to_json(mu)}}};
  }
  throw Error(ErrorKind::schema_mismatch, "unknown command measure " + cmd);
}

Outcome lam_command(const std::string& cmd, const json& doc, const Options& opt) {
  if (cmd == "carries") {
    const StallingsGraph h = io::subgroup_from(doc);
    const RationalLeaf l = io::leaf_from(need(doc, "leaf"));
    return {{{"leaf", to_json(l)}, {"carried", carries(h, l)}}};
  }
  if (cmd == "scan") {
    const MarkedMetricGraph t = io::metric_graph_from(need(doc, "tree"));
    const StallingsGraph h = subgroup_in(doc, t.rank());
    const CarrierScan r = carrier_scan(t, h, epsilon_of(doc, opt), opt.max_word, opt.max_translate);
    json gen = json::array(), car = json::array(), tr = json::array();
    for (const auto& l : r.generating) gen.push_back(to_json(l));
    for (const auto& l : r.carried) car.push_back(to_json(l));
    for (const auto& [w, l] : r.carried_translates) tr.push_back({{"translate", w.str()}, {"leaf", to_json(l)}});
    return {{{"verdict", r.found() ? "carried leaves found" : "none-up-to-budget"},
             {"finite_index", r.finite_index},
             {"annotation", r.annotation},
             {"generating_leaves", gen},
             {"carried", car},
             {"carried_translates", tr},
             {"max_translate", r.max_translate}},
            r.found() ? Status::ok : Status::budget};
  }
  throw Error(ErrorKind::schema_mismatch, "unknown command lam " + cmd);
}

}  // namespace

std::vector<std::string> commands() {
  return {"stallings core", "stallings member", "stallings index", "stallings meet", "stallings conj",
          "stallings hall", "stallings hall-batch", "cvn len", "cvn vol", "cvn minsub", "cvn omega",
          "cvn transverse", "soi orbit", "soi families", "soi glp", "soi grow", "soi cover", "soi indecomp",
          "soi sub-orbit", "soi saturate", "soi discrete", "measure check", "measure combine", "lam carries",
          "lam scan"};
}

Outcome run_command(const std::string& group, const std::string& command, const json& doc, const Options& opt) {
  if (group == "stallings") return stallings_command(command, doc, opt);
  if (group == "cvn") return cvn_command(command, doc, opt);
  if (group == "soi") return soi_command(command == "subgroup" ? "sub-orbit" : command, doc, opt);
  if (group == "measure") return measure_command(command, doc, opt);
  if (group == "lam") return lam_command(command, doc, opt);
  throw Error(ErrorKind::schema_mismatch, "unknown command group " + group);
}

namespace {

json budgets_json(const Options& opt) {
  return {{"budget", opt.budget},
          {"max_word", opt.max_word},
          {"radius", opt.radius},
          {"max_translate", opt.max_translate},
          {"epsilon", opt.epsilon ? json(opt.epsilon->str()) : json(nullptr)},
          {"seed", opt.seed}};
}

}  // namespace

json make_report(const std::string& command, const Options& opt, const Outcome& outcome) {
  return {{"schema", "freeact.report/1"},
          {"command", command},
          {"status", to_string(outcome.status)},
          {"budgets", budgets_json(opt)},
          {"result", outcome.result}};
}

json error_report(const std::string& command, const Options& opt, const Error& e) {
  return {{"schema", "freeact.report/1"},
          {"command", command},
          {"status", to_string(Status::error)},
          {"budgets", budgets_json(opt)},
          {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

namespace {

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_value = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto flat = [](const json& v) {
    if (!v.is_array()) return false;
    for (const json& x : v) {
      if (x.is_object()) return false;
      if (x.is_array() && !x.empty() && !x[0].is_primitive()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << k << ": " << inline_value(v) << "\n";
      } else if (flat(v)) {
        out << pad << k << ": " << v.dump() << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const json& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render(out, v, indent + 2);
      } else {
        out << pad << "- " << (v.is_primitive() ? inline_value(v) : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << inline_value(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

namespace {

json resolve(const json& v, const std::map<std::string, json>& results) {
  if (v.is_object()) {
    if (v.size() == 1 && v.contains("$ref")) {
      const std::string ref = v.at("$ref").get<std::string>();
      const std::size_t slash = ref.find('/');
      const std::string step = ref.substr(0, slash);
      const auto it = results.find(step);
      if (it == results.end()) throw Error(ErrorKind::schema_mismatch, "unresolved step reference " + ref);
      if (slash == std::string::npos) return it->second;
      const json::json_pointer ptr(ref.substr(slash));
      if (!it->second.contains(ptr)) throw Error(ErrorKind::schema_mismatch, "unresolved step reference " + ref);
      return it->second.at(ptr);
    }
    json out = json::object();
    for (const auto& [k, x] : v.items()) out[k] = resolve(x, results);
    return out;
  }
  if (v.is_array()) {
    json out = json::array();
    for (const json& x : v) out.push_back(resolve(x, results));
    return out;
  }
  return v;
}

Options step_options(const json& step, Options opt) {
  if (!step.contains("flags")) return opt;
  const json& f = step.at("flags");
  opt.budget = int_param(f, "budget", opt.budget);
  opt.max_word = int_param(f, "max_word", opt.max_word);
  opt.radius = int_param(f, "radius", opt.radius);
  opt.max_translate = int_param(f, "max_translate", opt.max_translate);
  if (f.contains("epsilon")) opt.epsilon = io::scalar_from(f.at("epsilon"));
  return opt;
}

}  // namespace

Outcome run_scenario(const json& scenario, const Options& base) {
  Options opt = base;
  if (scenario.contains("seed") && base.seed == Options{}.seed) opt.seed = scenario.at("seed").get<unsigned long>();
  std::map<std::string, json> results;
  json steps = json::array();
  Status overall = Status::ok;
  int failed = 0;
  for (const json& step : need(scenario, "steps")) {
    const std::string id = need(step, "id").get<std::string>();
    const std::string op = need(step, "op").get<std::string>();
    const std::size_t dot = op.find('.');
    if (dot == std::string::npos) throw Error(ErrorKind::schema_mismatch, "step op must be group.command: " + op);
    const Options so = step_options(step, opt);
    json entry = {{"id", id}, {"op", op}};
    Outcome out;
    try {
      const json args = resolve(step.value("args", json::object()), results);
      out = run_command(op.substr(0, dot), op.substr(dot + 1), args, so);
      entry["result"] = out.result;
    } catch (const Error& e) {
      out.status = Status::error;
      entry["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    }
    results[id] = entry.value("result", json());
    json diffs = json::array();
    if (step.contains("expect_status")) {
      const std::string want = step.at("expect_status").get<std::string>();
      if (want != to_string(out.status)) {
        diffs.push_back({{"pointer", "status"}, {"expected", want}, {"actual", to_string(out.status)}});
      }
    } else if (out.status == Status::error) {
      diffs.push_back({{"pointer", "status"}, {"expected", "ok"}, {"actual", to_string(out.status)}});
    } else if (out.status == Status::budget) {
      overall = worst(overall, Status::budget);
    }
    if (step.contains("expect") && entry.contains("result")) {
      for (const auto& [ptr, want] : step.at("expect").items()) {
        const json::json_pointer p(ptr);
        const json got = entry["result"].contains(p) ? entry["result"].at(p) : json(nullptr);
        if (got != want) diffs.push_back({{"pointer", ptr}, {"expected", want}, {"actual", got}});
      }
    }
    entry["status"] = to_string(out.status);
    entry["assertions"] = diffs.empty() ? "pass" : "fail";
    if (!diffs.empty()) {
      entry["diff"] = diffs;
      ++failed;
      overall = Status::error;
    }
    steps.push_back(std::move(entry));
  }
  return {{{"scenario", scenario.value("name", std::string())},
           {"seed", opt.seed},
           {"steps_run", steps.size()},
           {"assertions_failed", failed},
           {"steps", steps}},
          overall};
}

}  // namespace freeact::cli
