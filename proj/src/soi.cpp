#include "freeact/soi.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "freeact/error.hpp"

namespace freeact {

std::string Interval::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval out{max(a.lo, b.lo), min(a.hi, b.hi)};
  if (out.hi < out.lo) return std::nullopt;
  return out;
}

bool overlaps(const Interval& a, const Interval& b) {
  return max(a.lo, b.lo) < min(a.hi, b.hi);
}

namespace {

std::vector<Interval> merge_sorted(std::vector<Interval> pieces, bool keep_points) {
  std::sort(pieces.begin(), pieces.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  std::vector<Interval> out;
  for (Interval& p : pieces) {
    if (p.hi < p.lo) continue;
    if (!keep_points && p.degenerate()) continue;
    if (!out.empty() && p.lo <= out.back().hi) {
      if (out.back().hi < p.hi) out.back().hi = p.hi;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

MultiInterval::MultiInterval(std::vector<Interval> pieces)
    : pieces_(merge_sorted(std::move(pieces), false)) {}

MultiInterval MultiInterval::forest(std::vector<Interval> components) {
  std::sort(components.begin(), components.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].hi < components[i].lo) {
      throw Error(ErrorKind::invalid_system, "component " + components[i].str() + " is reversed");
    }
    if (i > 0 && !(components[i - 1].hi < components[i].lo)) {
      throw Error(ErrorKind::invalid_system, "components " + components[i - 1].str() + " and " +
                                                 components[i].str() + " are not disjoint");
    }
  }
  MultiInterval m;
  m.pieces_ = std::move(components);
  return m;
}

Scalar MultiInterval::measure() const {
  Scalar total;
  for (const Interval& p : pieces_) total += p.length();
  return total;
}

int MultiInterval::component_of(const Scalar& x) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].contains(x)) return static_cast<int>(i);
  }
  return -1;
}

bool MultiInterval::contains(const Interval& i) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const Interval& p) { return p.contains(i); });
}

bool MultiInterval::contains(const MultiInterval& other) const {
  return std::all_of(other.pieces_.begin(), other.pieces_.end(),
                     [&](const Interval& p) { return contains(p); });
}

MultiInterval MultiInterval::unite(const MultiInterval& other) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return MultiInterval(std::move(all));
}

MultiInterval MultiInterval::intersect(const MultiInterval& other) const {
  std::vector<Interval> out;
  for (const Interval& a : pieces_) {
    for (const Interval& b : other.pieces_) {
      if (overlaps(a, b)) out.push_back({max(a.lo, b.lo), min(a.hi, b.hi)});
    }
  }
  return MultiInterval(std::move(out));
}

MultiInterval MultiInterval::subtract(const MultiInterval& other) const {
  std::vector<Interval> out;
  for (const Interval& a : pieces_) {
    Scalar cursor = a.lo;
    for (const Interval& b : other.pieces_) {
      if (!overlaps(a, b)) continue;
      if (cursor < b.lo) out.push_back({cursor, b.lo});
      if (cursor < b.hi) cursor = b.hi;
    }
    if (cursor < a.hi) out.push_back({cursor, a.hi});
  }
  return MultiInterval(std::move(out));
}

std::string MultiInterval::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) s += ", ";
    s += pieces_[i].str();
  }
  return s + "}";
}

Scalar PartialIsometry::apply(const Scalar& x) const {
  return orientation > 0 ? x + offset : offset - x;
}

Scalar PartialIsometry::apply_inverse(const Scalar& y) const {
  return orientation > 0 ? y - offset : offset - y;
}

Interval PartialIsometry::range() const {
  if (orientation > 0) return {dom.lo + offset, dom.hi + offset};
  return {offset - dom.hi, offset - dom.lo};
}

PartialIsometry PartialIsometry::inverse() const {
  return {range(), orientation, orientation > 0 ? -offset : offset, label ? std::optional<Letter>(-*label) : std::nullopt};
}

std::optional<Interval> PartialIsometry::image(const Interval& i) const {
  const std::optional<Interval> part = freeact::intersect(i, dom);
  if (!part) return std::nullopt;
  const Scalar a = apply(part->lo);
  const Scalar b = apply(part->hi);
  return orientation > 0 ? Interval{a, b} : Interval{b, a};
}

MultiInterval PartialIsometry::image(const MultiInterval& m) const {
  std::vector<Interval> out;
  for (const Interval& p : m.components()) {
    if (std::optional<Interval> im = image(p)) out.push_back(*im);
  }
  return MultiInterval(std::move(out));
}

std::optional<PartialIsometry> PartialIsometry::then(const PartialIsometry& g) const {
  const std::optional<Interval> mid = freeact::intersect(range(), g.dom);
  if (!mid) return std::nullopt;
  PartialIsometry out;
  out.dom = *inverse().image(*mid);
  out.orientation = orientation * g.orientation;
  out.offset = g.orientation > 0 ? offset + g.offset : g.offset - offset;
  return out;
}

SoISystem::SoISystem(MultiInterval forest, std::vector<PartialIsometry> generators)
    : forest_(std::move(forest)), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorKind::invalid_system, "system has no generators");
  std::set<Letter> labels;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const PartialIsometry& g = generators_[i];
    const std::string name = "generator " + std::to_string(i + 1);
    if (g.orientation != 1 && g.orientation != -1) {
      throw Error(ErrorKind::invalid_system, name + " has orientation other than +1/-1");
    }
    if (g.dom.hi < g.dom.lo) throw Error(ErrorKind::invalid_system, name + " has a reversed domain");
    if (!forest_.contains(g.dom)) {
      throw Error(ErrorKind::invalid_system, name + " domain " + g.dom.str() + " leaves the forest");
    }
    if (!forest_.contains(g.range())) {
      throw Error(ErrorKind::invalid_system, name + " range " + g.range().str() + " leaves the forest");
    }
    if (g.label) {
      if (*g.label < 1 || *g.label > kMaxRank) {
        throw Error(ErrorKind::invalid_system, name + " has an invalid label");
      }
      if (!labels.insert(*g.label).second) {
        throw Error(ErrorKind::invalid_system, name + " repeats a label");
      }
    }
  }
}

PartialIsometry SoISystem::step(Letter x) const {
  const PartialIsometry& g = generators_[(x < 0 ? -x : x) - 1];
  return x > 0 ? g : g.inverse();
}

std::optional<PartialIsometry> SoISystem::compose(const Word& w) const {
  if (w.empty()) {
    PartialIsometry id;
    id.dom = {forest_.components().front().lo, forest_.components().back().hi};
    return id;
  }
  std::optional<PartialIsometry> f = step(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0 && f;) f = f->then(step(w[i]));
  return f;
}

bool SoISystem::labeled() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const PartialIsometry& g) { return g.label.has_value(); });
}

int SoISystem::generator_for(Letter l) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].label == l) return static_cast<int>(i);
  }
  return -1;
}

Word SoISystem::to_group_word(const Word& w) const {
  std::vector<Letter> out;
  for (Letter x : w) {
    const PartialIsometry& g = generators_[(x < 0 ? -x : x) - 1];
    if (!g.label) throw Error(ErrorKind::missing_labels, "generator without a label");
    out.push_back(x > 0 ? *g.label : -*g.label);
  }
  return Word::reduce(out);
}

Scalar SoISystem::domain_sum() const {
  Scalar total;
  for (const PartialIsometry& g : generators_) total += g.dom.length();
  return total;
}

OrbitResult orbit(const SoISystem& s, const Scalar& x, int budget) {
  if (!s.forest().contains(x)) {
    throw Error(ErrorKind::out_of_support, "point " + x.str() + " lies outside the forest");
  }
  std::vector<Interval> ranges;
  for (const PartialIsometry& g : s.generators()) ranges.push_back(g.range());
  std::set<Scalar> seen{x};
  std::deque<Scalar> queue{x};
  OrbitResult out;
  auto visit = [&](const Scalar& y) {
    if (seen.insert(y).second) queue.push_back(y);
  };
  while (!queue.empty() && static_cast<int>(seen.size()) <= budget) {
    const Scalar p = queue.front();
    queue.pop_front();
    ++out.explored;
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
      const PartialIsometry& g = s.generators()[i];
      if (g.dom.contains(p)) visit(g.apply(p));
      if (ranges[i].contains(p)) visit(g.apply_inverse(p));
    }
  }
  out.closed = queue.empty() && static_cast<int>(seen.size()) <= budget;
  out.points.assign(seen.begin(), seen.end());
  return out;
}

std::vector<Scalar> singular_points(const SoISystem& s) {
  std::set<Scalar> c;
  for (const PartialIsometry& g : s.generators()) {
    const Interval r = g.range();
    c.insert(g.dom.lo);
    c.insert(g.dom.hi);
    c.insert(r.lo);
    c.insert(r.hi);
  }
  for (const Interval& comp : s.forest().components()) {
    c.insert(comp.lo);
    c.insert(comp.hi);
  }
  return {c.begin(), c.end()};
}

FamilyReport finite_orbit_families(const SoISystem& s, int budget) {
  FamilyReport report;
  report.budget = budget;
  std::set<Scalar> singular_union;
  for (const Scalar& c : singular_points(s)) {
    if (singular_union.count(c)) continue;
    const OrbitResult o = orbit(s, c, budget);
    if (!o.closed) {
      report.singular_truncated = true;
      return report;
    }
    singular_union.insert(o.points.begin(), o.points.end());
  }
  // Complementary open intervals, ascending.
  std::vector<Interval> gaps;
  for (const Interval& comp : s.forest().components()) {
    std::optional<Scalar> previous;
    for (auto it = singular_union.lower_bound(comp.lo);
         it != singular_union.end() && *it <= comp.hi; ++it) {
      if (previous) gaps.push_back({*previous, *it});
      previous = *it;
    }
  }
  auto gap_of = [&](const Scalar& x) {
    auto it = std::upper_bound(gaps.begin(), gaps.end(), x,
                               [](const Scalar& v, const Interval& g) { return v < g.hi; });
    return static_cast<std::size_t>(it - gaps.begin());
  };
  std::vector<char> done(gaps.size(), 0);
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    if (done[k]) continue;
    const Interval& gap = gaps[k];
    const Scalar sample = gap.lo + gap.length() / Scalar(3);
    const OrbitResult o = orbit(s, sample, budget);
    std::vector<std::size_t> hit;
    for (const Scalar& p : o.points) hit.push_back(gap_of(p));
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    for (std::size_t h : hit) done[h] = 1;
    if (!o.closed) {
      for (std::size_t h : hit) report.unresolved.push_back(gaps[h]);
      continue;
    }
    OrbitFamily family;
    for (std::size_t h : hit) family.intervals.push_back(gaps[h]);
    family.measure = gap.length();
    family.cardinality = static_cast<int>(o.points.size());
    report.e += family.measure;
    report.families.push_back(std::move(family));
  }
  std::sort(report.unresolved.begin(), report.unresolved.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  report.complete = report.unresolved.empty();
  return report;
}

IndependenceResult independence_check(const SoISystem& s, int max_word) {
  if (max_word < 1) throw Error(ErrorKind::precondition_violated, "word budget must be >= 1");
  IndependenceResult out;
  out.max_word = max_word;
  struct Node {
    Word w;
    PartialIsometry f;
  };
  auto violates = [](const PartialIsometry& f) {
    return f.orientation > 0 && f.offset.is_zero() && !f.dom.degenerate();
  };
  std::vector<Node> frontier;
  const int letters = 2 * s.size();
  for (int k = 0; k < letters; ++k) {
    const Letter x = letter_from_key(k);
    const PartialIsometry f = s.step(x);
    ++out.compositions;
    if (f.dom.degenerate()) continue;
    if (violates(f)) {
      out.ok = false;
      out.violation = Word{x};
      out.fixed_arc = f.dom;
      return out;
    }
    frontier.push_back({Word{x}, f});
  }
  for (int len = 2; len <= max_word && !frontier.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& n : frontier) {
      for (int k = 0; k < letters; ++k) {
        const Letter y = letter_from_key(k);
        if (y == -n.w.back()) continue;
        // w y applies y first.
        std::optional<PartialIsometry> f = s.step(y).then(n.f);
        ++out.compositions;
        if (!f || f->dom.degenerate()) continue;
        Word w = n.w * Word{y};
        if (violates(*f)) {
          out.ok = false;
          out.violation = std::move(w);
          out.fixed_arc = f->dom;
          return out;
        }
        next.push_back({std::move(w), std::move(*f)});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

const char* to_string(GlpVerdict v) {
  switch (v) {
    case GlpVerdict::identity_verified: return "identity-verified";
    case GlpVerdict::identity_violated: return "identity-violated";
    case GlpVerdict::dependent_certified: return "dependent generators certified";
    case GlpVerdict::glp_inapplicable: return "dependent generators, identity inapplicable";
    case GlpVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

GlpReport glp_report(const SoISystem& s, int max_word, int budget) {
  GlpReport r;
  r.m = s.total_measure();
  r.d = s.domain_sum();
  r.independence = independence_check(s, max_word);
  r.families = finite_orbit_families(s, budget);
  r.e = r.families.e;
  r.residual = r.m - r.d - r.e;
  if (r.m - r.d < Scalar(0)) {
    r.verdict = GlpVerdict::dependent_certified;
  } else if (!r.independence.ok) {
    r.verdict = GlpVerdict::glp_inapplicable;
  } else if (r.families.complete) {
    r.verdict = r.residual.is_zero() ? GlpVerdict::identity_verified : GlpVerdict::identity_violated;
  } else {
    r.verdict = GlpVerdict::inconclusive;
  }
  return r;
}

SuspensionComplex::SuspensionComplex(SoISystem s) : system_(std::move(s)) {
  for (std::size_t i = 0; i < system_.generators().size(); ++i) {
    const PartialIsometry& g = system_.generators()[i];
    bands_.push_back({static_cast<int>(i), g.dom, g.range(), g.orientation});
  }
  singular_ = singular_points(system_);
}

std::vector<OrbitResult> SuspensionComplex::singular_leaves(int budget) const {
  std::vector<OrbitResult> out;
  std::set<Scalar> covered;
  for (const Scalar& c : singular_) {
    if (covered.count(c)) continue;
    OrbitResult o = orbit(system_, c, budget);
    covered.insert(o.points.begin(), o.points.end());
    out.push_back(std::move(o));
  }
  return out;
}

SuspensionComplex suspension(const SoISystem& s) { return SuspensionComplex(s); }

GrowthReport grow_forest(const SoISystem& s, const MultiInterval& f0, int steps) {
  if (!s.forest().contains(f0)) {
    throw Error(ErrorKind::out_of_support, "initial forest " + f0.str() + " leaves the support");
  }
  if (steps < 1) throw Error(ErrorKind::precondition_violated, "steps must be >= 1");
  GrowthReport report;
  auto stage = [&](MultiInterval f) {
    ForestStage st;
    st.m = f.measure();
    for (const PartialIsometry& g : s.generators()) {
      // F ∩ dom g ∩ g^-1(F)
      st.d += f.intersect(g.inverse().image(f)).measure();
    }
    st.residual = st.m - st.d;
    st.forest = std::move(f);
    return st;
  };
  report.stages.push_back(stage(f0));
  for (int i = 1; i <= steps; ++i) {
    const MultiInterval& prev = report.stages.back().forest;
    MultiInterval next = prev;
    for (const PartialIsometry& g : s.generators()) {
      next = next.unite(g.image(prev)).unite(g.inverse().image(prev));
    }
    report.stages.push_back(stage(std::move(next)));
    const std::size_t n = report.stages.size();
    if (report.stages[n - 2].residual < report.stages[n - 1].residual) report.monotone = false;
  }
  return report;
}

CoverReport ae_support_check(const SoISystem& s, const MultiInterval& f_eps, const Interval& i,
                             const Scalar& delta, int max_word) {
  if (!s.forest().contains(i)) {
    throw Error(ErrorKind::out_of_support, "interval " + i.str() + " leaves the support");
  }
  if (delta.sign() != Sign::positive) {
    throw Error(ErrorKind::precondition_violated, "delta must be positive");
  }
  CoverReport report;
  report.max_word = max_word;
  struct Image {
    Word w;
    MultiInterval set;
  };
  std::vector<Image> images;
  std::set<std::string> seen;
  const MultiInterval start = f_eps.intersect(s.forest());
  images.push_back({Word(), start});
  seen.insert(start.str());
  const MultiInterval target(i);

  auto greedy = [&]() {
    MultiInterval left = target;
    std::vector<Word> chosen;
    std::vector<char> used(images.size(), 0);
    while (!(left.measure() < delta)) {
      int best = -1;
      Scalar gain;
      for (std::size_t k = 0; k < images.size(); ++k) {
        if (used[k]) continue;
        const Scalar g = left.intersect(images[k].set).measure();
        if (g.sign() == Sign::positive && (best < 0 || gain < g)) {
          best = static_cast<int>(k);
          gain = g;
        }
      }
      if (best < 0) {
        report.uncovered = left.measure();
        return false;
      }
      used[best] = 1;
      chosen.push_back(images[best].w);
      left = left.subtract(images[best].set);
    }
    report.words = std::move(chosen);
    report.uncovered = left.measure();
    return true;
  };

  std::size_t level_begin = 0;
  for (int len = 0; len <= max_word; ++len) {
    if (len > 0) {
      const std::size_t level_end = images.size();
      std::vector<Image> fresh;
      for (std::size_t k = level_begin; k < level_end; ++k) {
        for (int key = 0; key < 2 * s.size(); ++key) {
          const Letter x = letter_from_key(key);
          if (!images[k].w.empty() && x == -images[k].w.front()) continue;
          MultiInterval im = s.step(x).image(images[k].set);
          if (im.empty()) continue;
          fresh.push_back({Word{x} * images[k].w, std::move(im)});
        }
      }
      std::stable_sort(fresh.begin(), fresh.end(),
                       [](const Image& a, const Image& b) { return a.w < b.w; });
      level_begin = level_end;
      for (Image& f : fresh) {
        if (seen.insert(f.set.str()).second) images.push_back(std::move(f));
      }
      if (images.size() == level_end) break;
    }
    report.images = static_cast<int>(images.size());
    if (greedy()) {
      report.found = true;
      return report;
    }
  }
  return report;
}

ChainReport indecomposability_search(const SoISystem& s, const Interval& i, const Interval& j,
                                     int r_max, int max_word) {
  if (i.degenerate() || j.degenerate()) {
    throw Error(ErrorKind::precondition_violated, "intervals must be nondegenerate");
  }
  if (!s.forest().contains(i) || !s.forest().contains(j)) {
    throw Error(ErrorKind::out_of_support, "interval leaves the support");
  }
  ChainReport report;
  struct Arc {
    Word w;
    Interval arc;
  };
  std::vector<Arc> arcs{{Word(), i}};
  std::set<std::string> seen{i.str()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_word; ++len) {
    const std::size_t level_end = arcs.size();
    std::vector<Arc> fresh;
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int key = 0; key < 2 * s.size(); ++key) {
        const Letter x = letter_from_key(key);
        if (!arcs[k].w.empty() && x == -arcs[k].w.front()) continue;
        const std::optional<Interval> im = s.step(x).image(arcs[k].arc);
        if (!im || im->degenerate()) continue;
        fresh.push_back({Word{x} * arcs[k].w, *im});
      }
    }
    std::stable_sort(fresh.begin(), fresh.end(), [](const Arc& a, const Arc& b) { return a.w < b.w; });
    level_begin = level_end;
    for (Arc& a : fresh) {
      if (seen.insert(a.arc.str()).second) arcs.push_back(std::move(a));
    }
    if (arcs.size() == level_end) break;
  }
  report.arcs_examined = static_cast<int>(arcs.size());

  for (const Arc& a : arcs) {
    if (a.arc.contains(j)) {
      report.found = true;
      report.words = {a.w};
      report.arcs = {a.arc};
      return report;
    }
  }
  // Farthest-reach chaining from the left end of J.
  int current = -1;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Interval& a = arcs[k].arc;
    if (a.lo <= j.lo && j.lo < a.hi && (current < 0 || arcs[current].arc.hi < a.hi)) {
      current = static_cast<int>(k);
    }
  }
  std::vector<int> chain;
  while (current >= 0 && static_cast<int>(chain.size()) < r_max) {
    chain.push_back(current);
    const Interval& cur = arcs[current].arc;
    if (j.hi <= cur.hi) {
      report.found = true;
      break;
    }
    int next = -1;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const Interval& a = arcs[k].arc;
      if (a.lo < cur.hi && cur.hi < a.hi && (next < 0 || arcs[next].arc.hi < a.hi)) {
        next = static_cast<int>(k);
      }
    }
    current = next;
  }
  if (!report.found) return report;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    report.words.push_back(arcs[chain[k]].w);
    report.arcs.push_back(arcs[chain[k]].arc);
    if (k > 0) report.overlaps.push_back(*intersect(report.arcs[k - 1], report.arcs[k]));
  }
  return report;
}

namespace {

void require_labels(const SoISystem& s, const StallingsGraph& h) {
  if (!s.labeled()) throw Error(ErrorKind::missing_labels, "system is not fully labeled");
  for (const LabeledEdge& e : h.edges()) {
    if (s.generator_for(e.label) < 0) {
      throw Error(ErrorKind::missing_labels,
                  "subgroup uses letter " + letter_char(e.label) + " carried by no generator");
    }
  }
}

}  // namespace

OrbitResult subgroup_constrained_orbit(const SoISystem& s, const StallingsGraph& h,
                                       const Scalar& x, int budget) {
  require_labels(s, h);
  if (!s.forest().contains(x)) {
    throw Error(ErrorKind::out_of_support, "point " + x.str() + " lies outside the forest");
  }
  using State = std::pair<Scalar, int>;
  std::set<State> seen{{x, h.basepoint()}};
  std::deque<State> queue{{x, h.basepoint()}};
  std::vector<Interval> ranges;
  for (const PartialIsometry& g : s.generators()) ranges.push_back(g.range());
  OrbitResult out;
  auto visit = [&](Scalar p, int v) {
    State st{std::move(p), v};
    if (seen.insert(st).second) queue.push_back(std::move(st));
  };
  while (!queue.empty() && static_cast<int>(seen.size()) <= budget) {
    const State st = queue.front();
    queue.pop_front();
    ++out.explored;
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
      const PartialIsometry& g = s.generators()[i];
      const Letter l = *g.label;
      if (l > h.rank()) continue;
      if (const int w = h.follow(st.second, l); w >= 0 && g.dom.contains(st.first)) {
        visit(g.apply(st.first), w);
      }
      if (const int w = h.follow(st.second, -l); w >= 0 && ranges[i].contains(st.first)) {
        visit(g.apply_inverse(st.first), w);
      }
    }
  }
  out.closed = queue.empty() && static_cast<int>(seen.size()) <= budget;
  std::set<Scalar> points;
  for (const State& st : seen) {
    if (st.second == h.basepoint()) points.insert(st.first);
  }
  out.points.assign(points.begin(), points.end());
  return out;
}

SaturationReport subgroup_saturation(const SoISystem& s, const StallingsGraph& h, const Interval& i,
                                     int max_word, int steps) {
  require_labels(s, h);
  if (i.degenerate()) throw Error(ErrorKind::precondition_violated, "interval must be nondegenerate");
  if (!s.forest().contains(i)) {
    throw Error(ErrorKind::out_of_support, "interval " + i.str() + " leaves the support");
  }
  SaturationReport report;
  // Translates hI for reduced closed paths at the basepoint.
  std::vector<Interval> translates;
  std::set<std::string> seen;
  std::vector<Letter> path;
  std::function<void(int)> walk = [&](int v) {
    if (v == h.basepoint()) {
      std::vector<Letter> gens;
      for (Letter l : path) {
        const int g = s.generator_for(l < 0 ? -l : l) + 1;
        gens.push_back(l < 0 ? -g : g);
      }
      const Word w = Word::reduce(gens);
      std::optional<Interval> im;
      if (w.empty()) {
        im = i;
      } else if (std::optional<PartialIsometry> f = s.compose(w)) {
        im = f->image(i);
      }
      if (im && !im->degenerate() && seen.insert(im->str()).second) translates.push_back(*im);
    }
    if (static_cast<int>(path.size()) == max_word) return;
    for (int k = 0; k < 2 * h.rank(); ++k) {
      const Letter x = letter_from_key(k);
      if (!path.empty() && path.back() == -x) continue;
      const int w = h.follow(v, x);
      if (w < 0) continue;
      path.push_back(x);
      walk(w);
      path.pop_back();
    }
  };
  walk(h.basepoint());
  report.elements = static_cast<int>(translates.size());

  report.y = MultiInterval(i);
  report.measures.push_back(report.y.measure());
  for (int pass = 0; pass < steps; ++pass) {
    MultiInterval next = report.y;
    for (const Interval& t : translates) {
      if (report.y.intersect(t).measure().sign() == Sign::positive) next = next.unite(MultiInterval(t));
    }
    ++report.passes;
    const bool unchanged = next == report.y;
    report.y = std::move(next);
    report.measures.push_back(report.y.measure());
    if (unchanged) {
      report.saturated = true;
      break;
    }
  }
  return report;
}

const char* to_string(DiscretenessVerdict v) {
  switch (v) {
    case DiscretenessVerdict::suggests_discrete: return "suggests-discrete";
    case DiscretenessVerdict::suggests_dense: return "suggests-dense";
    case DiscretenessVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

DiscretenessReport discreteness_report(const SoISystem& s, const StallingsGraph& h,
                                       const std::vector<Scalar>& samples, int budget,
                                       std::optional<Scalar> threshold) {
  require_labels(s, h);
  DiscretenessReport report;
  report.threshold = threshold ? *threshold : Scalar(2) * s.total_measure() / Scalar(budget);
  bool all_closed = true;
  for (const Scalar& x : samples) {
    const OrbitResult o = subgroup_constrained_orbit(s, h, x, budget);
    DiscretenessReport::Sample row;
    row.x = x;
    row.size = static_cast<int>(o.points.size());
    row.closed = o.closed;
    for (std::size_t k = 1; k < o.points.size(); ++k) {
      const Scalar gap = o.points[k] - o.points[k - 1];
      if (!row.min_gap || gap < *row.min_gap) row.min_gap = gap;
    }
    if (row.min_gap && (!report.min_gap || *row.min_gap < *report.min_gap)) {
      report.min_gap = row.min_gap;
    }
    all_closed = all_closed && o.closed;
    report.samples.push_back(std::move(row));
  }
  for (int k = 3; k >= 0; --k) {
    const int b = budget >> k;
    if (b < 1) continue;
    DiscretenessReport::Row row{b, {}};
    for (const Scalar& x : samples) {
      row.sizes.push_back(static_cast<int>(subgroup_constrained_orbit(s, h, x, b).points.size()));
    }
    report.growth.push_back(std::move(row));
  }
  if (all_closed) {
    report.verdict = DiscretenessVerdict::suggests_discrete;
  } else if (report.min_gap && *report.min_gap < report.threshold) {
    report.verdict = DiscretenessVerdict::suggests_dense;
  } else {
    report.verdict = DiscretenessVerdict::inconclusive;
  }
  return report;
}

}  // namespace freeact
