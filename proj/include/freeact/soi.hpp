#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeact/scalar.hpp"
#include "freeact/stallings.hpp"
#include "freeact/word.hpp"

namespace freeact {

// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  Scalar lo;
  Scalar hi;

  Scalar length() const { return hi - lo; }
  bool degenerate() const { return !(lo < hi); }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
// Intersection with nonempty interior.
bool overlaps(const Interval& a, const Interval& b);

// Finite union of closed intervals, kept sorted with overlapping or touching
// pieces merged. Set operations work up to null sets: results never carry
// degenerate pieces.
class MultiInterval {
 public:
  MultiInterval() = default;
  explicit MultiInterval(std::vector<Interval> pieces);
  explicit MultiInterval(const Interval& piece) : MultiInterval(std::vector<Interval>{piece}) {}

  // A support forest: components must be pairwise disjoint (invalid_system).
  // Point components are kept.
  static MultiInterval forest(std::vector<Interval> components);

  const std::vector<Interval>& components() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  Scalar measure() const;
  bool contains(const Scalar& x) const { return component_of(x) >= 0; }
  bool contains(const Interval& i) const;
  bool contains(const MultiInterval& other) const;
  int component_of(const Scalar& x) const;

  MultiInterval unite(const MultiInterval& other) const;
  MultiInterval intersect(const MultiInterval& other) const;
  MultiInterval intersect(const Interval& i) const { return intersect(MultiInterval(i)); }
  MultiInterval subtract(const MultiInterval& other) const;
  std::string str() const;

  friend bool operator==(const MultiInterval&, const MultiInterval&) = default;

 private:
  std::vector<Interval> pieces_;
};

// x -> orientation * x + offset on dom.
struct PartialIsometry {
  Interval dom;
  int orientation = 1;
  Scalar offset;
  std::optional<Letter> label;

  Scalar apply(const Scalar& x) const;
  Scalar apply_inverse(const Scalar& x) const;
  Interval range() const;
  PartialIsometry inverse() const;
  // Image of the part of i inside dom.
  std::optional<Interval> image(const Interval& i) const;
  MultiInterval image(const MultiInterval& m) const;
  // f.then(g) applies f first: x -> g(f(x)).
  std::optional<PartialIsometry> then(const PartialIsometry& g) const;
};

// Words in the generators use letter i for generator i-1 (a, b, ... in the
// order given), independently of any labels.
class SoISystem {
 public:
  SoISystem(MultiInterval forest, std::vector<PartialIsometry> generators);

  const MultiInterval& forest() const { return forest_; }
  const std::vector<PartialIsometry>& generators() const { return generators_; }
  int size() const { return static_cast<int>(generators_.size()); }
  // Generator letter (+/- index+1) as a partial isometry.
  PartialIsometry step(Letter x) const;
  // Composition of a word in generator letters, rightmost letter first.
  std::optional<PartialIsometry> compose(const Word& w) const;

  bool labeled() const;
  // Generator index carrying basis letter l (> 0), or -1.
  int generator_for(Letter l) const;
  // Generator word rewritten in basis letters via the labels.
  Word to_group_word(const Word& w) const;

  Scalar total_measure() const { return forest_.measure(); }
  Scalar domain_sum() const;

 private:
  MultiInterval forest_;
  std::vector<PartialIsometry> generators_;
};

struct OrbitResult {
  std::vector<Scalar> points;  // ascending
  bool closed = false;
  int explored = 0;  // states visited
};

OrbitResult orbit(const SoISystem& s, const Scalar& x, int budget);
std::vector<Scalar> singular_points(const SoISystem& s);

struct OrbitFamily {
  std::vector<Interval> intervals;  // complementary intervals met by one orbit
  Scalar measure;                   // length of any of them
  int cardinality = 0;
};

struct FamilyReport {
  std::vector<OrbitFamily> families;
  std::vector<Interval> unresolved;  // sample orbit truncated
  bool complete = false;
  bool singular_truncated = false;
  Scalar e;  // exact when complete, otherwise a lower bound
  int budget = 0;
};

FamilyReport finite_orbit_families(const SoISystem& s, int budget);

struct IndependenceResult {
  bool ok = true;
  int max_word = 0;
  Word violation;
  Interval fixed_arc;
  long long compositions = 0;
};

IndependenceResult independence_check(const SoISystem& s, int max_word);

enum class GlpVerdict { identity_verified, identity_violated, dependent_certified, glp_inapplicable, inconclusive };
const char* to_string(GlpVerdict v);

struct GlpReport {
  Scalar m;
  Scalar d;
  Scalar e;
  Scalar residual;  // m - d - e
  IndependenceResult independence;
  FamilyReport families;
  GlpVerdict verdict = GlpVerdict::inconclusive;
};

GlpReport glp_report(const SoISystem& s, int max_word, int budget);

struct Band {
  int generator;
  Interval base;  // dom, the bottom of dom x [0,1]
  Interval top;   // range, glued through the generator
  int orientation;
};

class SuspensionComplex {
 public:
  explicit SuspensionComplex(SoISystem s);
  const std::vector<Band>& bands() const { return bands_; }
  const std::vector<Scalar>& singular() const { return singular_; }
  const SoISystem& system() const { return system_; }
  // Intersection of the leaf through x with the support.
  OrbitResult leaf_trace(const Scalar& x, int budget) const { return orbit(system_, x, budget); }
  // Distinct leaves through singular points.
  std::vector<OrbitResult> singular_leaves(int budget) const;

 private:
  SoISystem system_;
  std::vector<Band> bands_;
  std::vector<Scalar> singular_;
};

SuspensionComplex suspension(const SoISystem& s);

struct ForestStage {
  MultiInterval forest;
  Scalar m;
  Scalar d;
  Scalar residual;
};

struct GrowthReport {
  std::vector<ForestStage> stages;  // stage 0 is F0
  bool monotone = true;
};

GrowthReport grow_forest(const SoISystem& s, const MultiInterval& f0, int steps);

struct CoverReport {
  bool found = false;
  std::vector<Word> words;
  Scalar uncovered;
  int max_word = 0;
  int images = 0;  // distinct images examined
};

CoverReport ae_support_check(const SoISystem& s, const MultiInterval& f_eps, const Interval& i,
                             const Scalar& delta, int max_word);

struct ChainReport {
  bool found = false;
  std::vector<Word> words;
  std::vector<Interval> arcs;
  std::vector<Interval> overlaps;
  int arcs_examined = 0;
};

ChainReport indecomposability_search(const SoISystem& s, const Interval& i, const Interval& j,
                                     int r_max, int max_word);

// Orbit of x under the elements of H only. The budget counts (point,
// vertex) states.
OrbitResult subgroup_constrained_orbit(const SoISystem& s, const StallingsGraph& h,
                                       const Scalar& x, int budget);

struct SaturationReport {
  MultiInterval y;
  bool saturated = false;
  int passes = 0;
  int elements = 0;  // h in H with |h| <= L and nondegenerate hI
  std::vector<Scalar> measures;
};

SaturationReport subgroup_saturation(const SoISystem& s, const StallingsGraph& h, const Interval& i,
                                     int max_word, int steps);

enum class DiscretenessVerdict { suggests_discrete, suggests_dense, inconclusive };
const char* to_string(DiscretenessVerdict v);

struct DiscretenessReport {
  struct Sample {
    Scalar x;
    int size = 0;
    bool closed = false;
    std::optional<Scalar> min_gap;
  };
  struct Row {
    int budget;
    std::vector<int> sizes;
  };
  std::vector<Sample> samples;
  std::vector<Row> growth;
  std::optional<Scalar> min_gap;
  Scalar threshold;
  DiscretenessVerdict verdict = DiscretenessVerdict::inconclusive;
};

// The verdict is a heuristic reading of finite data. The default threshold
// is 2 m / budget.
DiscretenessReport discreteness_report(const SoISystem& s, const StallingsGraph& h,
                                       const std::vector<Scalar>& samples, int budget,
                                       std::optional<Scalar> threshold = std::nullopt);

}  // namespace freeact
