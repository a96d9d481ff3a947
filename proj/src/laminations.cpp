#include "freeact/laminations.hpp"

#include <algorithm>
#include <set>

#include "freeact/error.hpp"

namespace freeact {

namespace {

Word rotate_left(const Word& w) {
  std::vector<Letter> l(w.begin(), w.end());
  std::rotate(l.begin(), l.begin() + 1, l.end());
  return Word::reduce(l);
}

Word rotate_right(const Word& w) {
  std::vector<Letter> l(w.begin(), w.end());
  std::rotate(l.rbegin(), l.rbegin() + 1, l.rend());
  return Word::reduce(l);
}

Word drop_back(const Word& w) {
  std::vector<Letter> l(w.begin(), w.end() - 1);
  return Word::reduce(l);
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return Word::reduce(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d)));
  }
  return w;
}

}  // namespace

BoundaryRay BoundaryRay::make(const Word& u, const Word& v) {
  if (v.empty()) throw Error(ErrorKind::precondition_violated, "ray period must be nonempty");
  const CyclicReduction cr = cyclic_reduce(v);
  Word p = u * cr.conjugator;
  Word core = primitive_root(cr.core);
  while (!p.empty() && p.back() == -core.front()) {
    p = drop_back(p);
    core = rotate_left(core);
  }
  while (!p.empty() && p.back() == core.back()) {
    p = drop_back(p);
    core = rotate_right(core);
  }
  BoundaryRay r;
  r.prefix_ = std::move(p);
  r.period_ = std::move(core);
  return r;
}

Word BoundaryRay::head(std::size_t n) const {
  std::vector<Letter> out(prefix_.begin(), prefix_.end());
  while (out.size() < n) out.insert(out.end(), period_.begin(), period_.end());
  out.resize(std::min(out.size(), n));
  return Word::reduce(out);
}

std::string BoundaryRay::str() const {
  return (prefix_.empty() ? std::string() : prefix_.str()) + "(" + period_.str() + ")^inf";
}

RationalLeaf::RationalLeaf(BoundaryRay x, BoundaryRay y) {
  if (x == y) throw Error(ErrorKind::precondition_violated, "leaf endpoints coincide: " + x.str());
  if (y < x) std::swap(x, y);
  first_ = std::move(x);
  second_ = std::move(y);
}

std::string RationalLeaf::str() const { return "{" + first_.str() + ", " + second_.str() + "}"; }

RationalLeaf periodic_leaf(const Word& g) {
  if (g.empty()) throw Error(ErrorKind::precondition_violated, "periodic leaf of the identity");
  const Word core = cyclic_reduce(g).core;
  return {BoundaryRay::make(Word(), core.inverse()), BoundaryRay::make(Word(), core)};
}

bool boundary_membership(const StallingsGraph& h, const BoundaryRay& r) {
  int v = h.basepoint();
  for (Letter x : r.prefix()) {
    if (std::abs(x) > h.rank() || (v = h.follow(v, x)) < 0) return false;
  }
  // Deterministic reading: a repeated (vertex, phase) state closes a cycle.
  std::set<int> seen;
  while (seen.insert(v).second) {
    for (Letter x : r.period()) {
      if (std::abs(x) > h.rank() || (v = h.follow(v, x)) < 0) return false;
    }
  }
  return true;
}

bool carries(const StallingsGraph& h, const RationalLeaf& l) {
  return boundary_membership(h, l.first()) && boundary_membership(h, l.second());
}

namespace {

std::vector<RationalLeaf> generating_leaves(const MarkedMetricGraph& t, const Scalar& eps, int max_word) {
  std::set<RationalLeaf> out;
  for (const Word& g : omega_epsilon(t, eps, max_word)) out.insert(periodic_leaf(g));
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<RationalLeaf> epsilon_leaves(const MarkedMetricGraph& t, const Scalar& eps, int max_word,
                                         int max_translate) {
  std::set<RationalLeaf> out;
  const std::vector<Word> translates = enumerate_words(t.rank(), max_translate, WordMode::reduced);
  for (const RationalLeaf& l : generating_leaves(t, eps, max_word)) {
    for (const Word& w : translates) out.insert(l.translate(w));
  }
  return {out.begin(), out.end()};
}

CarrierScan carrier_scan(const MarkedMetricGraph& t, const StallingsGraph& h, const Scalar& eps, int max_word,
                         int max_translate) {
  if (h.rank() != t.rank()) throw Error(ErrorKind::precondition_violated, "subgroup rank differs from the tree's");
  CarrierScan scan;
  scan.max_word = max_word;
  scan.max_translate = max_translate;
  scan.finite_index = h.is_covering();
  scan.generating = generating_leaves(t, eps, max_word);
  const std::vector<Word> translates = enumerate_words(t.rank(), max_translate, WordMode::reduced);
  std::set<RationalLeaf> seen;
  for (const RationalLeaf& l : scan.generating) {
    if (carries(h, l)) scan.carried.push_back(l);
    for (const Word& w : translates) {
      RationalLeaf moved = l.translate(w);
      if (!seen.insert(moved).second) continue;
      if (carries(h, moved)) scan.carried_translates.emplace_back(w, std::move(moved));
    }
  }
  if (scan.found() && !scan.finite_index) {
    scan.annotation =
        "infinite-index subgroup carries a leaf: T is simplicial, outside the hypothesis class "
        "(free action with dense orbits)";
  } else if (!scan.found()) {
    scan.annotation = "none up to budget";
  }
  return scan;
}

}  // namespace freeact
