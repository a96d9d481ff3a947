#include "freeact/measures.hpp"

#include <algorithm>
#include <set>

#include "freeact/error.hpp"

namespace freeact {

LengthMeasure::LengthMeasure(std::vector<DensityPiece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const DensityPiece& a, const DensityPiece& b) { return a.span.lo < b.span.lo; });
  std::vector<Interval> spans;
  for (DensityPiece& p : pieces) {
    if (p.span.degenerate()) {
      throw Error(ErrorKind::precondition_violated, "density piece " + p.span.str() + " is degenerate");
    }
    if (p.density.sign() == Sign::negative) {
      throw Error(ErrorKind::precondition_violated, "negative density on " + p.span.str());
    }
    if (!pieces_.empty()) {
      DensityPiece& last = pieces_.back();
      if (p.span.lo < last.span.hi) {
        throw Error(ErrorKind::precondition_violated,
                    "density pieces " + last.span.str() + " and " + p.span.str() + " overlap");
      }
      if (p.span.lo == last.span.hi && p.density == last.density) {
        last.span.hi = p.span.hi;
        spans.back().hi = p.span.hi;
        continue;
      }
    }
    spans.push_back(p.span);
    pieces_.push_back(std::move(p));
  }
  support_ = MultiInterval(std::move(spans));
}

Scalar LengthMeasure::density_at(const Scalar& x) const {
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    if (it->span.contains(x)) return it->density;
  }
  throw Error(ErrorKind::out_of_support, "point " + x.str() + " lies outside the measure's support");
}

Scalar measure_of(const LengthMeasure& mu, const Interval& i) {
  if (i.degenerate()) {
    if (!mu.support().contains(i.lo)) {
      throw Error(ErrorKind::out_of_support, "point " + i.lo.str() + " lies outside the support");
    }
    return Scalar(0);
  }
  if (!mu.support().contains(i)) {
    throw Error(ErrorKind::out_of_support, "interval " + i.str() + " escapes the support");
  }
  Scalar total;
  for (const DensityPiece& p : mu.pieces()) {
    if (overlaps(p.span, i)) total += p.density * (min(p.span.hi, i.hi) - max(p.span.lo, i.lo));
  }
  return total;
}

LengthMeasure lebesgue(const MultiInterval& f) {
  std::vector<DensityPiece> pieces;
  for (const Interval& c : f.components()) {
    if (!c.degenerate()) pieces.push_back({c, Scalar(1)});
  }
  return LengthMeasure(std::move(pieces));
}

InvarianceResult invariance_check(const SoISystem& s, const LengthMeasure& mu) {
  if (!(mu.support() == MultiInterval(s.forest().components()))) {
    throw Error(ErrorKind::support_mismatch,
                "measure support " + mu.support().str() + " differs from the forest " + s.forest().str());
  }
  std::set<Scalar> breaks;
  for (const DensityPiece& p : mu.pieces()) {
    breaks.insert(p.span.lo);
    breaks.insert(p.span.hi);
  }
  for (int i = 0; i < s.size(); ++i) {
    const PartialIsometry& g = s.generators()[i];
    if (g.dom.degenerate()) continue;
    const Interval r = g.range();
    std::set<Scalar> cuts{g.dom.lo, g.dom.hi};
    for (const Scalar& b : breaks) {
      if (g.dom.contains(b)) cuts.insert(b);
      if (r.contains(b)) cuts.insert(g.apply_inverse(b));
    }
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
      const Interval piece{*it, *std::next(it)};
      const Scalar mid = (piece.lo + piece.hi) / Scalar(2);
      const Scalar here = mu.density_at(mid);
      const Scalar there = mu.density_at(g.apply(mid));
      if (here != there) return {false, InvarianceViolation{i, piece, here, there}};
    }
  }
  return {};
}

LengthMeasure combine(const Scalar& c1, const LengthMeasure& mu1, const Scalar& c2, const LengthMeasure& mu2) {
  if (c1.sign() == Sign::negative || c2.sign() == Sign::negative) {
    throw Error(ErrorKind::precondition_violated, "coefficients must be nonnegative");
  }
  if (!(mu1.support() == mu2.support())) {
    throw Error(ErrorKind::support_mismatch,
                "supports " + mu1.support().str() + " and " + mu2.support().str() + " differ");
  }
  std::set<Scalar> cuts;
  for (const auto* mu : {&mu1, &mu2}) {
    for (const DensityPiece& p : mu->pieces()) {
      cuts.insert(p.span.lo);
      cuts.insert(p.span.hi);
    }
  }
  std::vector<DensityPiece> out;
  if (cuts.empty()) return LengthMeasure();
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    const Scalar mid = (*it + *std::next(it)) / Scalar(2);
    if (!mu1.support().contains(mid)) continue;
    out.push_back({{*it, *std::next(it)}, c1 * mu1.density_at(mid) + c2 * mu2.density_at(mid)});
  }
  return LengthMeasure(std::move(out));
}

}  // namespace freeact
