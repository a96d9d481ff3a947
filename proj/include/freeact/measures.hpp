#pragma once

#include <optional>
#include <vector>

#include "freeact/soi.hpp"

namespace freeact {

struct DensityPiece {
  Interval span;
  Scalar density;

  friend bool operator==(const DensityPiece&, const DensityPiece&) = default;
};

// Non-atomic length measure with piecewise-constant density. Pieces are
// sorted, non-overlapping and nondegenerate; adjacent pieces with equal
// density are merged, so equal measures compare equal.
class LengthMeasure {
 public:
  LengthMeasure() = default;
  explicit LengthMeasure(std::vector<DensityPiece> pieces);

  const std::vector<DensityPiece>& pieces() const { return pieces_; }
  const MultiInterval& support() const { return support_; }
  // Density at x, taking the right-hand piece at a breakpoint.
  Scalar density_at(const Scalar& x) const;

  friend bool operator==(const LengthMeasure&, const LengthMeasure&) = default;

 private:
  std::vector<DensityPiece> pieces_;
  MultiInterval support_;
};

// out_of_support if i escapes the support.
Scalar measure_of(const LengthMeasure& mu, const Interval& i);
LengthMeasure lebesgue(const MultiInterval& f);

struct InvarianceViolation {
  int generator;
  Interval piece;       // sub-piece of the generator's domain
  Scalar transported;   // density on the piece
  Scalar actual;        // density on its image
};

struct InvarianceResult {
  bool invariant = true;
  std::optional<InvarianceViolation> violation;
};

// support_mismatch unless mu lives on the system's forest.
InvarianceResult invariance_check(const SoISystem& s, const LengthMeasure& mu);

LengthMeasure combine(const Scalar& c1, const LengthMeasure& mu1, const Scalar& c2, const LengthMeasure& mu2);

}  // namespace freeact
