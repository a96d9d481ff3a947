#pragma once

#include <string>
#include <vector>

#include "freeact/cvn.hpp"
#include "freeact/stallings.hpp"
#include "freeact/word.hpp"

namespace freeact {

// The infinite reduced word u v v v ... in the boundary of F_n. Stored in
// canonical form: shortest prefix and primitive period, so two rays are
// equal as boundary points iff their fields agree.
class BoundaryRay {
 public:
  // Any u and nonempty v; the ray is the limit of u v^k.
  static BoundaryRay make(const Word& u, const Word& v);

  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }
  // First n letters.
  Word head(std::size_t n) const;
  BoundaryRay translate(const Word& w) const { return make(w * prefix_, period_); }
  std::string str() const;

  friend bool operator==(const BoundaryRay&, const BoundaryRay&) = default;
  friend auto operator<=>(const BoundaryRay& x, const BoundaryRay& y) {
    if (auto c = x.prefix_ <=> y.prefix_; c != 0) return c;
    return x.period_ <=> y.period_;
  }

 private:
  Word prefix_;
  Word period_;
};

// Unordered pair of distinct rays, stored with the smaller ray first.
class RationalLeaf {
 public:
  RationalLeaf(BoundaryRay x, BoundaryRay y);
  const BoundaryRay& first() const { return first_; }
  const BoundaryRay& second() const { return second_; }
  RationalLeaf translate(const Word& w) const { return {first_.translate(w), second_.translate(w)}; }
  std::string str() const;

  friend bool operator==(const RationalLeaf&, const RationalLeaf&) = default;
  friend auto operator<=>(const RationalLeaf& x, const RationalLeaf& y) {
    if (auto c = x.first_ <=> y.first_; c != 0) return c;
    return x.second_ <=> y.second_;
  }

 private:
  BoundaryRay first_;
  BoundaryRay second_;
};

// (g^-inf, g^inf) for the cyclic reduction of g.
RationalLeaf periodic_leaf(const Word& g);

bool boundary_membership(const StallingsGraph& h, const BoundaryRay& r);
bool carries(const StallingsGraph& h, const RationalLeaf& l);

// Translates w l, |w| <= max_translate, of the periodic leaves of
// omega_epsilon(t, eps, max_word); sorted and deduplicated.
std::vector<RationalLeaf> epsilon_leaves(const MarkedMetricGraph& t, const Scalar& eps, int max_word,
                                         int max_translate);

struct CarrierScan {
  std::vector<RationalLeaf> generating;  // periodic leaves of omega_epsilon
  std::vector<RationalLeaf> carried;     // generating leaves in the boundary of H
  // Distinct translates w l, |w| <= max_translate, in the boundary of H.
  std::vector<std::pair<Word, RationalLeaf>> carried_translates;
  bool finite_index = false;
  bool found() const { return !carried.empty(); }
  std::string annotation;
  int max_word = 0;
  int max_translate = 0;
};

CarrierScan carrier_scan(const MarkedMetricGraph& t, const StallingsGraph& h, const Scalar& eps, int max_word,
                         int max_translate);

}  // namespace freeact
