#pragma once

#include <boost/rational.hpp>

#include "fintopo/collection.hpp"

namespace fintopo {

/// Exact rational arithmetic; strict threshold comparisons must never go
/// through floating point.
using Rational = boost::rational<long long>;

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

/// Nonnegative exact weight per point; the measure of a set is the sum of
/// the weights of its points.
class PointMeasure {
 public:
  PointMeasure(SpacePtr space, std::vector<Rational> weights);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational measure_of(PointMask s) const;
  Rational total() const { return measure_of(space_->points()); }

 private:
  SpacePtr space_;
  std::vector<Rational> weights_;
};

/// Opens of measure strictly above r.
OpenFamily level_family(const PointMeasure& mu, const Rational& r);

/// Thresholds r > 0 producing pairwise distinct level families: midpoints
/// between consecutive distinct values of the measure over the opens, plus
/// the positive values themselves (duplicates collapse when the families are
/// deduplicated downstream).
std::vector<Rational> representative_thresholds(const PointMeasure& mu);

/// All restrictions of level families to their members, over the
/// representative thresholds. Empty measure gives the empty collection.
FamilyCollection measure_level_collection(const PointMeasure& mu);

struct JoinWitnessReport {
  bool pass = false;
  Rational midpoint;  // threshold used for the inner family
  std::optional<std::pair<PointMask, PointMask>> violation;
};

/// With m the average of r and the measure of U, checks that all pairwise
/// meets of the m-level family restricted to U land in the r-level family
/// restricted to U. Requires measure(U) > r > 0.
JoinWitnessReport verify_selfjoin(const PointMeasure& mu, PointMask u, const Rational& r);

struct SplitWitnessReport {
  bool pass = false;
  Rational slack;  // min(measure(U1), measure(U2), measure(U1 ∪ U2) - r)
  Rational m1, m2;
  std::optional<PointMask> violation;
};

/// With m_i = measure(U_i) - slack/2, checks that the intersection of the
/// m_i-level families restricted to U_i refines the r-level family.
/// Requires measure(U1 ∪ U2) > r and positive slack.
SplitWitnessReport verify_selfsplit(const PointMeasure& mu, PointMask u1, PointMask u2,
                                    const Rational& r);

}  // namespace fintopo
