#include "fintopo/measure.hpp"

#include <algorithm>

namespace fintopo {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw TopoError(errc::bad_input, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const TopoError&) {
    throw;
  } catch (const std::exception&) {
    throw TopoError(errc::bad_input, "cannot parse rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

PointMeasure::PointMeasure(SpacePtr space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != space_->point_count())
    throw TopoError(errc::bad_input, "weight list has wrong length");
  for (const Rational& w : weights_)
    if (w < Rational(0))
      throw TopoError(errc::bad_input, "weights must be nonnegative");
}

Rational PointMeasure::measure_of(PointMask s) const {
  Rational total(0);
  for (int p = 0; p < space_->point_count(); ++p)
    if (s >> p & 1) total += weights_[static_cast<size_t>(p)];
  return total;
}

OpenFamily level_family(const PointMeasure& mu, const Rational& r) {
  const FiniteSpace& s = *mu.space();
  FamilyMask members = 0;
  for (int i = 0; i < s.open_count(); ++i)
    if (mu.measure_of(s.open_at(i)) > r) members |= FamilyMask{1} << i;
  return OpenFamily::from_members(mu.space(), members);
}

std::vector<Rational> representative_thresholds(const PointMeasure& mu) {
  const FiniteSpace& s = *mu.space();
  std::vector<Rational> values;
  for (PointMask u : s.opens()) values.push_back(mu.measure_of(u));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rational> out;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    out.push_back((values[i] + values[i + 1]) / 2);
  for (const Rational& v : values)
    if (v > Rational(0)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FamilyCollection measure_level_collection(const PointMeasure& mu) {
  std::vector<FamilyMask> fams;
  for (const Rational& r : representative_thresholds(mu)) {
    const OpenFamily level = level_family(mu, r);
    for (PointMask a : level.member_sets())
      fams.push_back(restrict_to(level, a).members());
  }
  return FamilyCollection::of(mu.space(), std::move(fams));
}

JoinWitnessReport verify_selfjoin(const PointMeasure& mu, PointMask u, const Rational& r) {
  const FiniteSpace& s = *mu.space();
  if (!s.is_open(u))
    throw TopoError(errc::precondition_failed, "the set is not open");
  if (!(r > Rational(0)) || !(mu.measure_of(u) > r))
    throw TopoError(errc::precondition_failed,
                    "requires measure(U) > r > 0, got measure(U) = " +
                        rational_to_string(mu.measure_of(u)) + ", r = " +
                        rational_to_string(r));
  JoinWitnessReport rep;
  rep.midpoint = (r + mu.measure_of(u)) / 2;
  const OpenFamily inner = restrict_to(level_family(mu, rep.midpoint), u);
  const OpenFamily outer = restrict_to(level_family(mu, r), u);
  rep.pass = true;
  const auto members = inner.member_sets();
  for (PointMask o1 : members) {
    for (PointMask o2 : members) {
      if (!outer.contains(o1 & o2)) {
        rep.pass = false;
        rep.violation = {o1, o2};
        return rep;
      }
    }
  }
  return rep;
}

SplitWitnessReport verify_selfsplit(const PointMeasure& mu, PointMask u1, PointMask u2,
                                    const Rational& r) {
  const FiniteSpace& s = *mu.space();
  if (!s.is_open(u1) || !s.is_open(u2))
    throw TopoError(errc::precondition_failed, "the parts must be open");
  if (!(mu.measure_of(u1 | u2) > r))
    throw TopoError(errc::precondition_failed, "requires measure(U1 ∪ U2) > r");
  SplitWitnessReport rep;
  rep.slack = std::min({mu.measure_of(u1), mu.measure_of(u2), mu.measure_of(u1 | u2) - r});
  if (!(rep.slack > Rational(0)))
    throw TopoError(errc::precondition_failed, "requires positive slack, got " +
                                                   rational_to_string(rep.slack));
  rep.m1 = mu.measure_of(u1) - rep.slack / 2;
  rep.m2 = mu.measure_of(u2) - rep.slack / 2;
  const OpenFamily g1 = restrict_to(level_family(mu, rep.m1), u1);
  const OpenFamily g2 = restrict_to(level_family(mu, rep.m2), u2);
  const OpenFamily target = level_family(mu, r);
  const OpenFamily meet = family_intersection(g1, g2);
  rep.pass = true;
  for (PointMask a : meet.member_sets()) {
    if (!target.contains(a)) {
      rep.pass = false;
      rep.violation = a;
      return rep;
    }
  }
  return rep;
}

}  // namespace fintopo
