#include "fintopo/space.hpp"

#include <algorithm>

namespace fintopo {

const char* errc_name(errc c) {
  switch (c) {
    case errc::missing_empty: return "MissingEmpty";
    case errc::missing_full: return "MissingFull";
    case errc::not_closed_under_union: return "NotClosedUnderUnion";
    case errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case errc::invalid_point_set: return "InvalidPointSet";
    case errc::not_reflexive: return "NotReflexive";
    case errc::not_transitive: return "NotTransitive";
    case errc::not_isotone: return "NotIsotone";
    case errc::not_a_member: return "NotAMember";
    case errc::not_closed_set: return "NotClosed";
    case errc::not_in_grill: return "NotInGrill";
    case errc::oracle_too_large: return "OracleTooLarge";
    case errc::lattice_too_large: return "LatticeTooLarge";
    case errc::carrier_mismatch: return "CarrierMismatch";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::too_large: return "TooLarge";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

void Preorder::validate() const {
  if (n < 0 || n > 64) throw TopoError(errc::too_large, "preorder size out of range");
  if (static_cast<int>(up.size()) != n)
    throw TopoError(errc::bad_input, "preorder relation has wrong size");
  const PointMask all = full_mask(n);
  for (int i = 0; i < n; ++i) {
    if ((up[static_cast<size_t>(i)] & ~all) != 0)
      throw TopoError(errc::bad_input, "preorder relation references unknown points");
    if (!(up[static_cast<size_t>(i)] >> i & 1))
      throw TopoError(errc::not_reflexive, "relation is not reflexive at point " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (up[static_cast<size_t>(i)] >> j & 1)
        if (!subset_of(up[static_cast<size_t>(j)], up[static_cast<size_t>(i)]))
          throw TopoError(errc::not_transitive,
                          "relation is not transitive through points " + std::to_string(i) +
                              " and " + std::to_string(j));
}

FiniteSpace::FiniteSpace(int n, std::vector<PointMask> opens, std::vector<std::string> names)
    : n_(n), opens_(std::move(opens)), names_(std::move(names)) {
  const size_t m = opens_.size();
  supersets_.assign(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (subset_of(opens_[i], opens_[j])) supersets_[i] |= FamilyMask{1} << j;
  core_.assign(static_cast<size_t>(n_), points());
  for (int p = 0; p < n_; ++p)
    for (PointMask u : opens_)
      if (u >> p & 1) core_[static_cast<size_t>(p)] &= u;
}

FiniteSpace FiniteSpace::validate(int n, std::vector<PointMask> candidate_opens,
                                  std::vector<std::string> names) {
  if (n < 0 || n > 64) throw TopoError(errc::too_large, "point count out of range (0..64)");
  const PointMask all = full_mask(n);
  std::sort(candidate_opens.begin(), candidate_opens.end());
  candidate_opens.erase(std::unique(candidate_opens.begin(), candidate_opens.end()),
                        candidate_opens.end());
  for (PointMask u : candidate_opens)
    if ((u & ~all) != 0)
      throw TopoError(errc::invalid_point_set, "open set references points outside the space");
  if (candidate_opens.empty() || candidate_opens.front() != 0)
    throw TopoError(errc::missing_empty, "the empty set is not open");
  if (candidate_opens.back() != all)
    throw TopoError(errc::missing_full, "the whole space is not open");
  if (candidate_opens.size() > 64)
    throw TopoError(errc::too_large, "more than 64 open sets are not supported");
  for (size_t i = 0; i < candidate_opens.size(); ++i) {
    for (size_t j = i + 1; j < candidate_opens.size(); ++j) {
      const PointMask u = candidate_opens[i], v = candidate_opens[j];
      if (!std::binary_search(candidate_opens.begin(), candidate_opens.end(), u | v))
        throw TopoError(errc::not_closed_under_union, "opens are not closed under union", u, v);
      if (!std::binary_search(candidate_opens.begin(), candidate_opens.end(), u & v))
        throw TopoError(errc::not_closed_under_intersection,
                        "opens are not closed under intersection", u, v);
    }
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw TopoError(errc::bad_input, "point name list has wrong length");
  return FiniteSpace(n, std::move(candidate_opens), std::move(names));
}

int FiniteSpace::open_index(PointMask s) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), s);
  if (it == opens_.end() || *it != s) return -1;
  return static_cast<int>(it - opens_.begin());
}

PointMask FiniteSpace::interior(PointMask a) const {
  a &= points();
  PointMask acc = 0;
  for (PointMask u : opens_)
    if (subset_of(u, a)) acc |= u;
  return acc;  // opens are union-closed, so acc is open
}

PointMask FiniteSpace::closure(PointMask a) const {
  return points() & ~interior(points() & ~a);
}

bool FiniteSpace::is_regular() const {
  for (PointMask u : opens_) {
    const PointMask c = points() & ~u;  // closed set
    for (int x = 0; x < n_; ++x) {
      if (c >> x & 1) continue;
      bool separated = false;
      for (PointMask a : opens_) {
        if (!(a >> x & 1)) continue;
        for (PointMask b : opens_) {
          if ((a & b) == 0 && subset_of(c, b)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool FiniteSpace::is_prime() const {
  int non_isolated = 0;
  for (int p = 0; p < n_; ++p)
    if (!is_open(PointMask{1} << p)) ++non_isolated;
  return non_isolated <= 1;
}

std::string FiniteSpace::point_name(int p) const {
  if (!names_.empty()) return names_[static_cast<size_t>(p)];
  return "p" + std::to_string(p);
}

std::string FiniteSpace::set_to_string(PointMask s) const {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < n_; ++p) {
    if (!(s >> p & 1)) continue;
    if (!first) out += ",";
    out += point_name(p);
    first = false;
  }
  return out + "}";
}

SpacePtr make_space(int n, std::vector<PointMask> opens, std::vector<std::string> names) {
  return std::make_shared<const FiniteSpace>(
      FiniteSpace::validate(n, std::move(opens), std::move(names)));
}

SpacePtr alexandrov_from_preorder(const Preorder& p, std::vector<std::string> names) {
  p.validate();
  if (p.n > 24)
    throw TopoError(errc::too_large, "up-set enumeration capped at 24 points");
  std::vector<PointMask> opens;
  const PointMask all = full_mask(p.n);
  for (PointMask s = 0;; ++s) {
    bool up_closed = true;
    for (int i = 0; i < p.n && up_closed; ++i)
      if (s >> i & 1) up_closed = subset_of(p.up[static_cast<size_t>(i)], s);
    if (up_closed) opens.push_back(s);
    if (s == all) break;
  }
  return make_space(p.n, std::move(opens), std::move(names));
}

Preorder specialization_preorder(const FiniteSpace& s) {
  Preorder p;
  p.n = s.point_count();
  p.up.resize(static_cast<size_t>(p.n));
  // x <= y iff y lies in every open containing x, i.e. y is in the minimal
  // open around x.
  for (int x = 0; x < p.n; ++x) p.up[static_cast<size_t>(x)] = s.min_open_at(x);
  return p;
}

void require_same_space(const FiniteSpace& a, const FiniteSpace& b) {
  if (&a == &b) return;
  if (a != b) throw TopoError(errc::space_mismatch, "values belong to different spaces");
}

}  // namespace fintopo
