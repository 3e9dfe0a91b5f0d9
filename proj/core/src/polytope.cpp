#include "ncp/polytope.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <set>

namespace ncp {

void HPolytope::validate() const {
  for (const auto& ineq : inequalities) {
    if (ineq.normal.size() != dim) throw DimensionError("inequality normal has wrong length");
    if (std::all_of(ineq.normal.begin(), ineq.normal.end(), [](const Rational& q) { return q == 0; })) {
      throw InputError("inequality with all-zero normal");
    }
  }
}

void VPolytope::validate() const {
  std::set<Vector> seen;
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("point has wrong dimension");
    if (!seen.insert(p).second) throw InputError("duplicate point in V-description");
  }
  if (!labels.empty()) {
    if (labels.size() != points.size()) throw InputError("label count differs from point count");
    std::set<SignVector> seen_labels;
    for (const auto& l : labels) {
      if (l.size() != labels.front().size()) throw InputError("labels of different length");
      if (!seen_labels.insert(l).second) throw InputError("duplicate vertex label");
    }
  }
}

Inequality canonical_form(const Inequality& ineq) {
  Integer l = 1;
  for (const auto& q : ineq.normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(ineq.normal.size());
  Integer g = 0;
  for (const auto& q : ineq.normal) {
    ints.push_back(q.get_num() * (l / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) throw InputError("canonical_form of an all-zero normal");
  Inequality out;
  out.normal.reserve(ints.size());
  for (auto& z : ints) out.normal.emplace_back(Integer(z / g));
  out.rhs = ineq.rhs * Rational(l, g);
  out.rhs.canonicalize();
  return out;
}

FVector f_vector(const FaceLattice& lattice) {
  FVector f;
  f.reserve(lattice.size());
  for (const auto& faces : lattice) f.push_back(static_cast<std::int64_t>(faces.size()));
  return f;
}

}  // namespace ncp
