#include "mtc/fusion_ring.hpp"

#include <sstream>

#include "mtc/errors.hpp"
#include "mtc/nimrep.hpp"

namespace mtc {

FusionRing::FusionRing(int labels, int unit_label, std::vector<int> dual_perm,
                       std::vector<std::int64_t> coeffs)
    : n(labels), unit(unit_label), dual(std::move(dual_perm)),
      N(std::move(coeffs)) {
  if (n < 1) throw ShapeMismatch("FusionRing: need at least one label");
  if (unit < 0 || unit >= n)
    throw ShapeMismatch("FusionRing: unit out of range");
  if (dual.size() != static_cast<size_t>(n))
    throw ShapeMismatch("FusionRing: dual permutation length != n");
  if (N.size() != static_cast<size_t>(n) * n * n)
    throw ShapeMismatch("FusionRing: N tensor size != n^3");
  for (int d : dual)
    if (d < 0 || d >= n) throw ShapeMismatch("FusionRing: dual out of range");
}

FusionRing group_ring(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  int unit = -1;
  for (int e = 0; e < n; ++e) {
    bool is_unit = true;
    for (int a = 0; a < n; ++a)
      if (mul[e][a] != a || mul[a][e] != a) is_unit = false;
    if (is_unit) unit = e;
  }
  if (unit < 0) throw InputError("group_ring: table has no identity");
  std::vector<int> dual(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == unit) dual[a] = b;
  FusionRing fr(n, unit, dual,
                std::vector<std::int64_t>(static_cast<size_t>(n) * n * n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) fr.coeff(a, b, mul[a][b]) = 1;
  return fr;
}

ValidationReport check_ring_axioms(const FusionRing& fr) {
  const int n = fr.n;
  ValidationReport rep;

  bool nonneg = true;
  std::string nn_where;
  for (int i = 0; i < n && nonneg; ++i)
    for (int j = 0; j < n && nonneg; ++j)
      for (int k = 0; k < n && nonneg; ++k)
        if (fr.coeff(i, j, k) < 0) {
          nonneg = false;
          std::ostringstream os;
          os << "N[" << i << "][" << j << "][" << k << "] < 0";
          nn_where = os.str();
        }
  rep.add("non-negative entries", nonneg, 0.0, nn_where);

  bool unit_ok = true;
  std::string unit_where;
  for (int j = 0; j < n && unit_ok; ++j)
    for (int k = 0; k < n && unit_ok; ++k) {
      const std::int64_t want = (j == k) ? 1 : 0;
      if (fr.coeff(fr.unit, j, k) != want || fr.coeff(j, fr.unit, k) != want) {
        unit_ok = false;
        std::ostringstream os;
        os << "at (j,k)=(" << j << "," << k << ")";
        unit_where = os.str();
      }
    }
  rep.add("unit axiom", unit_ok, 0.0, unit_where);

  bool assoc = true;
  std::string assoc_where;
  for (int i = 0; i < n && assoc; ++i)
    for (int j = 0; j < n && assoc; ++j)
      for (int k = 0; k < n && assoc; ++k)
        for (int l = 0; l < n && assoc; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (int m = 0; m < n; ++m) {
            lhs = checked_add(lhs,
                              checked_mul(fr.coeff(i, j, m), fr.coeff(m, k, l)));
            rhs = checked_add(rhs,
                              checked_mul(fr.coeff(j, k, m), fr.coeff(i, m, l)));
          }
          if (lhs != rhs) {
            assoc = false;
            std::ostringstream os;
            os << "counterexample (i,j,k,l)=(" << i << "," << j << "," << k
               << "," << l << "): " << lhs << " != " << rhs;
            assoc_where = os.str();
          }
        }
  rep.add("associativity", assoc, 0.0, assoc_where);

  bool dual_ok = true;
  std::string dual_where;
  for (int i = 0; i < n && dual_ok; ++i) {
    if (fr.dual[fr.dual[i]] != i) {
      dual_ok = false;
      dual_where = "dual not involutive at " + std::to_string(i);
      break;
    }
    for (int j = 0; j < n && dual_ok; ++j) {
      const std::int64_t want = (j == fr.dual[i]) ? 1 : 0;
      if (fr.coeff(i, j, fr.unit) != want) {
        dual_ok = false;
        std::ostringstream os;
        os << "N[" << i << "][" << j << "][unit] != " << want;
        dual_where = os.str();
      }
    }
  }
  rep.add("duality", dual_ok, 0.0, dual_where);

  return rep;
}

IMatrix fusion_matrix(const FusionRing& fr, int i) {
  if (i < 0 || i >= fr.n) throw ShapeMismatch("fusion_matrix: label out of range");
  IMatrix m(fr.n, fr.n);
  for (int j = 0; j < fr.n; ++j)
    for (int k = 0; k < fr.n; ++k) m.at(j, k) = fr.coeff(i, j, k);
  return m;
}

NimRep regular_nimrep(const FusionRing& fr) {
  NimRep nim;
  nim.ring = fr;
  for (int i = 0; i < fr.n; ++i) {
    nim.boundaries.push_back(std::to_string(i));
    nim.R.push_back(fusion_matrix(fr, i));
  }
  return nim;
}

}  // namespace mtc
