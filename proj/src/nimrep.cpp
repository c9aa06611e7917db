#include "mtc/nimrep.hpp"

#include <cmath>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

namespace {

void require_shapes(const NimRep& nim) {
  const int n = nim.ring.n;
  const int b = nim.num_boundaries();
  if (b < 1) throw ShapeMismatch("nimrep: no boundaries");
  if (nim.R.size() != static_cast<size_t>(n))
    throw ShapeMismatch("nimrep: need one matrix per ring label");
  for (const auto& r : nim.R)
    if (r.rows != b || r.cols != b)
      throw ShapeMismatch("nimrep: matrix shape != boundaries x boundaries");
}

}  // namespace

ValidationReport verify(const NimRep& nim) {
  require_shapes(nim);
  const int n = nim.ring.n;
  const int b = nim.num_boundaries();
  ValidationReport rep;

  bool nonneg = true;
  std::string nn_where;
  for (int i = 0; i < n && nonneg; ++i)
    if (nim.R[i].min_entry() < 0) {
      nonneg = false;
      nn_where = "R(" + std::to_string(i) + ") has a negative entry";
    }
  rep.add("non-negative integer entries", nonneg, 0.0, nn_where);

  const bool unit_ok = nim.R[nim.ring.unit] == IMatrix::identity(b);
  rep.add("R(unit) = identity", unit_ok);

  bool dual_ok = true;
  std::string dual_where;
  for (int i = 0; i < n && dual_ok; ++i)
    if (!(nim.R[nim.ring.dual[i]] == nim.R[i].transpose())) {
      dual_ok = false;
      dual_where = "R(dual(" + std::to_string(i) + ")) != R(" +
                   std::to_string(i) + ")^t";
    }
  rep.add("R(dual) = transpose", dual_ok, 0.0, dual_where);

  bool hom = true;
  std::string hom_where;
  for (int i = 0; i < n && hom; ++i)
    for (int j = 0; j < n && hom; ++j) {
      const IMatrix lhs = nim.R[i] * nim.R[j];
      IMatrix rhs(b, b);
      for (int k = 0; k < n; ++k) {
        const std::int64_t c = nim.ring.coeff(i, j, k);
        if (c == 0) continue;
        for (int r = 0; r < b; ++r)
          for (int s = 0; s < b; ++s)
            rhs.at(r, s) =
                checked_add(rhs.at(r, s), checked_mul(c, nim.R[k].at(r, s)));
      }
      if (!(lhs == rhs)) {
        hom = false;
        for (int r = 0; r < b && hom_where.empty(); ++r)
          for (int s = 0; s < b; ++s)
            if (lhs.at(r, s) != rhs.at(r, s)) {
              std::ostringstream os;
              os << "counterexample (i,j,row,col)=(" << i << "," << j << ","
                 << r << "," << s << "): " << lhs.at(r, s)
                 << " != " << rhs.at(r, s);
              hom_where = os.str();
              break;
            }
      }
    }
  rep.add("representation property", hom, 0.0, hom_where);

  return rep;
}

NimRep from_su2_graph(const IMatrix& adjacency, int k) {
  if (adjacency.rows != adjacency.cols || adjacency.rows < 1)
    throw ShapeMismatch("from_su2_graph: adjacency must be square");
  const int b = adjacency.rows;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      const auto v = adjacency.at(i, j);
      if (v != 0 && v != 1)
        throw ShapeMismatch("from_su2_graph: adjacency entries must be 0/1");
      if (v != adjacency.at(j, i))
        throw ShapeMismatch("from_su2_graph: adjacency must be symmetric");
    }

  NimRep nim;
  nim.ring = verlinde_fusion(su2_level(k));
  for (int i = 0; i < b; ++i) nim.boundaries.push_back(std::to_string(i));

  // Chebyshev tower R(l+1) = R(1) R(l) - R(l-1); one step past the level
  // must land on zero.
  std::vector<IMatrix> tower;
  tower.push_back(IMatrix::identity(b));
  if (k >= 1) tower.push_back(adjacency);
  for (int l = 1; l <= k; ++l) {
    IMatrix next = adjacency * tower[l] - tower[l - 1];
    if (l < k && next.min_entry() < 0)
      throw NegativeEntry("from_su2_graph: recursion produced a negative "
                          "entry at step " + std::to_string(l + 1));
    tower.push_back(std::move(next));
  }
  if (!tower[k + 1].is_zero())
    throw TruncationFailure("from_su2_graph: R(" + std::to_string(k + 1) +
                            ") != 0; graph incompatible with the level");
  if (tower[k].min_entry() < 0)
    throw NegativeEntry("from_su2_graph: R(" + std::to_string(k) +
                        ") has a negative entry");
  tower.pop_back();
  nim.R = std::move(tower);
  return nim;
}

std::vector<std::int64_t> reconstruct_algebra(const NimRep& nim) {
  require_shapes(nim);
  std::vector<std::int64_t> mult(nim.ring.n, 0);
  for (int x = 0; x < nim.ring.n; ++x) {
    std::int64_t best = nim.R[x].at(0, 0);
    for (int m = 1; m < nim.num_boundaries(); ++m)
      best = std::min(best, nim.R[x].at(m, m));
    mult[x] = best;
  }
  return mult;
}

std::optional<int> physical_m0(const NimRep& nim) {
  require_shapes(nim);
  const auto mins = reconstruct_algebra(nim);
  for (int m = 0; m < nim.num_boundaries(); ++m) {
    bool attains_all = true;
    for (int x = 0; x < nim.ring.n && attains_all; ++x)
      if (nim.R[x].at(m, m) != mins[x]) attains_all = false;
    if (attains_all) return m;
  }
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> branching(const NimRep& nim, int m0) {
  require_shapes(nim);
  if (m0 < 0 || m0 >= nim.num_boundaries())
    throw ShapeMismatch("branching: boundary out of range");
  std::vector<std::vector<std::int64_t>> out(
      nim.num_boundaries(), std::vector<std::int64_t>(nim.ring.n, 0));
  for (int x = 0; x < nim.ring.n; ++x)
    for (int b = 0; b < nim.num_boundaries(); ++b)
      out[b][x] = nim.R[x].at(m0, b);
  return out;
}

ValidationReport boundary_fusion_check(const NimRep& nim, int m0,
                                       const FusionRing& candidate) {
  require_shapes(nim);
  const int b = nim.num_boundaries();
  if (candidate.n != b)
    throw ShapeMismatch("boundary_fusion_check: ring basis != boundaries");
  if (candidate.unit != m0)
    throw ShapeMismatch("boundary_fusion_check: candidate unit != m0");

  const auto bx = branching(nim, m0);
  std::vector<IMatrix> fm;
  for (int p = 0; p < b; ++p) fm.push_back(fusion_matrix(candidate, p));

  ValidationReport rep;
  bool ok = true;
  std::string where;
  for (int x = 0; x < nim.ring.n && ok; ++x) {
    IMatrix sum(b, b);
    for (int p = 0; p < b; ++p) {
      const std::int64_t c = bx[p][x];
      if (c == 0) continue;
      for (int r = 0; r < b; ++r)
        for (int s = 0; s < b; ++s)
          sum.at(r, s) = checked_add(sum.at(r, s), checked_mul(c, fm[p].at(r, s)));
    }
    if (!(sum == nim.R[x])) {
      ok = false;
      for (int r = 0; r < b && where.empty(); ++r)
        for (int s = 0; s < b; ++s)
          if (sum.at(r, s) != nim.R[x].at(r, s)) {
            std::ostringstream os;
            os << "label " << x << " at (" << r << "," << s
               << "): " << sum.at(r, s) << " != " << nim.R[x].at(r, s);
            where = os.str();
            break;
          }
    }
  }
  rep.add("R(X) = sum_p b_X^p N~_p", ok, 0.0, where);
  return rep;
}

std::vector<double> boundary_dims(const NimRep& nim, const ModularDatum& md) {
  require_shapes(nim);
  if (md.size() != nim.ring.n)
    throw ShapeMismatch("boundary_dims: datum does not match the ring");
  const auto m0 = physical_m0(nim);
  if (!m0) throw NoPhysicalM0("boundary_dims: no simultaneous minimum m0");

  const auto bx = branching(nim, *m0);
  std::vector<double> dims(nim.num_boundaries(), 0.0);
  for (int b = 0; b < nim.num_boundaries(); ++b) {
    double acc = 0.0;
    for (int x = 0; x < nim.ring.n; ++x)
      acc += static_cast<double>(bx[b][x]) * quantum_dim(md, x).real();
    dims[b] = acc;
  }
  const double norm = dims[*m0];
  for (auto& d : dims) d /= norm;
  return dims;
}

}  // namespace mtc
