#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

using i64 = std::int64_t;
using Matrix = std::vector<std::vector<i64>>;

}  // namespace

// Diagonalization by row/column operations carried out in Z/modulus; the
// transforms stay invertible mod the modulus and every entry stays in
// [0, modulus), so nothing can overflow. Kernel counts and solvability mod
// any divisor of the modulus only need *a* diagonal form under invertible
// transforms, not the canonical invariant factors.
Snf smith_normal_form(Matrix a, i64 modulus) {
  const int r = static_cast<int>(a.size());
  const int c = r ? static_cast<int>(a[0].size()) : 0;
  Snf s;
  s.rows = r;
  s.cols = c;
  s.modulus = modulus;
  s.U.assign(r, std::vector<i64>(r, 0));
  s.V.assign(c, std::vector<i64>(c, 0));
  for (int i = 0; i < r; ++i) s.U[i][i] = 1;
  for (int j = 0; j < c; ++j) s.V[j][j] = 1;

  const auto mod = [modulus](i64 v) {
    v %= modulus;
    return v < 0 ? v + modulus : v;
  };
  for (auto& row : a)
    for (auto& v : row) v = mod(v);

  const auto row_op = [&](Matrix& m, int i, int t, i64 q) {
    for (size_t j = 0; j < m[i].size(); ++j)
      m[i][j] = mod(m[i][j] - q * m[t][j]);
  };
  const auto col_op = [&](Matrix& m, int j, int t, i64 q) {
    for (size_t i = 0; i < m.size(); ++i) m[i][j] = mod(m[i][j] - q * m[i][t]);
  };

  const int steps = std::min(r, c);
  bool exhausted = false;
  for (int t = 0; t < steps && !exhausted; ++t) {
    while (true) {
      // smallest positive entry of the remaining block becomes the pivot
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j)
          if (a[i][j] != 0 && (pi < 0 || a[i][j] < a[pi][pj])) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      std::swap(a[t], a[pi]);
      std::swap(s.U[t], s.U[pi]);
      if (pj != t) {
        for (int i = 0; i < r; ++i) std::swap(a[i][t], a[i][pj]);
        for (int i = 0; i < c; ++i) std::swap(s.V[i][t], s.V[i][pj]);
      }

      const i64 p = a[t][t];
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        const i64 q = a[i][t] / p;
        if (q != 0) {
          row_op(a, i, t, q);
          row_op(s.U, i, t, q);
        }
        if (a[i][t] != 0) clean = false;  // remainder < p, retry with it
      }
      for (int j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        const i64 q = a[t][j] / p;
        if (q != 0) {
          col_op(a, j, t, q);
          col_op(s.V, j, t, q);
        }
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }
  s.diag.assign(steps, 0);
  for (int t = 0; t < steps; ++t) s.diag[t] = a[t][t];
  return s;
}

std::int64_t kernel_count_mod(const Snf& s, i64 n) {
  if (s.modulus % n != 0)
    throw std::invalid_argument("oracle: count modulus must divide the SNF "
                                "modulus");
  i64 count = 1;
  for (int j = 0; j < s.cols; ++j) {
    const i64 d = j < static_cast<int>(s.diag.size()) ? s.diag[j] : 0;
    i64 r = 0;
    const i64 factor = d == 0 ? n : std::gcd(d, n);
    if (__builtin_mul_overflow(count, factor, &r))
      throw std::overflow_error("oracle: kernel count overflow");
    count = r;
  }
  return count;
}

namespace {

// Constraint matrix of the normalized cocycle identity over exponents
// t(g,h), variables indexed by pairs of non-identity elements.
Matrix cocycle_constraints(const mtc::AbelianGroup& g) {
  const int n = g.size();
  const int nn = n - 1;  // non-identity elements, shifted by one
  const auto var = [nn](int a, int b) {
    return (a - 1) * nn + (b - 1);  // valid only for a,b >= 1
  };
  Matrix rows;
  std::vector<i64> row(static_cast<size_t>(nn) * nn, 0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) {
        std::fill(row.begin(), row.end(), 0);
        const int ab = g.add(a, b);
        const int bc = g.add(b, c);
        // t(a,b) + t(ab,c) - t(b,c) - t(a,bc) = 0; entries at the identity
        // are pinned to zero by normalization.
        row[var(a, b)] += 1;
        if (ab != 0) row[var(ab, c)] += 1;
        row[var(b, c)] -= 1;
        if (bc != 0) row[var(a, bc)] -= 1;
        if (std::any_of(row.begin(), row.end(), [](i64 v) { return v != 0; }))
          rows.push_back(row);
      }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (rows.empty()) rows.push_back(row);  // zero row keeps shapes sane
  return rows;
}

// Coboundary matrix: delta(phi)(a,b) = phi(a) + phi(b) - phi(ab) over the
// same pair index, phi indexed by non-identity elements.
Matrix coboundary_matrix(const mtc::AbelianGroup& g) {
  const int n = g.size();
  const int nn = n - 1;
  Matrix m(static_cast<size_t>(nn) * nn, std::vector<i64>(nn, 0));
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      auto& row = m[static_cast<size_t>(a - 1) * nn + (b - 1)];
      row[a - 1] += 1;
      row[b - 1] += 1;
      const int ab = g.add(a, b);
      if (ab != 0) row[ab - 1] -= 1;
    }
  return m;
}

// y = U * b reduced mod the SNF modulus.
std::vector<i64> apply_u(const Snf& s, const std::vector<i64>& b) {
  std::vector<i64> y(s.U.size(), 0);
  for (size_t i = 0; i < s.U.size(); ++i) {
    i64 acc = 0;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc = (acc + s.U[i][j] % s.modulus * (b[j] % s.modulus)) %
                           s.modulus;
    y[i] = (acc % s.modulus + s.modulus) % s.modulus;
  }
  return y;
}

// D z == y (mod n) solvable?
bool solvable(const Snf& s, const std::vector<i64>& y, i64 n) {
  for (int i = 0; i < s.rows; ++i) {
    const i64 d = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
    const i64 m = d == 0 ? n : std::gcd(d, n);
    if (((y[i] % n) + n) % n % m != 0) return false;
  }
  return true;
}

}  // namespace

std::int64_t h2_class_count(const mtc::AbelianGroup& g) {
  if (g.size() == 1) return 1;
  const i64 e = g.exponent();
  const i64 e2 = e * e;
  const int n_phi = g.size() - 1;

  const Snf cocycle = smith_normal_form(cocycle_constraints(g), e);
  const i64 num_cocycles = kernel_count_mod(cocycle, e);

  const Snf delta = smith_normal_form(coboundary_matrix(g), e2);
  // |B| = |{phi mod e^2 : delta(phi) = 0 mod e}| / |ker(delta) mod e^2|
  //     = e^{n_phi} * K_e / K_{e^2}
  __int128 b = kernel_count_mod(delta, e);
  for (int i = 0; i < n_phi; ++i) b *= e;
  const i64 ker2 = kernel_count_mod(delta, e2);
  if (b % ker2 != 0) throw std::logic_error("oracle: |B| is not integral");
  b /= ker2;
  if (num_cocycles % b != 0)
    throw std::logic_error("oracle: |Z^2| not divisible by |B|");
  return static_cast<i64>(num_cocycles / b);
}

namespace {

// Exponent table of psi1/psi2 over non-identity pairs, lifted to mu_L.
std::vector<i64> ratio_exponents(const mtc::AbelianGroup& g,
                                 const mtc::Cocycle2& psi1,
                                 const mtc::Cocycle2& psi2, i64 L) {
  const int n = g.size();
  const int nn = n - 1;
  std::vector<i64> t(static_cast<size_t>(nn) * nn, 0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const mtc::PhaseQ p =
          phase_mul(psi1.at(a, b), phase_inv(psi2.at(a, b)));
      if (L % p.den != 0)
        throw std::invalid_argument("oracle: ratio outside mu_L");
      t[static_cast<size_t>(a - 1) * nn + (b - 1)] = p.num * (L / p.den);
    }
  return t;
}

}  // namespace

bool equivalent_by_solvability(const mtc::AbelianGroup& g,
                               const mtc::Cocycle2& a, const mtc::Cocycle2& b) {
  if (g.size() == 1) return true;
  const i64 e = g.exponent();
  // Any phi with delta(phi) = psi1/psi2 has phi^D a character, hence values
  // in mu_{D e}, where D is the order of the ratio's values.
  i64 d = 1;
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      d = std::lcm(d, a.at(x, y).den);
      d = std::lcm(d, b.at(x, y).den);
    }
  const i64 L = d * e;
  const Snf delta = smith_normal_form(coboundary_matrix(g), L);
  return solvable(delta, apply_u(delta, ratio_exponents(g, a, b, L)), L);
}

std::int64_t h2_enumerate_and_classify(const mtc::AbelianGroup& g,
                                       std::int64_t* num_cocycles) {
  if (g.size() == 1) {
    if (num_cocycles) *num_cocycles = 1;
    return 1;
  }
  const i64 e = g.exponent();
  const i64 e2 = e * e;
  const int nn = g.size() - 1;
  const int nvars = nn * nn;

  const Snf cocycle = smith_normal_form(cocycle_constraints(g), e);
  const Snf delta = smith_normal_form(coboundary_matrix(g), e2);

  // Kernel mod e: z_j ranges over multiples of e/gcd(d_j, e); x = V z.
  std::vector<i64> step(nvars), choices(nvars);
  for (int j = 0; j < nvars; ++j) {
    const i64 d =
        j < static_cast<int>(cocycle.diag.size()) ? cocycle.diag[j] : 0;
    const i64 gd = d == 0 ? e : std::gcd(d, e);
    choices[j] = gd;
    step[j] = e / gd;
  }

  // Odometer over z with incremental column updates of x = V z (mod e).
  std::vector<i64> x(nvars, 0), counter(nvars, 0);
  std::vector<std::vector<i64>> reps_y;  // U_delta * lift(x) per class rep
  i64 total = 0;
  while (true) {
    ++total;
    std::vector<i64> lifted(nvars);
    for (int i = 0; i < nvars; ++i) lifted[i] = ((x[i] % e + e) % e) * e;
    const auto y = apply_u(delta, lifted);
    bool known = false;
    for (const auto& ry : reps_y) {
      std::vector<i64> diff(y.size());
      for (size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - ry[i];
      if (solvable(delta, diff, e2)) {
        known = true;
        break;
      }
    }
    if (!known) reps_y.push_back(y);

    // advancing digit j by a full cycle adds e * V column = 0 mod e, so a
    // wrap needs no undo
    int j = 0;
    while (j < nvars) {
      ++counter[j];
      for (int i = 0; i < nvars; ++i)
        x[i] = (x[i] + step[j] * cocycle.V[i][j]) % e;
      if (counter[j] < choices[j]) break;
      counter[j] = 0;
      ++j;
    }
    if (j == nvars) break;
  }
  if (num_cocycles) *num_cocycles = total;
  return static_cast<i64>(reps_y.size());
}

std::int64_t su2_cg_coeff(int k, int i, int j, int l) {
  if ((i + j + l) % 2 != 0) return 0;
  if (l < std::abs(i - j)) return 0;
  if (l > std::min(i + j, 2 * k - i - j)) return 0;
  return 1;
}

std::vector<double> perron_ratios(const mtc::IMatrix& m, int m0) {
  const int n = m.rows;
  std::vector<double> v(n, 1.0), w(n, 0.0);
  for (int iter = 0; iter < 20000; ++iter) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double acc = v[i];  // shift keeps the iteration on the Perron branch
      for (int j = 0; j < n; ++j)
        acc += static_cast<double>(m.at(i, j)) * v[j];
      w[i] = acc;
      norm = std::max(norm, std::abs(acc));
    }
    double delta = 0.0;
    for (int i = 0; i < n; ++i) {
      w[i] /= norm;
      delta = std::max(delta, std::abs(w[i] - v[i]));
      v[i] = w[i];
    }
    if (delta < 1e-14) break;
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = v[i] / v[m0];
  return out;
}

}  // namespace oracle
