#include "mtc/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

namespace {

void require_shape(const ModularDatum& md) {
  const int n = md.size();
  if (n == 0) throw DimensionMismatch("modular datum: no labels");
  if (md.S.rows != n || md.S.cols != n)
    throw DimensionMismatch("modular datum: S is not n x n");
  if (md.theta.size() != static_cast<size_t>(n))
    throw DimensionMismatch("modular datum: theta length != n");
  if (md.unit < 0 || md.unit >= n)
    throw DimensionMismatch("modular datum: unit label out of range");
}

// Rounds S^2 to a 0/1 matrix; returns false (with position) if some entry
// is neither.
bool round_s_squared(const ModularDatum& md, IMatrix& out, double& worst,
                     std::string& where) {
  const CMatrix s2 = md.S * md.S;
  const int n = md.size();
  out = IMatrix(n, n);
  worst = 0.0;
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d0 = std::abs(s2.at(i, j));
      const double d1 = std::abs(s2.at(i, j) - Complex(1.0, 0.0));
      const double d = std::min(d0, d1);
      worst = std::max(worst, d);
      if (d > tolerance()) {
        if (ok) {
          std::ostringstream os;
          os << "S^2[" << i << "][" << j << "] = " << s2.at(i, j).real()
             << (s2.at(i, j).imag() < 0 ? "-" : "+")
             << std::abs(s2.at(i, j).imag()) << "i";
          where = os.str();
        }
        ok = false;
      } else {
        out.at(i, j) = d1 < d0 ? 1 : 0;
      }
    }
  return ok;
}

bool is_permutation(const IMatrix& m) {
  for (int i = 0; i < m.rows; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < m.cols; ++j) {
      row += static_cast<int>(m.at(i, j));
      col += static_cast<int>(m.at(j, i));
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const ModularDatum& md) {
  require_shape(md);
  const int n = md.size();
  ValidationReport rep;

  double sym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sym = std::max(sym, std::abs(md.S.at(i, j) - md.S.at(j, i)));
  rep.add("S symmetric", sym <= tolerance(), sym);

  const double uni = (md.S * md.S.adjoint()).max_abs_diff(CMatrix::identity(n));
  rep.add("S unitary", uni <= tolerance(), uni);

  rep.add("theta[unit] = 1", md.theta[md.unit] == PhaseQ::one());

  IMatrix conj;
  double cdev = 0.0;
  std::string where;
  const bool rounded = round_s_squared(md, conj, cdev, where);
  const bool perm = rounded && is_permutation(conj);
  rep.add("S^2 is a permutation (charge conjugation)", perm, cdev, where);

  double unit_row = 0.0;
  bool positive = true;
  for (int a = 0; a < n; ++a) {
    const Complex v = md.S.at(md.unit, a);
    unit_row = std::max(unit_row, std::abs(v.imag()));
    if (v.real() <= tolerance()) positive = false;
  }
  rep.add("S[unit][.] real and strictly positive",
          positive && unit_row <= tolerance(), unit_row);

  return rep;
}

Complex quantum_dim(const ModularDatum& md, int a) {
  require_shape(md);
  if (a < 0 || a >= md.size())
    throw DimensionMismatch("quantum_dim: label out of range");
  return md.S.at(md.unit, a) / md.S.at(md.unit, md.unit);
}

std::vector<int> charge_conjugation(const ModularDatum& md) {
  require_shape(md);
  IMatrix conj;
  double dev = 0.0;
  std::string where;
  if (!round_s_squared(md, conj, dev, where) || !is_permutation(conj))
    throw DimensionMismatch("charge conjugation: S^2 is not a permutation");
  std::vector<int> dual(md.size());
  for (int i = 0; i < md.size(); ++i)
    for (int j = 0; j < md.size(); ++j)
      if (conj.at(i, j) == 1) dual[i] = j;
  return dual;
}

std::vector<std::int64_t> fusion_row(const ModularDatum& md, int i, int j) {
  require_shape(md);
  const int n = md.size();
  std::vector<std::int64_t> row(n);
  for (int k = 0; k < n; ++k) {
    Complex acc;
    for (int a = 0; a < n; ++a)
      acc += md.S.at(i, a) * md.S.at(j, a) * std::conj(md.S.at(k, a)) /
             md.S.at(md.unit, a);
    const double v = acc.real();
    const std::int64_t r = std::llround(v);
    if (std::abs(v - static_cast<double>(r)) > 1e-6 ||
        std::abs(acc.imag()) > 1e-6 || r < 0)
      throw NonIntegralFusion("fusion_row: coefficient is not a non-negative "
                              "integer");
    row[k] = r;
  }
  return row;
}

FusionRing verlinde_fusion(const ModularDatum& md, double* max_deviation) {
  require_shape(md);
  const int n = md.size();
  const std::vector<int> dual = charge_conjugation(md);

  FusionRing fr(n, md.unit, dual,
                std::vector<std::int64_t>(static_cast<size_t>(n) * n * n, 0));
  double worst = 0.0;

  // N_i = S diag(S_{ia}/S_{unit,a}) S^dagger, one matrix product per label.
  const CMatrix sdag = md.S.adjoint();
  for (int i = 0; i < n; ++i) {
    CMatrix sd(n, n);
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        sd.at(j, a) = md.S.at(j, a) * md.S.at(i, a) / md.S.at(md.unit, a);
    const CMatrix ni = sd * sdag;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Complex z = ni.at(j, k);
        const std::int64_t r = std::llround(z.real());
        const double dev = std::max(
            std::abs(z.real() - static_cast<double>(r)), std::abs(z.imag()));
        worst = std::max(worst, dev);
        if (dev > 1e-6 || r < 0) {
          std::ostringstream os;
          os << "verlinde_fusion: N[" << i << "][" << j << "][" << k
             << "] deviates from a non-negative integer by " << dev;
          throw NonIntegralFusion(os.str());
        }
        fr.coeff(i, j, k) = r;
      }
  }
  if (max_deviation) *max_deviation = worst;
  return fr;
}

PhaseQ monodromy_charge(const ModularDatum& md, int x, int j) {
  require_shape(md);
  if (x < 0 || x >= md.size() || j < 0 || j >= md.size())
    throw DimensionMismatch("monodromy_charge: label out of range");
  const Complex dj = quantum_dim(md, j);
  if (!approx_eq(dj, Complex(1.0, 0.0)))
    throw NotASimpleCurrent("monodromy_charge: d_j != 1");

  const Complex ratio = md.S.at(x, j) / md.S.at(x, md.unit);
  if (std::abs(std::abs(ratio) - 1.0) > 1e-6)
    throw PhaseSnapFailure("monodromy_charge: |S[x][j]| != |S[x][unit]|");

  double phase = std::arg(ratio) / (2.0 * std::numbers::pi);
  phase -= std::floor(phase);

  const std::int64_t max_den =
      static_cast<std::int64_t>(md.size()) * current_order(md, j);
  std::int64_t best_num = 0, best_den = 1;
  double best_err = std::abs(phase - std::round(phase));
  for (std::int64_t den = 1; den <= max_den; ++den) {
    const std::int64_t num = std::llround(phase * static_cast<double>(den));
    const double err = std::abs(phase - static_cast<double>(num) / den);
    if (err + 1e-15 < best_err) {
      best_err = err;
      best_num = num;
      best_den = den;
    }
  }
  if (best_err > 1e-6)
    throw PhaseSnapFailure("monodromy_charge: phase does not snap to a "
                           "rational with bounded denominator");
  return PhaseQ(best_num, best_den);
}

std::vector<int> simple_currents(const ModularDatum& md) {
  require_shape(md);
  const int n = md.size();
  std::vector<int> currents;
  std::vector<char> is_current(n, 0);
  for (int a = 0; a < n; ++a) {
    const Complex d = quantum_dim(md, a);
    if (approx_eq(d, Complex(1.0, 0.0))) {
      currents.push_back(a);
      is_current[a] = 1;
    }
  }
  const std::vector<int> dual = charge_conjugation(md);
  for (int a : currents) {
    if (!is_current[dual[a]])
      throw Error("simple_currents: set not closed under duality");
    for (int b : currents) {
      const auto row = fusion_row(md, a, b);
      int target = -1;
      for (int k = 0; k < n; ++k) {
        if (row[k] == 0) continue;
        if (row[k] != 1 || target != -1)
          throw Error("simple_currents: current fusion is not a permutation");
        target = k;
      }
      if (target < 0 || !is_current[target])
        throw Error("simple_currents: set not closed under fusion");
    }
  }
  return currents;
}

int current_order(const ModularDatum& md, int j) {
  const Complex dj = quantum_dim(md, j);
  if (!approx_eq(dj, Complex(1.0, 0.0)))
    throw NotASimpleCurrent("current_order: d_j != 1");
  int order = 1;
  int x = j;
  while (x != md.unit) {
    const auto row = fusion_row(md, j, x);
    int next = -1;
    for (int k = 0; k < md.size(); ++k)
      if (row[k] != 0) {
        if (next != -1 || row[k] != 1)
          throw NotASimpleCurrent("current_order: fusion with j is not free");
        next = k;
      }
    x = next;
    if (++order > md.size() + 1)
      throw Error("current_order: fusion orbit does not close");
  }
  return order;
}

ModularDatum su2_level(int k) {
  if (k < 1) throw InputError("su2_level: k must be >= 1");
  const int n = k + 1;
  ModularDatum md;
  md.unit = 0;
  md.S = CMatrix(n, n);
  const double norm = std::sqrt(2.0 / (k + 2));
  for (int a = 0; a < n; ++a) {
    md.labels.push_back(std::to_string(a));
    md.theta.emplace_back(static_cast<std::int64_t>(a) * (a + 2),
                          static_cast<std::int64_t>(4) * (k + 2));
    for (int b = 0; b < n; ++b)
      md.S.at(a, b) = norm * std::sin(std::numbers::pi * (a + 1) * (b + 1) /
                                      (k + 2));
  }
  return md;
}

ModularDatum drinfeld_double_abelian(const AbelianGroup& g) {
  const int m = g.size();
  const int n = m * m;  // labels (g, chi)
  ModularDatum md;
  md.unit = 0;
  md.S = CMatrix(n, n);
  md.labels.reserve(n);
  md.theta.reserve(n);

  // chi_a(h) = e^{2 pi i sum_i a_i h_i / n_i}
  const auto character = [&g](int a, int h) {
    const auto ca = g.coords(a);
    const auto ch = g.coords(h);
    PhaseQ v = PhaseQ::one();
    for (int i = 0; i < g.rank(); ++i)
      v = phase_mul(v, PhaseQ(static_cast<std::int64_t>(ca[i]) * ch[i],
                              g.orders[i]));
    return v;
  };

  const auto label_name = [&g](int elem, int chi) {
    std::ostringstream os;
    os << "(";
    const auto ce = g.coords(elem);
    for (size_t i = 0; i < ce.size(); ++i) os << (i ? "," : "") << ce[i];
    os << "|";
    const auto cc = g.coords(chi);
    for (size_t i = 0; i < cc.size(); ++i) os << (i ? "," : "") << cc[i];
    os << ")";
    return os.str();
  };

  for (int ga = 0; ga < m; ++ga)
    for (int ca = 0; ca < m; ++ca) {
      md.labels.push_back(label_name(ga, ca));
      md.theta.push_back(character(ca, ga));
    }
  for (int ga = 0; ga < m; ++ga)
    for (int ca = 0; ca < m; ++ca)
      for (int gb = 0; gb < m; ++gb)
        for (int cb = 0; cb < m; ++cb) {
          const PhaseQ v = phase_mul(character(ca, gb), character(cb, ga));
          md.S.at(ga * m + ca, gb * m + cb) =
              to_complex(v) / static_cast<double>(m);
        }
  return md;
}

}  // namespace mtc
