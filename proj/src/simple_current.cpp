#include "mtc/simple_current.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

namespace {

// j (x) x for a simple current j is a single simple label.
int current_act(const ModularDatum& md, int j, int x) {
  const auto row = fusion_row(md, j, x);
  int target = -1;
  for (int k = 0; k < md.size(); ++k)
    if (row[k] != 0) {
      if (row[k] != 1 || target != -1)
        throw NotCurrents("current action is not free on label " +
                          std::to_string(x));
      target = k;
    }
  if (target < 0) throw NotCurrents("empty fusion row");
  return target;
}

}  // namespace

CurrentAlgebraCandidate candidate(const ModularDatum& md, std::vector<int> H) {
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  for (int j : H) {
    if (j < 0 || j >= md.size())
      throw DimensionMismatch("candidate: label out of range");
    if (!approx_eq(quantum_dim(md, j), Complex(1.0)))
      throw NotCurrents("candidate: label " + std::to_string(j) +
                        " has quantum dimension != 1");
  }
  if (!std::binary_search(H.begin(), H.end(), md.unit))
    throw NotClosed("candidate: unit not in H");
  const auto dual = charge_conjugation(md);
  for (int j : H) {
    if (!std::binary_search(H.begin(), H.end(), dual[j]))
      throw NotClosed("candidate: H not closed under duality");
    for (int l : H)
      if (!std::binary_search(H.begin(), H.end(), current_act(md, j, l)))
        throw NotClosed("candidate: H not closed under fusion");
  }
  return CurrentAlgebraCandidate{md, std::move(H)};
}

TwistAdmissibility twist_admissible(const CurrentAlgebraCandidate& c) {
  TwistAdmissibility out;
  out.passed = true;
  for (int j : c.subset) {
    TwistAdmissibility::Entry e;
    e.label = j;
    e.order = current_order(c.datum, j);
    e.twist = c.datum.theta[j];
    e.twist_power = phase_pow(e.twist, e.order);
    e.passed = e.twist_power == PhaseQ::one();
    out.passed = out.passed && e.passed;
    out.entries.push_back(e);
  }
  return out;
}

bool monodromy_neutral(const CurrentAlgebraCandidate& c) {
  for (int j : c.subset)
    for (int l : c.subset)
      if (!(monodromy_charge(c.datum, j, l) == PhaseQ::one())) return false;
  return true;
}

std::vector<int> local_sector(const CurrentAlgebraCandidate& c) {
  std::vector<int> local;
  for (int x = 0; x < c.datum.size(); ++x) {
    bool neutral = true;
    for (int j : c.subset)
      if (!(monodromy_charge(c.datum, x, j) == PhaseQ::one())) {
        neutral = false;
        break;
      }
    if (neutral) local.push_back(x);
  }
  return local;
}

ExtensionData extend(const CurrentAlgebraCandidate& c) {
  const ModularDatum& md = c.datum;
  for (int j : c.subset)
    if (!(md.theta[j] == PhaseQ::one()))
      throw NotAdmissible("extend: current " + std::to_string(j) +
                          " has non-trivial twist");
  if (!monodromy_neutral(c))
    throw NotAdmissible("extend: H is not monodromy-neutral");

  ExtensionData out;
  out.local = local_sector(c);
  std::set<int> local_set(out.local.begin(), out.local.end());

  std::vector<char> seen(md.size(), 0);
  for (int x : out.local) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (int j : c.subset) {
      const int y = current_act(md, j, x);
      if (!local_set.count(y))
        throw NotAdmissible("extend: orbit leaves the local sector");
      if (j != md.unit && y == x)
        throw FixedPointsPresent("extend: label " + std::to_string(x) +
                                 " is fixed by current " + std::to_string(j));
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    if (orbit.size() != c.subset.size())
      throw FixedPointsPresent("extend: orbit of label " + std::to_string(x) +
                               " has size " + std::to_string(orbit.size()));
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  std::sort(out.orbits.begin(), out.orbits.end());

  const int m = static_cast<int>(out.orbits.size());
  ModularDatum ext;
  ext.S = CMatrix(m, m);
  for (int a = 0; a < m; ++a) {
    const auto& orbit = out.orbits[a];
    std::string name;
    for (size_t i = 0; i < orbit.size(); ++i)
      name += (i ? "+" : "") + md.labels[orbit[i]];
    ext.labels.push_back(name);
    if (std::find(orbit.begin(), orbit.end(), md.unit) != orbit.end())
      ext.unit = a;
    // Twist is constant along an orbit when all theta_J = 1.
    const PhaseQ t = md.theta[orbit[0]];
    for (int member : orbit)
      if (!(md.theta[member] == t))
        throw NotAdmissible("extend: twist not constant on an orbit");
    ext.theta.push_back(t);
  }

  // Orbit-sum rule, then the unique positive rescaling to a unitary matrix.
  double frob = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Complex acc;
      for (int y : out.orbits[b]) acc += md.S.at(out.orbits[a][0], y);
      ext.S.at(a, b) = acc;
      frob += std::norm(acc);
    }
  const double scale = std::sqrt(static_cast<double>(m) / frob);
  for (auto& z : ext.S.a) z *= scale;

  const auto rep = validate(ext);
  if (!rep.passed())
    throw NotAdmissible("extend: extended datum fails validation:\n" +
                        rep.to_text());
  verlinde_fusion(ext);  // integrality is part of the contract
  out.extended = std::move(ext);
  return out;
}

CharacterVector s_transform(const ModularDatum& md, const CharacterVector& v) {
  const int n = md.size();
  if (v.size() != static_cast<size_t>(n))
    throw LengthMismatch("s_transform: vector length != n");
  CharacterVector out(n, 0.0);
  double imag = 0.0;
  for (int l = 0; l < n; ++l) {
    Complex acc;
    for (int mu = 0; mu < n; ++mu) acc += md.S.at(mu, l) * v[mu];
    out[l] = acc.real();
    imag = std::max(imag, std::abs(acc.imag()));
  }
  double scale = 1.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (imag > tolerance() * scale)
    throw Error("s_transform: result is not real for this datum");
  return out;
}

namespace {

void require_su2_level_10(const ModularDatum& md) {
  const ModularDatum ref = su2_level(10);
  if (md.size() != ref.size() || md.unit != ref.unit)
    throw WrongDatum("expected the 11-label level-10 su(2) datum");
  for (int a = 0; a < md.size(); ++a)
    if (!(md.theta[a] == ref.theta[a]))
      throw WrongDatum("twists do not match su2_level(10)");
  if (md.S.max_abs_diff(ref.S) > tolerance())
    throw WrongDatum("S-matrix does not match su2_level(10)");
}

}  // namespace

std::vector<std::pair<std::string, CharacterVector>> e6_character_set(
    const ModularDatum& md10) {
  require_su2_level_10(md10);
  const double dim6 = 2.0 + std::sqrt(3.0);
  const double rt = std::sqrt(dim6);

  const auto sum_of = [](std::initializer_list<int> labels) {
    CharacterVector v(11, 0.0);
    for (int l : labels) v[l] += 1.0;
    return v;
  };

  std::vector<std::pair<std::string, CharacterVector>> out;
  out.emplace_back("X(o-hat)", sum_of({0, 6}));
  out.emplace_back("X(v-hat)", sum_of({4, 10}));
  out.emplace_back("X(s-hat)", sum_of({3, 7}));
  out.emplace_back("X(o-check)", sum_of({1, 5, 7}));
  out.emplace_back("X(v-check)", sum_of({3, 5, 9}));
  out.emplace_back("X(s-check)", sum_of({2, 4, 6, 8}));

  CharacterVector xb_o(11, 0.0), xb_v(11, 0.0), xb_s(11, 0.0);
  xb_o[0] = rt;
  xb_o[6] = -1.0 / rt;
  xb_v[4] = 1.0 / rt;
  xb_v[10] = -rt;
  xb_s[3] = 1.0;
  xb_s[7] = -1.0;
  out.emplace_back("Xbreve(o-hat)", xb_o);
  out.emplace_back("Xbreve(v-hat)", xb_v);
  out.emplace_back("Xbreve(s-hat)", xb_s);

  CharacterVector chi5(11, 0.0);
  chi5[5] = 1.0;
  out.emplace_back("chi5", chi5);

  CharacterVector xb_minus(11, 0.0);
  const double inv_rt6 = 1.0 / std::sqrt(6.0);
  for (int l = 0; l <= 10; l += 2) xb_minus[l] = ((l / 2) % 2 ? -1.0 : 1.0) * inv_rt6;
  out.emplace_back("Xbreve(-)", xb_minus);
  return out;
}

ValidationReport e6_closure_check(const ModularDatum& md10) {
  require_su2_level_10(md10);
  const auto chars = e6_character_set(md10);
  const auto vec = [&chars](const std::string& name) -> const CharacterVector& {
    for (const auto& [n, v] : chars)
      if (n == name) return v;
    throw Error("e6_closure_check: unknown character " + name);
  };

  // Extended S-matrix in basis order (o-hat, s-hat, v-hat).
  const double r2 = std::sqrt(2.0) / 2.0;
  const double sx[3][3] = {{0.5, r2, 0.5}, {r2, 0.0, -r2}, {0.5, -r2, 0.5}};
  const char* hat[3] = {"X(o-hat)", "X(s-hat)", "X(v-hat)"};
  const char* chk[3] = {"X(o-check)", "X(s-check)", "X(v-check)"};
  const char* brv[3] = {"Xbreve(o-hat)", "Xbreve(s-hat)", "Xbreve(v-hat)"};

  constexpr double kBound = 1e-9;
  ValidationReport rep;
  const auto check_family = [&](const char* const* from, const char* const* to,
                                const std::string& tag) {
    for (int a = 0; a < 3; ++a) {
      const CharacterVector got = s_transform(md10, vec(from[a]));
      CharacterVector want(11, 0.0);
      for (int b = 0; b < 3; ++b) {
        const auto& vb = vec(to[b]);
        for (int l = 0; l < 11; ++l) want[l] += sx[a][b] * vb[l];
      }
      double dev = 0.0;
      for (int l = 0; l < 11; ++l) dev = std::max(dev, std::abs(got[l] - want[l]));
      rep.add(tag + " " + from[a], dev <= kBound, dev);
    }
  };
  check_family(hat, hat, "S:");
  check_family(chk, brv, "S:");
  check_family(brv, chk, "S:");

  {
    const CharacterVector got = s_transform(md10, vec("chi5"));
    const auto& want = vec("Xbreve(-)");
    double dev = 0.0;
    for (int l = 0; l < 11; ++l) dev = std::max(dev, std::abs(got[l] - want[l]));
    rep.add("S: chi5 -> Xbreve(-)", dev <= kBound, dev);
  }
  {
    const CharacterVector got = s_transform(md10, vec("Xbreve(-)"));
    const auto& want = vec("chi5");
    double dev = 0.0;
    for (int l = 0; l < 11; ++l) dev = std::max(dev, std::abs(got[l] - want[l]));
    rep.add("S: Xbreve(-) -> chi5", dev <= kBound, dev);
  }
  return rep;
}

}  // namespace mtc
