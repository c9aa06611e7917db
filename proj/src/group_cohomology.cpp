#include "mtc/group_cohomology.hpp"

#include <numeric>
#include <stdexcept>

#include "mtc/errors.hpp"

namespace mtc {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders)
    : orders(std::move(cyclic_orders)) {
  for (int n : orders) {
    if (n < 1) throw InputError("AbelianGroup: cyclic orders must be >= 1");
    size_ *= n;
  }
}

int AbelianGroup::exponent() const {
  int e = 1;
  for (int n : orders) e = std::lcm(e, n);
  return e;
}

std::vector<int> AbelianGroup::coords(int index) const {
  std::vector<int> c(orders.size());
  for (int i = rank() - 1; i >= 0; --i) {
    c[i] = index % orders[i];
    index /= orders[i];
  }
  return c;
}

int AbelianGroup::index(const std::vector<int>& coords) const {
  int idx = 0;
  for (int i = 0; i < rank(); ++i) {
    int c = coords[i] % orders[i];
    if (c < 0) c += orders[i];
    idx = idx * orders[i] + c;
  }
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  auto ca = coords(a);
  const auto cb = coords(b);
  for (int i = 0; i < rank(); ++i) ca[i] = (ca[i] + cb[i]) % orders[i];
  return index(ca);
}

int AbelianGroup::neg(int a) const {
  auto c = coords(a);
  for (int i = 0; i < rank(); ++i) c[i] = (orders[i] - c[i]) % orders[i];
  return index(c);
}

int AbelianGroup::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != identity()) {
    x = add(x, a);
    ++ord;
  }
  return ord;
}

Cocycle2::Cocycle2(int group_size, std::vector<PhaseQ> values)
    : n(group_size), table(std::move(values)) {
  if (table.size() != static_cast<size_t>(n) * n)
    throw IncompleteTable("Cocycle2: table size != |G|^2");
}

Cocycle2 trivial_cocycle(const AbelianGroup& g) {
  return Cocycle2(g.size(),
                  std::vector<PhaseQ>(static_cast<size_t>(g.size()) * g.size(),
                                      PhaseQ::one()));
}

Cocycle2 coboundary(const AbelianGroup& g, const std::vector<PhaseQ>& phi) {
  if (phi.size() != static_cast<size_t>(g.size()))
    throw IncompleteTable("coboundary: phi must have one value per element");
  if (!(phi[g.identity()] == PhaseQ::one()))
    throw InputError("coboundary: phi(identity) must be 1");
  Cocycle2 d = trivial_cocycle(g);
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      d.at(a, b) =
          phase_mul(phase_mul(phi[a], phi[b]), phase_inv(phi[g.add(a, b)]));
  return d;
}

bool is_cocycle(const AbelianGroup& g, const Cocycle2& psi) {
  const int n = g.size();
  if (psi.n != n || psi.table.size() != static_cast<size_t>(n) * n)
    throw IncompleteTable("is_cocycle: table does not match the group");
  const int e = g.identity();
  for (int a = 0; a < n; ++a)
    if (!(psi.at(e, a) == PhaseQ::one()) || !(psi.at(a, e) == PhaseQ::one()))
      return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.add(a, b);
      for (int c = 0; c < n; ++c) {
        // psi(a,b) psi(ab,c) = psi(b,c) psi(a,bc)
        const PhaseQ lhs = phase_mul(psi.at(a, b), psi.at(ab, c));
        const PhaseQ rhs = phase_mul(psi.at(b, c), psi.at(a, g.add(b, c)));
        if (!(lhs == rhs)) return false;
      }
    }
  return true;
}

std::vector<Cocycle2> cohomology_classes(const AbelianGroup& g) {
  if (g.size() > 256) throw TooLarge("cohomology_classes: |G| > 256");
  const int r = g.rank();
  const int n = g.size();

  // One free exponent b_ij in Z_{gcd(n_i,n_j)} per factor pair i < j.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> moduli;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      pairs.emplace_back(i, j);
      moduli.push_back(std::gcd(g.orders[i], g.orders[j]));
    }

  std::vector<Cocycle2> reps;
  std::vector<int> b(pairs.size(), 0);
  while (true) {
    Cocycle2 psi = trivial_cocycle(g);
    for (int x = 0; x < n; ++x) {
      const auto cx = g.coords(x);
      for (int y = 0; y < n; ++y) {
        const auto cy = g.coords(y);
        PhaseQ v = PhaseQ::one();
        for (size_t p = 0; p < pairs.size(); ++p) {
          const auto [i, j] = pairs[p];
          if (b[p] == 0) continue;
          v = phase_mul(v, PhaseQ(static_cast<std::int64_t>(b[p]) * cx[i] *
                                      cy[j],
                                  moduli[p]));
        }
        psi.at(x, y) = v;
      }
    }
    reps.push_back(std::move(psi));

    size_t p = 0;
    while (p < b.size()) {
      if (++b[p] < moduli[p]) break;
      b[p] = 0;
      ++p;
    }
    if (p == b.size()) break;
  }
  return reps;
}

bool coboundary_equiv(const AbelianGroup& g, const Cocycle2& psi1,
                      const Cocycle2& psi2) {
  const int n = g.size();
  if (psi1.n != n || psi2.n != n)
    throw IncompleteTable("coboundary_equiv: tables do not match the group");
  // The commutator psi(a,b)/psi(b,a) is invariant under coboundaries and
  // separates classes for finite abelian G over C^x.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const PhaseQ c1 = phase_mul(psi1.at(a, b), phase_inv(psi1.at(b, a)));
      const PhaseQ c2 = phase_mul(psi2.at(a, b), phase_inv(psi2.at(b, a)));
      if (!(c1 == c2)) return false;
    }
  return true;
}

}  // namespace mtc
