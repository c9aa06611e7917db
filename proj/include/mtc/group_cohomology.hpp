#pragma once

#include <vector>

#include "mtc/scalars.hpp"

namespace mtc {

// Finite abelian group as a product of cyclic factors Z_{n_1} x ... x Z_{n_r}.
// Elements are indexed 0..|G|-1 in lexicographic order of their coordinate
// vectors (first coordinate most significant); index 0 is the identity.
struct AbelianGroup {
  std::vector<int> orders;

  explicit AbelianGroup(std::vector<int> cyclic_orders = {});

  int size() const { return size_; }
  int rank() const { return static_cast<int>(orders.size()); }
  int exponent() const;  // lcm of the cyclic orders (1 for the trivial group)

  std::vector<int> coords(int index) const;
  int index(const std::vector<int>& coords) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int identity() const { return 0; }
  int element_order(int a) const;

 private:
  int size_ = 1;
};

// Normalized 2-cochain G x G -> U(1) as a dense PhaseQ table, indexed
// table[g*|G| + h].
struct Cocycle2 {
  int n = 0;
  std::vector<PhaseQ> table;

  Cocycle2() = default;
  Cocycle2(int group_size, std::vector<PhaseQ> values);

  PhaseQ at(int g, int h) const { return table[static_cast<size_t>(g) * n + h]; }
  PhaseQ& at(int g, int h) { return table[static_cast<size_t>(g) * n + h]; }
};

Cocycle2 trivial_cocycle(const AbelianGroup& g);

// delta(phi)(g,h) = phi(g)*phi(h)/phi(gh); phi indexed over elements,
// phi[identity] must be 1.
Cocycle2 coboundary(const AbelianGroup& g, const std::vector<PhaseQ>& phi);

// Exact check of normalization and the cocycle identity
// psi(g,h) psi(gh,l) = psi(h,l) psi(g,hl).
bool is_cocycle(const AbelianGroup& g, const Cocycle2& psi);

// One representative per class of H^2(G, C^x): the alternating-bicharacter
// cocycles psi_b(g,h) = prod_{i<j} e^{2 pi i b_ij g_i h_j / gcd(n_i,n_j)}.
// The trivial class comes first; count = prod_{i<j} gcd(n_i, n_j).
std::vector<Cocycle2> cohomology_classes(const AbelianGroup& g);

// Coboundary equivalence over C^x, decided by the antisymmetrization
// invariant psi(g,h)/psi(h,g) (complete for finite abelian G).
bool coboundary_equiv(const AbelianGroup& g, const Cocycle2& psi1,
                      const Cocycle2& psi2);

}  // namespace mtc
