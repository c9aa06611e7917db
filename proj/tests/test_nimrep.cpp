#include <doctest.h>

#include <cmath>

#include "mtc/e6_data.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/nimrep.hpp"
#include "oracles.hpp"

using namespace mtc;

namespace {

IMatrix path_graph(int nodes) {
  IMatrix a(nodes, nodes);
  for (int i = 0; i + 1 < nodes; ++i) {
    a.at(i, i + 1) = 1;
    a.at(i + 1, i) = 1;
  }
  return a;
}

IMatrix d4_graph() {
  IMatrix a(4, 4);  // center 0, legs 1..3
  for (int leg = 1; leg < 4; ++leg) {
    a.at(0, leg) = 1;
    a.at(leg, 0) = 1;
  }
  return a;
}

NimRep dz2_boundary_nimrep() {
  NimRep nim;
  nim.ring = verlinde_fusion(drinfeld_double_abelian(AbelianGroup({2})));
  nim.boundaries = {"b0", "b1"};
  IMatrix id = IMatrix::identity(2), swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  // labels (g|chi): 0=unit, 1=e, 2=m, 3=f
  nim.R = {id, id, swap, swap};
  return nim;
}

}  // namespace

TEST_CASE("path graphs reproduce the regular NIM-rep") {
  for (int k = 1; k <= 12; ++k) {
    const auto nim = from_su2_graph(path_graph(k + 1), k);
    CHECK(verify(nim).passed());
    const auto regular = regular_nimrep(nim.ring);
    for (int i = 0; i <= k; ++i) CHECK(nim.R[i] == regular.R[i]);
  }
}

TEST_CASE("the six-node graph closes exactly at level 10") {
  const auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  CHECK(verify(nim).passed());
  CHECK_THROWS_AS(from_su2_graph(e6::dynkin_adjacency(), 9),
                  TruncationFailure);
}

TEST_CASE("incompatible graphs fail loudly") {
  IMatrix isolated(1, 1);
  CHECK_THROWS_AS(from_su2_graph(isolated, 2), NegativeEntry);
  IMatrix nonsym(2, 2);
  nonsym.at(0, 1) = 1;
  CHECK_THROWS_AS(from_su2_graph(nonsym, 2), ShapeMismatch);
}

TEST_CASE("corrupted NIM-rep fails verify with a counterexample") {
  auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  nim.R[6] = nim.R[6].transpose();
  auto perturbed = nim;
  // transpose alone is symmetric for this matrix; break an entry instead
  perturbed.R[6].at(0, 1) += 1;
  const auto rep = verify(perturbed);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("reconstruction and physicality on the level-10 example") {
  const auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  const auto algebra = reconstruct_algebra(nim);
  for (int x = 0; x <= 10; ++x)
    CHECK(algebra[x] == ((x == 0 || x == 6) ? 1 : 0));

  const auto m0 = physical_m0(nim);
  REQUIRE(m0.has_value());

  // Unit multiplicity 1 and dual-symmetry of the reconstructed object.
  CHECK(algebra[nim.ring.unit] == 1);
  for (int x = 0; x <= 10; ++x) CHECK(algebra[x] == algebra[nim.ring.dual[x]]);

  // branching at m0 gives the six decompositions
  const auto br = branching(nim, *m0);
  const auto& g = e6::golden();
  for (int gb = 0; gb < e6::kNumBoundaries; ++gb) {
    int found = 0;
    for (int node = 0; node < 6; ++node) {
      bool same = true;
      for (int x = 0; x < 11; ++x)
        if (br[node][x] != g.branching[gb][x]) same = false;
      found += same;
    }
    CHECK(found == 1);
  }
}

TEST_CASE("a diagonal-breaking permutation removes the physical m0") {
  auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  // Conjugate R(6) alone by (0 1)(2 4): R(6) minima move to boundaries
  // {1,2,5} while R(4) still pins {0,4}, so no boundary attains every
  // minimum simultaneously.
  IMatrix p(6, 6);
  p.at(0, 1) = p.at(1, 0) = 1;
  p.at(2, 4) = p.at(4, 2) = 1;
  p.at(3, 3) = p.at(5, 5) = 1;
  nim.R[6] = p * nim.R[6] * p;
  CHECK_FALSE(verify(nim).passed());  // no longer a representation
  CHECK_FALSE(physical_m0(nim).has_value());
}

TEST_CASE("boundary fusion consistency") {
  const auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  const auto m0 = physical_m0(nim);
  REQUIRE(m0.has_value());

  // the regular NIM-rep checks against its own ring
  const auto ring = verlinde_fusion(su2_level(6));
  const auto regular = regular_nimrep(ring);
  CHECK(boundary_fusion_check(regular, ring.unit, ring).passed());
}

TEST_CASE("boundary entropies agree with the Perron route") {
  struct Case {
    IMatrix graph;
    int level;
  };
  const Case cases[] = {{path_graph(5), 4},
                        {path_graph(9), 8},
                        {d4_graph(), 4},
                        {e6::dynkin_adjacency(), 10}};
  for (const auto& c : cases) {
    const auto nim = from_su2_graph(c.graph, c.level);
    const auto md = su2_level(c.level);
    const auto dims = boundary_dims(nim, md);
    const auto m0 = physical_m0(nim);
    REQUIRE(m0.has_value());
    const auto perron = oracle::perron_ratios(nim.R[1], *m0);
    for (size_t i = 0; i < dims.size(); ++i)
      CHECK(std::abs(dims[i] - perron[i]) < 1e-6);
  }
}

TEST_CASE("D4 reconstructs the even simple-current algebra") {
  const auto nim = from_su2_graph(d4_graph(), 4);
  CHECK(verify(nim).passed());
  const auto algebra = reconstruct_algebra(nim);
  for (int x = 0; x <= 4; ++x)
    CHECK(algebra[x] == ((x == 0 || x == 4) ? 1 : 0));
}

TEST_CASE("simple-current relation R(k - l) = R(k) R(l) on graph towers") {
  struct Case {
    IMatrix graph;
    int level;
  };
  const std::vector<Case> cases = [] {
    std::vector<Case> v;
    for (int k = 1; k <= 12; ++k) v.push_back({path_graph(k + 1), k});
    v.push_back({d4_graph(), 4});
    v.push_back({e6::dynkin_adjacency(), 10});
    return v;
  }();
  for (const auto& c : cases) {
    const auto nim = from_su2_graph(c.graph, c.level);
    for (int l = 0; l <= c.level; ++l) {
      CHECK(nim.R[c.level - l] == nim.R[c.level] * nim.R[l]);
      for (int m = 0; m <= c.level; ++m)
        CHECK(nim.R[l] * nim.R[m] == nim.R[m] * nim.R[l]);
    }
  }
}

TEST_CASE("two-boundary NIM-rep over D(Z2)") {
  const auto nim = dz2_boundary_nimrep();
  CHECK(verify(nim).passed());

  const auto algebra = reconstruct_algebra(nim);
  CHECK(algebra == std::vector<std::int64_t>{1, 1, 0, 0});

  const auto m0 = physical_m0(nim);
  REQUIRE(m0.has_value());
  CHECK(*m0 == 0);

  const auto br = branching(nim, *m0);
  CHECK(br[0] == std::vector<std::int64_t>{1, 1, 0, 0});
  CHECK(br[1] == std::vector<std::int64_t>{0, 0, 1, 1});

  // boundary ring = group ring of Z2
  const FusionRing z2 = group_ring({{0, 1}, {1, 0}});
  CHECK(boundary_fusion_check(nim, *m0, z2).passed());

  auto bad = z2;
  bad.coeff(1, 1, 1) = 1;
  CHECK_FALSE(boundary_fusion_check(nim, *m0, bad).passed());
}

TEST_CASE("boundary_dims needs a physical m0") {
  auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  IMatrix p(6, 6);
  p.at(0, 1) = p.at(1, 0) = 1;
  p.at(2, 4) = p.at(4, 2) = 1;
  p.at(3, 3) = p.at(5, 5) = 1;
  nim.R[6] = p * nim.R[6] * p;
  CHECK_THROWS_AS(boundary_dims(nim, su2_level(10)), NoPhysicalM0);
}

TEST_CASE("domination: the physical boundary minimizes every diagonal") {
  const auto nim = from_su2_graph(e6::dynkin_adjacency(), 10);
  const auto m0 = physical_m0(nim);
  REQUIRE(m0.has_value());
  for (int x = 0; x <= 10; ++x)
    for (int n = 0; n < 6; ++n)
      CHECK(nim.R[x].at(n, n) >= nim.R[x].at(*m0, *m0));
}
