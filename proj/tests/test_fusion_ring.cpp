#include <doctest.h>

#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/nimrep.hpp"

using namespace mtc;

TEST_CASE("ring axioms pass for generated rings") {
  CHECK(check_ring_axioms(verlinde_fusion(su2_level(10))).passed());
  const auto dz2 = verlinde_fusion(drinfeld_double_abelian(AbelianGroup({2})));
  CHECK(check_ring_axioms(dz2).passed());
}

TEST_CASE("corrupted ring fails associativity with a counterexample") {
  auto ring = verlinde_fusion(su2_level(4));
  ring.coeff(1, 2, 3) += 1;
  const auto rep = check_ring_axioms(ring);
  CHECK_FALSE(rep.passed());
  const auto* assoc = rep.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->passed);
  CHECK(assoc->detail.find("counterexample") != std::string::npos);
}

TEST_CASE("fusion matrices") {
  const auto ring = verlinde_fusion(su2_level(10));
  CHECK(fusion_matrix(ring, ring.unit) == IMatrix::identity(11));

  const IMatrix n1 = fusion_matrix(ring, 1);
  for (int j = 0; j <= 10; ++j)
    for (int k = 0; k <= 10; ++k)
      CHECK(n1.at(j, k) == (std::abs(j - k) == 1 ? 1 : 0));

  for (int i = 0; i <= 10; ++i) {
    const IMatrix ni = fusion_matrix(ring, i);
    CHECK(fusion_matrix(ring, ring.dual[i]) == ni.transpose());
    for (int j = 0; j <= 10; ++j) {
      const IMatrix nj = fusion_matrix(ring, j);
      CHECK(ni * nj == nj * ni);  // commutative ring
    }
  }
}

TEST_CASE("regular NIM-rep verifies and reconstructs the unit") {
  for (int k = 1; k <= 8; ++k) {
    const auto ring = verlinde_fusion(su2_level(k));
    const auto nim = regular_nimrep(ring);
    CHECK(verify(nim).passed());
    const auto algebra = reconstruct_algebra(nim);
    for (int x = 0; x <= k; ++x)
      CHECK(algebra[x] == (x == ring.unit ? 1 : 0));

    const auto m0 = physical_m0(nim);
    REQUIRE(m0.has_value());
    CHECK(*m0 == ring.unit);
    // each boundary of the regular NIM-rep decomposes as itself
    const auto br = branching(nim, *m0);
    for (int n = 0; n <= k; ++n)
      for (int x = 0; x <= k; ++x) CHECK(br[n][x] == (n == x ? 1 : 0));
  }
  const auto dz2 = verlinde_fusion(drinfeld_double_abelian(AbelianGroup({2})));
  CHECK(verify(regular_nimrep(dz2)).passed());
}

TEST_CASE("integer overflow is detected, not wrapped") {
  const std::int64_t big = std::int64_t(1) << 62;
  std::vector<std::int64_t> coeffs(8, big);
  const FusionRing ring(2, 0, {0, 1}, coeffs);
  CHECK_THROWS_AS(check_ring_axioms(ring), std::overflow_error);
}

TEST_CASE("constructor shape checks") {
  CHECK_THROWS_AS(FusionRing(2, 0, {0}, std::vector<std::int64_t>(8, 0)),
                  ShapeMismatch);
  CHECK_THROWS_AS(FusionRing(2, 5, {0, 1}, std::vector<std::int64_t>(8, 0)),
                  ShapeMismatch);
  CHECK_THROWS_AS(FusionRing(2, 0, {0, 1}, std::vector<std::int64_t>(7, 0)),
                  ShapeMismatch);
}

TEST_CASE("group_ring helper builds the expected ring") {
  // Z2 group ring
  const FusionRing z2 = group_ring({{0, 1}, {1, 0}});
  CHECK(z2.unit == 0);
  CHECK(z2.dual[1] == 1);
  CHECK(check_ring_axioms(z2).passed());
  CHECK(z2.coeff(1, 1, 0) == 1);
}
