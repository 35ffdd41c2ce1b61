#include <doctest.h>

#include <random>
#include <set>

#include "cubecrys/decide.hpp"
#include "cubecrys/error.hpp"
#include "oracles.hpp"

using namespace cubecrys;

namespace {

HyperoctahedralWitness accepted(const Verdict &v) {
  REQUIRE(std::holds_alternative<HyperoctahedralWitness>(v));
  return std::get<HyperoctahedralWitness>(v);
}

RejectionCertificate rejected(const Verdict &v) {
  REQUIRE(std::holds_alternative<RejectionCertificate>(v));
  return std::get<RejectionCertificate>(v);
}

/// Checks A iota(p) A^-1 = theta(p) for every point element by direct
/// multiplication, without the library's residual helper.
void check_conjugation(const CrystGroup &g, const HyperoctahedralWitness &w) {
  REQUIRE(w.iota.size() == g.points().order());
  const RatMatrix l_inv = inverse(g.lattice_basis);
  const RatMatrix a_inv = inverse(w.conjugator);
  for (std::size_t e = 0; e < g.points().order(); ++e) {
    RatMatrix theta = oracle::mat_mul(oracle::mat_mul(g.lattice_basis, g.points().elements[e]), l_inv);
    RatMatrix conj = oracle::mat_mul(oracle::mat_mul(w.conjugator, to_matrix(w.iota[e])), a_inv);
    CHECK(conj == theta);
  }
}

CrystGroup square_group(std::string name, std::vector<RatMatrix> gens) {
  CrystGroup g;
  g.name = std::move(name);
  g.dimension = 2;
  g.lattice_basis = RatMatrix::identity(2);
  for (std::size_t k = 0; k < gens.size(); ++k)
    g.translation_parts.emplace_back(2);
  g.point_generators = std::move(gens);
  validate(g);
  return g;
}

RatMatrix random_unimodular(std::mt19937_64 &rng, std::size_t n) {
  RatMatrix u = RatMatrix::identity(n);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j)
      continue;
    RatMatrix e = RatMatrix::identity(n);
    e(i, j) = static_cast<std::int64_t>(rng() % 5) - 2;
    u = u * e;
  }
  return u;
}

} // namespace

TEST_CASE("p4m: identity embedding with identity conjugator") {
  CrystGroup g = catalog_entry("p4m");
  const auto w = accepted(is_hyperoctahedral(g));
  CHECK(w.conjugator == RatMatrix::identity(2));
  for (std::size_t e = 0; e < g.points().order(); ++e)
    CHECK(to_matrix(w.iota[e]) == g.points().elements[e]);
  check_conjugation(g, w);

  auto basis = hyperoctahedral_basis(g, w);
  CHECK(basis == std::vector<RatVector>{{1, 0}, {0, 1}});
  RatMatrix rot{{0, -1}, {1, 0}};
  CHECK(rot * basis[0] == basis[1]);
  CHECK(rot * basis[1] == Rational(-1) * basis[0]);
}

TEST_CASE("W: order obstruction") {
  const auto c = rejected(is_hyperoctahedral(catalog_entry("W")));
  CHECK(c.reason == RejectionReason::OrderObstruction);
  REQUIRE(c.obstruction.has_value());
  CHECK(c.obstruction->order == 6);
  CHECK(c.obstruction->available_orders == std::vector<std::size_t>{1, 2, 4});
  CHECK(c.describe().find("order 6") != std::string::npos);
}

TEST_CASE("Z x W: character mismatch, Z x| W: accepted") {
  const auto c = rejected(is_hyperoctahedral(catalog_entry("Z_x_W")));
  CHECK(c.reason == RejectionReason::CharacterMismatch);
  REQUIRE(c.obstruction.has_value());
  CHECK(c.obstruction->order == 6);
  CHECK(c.obstruction->determinant == 1);
  for (auto [trace, det] : c.obstruction->same_order_characters)
    CHECK(det == -1);

  CrystGroup zrw = catalog_entry("Z_rtimes_W");
  const auto w = accepted(is_hyperoctahedral(zrw));
  check_conjugation(zrw, w);
  REQUIRE(w.generator_images.size() == 1);
  auto cls = classify_element(w.generator_images[0]);
  CHECK(cls.order == 6);
  CHECK(cls.determinant == -1);

  // Z^2 x W is rejected the same way.
  CrystGroup z2w = semidirect_extend(catalog_entry("W"), 2, {RatMatrix::identity(2)});
  const auto c2 = rejected(is_hyperoctahedral(z2w));
  CHECK(c2.reason == RejectionReason::CharacterMismatch);
}

TEST_CASE("hyperoctahedral_basis examples") {
  CrystGroup p1 = square_group("p1", {});
  const auto w1 = accepted(is_hyperoctahedral(p1));
  CHECK(w1.conjugator == RatMatrix::identity(2));
  CHECK(hyperoctahedral_basis(p1, w1) == std::vector<RatVector>{{1, 0}, {0, 1}});

  CrystGroup cm = catalog_entry("cm");
  const auto w = accepted(is_hyperoctahedral(cm));
  auto basis = hyperoctahedral_basis(cm, w);
  CHECK(basis == std::vector<RatVector>{cm.lattice_basis.column(0), cm.lattice_basis.column(1)});
  CHECK(w.generator_images[0] == SignedPermutation({1, 0}, {1, 1}));

  HyperoctahedralWitness broken = w;
  broken.conjugator = RatMatrix{{1, 0}, {0, 2}};
  CHECK_THROWS_AS(hyperoctahedral_basis(cm, broken), WitnessCorruptionError);
}

TEST_CASE("quick_obstructions examples") {
  CHECK(quick_obstructions(catalog_entry("p2")).empty());
  auto w = quick_obstructions(catalog_entry("W"));
  REQUIRE(w.size() == 1);
  CHECK(w[0].order == 6);
  CHECK(w[0].available_orders == std::vector<std::size_t>{1, 2, 4});
  auto p3 = quick_obstructions(catalog_entry("p3"));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].order == 3);
  CHECK(quick_obstructions(catalog_entry("Z_rtimes_W")).empty());
}

TEST_CASE("catalog verdicts agree with the exhaustive embedding oracle") {
  std::set<std::string> rejected_names;
  for (const auto &g : load_catalog()) {
    INFO(g.name);
    Verdict v = is_hyperoctahedral(g);
    auto truth = oracle::embedding_exists(g);
    if (const auto *w = std::get_if<HyperoctahedralWitness>(&v)) {
      CHECK(truth.found);
      check_conjugation(g, *w);
      for (const auto &r : conjugation_residuals(g, *w))
        CHECK(r.is_zero());
    } else {
      CHECK_FALSE(truth.found);
      rejected_names.insert(g.name);
    }
  }
  CHECK(rejected_names ==
        std::set<std::string>{"p3", "p3m1", "p31m", "p6", "p6m", "W", "Z_x_W"});
}

TEST_CASE("property: verdict is invariant under unimodular change of lattice basis") {
  std::mt19937_64 rng(5);
  for (const auto &g : load_catalog()) {
    INFO(g.name);
    bool base = std::holds_alternative<HyperoctahedralWitness>(is_hyperoctahedral(g));
    for (int trial = 0; trial < 3; ++trial) {
      CrystGroup h = change_lattice_basis(g, random_unimodular(rng, g.dimension));
      Verdict v = is_hyperoctahedral(h);
      CHECK(std::holds_alternative<HyperoctahedralWitness>(v) == base);
      if (const auto *w = std::get_if<HyperoctahedralWitness>(&v))
        check_conjugation(h, *w);
    }
  }
}

TEST_CASE("property: random finite subgroups of O(3,Z) are accepted with sound witnesses") {
  // Conjugating a subgroup of O(3,Z) by a random rational basis keeps it
  // hyperoctahedral; the witness must verify exactly.
  auto o3 = enumerate_group(3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    CrystGroup g;
    g.name = "random";
    g.dimension = 3;
    g.lattice_basis = RatMatrix::identity(3);
    for (int k = 0; k < 2; ++k) {
      g.point_generators.push_back(to_matrix(o3[rng() % o3.size()]));
      g.translation_parts.emplace_back(3);
    }
    validate(g);
    CrystGroup h = change_lattice_basis(g, random_unimodular(rng, 3));
    h.lattice_basis = RatMatrix{{1, Rational(1, 3), 0}, {0, 2, Rational(1, 5)}, {1, 0, 1}} * h.lattice_basis;
    validate(h);
    Verdict v = is_hyperoctahedral(h);
    const auto w = accepted(v);
    check_conjugation(h, w);
    hyperoctahedral_basis(h, w);
  }
}

TEST_CASE("deterministic witness") {
  for (const char *name : {"p4g", "cmm", "Z_rtimes_W"}) {
    CrystGroup g = catalog_entry(name);
    const auto a = accepted(is_hyperoctahedral(g));
    const auto b = accepted(is_hyperoctahedral(g));
    CHECK(a.iota == b.iota);
    CHECK(a.conjugator == b.conjugator);
    CHECK(a.seed_index == b.seed_index);
  }
}

TEST_CASE("seed schedule") {
  RatMatrix l{{2, Rational(1, 2)}, {0, 1}};
  CHECK(seed_matrix(2, l, 0) == l);
  CHECK(seed_matrix(2, l, 1) == RatMatrix::identity(2));
  std::set<RatMatrix> seeds;
  for (std::size_t k = 0; k < kSeedCap; ++k) {
    RatMatrix s = seed_matrix(2, l, k);
    CHECK(s.is_integer() == (k != 0));
    seeds.insert(s);
  }
  // 1 lattice + 1 identity + 16 {0,1} + 81 {-1,0,1} matrices, with overlaps.
  CHECK(seeds.size() >= 80);
}

TEST_CASE("decide preconditions") {
  CrystGroup big;
  big.name = "big";
  big.dimension = 5;
  big.lattice_basis = RatMatrix::identity(5);
  validate(big);
  CHECK_THROWS_AS(is_hyperoctahedral(big), SizeError);
  CrystGroup raw;
  raw.name = "raw";
  raw.dimension = 2;
  raw.lattice_basis = RatMatrix::identity(2);
  CHECK_THROWS_AS(is_hyperoctahedral(raw), InputError);
}
