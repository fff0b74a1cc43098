#include <random>

#include "doctest.h"
#include "qkp/root_system.hpp"

using namespace qkp;

namespace {
RootSystemPtr a2() { return RootSystem::make(CartanType('A', 2)); }
}

TEST_CASE("cartan type admissibility") {
  CHECK_NOTHROW(CartanType::parse("A1"));
  CHECK_NOTHROW(CartanType::parse("E8"));
  CHECK_NOTHROW(CartanType::parse("G2"));
  CHECK_THROWS_AS(CartanType::parse("H3"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("B1"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("E9"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("D2"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("A"), ParseError);
}

TEST_CASE("pairing duality") {
  auto rs = a2();
  CHECK(rs->pairing(rs->simple_coroot(0), rs->fundamental_weight(0)) == 1);
  CHECK(rs->pairing(rs->simple_coroot(0), rs->fundamental_weight(1)) == 0);
  // <theta^vee, theta> = 2 with theta = alpha_1 + alpha_2
  CHECK(rs->pairing(rs->theta().coroot, rs->theta().weight) == 2);
  CHECK(rs->theta().coroot == CorootVec({1, 1}));
  CHECK(rs->theta().weight == WeightVec({1, 1}));

  auto b2 = RootSystem::make(CartanType('B', 2));
  CHECK_THROWS_AS(rs->pairing(b2->simple_coroot(0), WeightVec({1, 2, 3})), DimensionError);
}

TEST_CASE("cartan convention: <alpha_i^vee, alpha_j> = a_ji, once per type") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "F4", "G2"}) {
    auto rs = RootSystem::make(CartanType::parse(name));
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j)
        CHECK(rs->pairing(rs->simple_coroot(i), rs->simple_root_weight(j)) ==
              rs->cartan(j, i));
  }
}

TEST_CASE("positive root closure counts and theta") {
  struct Expect {
    const char* type;
    size_t count;
  };
  for (auto [name, count] : {Expect{"A2", 3}, Expect{"B2", 4}, Expect{"C3", 9},
                             Expect{"G2", 6}, Expect{"D4", 12}, Expect{"F4", 24},
                             Expect{"E6", 36}}) {
    auto rs = RootSystem::make(CartanType::parse(name));
    CHECK(rs->positive_roots().size() == count);
    CHECK(rs->theta().weight.is_dominant());
    CHECK(rs->pairing(rs->theta().coroot, rs->theta().weight) == 2);
  }
  // B2 highest root alpha_1 + 2 alpha_2 with coroot alpha_1^vee + alpha_2^vee
  auto b2 = RootSystem::make(CartanType('B', 2));
  CHECK(b2->theta().root == std::vector<Int>{1, 2});
  CHECK(b2->theta().coroot == CorootVec({1, 1}));
}

TEST_CASE("project_coroot") {
  auto rs = a2();
  ParabolicSubset j1({0}, 2), j2({1}, 2), none = ParabolicSubset::empty(2);
  CHECK(rs->project_coroot(CorootVec({1, 0}), j1) == CorootVec({0, 0}));
  CHECK(rs->project_coroot(CorootVec({1, 1}), j2) == CorootVec({1, 0}));
  CHECK(rs->project_coroot(CorootVec({3, -2}), none) == CorootVec({3, -2}));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    CorootVec beta({Int(static_cast<long>(rng() % 9) - 4), Int(static_cast<long>(rng() % 9) - 4)});
    CorootVec gamma({Int(static_cast<long>(rng() % 9) - 4), Int(static_cast<long>(rng() % 9) - 4)});
    const ParabolicSubset& J = rng() % 2 ? j1 : j2;
    // idempotent, additive, and kills exactly the J coordinates
    CHECK(rs->project_coroot(rs->project_coroot(beta, J), J) == rs->project_coroot(beta, J));
    CHECK(rs->project_coroot(beta + gamma, J) ==
          rs->project_coroot(beta, J) + rs->project_coroot(gamma, J));
    for (int j : J.members()) CHECK(rs->project_coroot(beta, J).coords[j] == 0);
  }
}

TEST_CASE("strict antidominance") {
  auto rs = a2();
  CHECK(rs->is_strictly_antidominant(-rs->theta().coroot));
  CHECK_FALSE(rs->is_strictly_antidominant(CorootVec({0, 0})));
  CHECK_FALSE(rs->is_strictly_antidominant(CorootVec({-1, 0})));
  CHECK(rs->is_strictly_antidominant(CorootVec({-1, -1})));
}

TEST_CASE("B and C are transposes of each other") {
  auto b3 = RootSystem::make(CartanType('B', 3));
  auto c3 = RootSystem::make(CartanType('C', 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b3->cartan(i, j) == c3->cartan(j, i));
  // long theta in B3 vs short-root lattice in C3
  CHECK(b3->theta().root == std::vector<Int>{1, 2, 2});
  CHECK(c3->theta().root == std::vector<Int>{2, 2, 1});
}

TEST_CASE("simple reflection matrices") {
  auto rs = a2();
  // s_1(varpi_1) = varpi_1 - alpha_1 = -varpi_1 + varpi_2
  CHECK(WeightVec(rs->weight_reflection(0).apply(rs->fundamental_weight(0).coords)) ==
        WeightVec({-1, 1}));
  CHECK(WeightVec(rs->weight_reflection(0).apply(rs->fundamental_weight(1).coords)) ==
        rs->fundamental_weight(1));
  CHECK(CorootVec(rs->coroot_reflection(0).apply(rs->simple_coroot(0).coords)) ==
        CorootVec({-1, 0}));

  std::mt19937_64 rng(5);
  for (const char* name : {"A2", "B2", "G2"}) {
    auto sys = RootSystem::make(CartanType::parse(name));
    for (int i = 0; i < sys->rank(); ++i) {
      // involution on both lattices
      CHECK(sys->coroot_reflection(i).mul(sys->coroot_reflection(i)) ==
            IntMatrix::identity(sys->rank()));
      CHECK(sys->weight_reflection(i).mul(sys->weight_reflection(i)) ==
            IntMatrix::identity(sys->rank()));
      for (int trial = 0; trial < 50; ++trial) {
        CorootVec beta({Int(static_cast<long>(rng() % 7) - 3), Int(static_cast<long>(rng() % 7) - 3)});
        WeightVec lam({Int(static_cast<long>(rng() % 7) - 3), Int(static_cast<long>(rng() % 7) - 3)});
        CHECK(sys->pairing(CorootVec(sys->coroot_reflection(i).apply(beta.coords)),
                           WeightVec(sys->weight_reflection(i).apply(lam.coords))) ==
              sys->pairing(beta, lam));
      }
    }
  }
}
