#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkp/qkring.hpp"

namespace qkp {

struct Failure {
  std::string invariant;
  nlohmann::ordered_json witness;
};

struct SuiteReport {
  std::string suite;
  int checks = 0;
  std::vector<std::string> notes;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& invariant,
             nlohmann::ordered_json witness = nlohmann::ordered_json::object());
  nlohmann::ordered_json to_json() const;
};

/// Reconstruction reproduces the embedded divisor columns bit-exactly.
SuiteReport verify_golden();
/// Commutativity, associativity, identity, Q-polynomiality, and the
/// classical (Q -> 0) degeneration of the full A2 table.
SuiteReport verify_ring_axioms();
/// The displayed quotient products for J = {1}, {2} and the collapse at
/// J = I.
SuiteReport verify_quotient_tables();
/// phi_J(x * y) = phi_J(x) * phi_J(y) on all basis pairs for every J,
/// and factorization through intermediate parabolics.
SuiteReport verify_quotient_homomorphism();
/// phi_{i}(A_j(1)(g)) = 0 for the K_i generators, j != i.
SuiteReport verify_ideal_stability();
/// Random kernel elements of phi_J decompose into K_i generators.
SuiteReport verify_kernel_straightening(uint64_t seed);
/// Union of the four quotient-side suites (the CLI `quotient` suite).
SuiteReport verify_quotients(uint64_t seed);
/// Affine length against the word-length oracle, the translation
/// normalization, and the W_af^- shape of u t_beta.
SuiteReport verify_affine_combinatorics();
/// The localized Peterson dictionary and the induced product.
SuiteReport verify_peterson(uint64_t seed);
/// End-to-end check of an external divisor file for type A1.
SuiteReport verify_a1_fixture(const nlohmann::ordered_json& chevalley_doc);

/// The CLI's `qk verify --suite all`: golden, ring, quotient.
std::vector<SuiteReport> verify_core_suites(uint64_t seed);

/// Rewrites a kernel element of phi_J as an explicit sum of K_i
/// generators (i in J); test-only certificate machinery.
struct KernelGenerator {
  GroupAlgElt coeff;
  int u_rep;
  CorootVec beta;
  int i;
  CorootVec beta_prime;  // generator [O(u)]Q^beta - [O(u s_i)]Q^{beta'}
};
std::vector<KernelGenerator> straighten_kernel_element(const KClass& x,
                                                       const ParabolicSubset& J);

}  // namespace qkp
