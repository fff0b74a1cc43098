// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure or budget overrun.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "qkp/verify.hpp"

namespace {

using qkp::SuiteReport;

int failures_total = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<SuiteReport()>& body) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  std::string error;
  try {
    report = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = error.empty() && report.ok() && elapsed < budget_seconds;
  if (!ok) ++failures_total;

  std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << name << "  ("
            << report.checks << " checks, " << elapsed << "s, budget " << budget_seconds
            << "s)\n";
  if (!error.empty()) std::cout << "      error: " << error << "\n";
  if (elapsed >= budget_seconds) std::cout << "      budget exceeded\n";
  for (const auto& f : report.failures)
    std::cout << "      violated: " << f.invariant << " witness " << f.witness.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  run_criterion(1, "golden reproduction of the A2 divisor columns", 10.0,
                [] { return qkp::verify_golden(); });
  run_criterion(2, "quotient tables for J={1}, J={2}, J=I", 10.0,
                [] { return qkp::verify_quotient_tables(); });
  run_criterion(3, "ring axioms (commutative, associative, unital, Q-polynomial)", 120.0,
                [] { return qkp::verify_ring_axioms(); });
  run_criterion(4, "quotient homomorphism and factorization", 60.0,
                [] { return qkp::verify_quotient_homomorphism(); });
  run_criterion(5, "ideal stability of K_i under A_j(1)", 60.0,
                [] { return qkp::verify_ideal_stability(); });
  run_criterion(6, "affine length oracle, normalization, W_af^- shape", 120.0,
                [] { return qkp::verify_affine_combinatorics(); });
  run_criterion(7, "Peterson dictionary and localized product", 60.0,
                [seed] { return qkp::verify_peterson(seed); });
  run_criterion(8, "external A1 divisor file end to end", 5.0, [] {
    std::ifstream in(std::string(QKP_TEST_DATA_DIR) + "/a1_chevalley.json");
    if (!in) throw qkp::Error("fixture file not found");
    return qkp::verify_a1_fixture(nlohmann::ordered_json::parse(in));
  });

  if (failures_total > 0) {
    std::cout << failures_total << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
