#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffwave/scalar.hpp"

namespace cliffwave {

// Symbolic eigenvalue and identity battery behind `cliffwave verify`.
struct VerifyConfig {
  int max_m = 4;             // largest ambient dimension in every section
  int max_degree = 3;        // basis band limit for the Gamma / Delta sections
  int weight_bound = 4;      // sum of integer weight parts for Casimir / Spin sections
  int random_polys = 4;      // random polynomials per dimension in the identity section
  int poly_degree = 4;
  unsigned long seed = 1;
  std::optional<Exact> casimir_constant;  // default n(n-1)/8
};

struct VerifyCheck {
  std::string section;
  std::string identity;
  std::string expected;
  std::string actual;
  bool pass = false;
  // Informational rows are reported but never fail the run.
  bool asserted = true;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
  std::size_t failures() const;
};

VerifyReport run_verification(const VerifyConfig& cfg);

// Individual sections, exposed for the acceptance suite.
void verify_basis_eigenvalues(int m, int max_degree, VerifyReport& out);
void verify_casimir(int n, int weight_bound, const std::optional<Exact>& c, VerifyReport& out);
void verify_simplicial(int n, int weight_bound, VerifyReport& out);
void verify_identities(int n, int count, int degree, unsigned long seed, const std::optional<Exact>& c, VerifyReport& out);
void verify_spin(int m, int weight_bound, VerifyReport& out);

}  // namespace cliffwave
