#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sb/params.hpp"

namespace sb {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  double tol = -1;  // negative: the pinned default of each check
};

std::vector<CaseResult> check_multiplicity_table();
std::vector<CaseResult> check_quadrature(const SuiteOptions& o);
std::vector<CaseResult> check_vanishing();
std::vector<CaseResult> check_residues();
std::vector<CaseResult> check_functional();
std::vector<CaseResult> check_factorizations();
std::vector<CaseResult> check_juhl_taylor();
std::vector<CaseResult> check_fourier();
std::vector<CaseResult> check_knapp_stein(const SuiteOptions& o);
std::vector<CaseResult> check_pde(const SuiteOptions& o);

const std::vector<std::string>& suite_names();
std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& o);

// deterministic lattice samples of a named region
std::vector<ParamPoint> region_samples(const std::string& region, int count);

}  // namespace sb
