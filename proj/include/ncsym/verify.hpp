#pragma once

#include "ncsym/localization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ncsym {

struct VerifyConfig {
  int nmax = 10;
  std::uint64_t seed = 1;
  /// Random samples per property (triples, pure tensors, ...).
  int samples = 100;
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double seconds = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
  /// Records one check.
  void check(bool cond, const std::string& what);
  /// Runtime is left out so that reports are reproducible.
  nlohmann::ordered_json to_json(bool with_timing = false) const;
};

/// field_tower, indexed_tensor, sym_algebra, localization
const std::vector<std::string>& suite_names();

SuiteResult verify_field_tower(const InstancePtr& inst, const VerifyConfig& cfg);
SuiteResult verify_indexed_tensor(const InstancePtr& inst, const VerifyConfig& cfg);
SuiteResult verify_sym_algebra(const SymAlgebra& alg, const VerifyConfig& cfg);
SuiteResult verify_localization(const Localization& loc, const VerifyConfig& cfg);

/// Runs the named suites in the order of suite_names(); throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suites(const InstancePtr& inst, const std::vector<std::string>& names, const VerifyConfig& cfg);

/// Default degree bound: 10 for number fields, 6 for Q(t).
int default_nmax(const FieldTowerInstance& inst);

}  // namespace ncsym
