#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace cyclokit {

/// Which identity a verification instance exercised.
enum class Identity {
  // Ramanujan-sum consequences of the divisibility criterion applied to Toth's polynomial
  DirectIdentity,
  ShiftedSum,
  ShiftedSumNonSquarefree,
  OmegaTwo,
  TothDivisibility,
  RamanujanProperty,
  HolderVsBruteForce,
  // coefficient formulas
  HStarStarRecursion,
  CoefficientBridge,
  RootFormula,
  FullRootSum,
  ClosedForm,
  BinaryCoefficient,
  CrossAlgorithm,
};

inline std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::DirectIdentity: return "direct";
    case Identity::ShiftedSum: return "shifted_sum";
    case Identity::ShiftedSumNonSquarefree: return "shifted_sum_nonsquarefree";
    case Identity::OmegaTwo: return "omega_two";
    case Identity::TothDivisibility: return "toth_divisibility";
    case Identity::RamanujanProperty: return "ramanujan_property";
    case Identity::HolderVsBruteForce: return "holder_vs_bruteforce";
    case Identity::HStarStarRecursion: return "hstarstar_recursion";
    case Identity::CoefficientBridge: return "coefficient_bridge";
    case Identity::RootFormula: return "root_formula";
    case Identity::FullRootSum: return "full_root_sum";
    case Identity::ClosedForm: return "closed_form";
    case Identity::BinaryCoefficient: return "binary_coefficient";
    case Identity::CrossAlgorithm: return "cross_algorithm";
  }
  return "unknown";
}

/// Outcome of one (identity, n, parameters) verification instance.
/// pass is lhs == rhs, plus max_deviation <= tolerance for numeric checks.
struct IdentityReport {
  Identity identity{};
  std::string variant;  // sub-family label, empty when the identity has one form
  std::int64_t n = 0;
  std::vector<std::pair<std::string, std::int64_t>> params;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
  double max_deviation = 0.0;

  std::int64_t param(std::string_view name) const {
    for (const auto& [k, v] : params) {
      if (k == name) return v;
    }
    throw std::out_of_range("IdentityReport has no parameter " + std::string(name));
  }
};

inline IdentityReport make_report(Identity id, std::string variant, std::int64_t n,
                                  std::vector<std::pair<std::string, std::int64_t>> params, BigInt lhs, BigInt rhs) {
  IdentityReport r{id, std::move(variant), n, std::move(params), std::move(lhs), std::move(rhs), false, 0.0};
  r.pass = r.lhs == r.rhs;
  return r;
}

}  // namespace cyclokit
