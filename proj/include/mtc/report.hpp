#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace mtc {

struct CheckResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // worst residual where meaningful
  std::string detail;      // first counterexample or context
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  void add(std::string name, bool ok, double deviation = 0.0,
           std::string detail = {});
  std::string to_text() const;
};

// Axiom ledger for algebra presentations: the per-axiom results plus the
// derived scalars (beta_A, beta_I, beta, nu_A) where defined.
struct AxiomReport {
  ValidationReport report;
  std::map<std::string, std::complex<double>> derived;

  bool passed() const { return report.passed(); }
  std::complex<double> scalar(const std::string& key) const;
};

}  // namespace mtc
