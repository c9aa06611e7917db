#include "mtc/report.hpp"

#include <sstream>

namespace mtc {

bool ValidationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void ValidationReport::add(std::string name, bool ok, double deviation,
                           std::string detail) {
  checks.push_back({std::move(name), ok, deviation, std::move(detail)});
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (c.deviation != 0.0) os << "  (deviation " << c.deviation << ")";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  os << (passed() ? "OVERALL: pass" : "OVERALL: FAIL") << '\n';
  return os.str();
}

std::complex<double> AxiomReport::scalar(const std::string& key) const {
  auto it = derived.find(key);
  return it == derived.end() ? std::complex<double>{} : it->second;
}

}  // namespace mtc
