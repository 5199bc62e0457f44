#pragma once

#include <string>
#include <vector>

namespace colorlie {

/// One located violation of an axiom or structural constraint.
struct Violation {
  std::string check;     // e.g. "antisymmetry", "jacobi", "torsion"
  std::string location;  // e.g. "(e,f,h)", "B[0][1]"
  std::string detail;    // human-readable defect description
};

/// Verification result: a list of violations (empty = valid), plus notes
/// for constraints that hold by construction.
struct VerificationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }

  void add(std::string check, std::string location, std::string detail) {
    violations.push_back({std::move(check), std::move(location), std::move(detail)});
  }

  void merge(const VerificationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  std::string str() const {
    std::string out;
    if (ok()) {
      out = "valid";
    } else {
      out = "violations (" + std::to_string(violations.size()) + "):";
      for (const auto& v : violations)
        out += "\n  [" + v.check + "] at " + v.location + ": " + v.detail;
    }
    for (const auto& n : notes) out += "\nnote: " + n;
    return out;
  }
};

}  // namespace colorlie
