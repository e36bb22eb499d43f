#ifndef MKIT_FINALG_AXIOM_REPORT_HPP
#define MKIT_FINALG_AXIOM_REPORT_HPP

#include "../exactlin/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mkit {

/// Outcome of a validator: every failed identity with the basis elements
/// that witness it. Warnings are diagnostics that do not invalidate the input.
struct AxiomReport {
  struct Entry {
    std::string axiom;
    std::vector<std::string> witness;
    std::string detail;
  };

  std::vector<Entry> failures;
  std::vector<Entry> warnings;

  bool ok() const { return failures.empty(); }

  void fail(std::string axiom, std::vector<std::string> witness, std::string detail = {}) {
    failures.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

  void warn(std::string axiom, std::vector<std::string> witness, std::string detail = {}) {
    warnings.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

  /// Appends another report, prefixing its axiom names with `scope`.
  void merge(const AxiomReport& other, const std::string& scope = {}) {
    auto tag = [&](Entry e) {
      if (!scope.empty()) e.axiom = scope + ": " + e.axiom;
      return e;
    };
    for (const auto& e : other.failures) failures.push_back(tag(e));
    for (const auto& e : other.warnings) warnings.push_back(tag(e));
  }

  bool has_failure(const std::string& axiom_substring) const {
    for (const auto& e : failures)
      if (e.axiom.find(axiom_substring) != std::string::npos) return true;
    return false;
  }

  std::string summary() const {
    std::string s;
    for (const auto& e : failures) {
      s += e.axiom + " at (";
      for (std::size_t i = 0; i < e.witness.size(); ++i) s += (i ? "," : "") + e.witness[i];
      s += ")";
      if (!e.detail.empty()) s += ": " + e.detail;
      s += "\n";
    }
    return s;
  }
};

/// Raised when a solver is handed a presentation that fails validation.
class InvalidStructure : public Error {
 public:
  explicit InvalidStructure(AxiomReport report)
      : Error("structure fails validation:\n" + report.summary()), report_(std::move(report)) {}
  InvalidStructure(const std::string& message, AxiomReport report)
      : Error(message + "\n" + report.summary()), report_(std::move(report)) {}

  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

inline void require_valid(const AxiomReport& report) {
  if (!report.ok()) throw InvalidStructure(report);
}

}  // namespace mkit

#endif  // MKIT_FINALG_AXIOM_REPORT_HPP
