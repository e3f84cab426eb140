#pragma once

#include <string>
#include <utility>
#include <vector>

namespace heckecells {

enum class Verdict { Verified, Violated, Skipped };

std::string to_string(Verdict verdict);

/// One concrete counterexample, as ordered key/value pairs
/// (elements as words, coefficients as polynomials).
struct Witness {
  std::vector<std::pair<std::string, std::string>> fields;

  Witness& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  /// "key=value key=value ..."
  std::string to_string(char separator = ' ') const;
};

enum class ReportFormat { Text, Machine };

/// Outcome of one mechanical theorem check. Verified implies no witnesses;
/// Violated implies at least one.
struct TheoremReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> parameters;
  Verdict verdict = Verdict::Verified;
  std::vector<Witness> witnesses;
  std::string note;

  TheoremReport() = default;
  explicit TheoremReport(std::string id) : theorem(std::move(id)) {}

  TheoremReport& parameter(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void add_witness(Witness w) {
    witnesses.push_back(std::move(w));
    verdict = Verdict::Violated;
  }
  void skip(std::string reason) {
    verdict = Verdict::Skipped;
    note = std::move(reason);
  }
  bool ok() const { return verdict != Verdict::Violated; }

  /// Stable field order: theorem, parameters, verdict, witnesses. The
  /// machine format is tab-separated with one witness per line.
  std::string render(ReportFormat format = ReportFormat::Text) const;
};

}  // namespace heckecells
