#include "heckecells/report.hpp"

#include <sstream>

namespace heckecells {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Verified: return "verified";
    case Verdict::Violated: return "violated";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::string Witness::to_string(char separator) const {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += separator;
    out += fields[i].first + "=" + fields[i].second;
  }
  return out;
}

std::string TheoremReport::render(ReportFormat format) const {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    os << theorem;
    for (const auto& [k, v] : parameters) os << '\t' << k << '=' << v;
    os << '\t' << heckecells::to_string(verdict) << '\t' << witnesses.size() << '\n';
    for (const auto& w : witnesses) os << theorem << "\twitness\t" << w.to_string('\t') << '\n';
    return os.str();
  }
  os << "theorem: " << theorem << '\n';
  os << "parameters:";
  for (const auto& [k, v] : parameters) os << ' ' << k << '=' << v;
  os << '\n';
  os << "verdict: " << heckecells::to_string(verdict) << '\n';
  if (!note.empty()) os << "note: " << note << '\n';
  os << "witnesses: " << witnesses.size() << '\n';
  for (const auto& w : witnesses) os << "  " << w.to_string() << '\n';
  return os.str();
}

}  // namespace heckecells
