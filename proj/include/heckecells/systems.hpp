#pragma once

#include "heckecells/coxeter.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace heckecells {

/// Names accepted by preset_system: A1, A2, A3, B2, C3, G2.
const std::vector<std::string>& preset_names();

/// Built-in systems. C3 uses the Cartan matrix [[2,-2,0],[-1,2,-1],[0,-1,2]]
/// and B2 its {1,2} block, so B2 is literally W_{1,2} of C3.
std::shared_ptr<const CoxeterSystem> preset_system(std::string_view name);

/// System file, JSON:
///   {"name": "...", "labels": [1, 2], "cartan": [[2, -1], [-1, 2]]}
/// or with "coxeter" in place of "cartan", entries ints or "inf".
/// Exactly one of "cartan" / "coxeter" must be present.
std::shared_ptr<const CoxeterSystem> load_system_file(const std::string& path);
std::shared_ptr<const CoxeterSystem> parse_system_document(std::string_view json_text, std::string default_name);

/// A preset name or a path to a system file.
std::shared_ptr<const CoxeterSystem> resolve_system(std::string_view name_or_path);

}  // namespace heckecells
