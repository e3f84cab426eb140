#include "heckecells/systems.hpp"

#include "heckecells/error.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace heckecells {

namespace {

struct Preset {
  std::vector<int> labels;
  IntMatrix cartan;
};

const std::map<std::string, Preset, std::less<>>& presets() {
  static const std::map<std::string, Preset, std::less<>> table = {
      {"A1", {{1}, {{2}}}},
      {"A2", {{1, 2}, {{2, -1}, {-1, 2}}}},
      {"A3", {{1, 2, 3}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}},
      {"B2", {{1, 2}, {{2, -2}, {-1, 2}}}},
      {"C3", {{1, 2, 3}, {{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}}}},
      {"G2", {{1, 2}, {{2, -1}, {-3, 2}}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"A1", "A2", "A3", "B2", "C3", "G2"};
  return names;
}

std::shared_ptr<const CoxeterSystem> preset_system(std::string_view name) {
  // Systems are immutable, so one instance per preset is shared.
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const CoxeterSystem>, std::less<>> built;
  auto it = presets().find(name);
  if (it == presets().end()) throw DomainError("unknown system preset '" + std::string(name) + "'");
  std::lock_guard lock(mutex);
  auto& slot = built[std::string(name)];
  if (!slot) slot = CoxeterSystem::from_cartan(it->second.labels, it->second.cartan, std::string(name));
  return slot;
}

std::shared_ptr<const CoxeterSystem> parse_system_document(std::string_view json_text, std::string default_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("system file: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("system file: expected a JSON object", 0);
  if (!doc.contains("labels")) throw ParseError("system file: missing 'labels'", 0);
  const bool has_cartan = doc.contains("cartan"), has_coxeter = doc.contains("coxeter");
  if (has_cartan == has_coxeter) throw ParseError("system file: exactly one of 'cartan' or 'coxeter' is required", 0);
  std::string name = doc.value("name", default_name);
  try {
    auto labels = doc.at("labels").get<std::vector<int>>();
    if (has_cartan) return CoxeterSystem::from_cartan(labels, doc.at("cartan").get<IntMatrix>(), name);
    IntMatrix coxeter;
    for (const auto& row : doc.at("coxeter")) {
      std::vector<int> out;
      for (const auto& entry : row) {
        if (entry.is_string()) {
          if (entry.get<std::string>() != "inf") throw ParseError("system file: unknown token in coxeter matrix", 0);
          out.push_back(kInfiniteOrder);
        } else {
          int m = entry.get<int>();
          if (m == kInfiniteOrder) throw DomainError("Coxeter matrix entry 0 is invalid; use \"inf\"");
          out.push_back(m);
        }
      }
      coxeter.push_back(std::move(out));
    }
    return CoxeterSystem::from_coxeter(labels, coxeter, name);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("system file: ") + e.what(), 0);
  }
}

std::shared_ptr<const CoxeterSystem> load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open system file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system_document(buffer.str(), std::filesystem::path(path).stem().string());
}

std::shared_ptr<const CoxeterSystem> resolve_system(std::string_view name_or_path) {
  if (presets().count(name_or_path)) return preset_system(name_or_path);
  return load_system_file(std::string(name_or_path));
}

}  // namespace heckecells
