#include "heckecells/fixtures.hpp"

#include "heckecells/error.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace heckecells {

std::string data_directory() {
  if (const char* env = std::getenv("HECKE_CELLS_DATA")) return env;
  return HECKECELLS_DATA_DIR;
}

std::string data_path(const std::string& file_name, const std::string& directory) {
  return (std::filesystem::path(directory.empty() ? data_directory() : directory) / file_name).string();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

template <class Fn>
void for_each_line(const std::string& text, Fn fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    fn(line, number);
  }
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

}  // namespace

std::vector<LabeledSet> parse_labeled_sets(const std::string& text) {
  std::vector<LabeledSet> out;
  for_each_line(text, [&](const std::string& line, std::size_t number) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<label>: <words>'", number);
    auto label = split_words(line.substr(0, colon));
    if (label.empty()) throw ParseError("missing label", number);
    std::string joined = label[0];
    for (std::size_t i = 1; i < label.size(); ++i) joined += " " + label[i];
    out.push_back({joined, split_words(line.substr(colon + 1))});
  });
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_label_edges(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  for_each_line(text, [&](const std::string& line, std::size_t number) {
    auto words = split_words(line);
    if (words.size() != 2) throw ParseError("expected '<upper> <lower>'", number);
    out.emplace_back(words[0], words[1]);
  });
  return out;
}

std::vector<std::vector<std::string>> parse_word_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  for_each_line(text, [&](const std::string& line, std::size_t) { out.push_back(split_words(line)); });
  return out;
}

ElementSet to_element_set(const CoxeterSystem& system, const std::vector<std::string>& words) {
  ElementSet out;
  for (const auto& word : words) {
    if (word == "w0") {
      out.insert(system.order() - 1);
      continue;
    }
    out.insert(system.index_of(system.parse_element(word)));
  }
  return out;
}

CellMatching match_cells(const CellPartition& partition, const std::vector<LabeledSet>& expected) {
  CellMatching matching;
  const auto& sys = partition.system();
  std::map<ElementSet, std::string> wanted;
  for (const auto& set : expected) wanted.emplace(to_element_set(sys, set.words), set.label);
  std::set<std::string> found;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    ElementSet members(partition.cell(k).begin(), partition.cell(k).end());
    auto it = wanted.find(members);
    if (it != wanted.end()) {
      matching.label_of_cell[k] = it->second;
      found.insert(it->second);
      continue;
    }
    std::string text = "computed cell " + partition.label(k) + " {";
    for (const auto& w : partition.members(k)) text += " " + w.to_string();
    matching.mismatches.push_back(text + " } has no expected counterpart");
  }
  for (const auto& set : expected)
    if (!found.count(set.label)) {
      std::string text = "expected cell " + set.label + " {";
      for (const auto& w : set.words) text += " " + w;
      matching.mismatches.push_back(text + " } not computed");
    }
  return matching;
}

std::set<std::pair<std::string, std::string>> labeled_hasse_edges(const CellPartition& partition,
                                                                   const CellMatching& matching) {
  std::set<std::pair<std::string, std::string>> out;
  auto name = [&](std::size_t k) {
    auto it = matching.label_of_cell.find(k);
    return it == matching.label_of_cell.end() ? "?" + partition.label(k) : it->second;
  };
  for (auto [a, b] : partition.hasse_edges()) out.emplace(name(a), name(b));
  return out;
}

}  // namespace heckecells
