#pragma once

#include "heckecells/cells.hpp"
#include "heckecells/coxeter.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace heckecells {

/// Directory of the shipped data files; HECKE_CELLS_DATA overrides the
/// compiled-in default.
std::string data_directory();
std::string data_path(const std::string& file_name, const std::string& directory = "");
std::string read_text_file(const std::string& path);

/// Lines "<label>: <word> <word> ...". Blank lines and '#' comments skipped.
struct LabeledSet {
  std::string label;
  std::vector<std::string> words;
};
std::vector<LabeledSet> parse_labeled_sets(const std::string& text);
/// Lines "<upper> <lower>".
std::vector<std::pair<std::string, std::string>> parse_label_edges(const std::string& text);
/// Whitespace separated words, one list per non-comment line.
std::vector<std::vector<std::string>> parse_word_lines(const std::string& text);

using ElementSet = std::set<std::size_t>;
/// Parses words into element indices; throws ParseError on unknown words.
ElementSet to_element_set(const CoxeterSystem& system, const std::vector<std::string>& words);

/// Matches computed cells to labeled sets. Cells without an exactly equal
/// labeled set map to no label; `mismatches` describes every difference.
struct CellMatching {
  std::map<std::size_t, std::string> label_of_cell;
  std::vector<std::string> mismatches;
};
CellMatching match_cells(const CellPartition& partition, const std::vector<LabeledSet>& expected);

/// Hasse edges of the partition translated through `matching`.
std::set<std::pair<std::string, std::string>> labeled_hasse_edges(const CellPartition& partition,
                                                                   const CellMatching& matching);

}  // namespace heckecells
