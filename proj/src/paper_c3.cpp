// Type C3 reproduction: every computed block is compared with a golden
// fixture from the data directory.

#include "heckecells/cli.hpp"
#include "heckecells/error.hpp"
#include "heckecells/fixtures.hpp"
#include "heckecells/induction.hpp"
#include "heckecells/systems.hpp"

#include <algorithm>
#include <sstream>

namespace heckecells {

namespace {

enum class Outcome { Match, Differ, Skipped };

struct Block {
  std::string title;
  std::vector<std::string> lines;
  std::vector<std::string> diffs;
  Outcome outcome = Outcome::Match;

  explicit Block(std::string name) : title(std::move(name)) {}
  void differ(std::string what) {
    diffs.push_back(std::move(what));
    outcome = Outcome::Differ;
  }
};

std::string join(const std::vector<std::string>& words, const std::string& sep = " ") {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : sep) + w;
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::vector<std::string> rows;
  for (const auto& row : m) {
    std::vector<std::string> entries;
    for (int a : row) entries.push_back(std::to_string(a));
    rows.push_back(join(entries));
  }
  return join(rows, " | ");
}

std::vector<std::vector<std::string>> split_bars(const std::vector<std::string>& words) {
  std::vector<std::vector<std::string>> out(1);
  for (const auto& w : words) {
    if (w == "|")
      out.emplace_back();
    else
      out.back().push_back(w);
  }
  return out;
}

std::string words_of(const CoxeterSystem& sys, const ElementSet& set) {
  std::vector<std::string> words;
  for (auto i : set) words.push_back(sys.element_at(i).to_string());
  return "{" + join(words) + "}";
}

ElementSet members_of(const CellPartition& partition, const CoxeterSystem& sys, std::size_t k) {
  ElementSet out;
  for (const auto& w : partition.members(k)) out.insert(sys.index_of(w));
  return out;
}

std::set<ElementSet> all_cells(const CellPartition& partition, const CoxeterSystem& sys) {
  std::set<ElementSet> out;
  for (std::size_t k = 0; k < partition.size(); ++k) out.insert(members_of(partition, sys, k));
  return out;
}

std::string partition_text(const std::set<ElementSet>& cells, const CoxeterSystem& sys) {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(words_of(sys, c));
  return join(parts, " ");
}

void compare_partition(Block& block, const CellPartition& partition, const std::string& fixture, CellMatching& matching) {
  auto expected = parse_labeled_sets(read_text_file(fixture));
  matching = match_cells(partition, expected);
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    auto it = matching.label_of_cell.find(k);
    rows.emplace_back(it == matching.label_of_cell.end() ? "?" + partition.label(k) : it->second, k);
  }
  for (const auto& [label, k] : rows) {
    std::vector<std::string> words;
    for (const auto& w : partition.members(k)) words.push_back(w.to_string());
    block.lines.push_back(label + ": " + join(words));
  }
  block.lines.push_back(std::to_string(partition.size()) + " cells");
  for (const auto& m : matching.mismatches) block.differ(m);
}

void compare_hasse(Block& block, const CellPartition& partition, const CellMatching& matching,
                   const std::string& fixture) {
  auto computed = labeled_hasse_edges(partition, matching);
  auto listed = parse_label_edges(read_text_file(fixture));
  std::set<std::pair<std::string, std::string>> expected(listed.begin(), listed.end());
  for (const auto& [a, b] : computed) block.lines.push_back(a + " -> " + b);
  block.lines.push_back(std::to_string(computed.size()) + " edges");
  for (const auto& e : computed)
    if (!expected.count(e)) block.differ("unexpected edge " + e.first + " -> " + e.second);
  for (const auto& e : expected)
    if (!computed.count(e)) block.differ("missing edge " + e.first + " -> " + e.second);
}

std::set<ElementSet> expected_partition(const CoxeterSystem& sys, const std::vector<std::string>& words) {
  std::set<ElementSet> out;
  for (const auto& part : split_bars(words)) out.insert(to_element_set(sys, part));
  return out;
}

void compare_cells_line(Block& block, const std::string& name, const std::set<ElementSet>& computed,
                        const std::set<ElementSet>& expected, const CoxeterSystem& sys) {
  block.lines.push_back(name + ": " + partition_text(computed, sys));
  if (computed != expected)
    block.differ(name + ": expected " + partition_text(expected, sys) + ", got " + partition_text(computed, sys));
}

// C.^IW as ambient indices; C given as subsystem indices.
ElementSet coset_union(const HybridContext& ctx, const ElementSet& cell_sub) {
  const auto& sys = ctx.system();
  ElementSet out;
  for (auto x : cell_sub)
    for (const auto& y : ctx.minimal_reps()) out.insert(ctx.compose(x, sys.index_of(y)));
  return out;
}

bool is_union_of_cells(const CellPartition& partition, const ElementSet& set) {
  for (auto w : set)
    for (const auto& m : partition.members(partition.cell_of(w)))
      if (!set.count(partition.system().index_of(m))) return false;
  return true;
}

}  // namespace

int run_paper_c3(const CommandConfig& config, std::ostream& out) {
  const std::string dir = config.fixtures.value_or("");
  auto fixture = [&](const std::string& name) { return data_path(name, dir); };
  auto c3 = resolve_system("C3");
  auto kl = std::make_shared<CanonicalTable>(kl_table(c3));
  kl->set_system_reference("C3");
  const GeneratorSet I = c3->parse_generator_set("1,2");
  HybridContext kl_ctx(kl, I);
  std::vector<Block> blocks;

  {
    Block block("C3 Coxeter data");
    std::map<std::string, std::string> expected;
    for (const auto& set : parse_labeled_sets(read_text_file(fixture("c3_coxeter.txt"))))
      expected[set.label] = join(set.words);
    std::map<std::string, std::string> computed = {{"cartan", matrix_text(c3->cartan_matrix())},
                                                   {"coxeter", matrix_text(c3->coxeter_matrix())}};
    for (const auto& [key, value] : computed) {
      block.lines.push_back(key + ": " + value);
      if (expected[key] != value) block.differ(key + ": expected " + expected[key] + ", got " + value);
    }
    block.lines.push_back("order: " + std::to_string(c3->order()));
    blocks.push_back(std::move(block));
  }
  {
    Block block{"^IW for I = {1,2}"};
    std::vector<std::string> computed;
    for (const auto& y : kl_ctx.minimal_reps()) computed.push_back(y.to_string());
    auto lines = parse_word_lines(read_text_file(fixture("c3_minimal_reps.txt")));
    auto expected = lines.empty() ? ElementSet{} : to_element_set(*c3, lines.front());
    block.lines.push_back(join(computed));
    if (to_element_set(*c3, computed) != expected)
      block.differ("expected " + words_of(*c3, expected) + ", got {" + join(computed) + "}");
    blocks.push_back(std::move(block));
  }
  auto kl_right = cell_partition(*kl, CellSide::Right);
  CellMatching kl_matching;
  {
    Block block("right KL cells (p = 0)");
    compare_partition(block, kl_right, fixture("c3_kl_right_cells.txt"), kl_matching);
    blocks.push_back(std::move(block));
  }
  {
    Block block("right KL cell preorder (Hasse edges)");
    compare_hasse(block, kl_right, kl_matching, fixture("c3_kl_right_hasse.txt"));
    blocks.push_back(std::move(block));
  }
  {
    Block block("B2 = W_I right cells");
    std::map<std::string, std::vector<std::string>> expected;
    for (const auto& set : parse_labeled_sets(read_text_file(fixture("b2_p2_cells.txt")))) expected[set.label] = set.words;
    const auto& sub_table = kl_ctx.subgroup_table();
    const auto& b2 = sub_table.system();
    compare_cells_line(block, "p0", all_cells(kl_ctx.subgroup_cells(), b2), expected_partition(b2, expected["p0"]),
                       b2);
    LoadOptions options;
    options.system = resolve_system("B2");
    auto fixture_table = load_table(fixture("b2_p2.tbl"), options);
    auto p2 = cell_partition(fixture_table, CellSide::Right);
    compare_cells_line(block, "p2", all_cells(p2, *options.system),
                       expected_partition(*options.system, expected["p2"]), *options.system);
    blocks.push_back(std::move(block));
  }

  std::shared_ptr<const CanonicalTable> p2_table;
  std::string skip_reason = "no C3 p = 2 table given (--table)";
  if (config.table) {
    LoadOptions options;
    options.system = c3;
    auto table = std::make_shared<CanonicalTable>(load_table(*config.table, options));
    if (table->p() != 2)
      throw Error("paper-c3 --table expects a p = 2 table, got p = " + std::to_string(table->p()));
    p2_table = table;
  }
  if (!p2_table) {
    for (const char* title : {"right 2-cells", "right 2-cell preorder (Hasse edges)", "induction from W_I",
                              "KL cells vs induced 2-cells"}) {
      Block block(title);
      block.outcome = Outcome::Skipped;
      block.lines.push_back(skip_reason);
      blocks.push_back(std::move(block));
    }
  } else {
    auto p2_right = cell_partition(*p2_table, CellSide::Right);
    CellMatching p2_matching;
    {
      Block block("right 2-cells");
      compare_partition(block, p2_right, fixture("c3_p2_right_cells.txt"), p2_matching);
      blocks.push_back(std::move(block));
    }
    {
      Block block("right 2-cell preorder (Hasse edges)");
      compare_hasse(block, p2_right, p2_matching, fixture("c3_p2_right_hasse.txt"));
      blocks.push_back(std::move(block));
    }
    HybridContext ctx(p2_table, I);
    const auto& sub = ctx.parabolic().subsystem();
    Block induction("induction from W_I");
    Block versus_kl("KL cells vs induced 2-cells");
    for (const auto& line : parse_labeled_sets(read_text_file(fixture("c3_p2_induction.txt")))) {
      auto eq = line.label.find('=');
      std::string name = line.label.substr(0, line.label.find_last_not_of(" =", eq) + 1);
      std::istringstream words_in(line.label.substr(eq + 1));
      std::vector<std::string> cell_words;
      for (std::string w; words_in >> w;) cell_words.push_back(w);
      auto cell_sub = to_element_set(sub, cell_words);
      bool kl_union = is_union_of_cells(kl_right, coset_union(ctx, cell_sub));
      versus_kl.lines.push_back(name + ".^IW is " + (kl_union ? "" : "not ") + "a union of KL cells");
      if (kl_union) versus_kl.differ(name + ".^IW is a union of KL right cells");
      const auto& cells = ctx.subgroup_cells();
      auto k = cells.cell_of(*cell_sub.begin());
      if (members_of(cells, sub, k) != cell_sub) {
        induction.differ(name + " = {" + join(cell_words) + "} is not a right 2-cell of W_I; it lies in " +
                         words_of(sub, members_of(cells, sub, k)));
        continue;
      }
      std::vector<std::string> got;
      for (auto d : induced_cells(ctx, p2_right, k)) {
        auto it = p2_matching.label_of_cell.find(d);
        got.push_back(it == p2_matching.label_of_cell.end() ? "?" + p2_right.label(d) : it->second);
      }
      std::sort(got.begin(), got.end());
      auto want = line.words;
      std::sort(want.begin(), want.end());
      induction.lines.push_back(name + ".^IW = " + (got.empty() ? "(not a union of cells)" : join(got, " + ")));
      if (got != want) induction.differ(name + ".^IW: expected " + join(want, " + ") + ", got " + join(got, " + "));
    }
    blocks.push_back(std::move(induction));
    blocks.push_back(std::move(versus_kl));
  }

  std::size_t match = 0, differ = 0, skipped = 0;
  for (const auto& block : blocks) {
    out << "== " << block.title << " ==\n";
    for (const auto& line : block.lines) out << "  " << line << '\n';
    for (const auto& d : block.diffs) out << "  diff: " << d << '\n';
    switch (block.outcome) {
      case Outcome::Match: out << "result: match\n"; ++match; break;
      case Outcome::Differ: out << "result: differ\n"; ++differ; break;
      case Outcome::Skipped: out << "result: skipped\n"; ++skipped; break;
    }
    out << '\n';
  }
  out << "summary: " << match << " match, " << differ << " differ, " << skipped << " skipped\n";
  return differ == 0 ? exit_code::ok : exit_code::violation;
}

}  // namespace heckecells
