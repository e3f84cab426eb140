#include "heckecells/cli.hpp"

#include "heckecells/error.hpp"
#include "heckecells/fixtures.hpp"
#include "heckecells/induction.hpp"
#include "heckecells/systems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace heckecells {

int run_paper_c3(const CommandConfig& config, std::ostream& out);

namespace {

struct UsageError : Error {
  using Error::Error;
};

const char* const kFixtureName = "b2-p2-fixture";
const std::vector<std::string> kTheorems = {"parabolic-invariance", "hybrid-theorems", "preorder-compat",
                                            "ideal",                "induction",       "restriction"};

std::shared_ptr<const CanonicalTable> load_command_table(const CommandConfig& config, bool force = false) {
  std::optional<std::string> path = config.table;
  std::string system = config.system;
  if (system == kFixtureName || path == std::optional<std::string>(kFixtureName)) {
    path = data_path("b2_p2.tbl", config.fixtures.value_or(""));
    if (system == kFixtureName) system.clear();
  }
  if (path) {
    LoadOptions options;
    options.force = force;
    if (!system.empty()) options.system = resolve_system(system);
    auto table = std::make_shared<CanonicalTable>(load_table(*path, options));
    if (config.p && *config.p != table->p())
      throw UsageError("--p " + std::to_string(*config.p) + " does not match the table's p = " +
                       std::to_string(table->p()));
    return table;
  }
  if (system.empty()) throw UsageError("--system is required");
  if (config.p.value_or(0) != 0) throw UsageError("p > 0 needs --table (or the b2-p2-fixture name)");
  auto table = std::make_shared<CanonicalTable>(kl_table(resolve_system(system)));
  table->set_system_reference(system);
  return table;
}

std::vector<GeneratorSet> requested_subsets(const CommandConfig& config, const CoxeterSystem& sys) {
  if (config.subset) return {sys.parse_generator_set(*config.subset)};
  if (!config.all) throw UsageError("--I is required (or use --all)");
  std::vector<GeneratorSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << sys.rank()); ++mask) {
    GeneratorSet set;
    for (Generator s = 0; s < sys.rank(); ++s)
      if (mask >> s & 1U) set.insert(s);
    out.push_back(set);
  }
  return out;
}

ReportFormat report_format(const CommandConfig& config) {
  return config.format == OutputFormat::Machine ? ReportFormat::Machine : ReportFormat::Text;
}

void absorb(TheoremReport& into, const TheoremReport& from, const std::string& key, const std::string& value) {
  for (const auto& w : from.witnesses) {
    Witness tagged;
    tagged.add(key, value);
    for (const auto& [k, v] : w.fields) tagged.add(k, v);
    into.add_witness(std::move(tagged));
  }
}

int command_klpolys(const CommandConfig& config, std::ostream& out) {
  out << format_table(*load_command_table(config));
  return exit_code::ok;
}

CellPartition requested_partition(const CanonicalTable& table, const std::string& side_text) {
  auto side = parse_cell_side(side_text);
  if (side == CellSide::TwoSided)
    return two_sided(cell_partition(table, CellSide::Right), cell_partition(table, CellSide::Left));
  return cell_partition(table, side);
}

int command_cells(const CommandConfig& config, std::ostream& out) {
  auto table = load_command_table(config);
  auto partition = requested_partition(*table, config.side);
  switch (config.format.value_or(OutputFormat::Text)) {
    case OutputFormat::Dot:
      out << format_hasse_dot(partition);
      break;
    case OutputFormat::Machine:
      for (std::size_t i = 0; i < table->size(); ++i)
        out << table->system().element_at(i) << '\t' << partition.label(partition.cell_of(i)) << '\n';
      break;
    case OutputFormat::Text:
      out << "# system " << table->system_reference() << ", p = " << table->p() << ", " << config.side << " cells: "
          << partition.size() << '\n';
      out << format_partition(partition);
      out << "# preorder (Hasse edges, upper -> lower)\n" << format_hasse_text(partition);
      break;
  }
  return exit_code::ok;
}

int command_hasse(const CommandConfig& config, std::ostream& out) {
  auto table = load_command_table(config);
  auto partition = requested_partition(*table, config.side);
  if (config.format.value_or(OutputFormat::Dot) == OutputFormat::Dot)
    out << format_hasse_dot(partition);
  else
    out << format_hasse_text(partition);
  return exit_code::ok;
}

int command_hybrid(const CommandConfig& config, std::ostream& out) {
  auto table = load_command_table(config);
  if (!config.subset) throw UsageError("hybrid needs --I");
  const auto& sys = table->system();
  HybridContext ctx(table, sys.parse_generator_set(*config.subset));
  auto print = [&](const CoxeterElement& w) {
    for (const auto& [xy, r] : hybrid_expand(ctx, table->canonical_element(w)))
      out << xy.first << '\t' << xy.second << '\t' << r << '\n';
  };
  if (config.target) {
    print(sys.parse_element(*config.target));
  } else {
    for (const auto& w : sys.elements()) {
      out << "# target " << w << '\n';
      print(w);
    }
  }
  return exit_code::ok;
}

int command_verify(const CommandConfig& config, std::ostream& out) {
  auto table = load_command_table(config);
  const auto& sys = table->system();
  std::vector<std::string> theorems = config.theorems;
  if (config.all) theorems = kTheorems;
  if (theorems.empty()) throw UsageError("verify needs --theorem or --all");
  auto subsets = requested_subsets(config, sys);
  auto ambient_right = cell_partition(*table, CellSide::Right);
  std::size_t verified = 0, violated = 0, skipped = 0;
  const auto format = report_format(config);
  for (auto subset : subsets) {
    HybridContext ctx(table, subset);
    const auto& sub = ctx.parabolic().subsystem();
    for (const auto& theorem : kTheorems) {
      if (std::find(theorems.begin(), theorems.end(), theorem) == theorems.end()) continue;
      TheoremReport report;
      if (theorem == "parabolic-invariance") {
        report = check_parabolic_invariance(*table, subset);
      } else if (theorem == "hybrid-theorems") {
        report = verify_hybrid_theorems(ctx);
      } else if (theorem == "preorder-compat") {
        report = verify_preorder_compat(ctx);
      } else if (theorem == "ideal") {
        report = TheoremReport("ideal");
        for (std::size_t x = 0; x < sub.order(); ++x) {
          auto one = ideal_check(ctx, right_ideal_below(ctx, x));
          if (x == 0) report.parameters = one.parameters;
          absorb(report, one, "below", ctx.parabolic().embed(sub.element_at(x)).to_string());
        }
        report.parameters.back() = {"J", "every principal right ideal of W_I"};
      } else if (theorem == "induction") {
        report = TheoremReport("induction");
        const auto& cells = ctx.subgroup_cells();
        for (std::size_t k = 0; k < cells.size(); ++k) {
          auto one = verify_induction(ctx, ambient_right, k);
          if (k == 0) report.parameters = one.parameters;
          absorb(report, one, "cell", one.parameters.back().second);
        }
        report.parameters.back() = {"cell", "every right cell of W_I"};
      } else if (theorem == "restriction") {
        report = TheoremReport("restriction");
        for (std::size_t k = 0; k < ambient_right.size(); ++k) {
          auto one = verify_restriction(ctx, ambient_right, k);
          if (k == 0) report.parameters = one.parameters;
          absorb(report, one, "cell", one.parameters.back().second);
        }
        report.parameters.back() = {"cell", "every right cell of W"};
      }
      out << report.render(format);
      if (format == ReportFormat::Text) out << '\n';
      switch (report.verdict) {
        case Verdict::Verified: ++verified; break;
        case Verdict::Violated: ++violated; break;
        case Verdict::Skipped: ++skipped; break;
      }
    }
  }
  out << "summary: " << verified << " verified, " << violated << " violated, " << skipped << " skipped\n";
  return violated == 0 ? exit_code::ok : exit_code::violation;
}

int command_validate(const CommandConfig& config, std::ostream& out) {
  if (!config.table && config.system != kFixtureName) throw UsageError("validate-table needs --table");
  auto table = load_command_table(config, true);
  auto report = validate_table(*table);
  out << "# table p = " << table->p() << ", system " << table->system_reference() << '\n';
  out << report.render();
  out << "mandatory: " << (report.passes_mandatory() ? "pass" : "FAIL") << '\n';
  return report.passes_mandatory() ? exit_code::ok : exit_code::violation;
}

int dispatch(const CommandConfig& config, std::ostream& out) {
  if (config.command == "klpolys") return command_klpolys(config, out);
  if (config.command == "cells") return command_cells(config, out);
  if (config.command == "hasse") return command_hasse(config, out);
  if (config.command == "hybrid") return command_hybrid(config, out);
  if (config.command == "verify") return command_verify(config, out);
  if (config.command == "validate-table") return command_validate(config, out);
  if (config.command == "paper-c3") return run_paper_c3(config, out);
  throw UsageError("unknown command '" + config.command + "'");
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.out) {
      std::ostringstream buffer;
      int status = dispatch(config, buffer);
      std::ofstream file(*config.out);
      if (!file) throw UsageError("cannot write '" + *config.out + "'");
      file << buffer.str();
      return status;
    }
    return dispatch(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke algebras, canonical bases and cells of finite Coxeter groups", "hecke-cells"};
  app.require_subcommand(1, 1);
  CommandConfig config;
  std::string format;

  auto add_common = [&](CLI::App* cmd, bool with_subset) {
    cmd->add_option("--system", config.system, "preset (A1 A2 A3 B2 C3 G2), system file, or b2-p2-fixture");
    cmd->add_option("--p", config.p, "characteristic");
    cmd->add_option("--table", config.table, "canonical basis table file");
    cmd->add_option("--format", format, "text, machine or dot")->check(CLI::IsMember({"text", "machine", "dot"}));
    cmd->add_option("--out", config.out, "write output to this file");
    if (with_subset) cmd->add_option("--I", config.subset, "parabolic subset, e.g. 1,2");
  };
  auto* klpolys = app.add_subcommand("klpolys", "print the canonical basis table");
  add_common(klpolys, false);
  auto* cells = app.add_subcommand("cells", "cell partition and preorder");
  add_common(cells, false);
  cells->add_option("--side", config.side, "right, left or two-sided")
      ->check(CLI::IsMember({"right", "left", "two-sided"}));
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the cell preorder");
  add_common(hasse, false);
  hasse->add_option("--side", config.side, "right, left or two-sided")
      ->check(CLI::IsMember({"right", "left", "two-sided"}));
  auto* hybrid = app.add_subcommand("hybrid", "I-hybrid coefficients r^I");
  add_common(hybrid, true);
  hybrid->add_option("--target", config.target, "only this canonical basis element");
  auto* verify = app.add_subcommand("verify", "check the theorems");
  add_common(verify, true);
  verify->add_option("--theorem", config.theorems, "theorem to check (repeatable)")
      ->check(CLI::IsMember(kTheorems));
  verify->add_flag("--all", config.all, "every theorem; every subset unless --I is given");
  auto* validate = app.add_subcommand("validate-table", "check a table file against the axioms");
  add_common(validate, false);
  auto* reproduce = app.add_subcommand("paper-c3", "reproduce the type C3 example");
  add_common(reproduce, false);
  reproduce->add_option("--fixtures", config.fixtures, "directory of golden fixtures");
  for (auto* cmd : {klpolys, cells, hasse, hybrid, verify, validate})
    cmd->add_option("--fixtures", config.fixtures, "directory of shipped fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (format == "text") config.format = OutputFormat::Text;
  if (format == "machine") config.format = OutputFormat::Machine;
  if (format == "dot") config.format = OutputFormat::Dot;
  return run(config, out, err);
}

}  // namespace heckecells
