#include "heckecells/induction.hpp"

#include "heckecells/error.hpp"

#include <map>

namespace heckecells {

namespace {

TheoremReport make_report(const HybridContext& ctx, const std::string& id) {
  TheoremReport report(id);
  report.parameter("system", ctx.ambient().system_reference())
      .parameter("I", ctx.system().format_generator_set(ctx.subset()))
      .parameter("p", std::to_string(ctx.ambient().p()));
  return report;
}

std::string sub_name(const HybridContext& ctx, std::size_t x_sub) {
  return ctx.parabolic().embed(ctx.parabolic().subsystem().element_at(x_sub)).to_string();
}

std::string element_name(const HybridContext& ctx, std::size_t w) { return ctx.system().element_at(w).to_string(); }

std::string members_text(const HybridContext& ctx, const std::set<std::size_t>& subs) {
  std::string out;
  for (std::size_t u : subs) out += (out.empty() ? "" : " ") + sub_name(ctx, u);
  return "{" + out + "}";
}

Generator sub_generator(const HybridContext& ctx, Generator t) {
  const auto& sub = ctx.parabolic().subsystem();
  for (Generator g = 0; g < sub.rank(); ++g)
    if (ctx.parabolic().embed(sub.generator(g)) == ctx.system().generator(t)) return g;
  throw DomainError("generator outside I");
}

}  // namespace

std::set<std::size_t> right_ideal_below(const HybridContext& ctx, std::size_t x_sub) {
  const auto& cells = ctx.subgroup_cells();
  std::set<std::size_t> out;
  for (std::size_t u = 0; u < ctx.parabolic().subsystem().order(); ++u)
    if (cells.cell_leq(cells.cell_of(u), cells.cell_of(x_sub))) out.insert(u);
  return out;
}

TheoremReport ideal_check(const HybridContext& ctx, const std::set<std::size_t>& J) {
  const auto& sys = ctx.system();
  const auto& sub = ctx.parabolic().subsystem();
  const auto& cells = ctx.subgroup_cells();
  for (std::size_t j : J) {
    if (j >= sub.order()) throw DomainError("J contains an index outside W_I");
    for (std::size_t u = 0; u < sub.order(); ++u)
      if (cells.cell_leq(cells.cell_of(u), cells.cell_of(j)) && !J.count(u))
        throw DomainError("J is not down-closed: " + sub_name(ctx, u) + " <=_R " + sub_name(ctx, j));
  }
  auto report = make_report(ctx, "ideal");
  report.parameter("J", members_text(ctx, J));
  const LaurentPolynomial q = quadratic_coefficient();
  for (std::size_t x : J)
    for (const auto& rep : ctx.minimal_reps()) {
      const std::size_t y = sys.index_of(rep);
      const std::size_t xy = ctx.compose(x, y);
      for (Generator s = 0; s < sys.rank(); ++s) {
        auto direct = hybrid_expand(ctx, multiply_generator_right(sys, ctx.hybrid(xy), s));
        IndexedElement predicted;
        auto deodhar = deodhar_case(ctx.subset(), rep, s);
        if (auto* longer = std::get_if<DeodharLonger>(&deodhar)) {
          add_term(predicted, ctx.compose(x, sys.index_of(longer->ys)), 1);
        } else if (auto* shorter = std::get_if<DeodharShorter>(&deodhar)) {
          add_term(predicted, ctx.compose(x, sys.index_of(shorter->ys)), 1);
          add_term(predicted, xy, q);
        } else {
          Generator t = sub_generator(ctx, std::get<DeodharFolds>(deodhar).t);
          const auto& subtable = ctx.subgroup_table();
          auto coords = to_canonical(multiply_generator_right(sub, subtable.column(x), t), subtable);
          for (const auto& [u, c] : coords) add_term(predicted, ctx.compose(u, y), c);
        }
        auto base = Witness().add("x", sub_name(ctx, x)).add("y", rep.to_string()).add("s", std::to_string(sys.label(s)));
        if (direct != predicted) report.add_witness(Witness(base).add("kind", "deodhar-mismatch"));
        for (const auto& [uw, c] : direct)
          if (!J.count(ctx.factor_parabolic(uw)))
            report.add_witness(Witness(base)
                                   .add("kind", "outside")
                                   .add("u", sub_name(ctx, ctx.factor_parabolic(uw)))
                                   .add("w", element_name(ctx, ctx.factor_rep(uw)))
                                   .add("coefficient", c.to_string(true)));
      }
    }
  return report;
}

TheoremReport verify_preorder_compat(const HybridContext& ctx) {
  const auto& sys = ctx.system();
  const auto& table = ctx.ambient();
  const auto& cells = ctx.subgroup_cells();
  auto report = make_report(ctx, "preorder-compat");
  for (std::size_t xy = 0; xy < sys.order(); ++xy)
    for (Generator s = 0; s < sys.rank(); ++s)
      for (const auto& [uw, c] : to_canonical(multiply_generator_right(sys, table.column(xy), s), table)) {
        const std::size_t x = ctx.factor_parabolic(xy), u = ctx.factor_parabolic(uw);
        if (!cells.cell_leq(cells.cell_of(u), cells.cell_of(x)))
          report.add_witness(Witness()
                                 .add("x", sub_name(ctx, x))
                                 .add("y", element_name(ctx, ctx.factor_rep(xy)))
                                 .add("s", std::to_string(sys.label(s)))
                                 .add("u", sub_name(ctx, u))
                                 .add("w", element_name(ctx, ctx.factor_rep(uw))));
      }
  return report;
}

std::vector<std::size_t> induced_cells(const HybridContext& ctx, const CellPartition& ambient_right, std::size_t cell) {
  std::set<std::size_t> induced, touched;
  for (std::size_t c : ctx.subgroup_cells().cell(cell))
    for (const auto& rep : ctx.minimal_reps()) induced.insert(ctx.compose(c, ctx.system().index_of(rep)));
  for (std::size_t w : induced) touched.insert(ambient_right.cell_of(w));
  for (std::size_t k : touched)
    for (std::size_t w : ambient_right.cell(k))
      if (!induced.count(w)) return {};
  return {touched.begin(), touched.end()};
}

TheoremReport verify_induction(const HybridContext& ctx, const CellPartition& ambient_right, std::size_t cell) {
  const auto& sys = ctx.system();
  const auto& table = ctx.ambient();
  const auto& cells = ctx.subgroup_cells();
  if (ambient_right.side() != CellSide::Right || ambient_right.system_ptr() != table.system_ptr())
    throw DomainError("induction needs the right partition of the ambient table");
  if (cell >= cells.size()) throw DomainError("not a right cell of W_I");
  const auto& C = cells.cell(cell);
  auto report = make_report(ctx, "induction");
  std::set<std::size_t> Cset(C.begin(), C.end());
  report.parameter("cell", members_text(ctx, Cset));

  // set level
  std::set<std::size_t> induced;
  for (std::size_t c : C)
    for (const auto& rep : ctx.minimal_reps()) induced.insert(ctx.compose(c, sys.index_of(rep)));
  std::set<std::size_t> touched;
  for (std::size_t w : induced) touched.insert(ambient_right.cell_of(w));
  for (std::size_t k : touched)
    for (std::size_t w : ambient_right.cell(k))
      if (!induced.count(w))
        report.add_witness(Witness()
                               .add("kind", "set")
                               .add("ambient-cell", ambient_right.label(k))
                               .add("outside", element_name(ctx, w)));

  // module level: basis pairs (c, y) in (c, y) order, indexed by cy
  std::vector<std::size_t> basis;
  std::map<std::size_t, std::size_t> position;
  for (std::size_t c : C)
    for (const auto& rep : ctx.minimal_reps()) {
      std::size_t w = ctx.compose(c, sys.index_of(rep));
      position[w] = basis.size();
      basis.push_back(w);
    }
  const std::size_t n = basis.size();
  auto J = right_ideal_below(ctx, C.front());
  PolyMatrix B(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [uw, r] : hybrid_expand(ctx, table.column(basis[i]))) {
      auto it = position.find(uw);
      if (it != position.end()) B[i][it->second] = r;
    }
  auto module = cell_module(ctx.subgroup_table(), cells, cell);
  std::map<std::size_t, std::size_t> in_cell;
  for (std::size_t i = 0; i < C.size(); ++i) in_cell[C[i]] = i;
  const LaurentPolynomial q = quadratic_coefficient();

  for (Generator s = 0; s < sys.rank(); ++s) {
    PolyMatrix A(n, std::vector<LaurentPolynomial>(n)), N(n, std::vector<LaurentPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [uw, c] : to_canonical(multiply_generator_right(sys, table.column(basis[i]), s), table)) {
        auto it = position.find(uw);
        if (it != position.end()) {
          A[i][it->second] = c;
        } else if (!J.count(ctx.factor_parabolic(uw))) {
          report.add_witness(Witness()
                                 .add("kind", "ideal")
                                 .add("s", std::to_string(sys.label(s)))
                                 .add("from", element_name(ctx, basis[i]))
                                 .add("to", element_name(ctx, uw)));
        }
      }
      const std::size_t c = ctx.factor_parabolic(basis[i]);
      const auto& y = sys.element_at(ctx.factor_rep(basis[i]));
      auto deodhar = deodhar_case(ctx.subset(), y, s);
      if (auto* longer = std::get_if<DeodharLonger>(&deodhar)) {
        N[i][position.at(ctx.compose(c, sys.index_of(longer->ys)))] += 1;
      } else if (auto* shorter = std::get_if<DeodharShorter>(&deodhar)) {
        N[i][position.at(ctx.compose(c, sys.index_of(shorter->ys)))] += 1;
        N[i][i] += q;
      } else {
        Generator t = sub_generator(ctx, std::get<DeodharFolds>(deodhar).t);
        const auto& row = module.action[t][in_cell.at(c)];
        for (std::size_t j = 0; j < C.size(); ++j)
          if (!row[j].is_zero()) N[i][position.at(ctx.compose(C[j], sys.index_of(y)))] += row[j];
      }
    }
    auto left = A * B, right = B * N;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (left[i][j] != right[i][j])
          report.add_witness(Witness()
                                 .add("kind", "module")
                                 .add("s", std::to_string(sys.label(s)))
                                 .add("row", element_name(ctx, basis[i]))
                                 .add("column", element_name(ctx, basis[j]))
                                 .add("AB", left[i][j].to_string(true))
                                 .add("BN", right[i][j].to_string(true)));
  }
  return report;
}

TheoremReport verify_restriction(const HybridContext& ctx, const CellPartition& ambient_right, std::size_t cell) {
  const auto& sys = ctx.system();
  const auto& sub = ctx.parabolic().subsystem();
  const auto& cells = ctx.subgroup_cells();
  if (ambient_right.side() != CellSide::Right || ambient_right.system_ptr() != ctx.ambient().system_ptr())
    throw DomainError("restriction needs the right partition of the ambient table");
  if (cell >= ambient_right.size()) throw DomainError("not a right cell of W");
  auto report = make_report(ctx, "restriction");
  std::string members;
  for (const auto& w : ambient_right.members(cell)) members += (members.empty() ? "" : " ") + w.to_string();
  report.parameter("cell", "{" + members + "}");

  std::map<std::size_t, std::set<std::size_t>> by_coset;  // x in W^I -> x^-1 (D cap x W_I)
  for (std::size_t w : ambient_right.cell(cell)) {
    auto d = coset_decompose(ctx.subset(), sys.element_at(w), Side::Right);
    by_coset[sys.index_of(d.representative)].insert(sub.index_of(ctx.parabolic().restrict(d.parabolic)));
  }
  for (const auto& [x, part] : by_coset) {
    std::set<std::size_t> touched;
    for (std::size_t u : part) touched.insert(cells.cell_of(u));
    for (std::size_t k : touched)
      for (std::size_t u : cells.cell(k))
        if (!part.count(u))
          report.add_witness(Witness()
                                 .add("x", element_name(ctx, x))
                                 .add("part", members_text(ctx, part))
                                 .add("missing", sub_name(ctx, u)));
  }
  return report;
}

}  // namespace heckecells
