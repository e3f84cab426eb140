#include "heckecells/hybrid.hpp"

#include "heckecells/error.hpp"
#include "heckecells/parallel.hpp"

namespace heckecells {

HybridContext::HybridContext(std::shared_ptr<const CanonicalTable> ambient, GeneratorSet subset)
    : ambient_(std::move(ambient)), parabolic_(ambient_->system_ptr(), subset) {
  const auto& sys = ambient_->system();
  const auto& sub = parabolic_.subsystem();
  if (ambient_->p() == 0) {
    subgroup_table_ = std::make_shared<CanonicalTable>(kl_table(parabolic_.subsystem_ptr()));
    subgroup_source_ = "kl";
  } else {
    subgroup_table_ = std::make_shared<CanonicalTable>(extract_subtable(*ambient_, parabolic_));
    subgroup_source_ = "extracted";
  }
  auto report = validate_table(*subgroup_table_);
  if (!report.passes_mandatory())
    throw DomainError("table of W_I fails validation:\n" + report.render());
  subgroup_cells_ = std::make_shared<CellPartition>(cell_partition(*subgroup_table_, CellSide::Right));
  reps_ = heckecells::minimal_reps(sys, subset, Side::Left);

  embed_.resize(sub.order());
  for (std::size_t x = 0; x < sub.order(); ++x) embed_[x] = sys.index_of(parabolic_.embed(sub.element_at(x)));
  factor_x_.resize(sys.order());
  factor_y_.resize(sys.order());
  for (std::size_t w = 0; w < sys.order(); ++w) {
    auto d = coset_decompose(subset, sys.element_at(w), Side::Left);
    factor_x_[w] = sub.index_of(parabolic_.restrict(d.parabolic));
    factor_y_[w] = sys.index_of(d.representative);
  }

  hybrid_.resize(sys.order());
  parallel_for(sys.order(), [&](std::size_t w) {
    IndexedElement h;
    for (const auto& [u, c] : subgroup_table_->column(factor_x_[w])) h.emplace(embed_[u], c);
    for (Generator s : sys.element_at(factor_y_[w]).word()) h = multiply_generator_right(sys, h, s);
    hybrid_[w] = std::move(h);
  });
}

std::size_t HybridContext::compose(std::size_t x_sub, std::size_t y) const {
  return system().index_of(multiply(system().element_at(embed_.at(x_sub)), system().element_at(y)));
}

namespace {

std::pair<std::size_t, std::size_t> check_factors(const HybridContext& ctx, const CoxeterElement& x,
                                                  const CoxeterElement& y) {
  const auto& sys = ctx.system();
  if (x.system_ptr() != &sys || y.system_ptr() != &sys) throw DomainError("element of a different system");
  if (!ctx.parabolic().contains(x)) throw DomainError(x.to_string() + " is not in W_I");
  if (!is_minimal_rep(y, ctx.subset(), Side::Left)) throw DomainError(y.to_string() + " is not in ^I W");
  return {ctx.parabolic().subsystem().index_of(ctx.parabolic().restrict(x)), sys.index_of(y)};
}

}  // namespace

HeckeElement hybrid_element(const HybridContext& ctx, const CoxeterElement& x, const CoxeterElement& y) {
  auto [xs, yi] = check_factors(ctx, x, y);
  return to_hecke(ctx.system(), ctx.hybrid(ctx.compose(xs, yi)));
}

IndexedElement hybrid_expand(const HybridContext& ctx, const IndexedElement& a) {
  IndexedElement rest = a, out;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const std::size_t w = top->first;
    const LaurentPolynomial c = top->second;
    const auto& h = ctx.hybrid(w);
    if (h.rbegin()->first != w || h.rbegin()->second != LaurentPolynomial(1))
      throw DomainError("hybrid element of " + ctx.system().element_at(w).to_string() + " lacks its leading term");
    out.emplace(w, c);
    add_scaled(rest, -c, h);
  }
  return out;
}

HybridCoefficients hybrid_expand(const HybridContext& ctx, const HeckeElement& a) {
  const auto& sys = ctx.system();
  if (a.system_ptr() && a.system_ptr().get() != &sys) throw DomainError("element lies outside the context");
  HybridCoefficients out;
  for (const auto& [w, c] : hybrid_expand(ctx, to_indexed(a)))
    out.emplace(std::make_pair(ctx.parabolic().embed(ctx.parabolic().subsystem().element_at(ctx.factor_parabolic(w))),
                               sys.element_at(ctx.factor_rep(w))),
                c);
  return out;
}

bool hybrid_leq(const HybridContext& ctx, std::size_t xy, std::size_t uw) {
  if (xy == uw) return true;
  const auto& sys = ctx.system();
  const std::size_t y = ctx.factor_rep(xy), w = ctx.factor_rep(uw);
  return ctx.subgroup_cells().cell_leq(ctx.subgroup_cells().cell_of(ctx.factor_parabolic(xy)),
                                       ctx.subgroup_cells().cell_of(ctx.factor_parabolic(uw))) &&
         y != w && bruhat_leq(sys.element_at(y), sys.element_at(w));
}

bool hybrid_leq(const HybridContext& ctx, const CoxeterElement& x, const CoxeterElement& y, const CoxeterElement& u,
                const CoxeterElement& w) {
  auto [xs, yi] = check_factors(ctx, x, y);
  auto [us, wi] = check_factors(ctx, u, w);
  return hybrid_leq(ctx, ctx.compose(xs, yi), ctx.compose(us, wi));
}

TheoremReport verify_hybrid_theorems(const HybridContext& ctx) {
  const auto& sys = ctx.system();
  const auto& sub = ctx.parabolic().subsystem();
  const auto& table = ctx.ambient();
  TheoremReport report("hybrid-theorems");
  report.parameter("system", table.system_reference())
      .parameter("I", sys.format_generator_set(ctx.subset()))
      .parameter("p", std::to_string(table.p()))
      .parameter("subgroup-table", ctx.subgroup_source());

  auto pair_name = [&](std::size_t w) {
    return ctx.parabolic().embed(sub.element_at(ctx.factor_parabolic(w))).to_string() + "." +
           sys.element_at(ctx.factor_rep(w)).to_string();
  };
  std::vector<std::vector<Witness>> found(sys.order());
  parallel_for(sys.order(), [&](std::size_t target) {
    auto& out = found[target];
    const std::string target_name = sys.element_at(target).to_string();
    auto r = hybrid_expand(ctx, table.column(target));
    for (const auto& [uw, c] : r) {
      if (!c.is_nonnegative())
        out.push_back(Witness().add("check", "positivity").add("target", target_name).add("uw", pair_name(uw)).add(
            "r", c.to_string(true)));
      if (!hybrid_leq(ctx, uw, target))
        out.push_back(Witness().add("check", "support").add("target", target_name).add("uw", pair_name(uw)).add(
            "r", c.to_string(true)));
    }
    auto diagonal = r.find(target);
    if (diagonal == r.end() || diagonal->second != LaurentPolynomial(1))
      out.push_back(Witness()
                        .add("check", "diagonal")
                        .add("target", target_name)
                        .add("r", diagonal == r.end() ? "0" : diagonal->second.to_string(true)));
    // h_{zw',xy} = sum_u r_{uw',xy} h_{z,u}
    for (const auto& rep : ctx.minimal_reps()) {
      const std::size_t wp = sys.index_of(rep);
      for (std::size_t z = 0; z < sub.order(); ++z) {
        LaurentPolynomial rhs;
        for (std::size_t u = 0; u < sub.order(); ++u) {
          auto it = r.find(ctx.compose(u, wp));
          if (it == r.end()) continue;
          auto h = ctx.subgroup_table().entry(z, u);
          if (!h.is_zero()) rhs.add_product(it->second, h);
        }
        auto lhs = table.entry(ctx.compose(z, wp), target);
        if (lhs != rhs)
          out.push_back(Witness()
                            .add("check", "coefficients")
                            .add("target", target_name)
                            .add("z", ctx.parabolic().embed(sub.element_at(z)).to_string())
                            .add("w'", rep.to_string())
                            .add("h", lhs.to_string(true))
                            .add("sum", rhs.to_string(true)));
      }
    }
  });
  for (auto& list : found)
    for (auto& w : list) report.add_witness(std::move(w));
  return report;
}

}  // namespace heckecells
