#include "heckecells/error.hpp"
#include "heckecells/fixtures.hpp"
#include "heckecells/induction.hpp"
#include "heckecells/systems.hpp"

#include <gtest/gtest.h>

using namespace heckecells;

namespace {

std::shared_ptr<const CanonicalTable> kl(const char* name) {
  return std::make_shared<CanonicalTable>(kl_table(preset_system(name)));
}

std::vector<GeneratorSet> all_subsets(const CoxeterSystem& sys) {
  std::vector<GeneratorSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << sys.rank()); ++mask) {
    GeneratorSet set;
    for (Generator s = 0; s < sys.rank(); ++s)
      if (mask >> s & 1U) set.insert(s);
    out.push_back(set);
  }
  return out;
}

std::size_t sub_index(const HybridContext& ctx, const char* word) {
  return ctx.parabolic().subsystem().index_of(ctx.parabolic().restrict(ctx.system().parse_element(word)));
}

std::set<ElementSet> induced_sets(const HybridContext& ctx, const CellPartition& right, const char* word) {
  std::set<ElementSet> out;
  for (std::size_t k : induced_cells(ctx, right, ctx.subgroup_cells().cell_of(sub_index(ctx, word))))
    out.emplace(right.cell(k).begin(), right.cell(k).end());
  return out;
}

const std::vector<const char*> kSystems = {"A2", "B2", "G2", "A3", "C3"};

}  // namespace

TEST(IdealCheck, C3Examples) {
  auto table = kl("C3");
  HybridContext ctx(table, table->system().parse_generator_set("1,2"));
  auto report = ideal_check(ctx, right_ideal_below(ctx, sub_index(ctx, "212")));
  EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
  std::set<std::size_t> all;
  for (std::size_t u = 0; u < ctx.parabolic().subsystem().order(); ++u) all.insert(u);
  EXPECT_EQ(ideal_check(ctx, all).verdict, Verdict::Verified);
  EXPECT_EQ(ideal_check(ctx, {}).verdict, Verdict::Verified);
  EXPECT_THROW(ideal_check(ctx, {sub_index(ctx, "e")}), DomainError);
}

TEST(IdealCheck, EveryPrincipalIdeal) {
  for (const char* name : kSystems) {
    auto table = kl(name);
    for (auto subset : all_subsets(table->system())) {
      HybridContext ctx(table, subset);
      for (std::size_t x = 0; x < ctx.parabolic().subsystem().order(); ++x) {
        auto report = ideal_check(ctx, right_ideal_below(ctx, x));
        EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
      }
    }
  }
}

TEST(PreorderCompat, AllSystems) {
  for (const char* name : kSystems) {
    auto table = kl(name);
    for (auto subset : all_subsets(table->system())) {
      auto report = verify_preorder_compat(HybridContext(table, subset));
      EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
    }
  }
  auto fixture = std::make_shared<CanonicalTable>(load_table(data_path("b2_p2.tbl")));
  for (auto subset : all_subsets(fixture->system()))
    EXPECT_EQ(verify_preorder_compat(HybridContext(fixture, subset)).verdict, Verdict::Verified);
}

TEST(Induction, A2Examples) {
  auto table = kl("A2");
  const auto& a2 = table->system();
  HybridContext ctx(table, a2.parse_generator_set("1"));
  auto right = cell_partition(*table, CellSide::Right);
  std::set<ElementSet> from_1{to_element_set(a2, {"1", "12"}), to_element_set(a2, {"121"})};
  EXPECT_EQ(induced_sets(ctx, right, "1"), from_1);
  std::set<ElementSet> from_e{to_element_set(a2, {"e"}), to_element_set(a2, {"2", "21"})};
  EXPECT_EQ(induced_sets(ctx, right, "e"), from_e);
  for (std::size_t k = 0; k < ctx.subgroup_cells().size(); ++k) {
    auto report = verify_induction(ctx, right, k);
    EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
  }
}

TEST(Induction, EveryCellEverySubset) {
  for (const char* name : kSystems) {
    auto table = kl(name);
    auto right = cell_partition(*table, CellSide::Right);
    for (auto subset : all_subsets(table->system())) {
      HybridContext ctx(table, subset);
      auto compat = verify_preorder_compat(ctx);
      for (std::size_t k = 0; k < ctx.subgroup_cells().size(); ++k) {
        auto report = verify_induction(ctx, right, k);
        EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
        if (compat.ok()) EXPECT_FALSE(induced_cells(ctx, right, k).empty());
      }
    }
  }
}

TEST(Induction, B2FixtureCells) {
  auto fixture = std::make_shared<CanonicalTable>(load_table(data_path("b2_p2.tbl")));
  auto right = cell_partition(*fixture, CellSide::Right);
  for (auto subset : all_subsets(fixture->system())) {
    HybridContext ctx(fixture, subset);
    for (std::size_t k = 0; k < ctx.subgroup_cells().size(); ++k)
      EXPECT_EQ(verify_induction(ctx, right, k).verdict, Verdict::Verified);
  }
}

TEST(Induction, DetectsWrongPartition) {
  auto table = kl("A2");
  const auto& a2 = table->system();
  HybridContext ctx(table, a2.parse_generator_set("1"));
  // every element in its own cell
  CellPartition fine(table->system_ptr(), 0, CellSide::Right, CellGraph(a2.order()));
  auto report = verify_induction(ctx, fine, ctx.subgroup_cells().cell_of(sub_index(ctx, "e")));
  EXPECT_EQ(report.verdict, Verdict::Verified);
  CellGraph lumped(a2.order());
  for (std::size_t i = 0; i < a2.order(); ++i) lumped[i] = {(i + 1) % a2.order()};
  CellPartition one(table->system_ptr(), 0, CellSide::Right, lumped);
  EXPECT_EQ(verify_induction(ctx, one, 0).verdict, Verdict::Violated);
  EXPECT_THROW(verify_induction(ctx, cell_partition(*table, CellSide::Left), 0), DomainError);
}

TEST(Restriction, Examples) {
  auto a2t = kl("A2");
  const auto& a2 = a2t->system();
  HybridContext a2ctx(a2t, a2.parse_generator_set("1"));
  auto a2right = cell_partition(*a2t, CellSide::Right);
  auto report = verify_restriction(a2ctx, a2right, a2right.cell_of(a2.parse_element("2")));
  EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
  EXPECT_EQ(verify_restriction(a2ctx, a2right, 0).verdict, Verdict::Verified);

  auto c3t = kl("C3");
  const auto& c3 = c3t->system();
  HybridContext c3ctx(c3t, c3.parse_generator_set("1,2"));
  auto c3right = cell_partition(*c3t, CellSide::Right);
  auto w0 = c3.element_at(c3.order() - 1);
  EXPECT_EQ(verify_restriction(c3ctx, c3right, c3right.cell_of(w0)).verdict, Verdict::Verified);
  auto d = coset_decompose(c3ctx.subset(), w0, Side::Right);
  EXPECT_EQ(d.parabolic, parabolic_elements(c3, c3ctx.subset()).back());
}

TEST(Restriction, EveryCellEverySubset) {
  for (const char* name : kSystems) {
    auto table = kl(name);
    auto right = cell_partition(*table, CellSide::Right);
    for (auto subset : all_subsets(table->system())) {
      HybridContext ctx(table, subset);
      for (std::size_t k = 0; k < right.size(); ++k) {
        auto report = verify_restriction(ctx, right, k);
        EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
      }
    }
  }
}

TEST(Induction, InconsistentTableIsCaught) {
  // column 212 := KL(212) + KL(2) + KL(1): passes the table axioms, fails the theorems for I = {2}
  auto b2 = preset_system("B2");
  auto kl_b2 = kl_table(b2);
  std::vector<CanonicalTable::Column> columns;
  for (std::size_t i = 0; i < kl_b2.size(); ++i) columns.push_back(kl_b2.column(i));
  auto& col = columns[b2->index_of(b2->parse_element("212"))];
  for (const char* w : {"2", "1"}) add_scaled(col, 1, kl_b2.column(b2->index_of(b2->parse_element(w))));
  auto table = std::make_shared<CanonicalTable>(b2, 2, columns);
  ASSERT_TRUE(validate_table(*table).passes_mandatory());
  HybridContext ctx(table, b2->parse_generator_set("2"));
  auto right = cell_partition(*table, CellSide::Right);
  EXPECT_EQ(verify_preorder_compat(ctx).verdict, Verdict::Violated);
  std::set<std::string> kinds;
  for (std::size_t k = 0; k < ctx.subgroup_cells().size(); ++k)
    for (const auto& w : verify_induction(ctx, right, k).witnesses)
      for (const auto& [key, value] : w.fields)
        if (key == "kind") kinds.insert(value);
  EXPECT_FALSE(kinds.empty());
}
