#include "heckecells/canonical.hpp"
#include "heckecells/error.hpp"
#include "heckecells/systems.hpp"
#include "oracles/kl_oracle.hpp"
#include "random_elements.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace heckecells;

namespace {

LaurentPolynomial P(const char* text) { return LaurentPolynomial::parse(text); }

CanonicalTable with_entry(const CanonicalTable& table, const char* y, const char* x, LaurentPolynomial value) {
  const auto& sys = table.system();
  std::vector<CanonicalTable::Column> columns;
  for (std::size_t i = 0; i < table.size(); ++i) columns.push_back(table.column(i));
  auto& col = columns[sys.index_of(sys.parse_element(x))];
  std::size_t yi = sys.index_of(sys.parse_element(y));
  if (value.is_zero())
    col.erase(yi);
  else
    col[yi] = std::move(value);
  return CanonicalTable(table.system_ptr(), table.p(), std::move(columns));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("heckecells_" + name);
}

}  // namespace

TEST(KlTable, GeneratorColumns) {
  for (const char* name : {"A1", "A2", "B2", "C3", "G2"}) {
    auto sys = preset_system(name);
    auto table = kl_table(sys);
    for (Generator s = 0; s < sys->rank(); ++s) {
      auto expected = HeckeElement::standard(sys->generator(s)) + HeckeElement::standard(sys->identity(), P("v"));
      EXPECT_EQ(table.canonical_element(sys->generator(s)), expected) << name;
    }
    EXPECT_EQ(table.canonical_element(sys->identity()), HeckeElement::standard(sys->identity()));
  }
}

TEST(KlTable, A2LongestColumn) {
  auto a2 = preset_system("A2");
  auto table = kl_table(a2);
  auto w0 = a2->parse_element("121");
  for (const auto& y : a2->elements())
    EXPECT_EQ(table.entry(y, w0), LaurentPolynomial::v(3 - static_cast<int>(y.length())));
}

TEST(KlTable, MatchesBruteForceOracle) {
  for (const char* name : {"A2", "B2", "A3", "C3"}) {
    auto sys = preset_system(name);
    auto table = kl_table(sys);
    auto oracle = oracles::brute_force_kl(sys);
    for (std::size_t x = 0; x < table.size(); ++x) {
      std::map<std::size_t, LaurentPolynomial> mine(table.column(x).begin(), table.column(x).end());
      EXPECT_EQ(mine, oracle[x]) << name << " column " << sys->element_at(x);
    }
  }
}

TEST(KlTable, C3ValidatesAndIsPositiveAtOne) {
  auto c3 = preset_system("C3");
  auto table = kl_table(c3);
  auto report = validate_table(table);
  EXPECT_TRUE(report.violations.empty()) << report.render();
  for (const auto& x : c3->elements())
    for (const auto& y : c3->elements())
      if (bruhat_leq(y, x)) EXPECT_GT(table.entry(y, x).evaluate_at_one(), 0) << y << " " << x;
}

TEST(KlTable, C3HasNontrivialPolynomial) {
  auto c3 = preset_system("C3");
  auto table = kl_table(c3);
  bool nontrivial = false;
  for (const auto& x : c3->elements())
    for (const auto& y : c3->elements())
      if (table.entry(y, x).terms().size() > 1) nontrivial = true;
  EXPECT_TRUE(nontrivial);
}

TEST(KlTable, RejectsInfiniteSystem) {
  auto affine = CoxeterSystem::from_cartan({1, 2}, {{2, -2}, {-2, 2}});
  EXPECT_THROW(kl_table(affine), DomainError);
}

TEST(ValidateTable, SeededPositivityDefect) {
  auto b2 = preset_system("B2");
  auto bad = with_entry(kl_table(b2), "1", "12", P("-v"));
  auto report = validate_table(bad);
  ASSERT_FALSE(report.passes_mandatory());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.check == TableCheck::Positivity && v.y.to_string() == "1" && v.x.to_string() == "12") found = true;
  EXPECT_TRUE(found) << report.render();
}

TEST(ValidateTable, SeededSupportDefect) {
  auto b2 = preset_system("B2");
  auto bad = with_entry(kl_table(b2), "2", "1", P("v"));
  auto report = validate_table(bad);
  EXPECT_EQ(report.count(TableCheck::BruhatSupport), 1u) << report.render();
  EXPECT_GE(report.count(TableCheck::BarInvariance), 1u);
}

TEST(ValidateTable, DiagonalAndIotaDefects) {
  auto a2 = preset_system("A2");
  auto table = kl_table(a2);
  EXPECT_EQ(validate_table(with_entry(table, "12", "12", P("1 + v"))).count(TableCheck::Unitriangular), 1u);
  // breaks h_{1,12} = h_{1,21}
  auto skew = with_entry(table, "1", "12", P("v + v^3"));
  EXPECT_EQ(validate_table(skew).count(TableCheck::IotaSymmetry), 2u);
  EXPECT_GE(validate_table(with_entry(table, "e", "1", P("1"))).count(TableCheck::DegreeBound), 1u);
}

TEST(ValidateTable, BarInvarianceAdvisoryForPositiveCharacteristic) {
  auto b2 = preset_system("B2");
  auto kl = kl_table(b2);
  std::vector<CanonicalTable::Column> columns;
  for (std::size_t i = 0; i < kl.size(); ++i) columns.push_back(kl.column(i));
  columns[b2->index_of(b2->parse_element("2"))][0] = P("v + v^2");
  CanonicalTable table(b2, 2, columns);
  auto report = validate_table(table);
  EXPECT_TRUE(report.passes_mandatory()) << report.render();
  EXPECT_GE(report.count(TableCheck::BarInvariance), 1u);
  EXPECT_EQ(report.count(TableCheck::DegreeBound), 0u);
}

TEST(ChangeBasis, Examples) {
  auto a2 = preset_system("A2");
  auto table = kl_table(a2);
  auto e = a2->identity();
  auto s = a2->parse_element("1");
  CanonicalCoordinates expected{{e, P("-v")}, {s, 1}};
  EXPECT_EQ(to_canonical(HeckeElement::standard(s), table), expected);

  auto h12 = to_standard(CanonicalCoordinates{{a2->parse_element("12"), 1}}, table);
  EXPECT_EQ(h12.to_string(), "1*H(12) + v*H(2) + v*H(1) + v^2*H(e)");

  for (const auto& w : a2->elements()) {
    CanonicalCoordinates unit{{w, 1}};
    EXPECT_EQ(to_canonical(table.canonical_element(w), table), unit);
  }
}

TEST(ChangeBasis, RoundTripOnRandomCoordinates) {
  std::mt19937 rng(7);
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    auto sys = preset_system(name);
    auto table = kl_table(sys);
    for (int trial = 0; trial < 50; ++trial) {
      auto h = testing_support::random_element(rng, *sys, 5);
      CanonicalCoordinates c;
      for (const auto& [w, coeff] : h.terms()) c.emplace(w, coeff);
      EXPECT_EQ(to_canonical(to_standard(c, table), table), c);
      EXPECT_EQ(to_standard(to_canonical(h, table), table), h);
    }
  }
}

TEST(ChangeBasis, RejectsForeignElements) {
  auto table = kl_table(preset_system("A2"));
  auto b2 = preset_system("B2");
  EXPECT_THROW(to_canonical(HeckeElement::standard(b2->generator(0)), table), DomainError);
}

TEST(ParabolicInvariance, KlTables) {
  auto c3 = kl_table(preset_system("C3"));
  auto report = check_parabolic_invariance(c3, c3.system().parse_generator_set("1,2"));
  EXPECT_EQ(report.verdict, Verdict::Verified) << report.render();
  auto a2 = kl_table(preset_system("A2"));
  EXPECT_EQ(check_parabolic_invariance(a2, a2.system().parse_generator_set("1")).verdict, Verdict::Verified);
}

TEST(ParabolicInvariance, SeededDefectIsReported) {
  auto a2 = preset_system("A2");
  auto bad = with_entry(kl_table(a2), "2", "12", P("v + v^3"));
  auto report = check_parabolic_invariance(bad, a2->parse_generator_set("1"));
  ASSERT_EQ(report.verdict, Verdict::Violated);
  bool found = false;
  for (const auto& w : report.witnesses)
    if (w.to_string().find("z=2") != std::string::npos && w.to_string().find("h_yz_xz=v+v^3") != std::string::npos)
      found = true;
  EXPECT_TRUE(found) << report.render();
}

TEST(TableIo, RoundTrip) {
  for (const char* name : {"B2", "C3"}) {
    auto table = kl_table(preset_system(name));
    auto path = temp_file(std::string(name) + ".tbl");
    save_table(table, path.string());
    auto loaded = load_table(path.string());
    EXPECT_EQ(loaded, table);
    EXPECT_EQ(format_table(loaded), format_table(table));
    std::filesystem::remove(path);
  }
}

TEST(TableIo, OmittedDiagonalIsImplied) {
  auto table = parse_table("p = 0\nsystem = A1\n1\te\tv\n");
  EXPECT_EQ(table, kl_table(preset_system("A1")));
}

TEST(TableIo, MissingDiagonal) {
  try {
    parse_table("p = 0\nsystem = A1\ne\te\t1\n1\te\tv\n");
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing diagonal"), std::string::npos);
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(TableIo, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_table(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p = 0\nsystem = A1\n\n1\te\tv +\n"), 4u);
  EXPECT_EQ(line_of("p = x\n"), 1u);
  EXPECT_EQ(line_of("p = 0\nsystem = A1\n3\te\tv\n"), 3u);
  EXPECT_EQ(line_of("# c\n1\te\tv\n"), 2u);
  EXPECT_EQ(line_of("p = 0\nsystem = A1\n1\te\tv\n1\te\tv\n"), 4u);
}

TEST(TableIo, RefusesAxiomViolationsUnlessForced) {
  const char* text = "p = 2\nsystem = A1\n1\te\t-v\n";
  EXPECT_THROW(parse_table(text), Error);
  LoadOptions force;
  force.force = true;
  auto table = parse_table(text, force);
  EXPECT_FALSE(validate_table(table).passes_mandatory());
}
