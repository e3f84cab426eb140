#include "heckecells/coxeter.hpp"
#include "heckecells/error.hpp"
#include "heckecells/systems.hpp"
#include "oracles/coxeter_oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace heckecells;

namespace {

std::vector<std::string> words(const std::vector<CoxeterElement>& elements) {
  std::vector<std::string> out;
  for (const auto& w : elements) out.push_back(w.to_string());
  return out;
}

std::vector<GeneratorSet> all_subsets(const CoxeterSystem& sys) {
  std::vector<GeneratorSet> out;
  for (std::uint64_t bits = 0; bits < (1ULL << sys.rank()); ++bits) out.emplace_back(bits);
  return out;
}

const std::vector<std::string> kFinitePresets = {"A1", "A2", "A3", "B2", "C3", "G2"};

}  // namespace

TEST(BuildSystem, C3FromCartan) {
  auto c3 = CoxeterSystem::from_cartan({1, 2, 3}, {{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(c3->coxeter_entry(0, 1), 4);
  EXPECT_EQ(c3->coxeter_entry(1, 2), 3);
  EXPECT_EQ(c3->coxeter_entry(0, 2), 2);
  EXPECT_TRUE(c3->is_finite());
  EXPECT_EQ(c3->order(), 48u);
}

TEST(BuildSystem, SmallCartanTypes) {
  auto a1 = CoxeterSystem::from_cartan({1}, {{2}});
  EXPECT_TRUE(a1->is_finite());
  EXPECT_EQ(a1->order(), 2u);
  auto g2 = CoxeterSystem::from_cartan({1, 2}, {{2, -1}, {-3, 2}});
  EXPECT_EQ(g2->coxeter_entry(0, 1), 6);
  EXPECT_EQ(g2->order(), 12u);
  EXPECT_EQ(preset_system("A3")->order(), 24u);
  EXPECT_EQ(preset_system("B2")->order(), 8u);
}

TEST(BuildSystem, RejectsInvalidMatrices) {
  EXPECT_THROW(CoxeterSystem::from_coxeter({1, 2}, {{1, 3}, {4, 1}}), DomainError);   // not symmetric
  EXPECT_THROW(CoxeterSystem::from_coxeter({1, 2}, {{2, 3}, {3, 1}}), DomainError);   // diagonal
  EXPECT_THROW(CoxeterSystem::from_coxeter({1, 2}, {{1, 5}, {5, 1}}), DomainError);   // H2 / I2(5)
  EXPECT_THROW(CoxeterSystem::from_coxeter({1, 2}, {{1, 8}, {8, 1}}), DomainError);
  EXPECT_THROW(CoxeterSystem::from_cartan({1, 2}, {{3, -1}, {-1, 2}}), DomainError);  // diagonal
  EXPECT_THROW(CoxeterSystem::from_cartan({1, 2}, {{2, 1}, {-1, 2}}), DomainError);   // positive entry
  EXPECT_THROW(CoxeterSystem::from_cartan({1, 2}, {{2, 0}, {-1, 2}}), DomainError);   // zero pattern
  EXPECT_THROW(CoxeterSystem::from_cartan({1, 1}, {{2, -1}, {-1, 2}}), DomainError);  // duplicate label
  EXPECT_THROW(preset_system("H3"), DomainError);
}

TEST(BuildSystem, CoxeterMatrixInputAgreesWithCartanInput) {
  auto from_m = CoxeterSystem::from_coxeter({1, 2, 3}, {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
  auto c3 = preset_system("C3");
  ASSERT_EQ(from_m->order(), c3->order());
  EXPECT_EQ(words(from_m->elements()), words(c3->elements()));
}

TEST(BuildSystem, InfiniteSystems) {
  auto affine_a1 = CoxeterSystem::from_cartan({1, 2}, {{2, -2}, {-2, 2}});
  EXPECT_FALSE(affine_a1->is_finite());
  EXPECT_EQ(affine_a1->coxeter_entry(0, 1), kInfiniteOrder);
  EXPECT_THROW(affine_a1->order(), DomainError);
  EXPECT_THROW(affine_a1->elements(), DomainError);
  auto w = affine_a1->parse_element("121212");
  EXPECT_EQ(w.length(), 6u);
  EXPECT_EQ(affine_a1->parse_element("1221").length(), 0u);

  auto affine_a2 = CoxeterSystem::from_coxeter({1, 2, 3}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  EXPECT_FALSE(affine_a2->is_finite());
  EXPECT_EQ(affine_a2->parse_element("121").to_string(), "121");
  EXPECT_EQ(affine_a2->parse_element("212").to_string(), "121");
  // ^I W of affine A2 modulo the finite A2 {1,2}: 1, 3, 2 + 2 of length two per length
  auto reps = minimal_reps(*affine_a2, affine_a2->parse_generator_set("1,2"), Side::Left, 3);
  EXPECT_EQ(words(reps), (std::vector<std::string>{"e", "3", "31", "32", "312", "321"}));
  EXPECT_THROW(minimal_reps(*affine_a2, affine_a2->parse_generator_set("1,2"), Side::Left), DomainError);
  EXPECT_THROW(minimal_reps(*affine_a1, GeneratorSet::all(2), Side::Left, 2), DomainError);
}

TEST(Words, FromWordExamples) {
  auto c3 = preset_system("C3");
  EXPECT_TRUE(c3->parse_element("33").is_identity());
  EXPECT_EQ(c3->parse_element("313").to_string(), "1");
  auto w = c3->parse_element("2123");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.to_string(), "2123");
  EXPECT_EQ(c3->parse_element("id"), c3->identity());
  EXPECT_EQ(c3->identity().to_string(), "e");
  EXPECT_THROW(c3->parse_element("14"), DomainError);
  EXPECT_THROW(c3->parse_element("1a"), ParseError);
}

TEST(Words, NormalFormIsIdempotent) {
  for (const auto& name : kFinitePresets) {
    auto sys = preset_system(name);
    for (const auto& w : sys->elements()) {
      EXPECT_EQ(sys->element(w.word()), w);
      EXPECT_EQ(sys->parse_element(w.to_string()), w);
      EXPECT_EQ(w.length(), w.word().size());
    }
  }
}

TEST(Words, LargeLabelsUseCommas) {
  auto sys = CoxeterSystem::from_cartan({3, 10, 12}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  auto w = sys->parse_element("10,3,12");
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(sys->parse_element(w.to_string()), w);
  EXPECT_NE(w.to_string().find(','), std::string::npos);
  EXPECT_EQ(sys->parse_generator_set("3,12"), GeneratorSet({0, 2}));
}

TEST(Multiply, Examples) {
  auto c3 = preset_system("C3");
  auto p = multiply(c3->parse_element("1"), c3->parse_element("2"));
  EXPECT_EQ(p.to_string(), "12");
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(multiply(c3->parse_element("212"), c3->parse_element("3")).to_string(), "2123");
  auto a2 = preset_system("A2");
  EXPECT_EQ(inverse(a2->parse_element("12")).to_string(), "21");
  EXPECT_EQ(descents(c3->parse_element("2123"), Side::Right), GeneratorSet({2}));
  EXPECT_THROW(multiply(c3->identity(), a2->identity()), DomainError);
}

TEST(Multiply, LengthSubadditiveAndEqualityIffReducedConcatenation) {
  for (const auto& name : {"A3", "C3", "G2"}) {
    auto sys = preset_system(name);
    for (const auto& a : sys->elements())
      for (const auto& b : sys->elements()) {
        auto ab = multiply(a, b);
        EXPECT_LE(ab.length(), a.length() + b.length());
        Word concat = a.word();
        concat.insert(concat.end(), b.word().begin(), b.word().end());
        // concatenation reduced <=> weight orbit length equals word length
        bool reduced = sys->element(concat).length() == concat.size();
        EXPECT_EQ(ab.length() == a.length() + b.length(), reduced);
      }
  }
}

TEST(Multiply, DescentsMatchLengthDefinition) {
  for (const auto& name : kFinitePresets) {
    auto sys = preset_system(name);
    for (const auto& w : sys->elements())
      for (Generator s = 0; s < sys->rank(); ++s) {
        EXPECT_EQ(sys->is_right_descent(w, s), sys->right_multiply(w, s).length() < w.length());
        EXPECT_EQ(sys->is_left_descent(w, s), sys->left_multiply(s, w).length() < w.length());
      }
  }
}

TEST(Oracle, FromWordMatchesReflectionMatrices) {
  for (const auto& name : {"A2", "B2", "A3", "C3"}) {
    auto sys = preset_system(name);
    std::map<oracle::Matrix, std::string> seen;
    for (const auto& a : sys->elements()) {
      auto ma = oracle::word_matrix(sys->cartan_matrix(), a.word());
      EXPECT_TRUE(seen.emplace(ma, a.to_string()).second) << "two elements share a matrix in " << name;
      for (const auto& b : sys->elements()) {
        auto mb = oracle::word_matrix(sys->cartan_matrix(), b.word());
        EXPECT_EQ(oracle::word_matrix(sys->cartan_matrix(), multiply(a, b).word()), oracle::product(ma, mb));
      }
    }
  }
}

TEST(Bruhat, Examples) {
  auto c3 = preset_system("C3");
  for (const auto& w : c3->elements()) EXPECT_TRUE(bruhat_leq(c3->identity(), w));
  EXPECT_TRUE(bruhat_leq(c3->parse_element("13"), c3->parse_element("132")));
  EXPECT_FALSE(bruhat_leq(c3->parse_element("3"), c3->parse_element("121")));
}

TEST(Bruhat, MatchesSubwordOracle) {
  for (const auto& name : {"A2", "B2", "G2", "A3", "C3"}) {
    auto sys = preset_system(name);
    for (const auto& w : sys->elements()) {
      auto interval = oracle::subword_interval(w);
      for (const auto& u : sys->elements())
        EXPECT_EQ(bruhat_leq(u, w), interval.count(u) == 1) << name << ": " << u << " <= " << w;
    }
  }
}

TEST(Enumerate, SortedByLengthThenShortLex) {
  EXPECT_EQ(words(preset_system("A1")->elements()), (std::vector<std::string>{"e", "1"}));
  EXPECT_EQ(words(preset_system("A2")->elements()),
            (std::vector<std::string>{"e", "1", "2", "12", "21", "121"}));
  auto c3 = preset_system("C3");
  EXPECT_EQ(c3->elements().size(), 48u);
  EXPECT_EQ(c3->elements().back().length(), 9u);
  EXPECT_TRUE(std::is_sorted(c3->elements().begin(), c3->elements().end()));
  for (std::size_t i = 0; i < c3->elements().size(); ++i) EXPECT_EQ(c3->index_of(c3->elements()[i]), i);
}

TEST(Parabolic, MinimalRepsOfC3) {
  auto c3 = preset_system("C3");
  auto reps = minimal_reps(*c3, c3->parse_generator_set("1,2"), Side::Left);
  EXPECT_EQ(words(reps), (std::vector<std::string>{"e", "3", "32", "321", "3212", "32123"}));
  auto d = coset_decompose(c3->parse_generator_set("1,2"), c3->parse_element("2123"), Side::Left);
  EXPECT_EQ(d.parabolic.to_string(), "212");
  EXPECT_EQ(d.representative.to_string(), "3");
}

TEST(Parabolic, EmptySubsetIsTrivial) {
  auto a3 = preset_system("A3");
  EXPECT_EQ(minimal_reps(*a3, GeneratorSet{}, Side::Left).size(), a3->order());
  for (const auto& w : a3->elements()) {
    auto d = coset_decompose(GeneratorSet{}, w, Side::Left);
    EXPECT_TRUE(d.parabolic.is_identity());
    EXPECT_EQ(d.representative, w);
  }
}

TEST(Parabolic, DecompositionIsBijectiveWithAdditiveLength) {
  for (const auto& name : {"A2", "B2", "G2", "A3", "C3"}) {
    auto sys = preset_system(name);
    for (auto subset : all_subsets(*sys))
      for (Side side : {Side::Left, Side::Right}) {
        auto reps = minimal_reps(*sys, subset, side);
        auto parabolic = parabolic_elements(*sys, subset);
        EXPECT_EQ(reps.size() * parabolic.size(), sys->order());
        std::set<CoxeterElement> image;
        for (const auto& x : parabolic)
          for (const auto& y : reps) {
            auto w = side == Side::Left ? multiply(x, y) : multiply(y, x);
            EXPECT_EQ(w.length(), x.length() + y.length());
            image.insert(w);
            auto d = coset_decompose(subset, w, side);
            EXPECT_EQ(d.parabolic, x);
            EXPECT_EQ(d.representative, y);
          }
        EXPECT_EQ(image.size(), sys->order());
      }
  }
}

TEST(Parabolic, ProjectionIsMonotone) {
  for (const auto& name : {"A3", "B2", "C3"}) {
    auto sys = preset_system(name);
    for (auto subset : all_subsets(*sys))
      for (const auto& u : sys->elements())
        for (const auto& w : sys->elements()) {
          if (!bruhat_leq(u, w)) continue;
          auto pu = coset_decompose(subset, u, Side::Left).representative;
          auto pw = coset_decompose(subset, w, Side::Left).representative;
          EXPECT_TRUE(bruhat_leq(pu, pw)) << name << " " << u << " <= " << w;
        }
  }
}

TEST(Deodhar, Examples) {
  auto c3 = preset_system("C3");
  auto I = c3->parse_generator_set("1,2");
  auto y = c3->parse_element("3");
  auto longer = deodhar_case(I, y, c3->generator_of_label(2));
  ASSERT_TRUE(std::holds_alternative<DeodharLonger>(longer));
  EXPECT_EQ(std::get<DeodharLonger>(longer).ys.to_string(), "32");
  auto shorter = deodhar_case(I, y, c3->generator_of_label(3));
  ASSERT_TRUE(std::holds_alternative<DeodharShorter>(shorter));
  EXPECT_TRUE(std::get<DeodharShorter>(shorter).ys.is_identity());
  auto folds = deodhar_case(I, y, c3->generator_of_label(1));
  ASSERT_TRUE(std::holds_alternative<DeodharFolds>(folds));
  EXPECT_EQ(c3->label(std::get<DeodharFolds>(folds).t), 1);
  EXPECT_THROW(deodhar_case(I, c3->parse_element("1"), 0), DomainError);
}

TEST(Deodhar, TrichotomyExhaustive) {
  for (const auto& name : {"A3", "C3", "G2"}) {
    auto sys = preset_system(name);
    for (auto subset : all_subsets(*sys))
      for (const auto& y : minimal_reps(*sys, subset, Side::Left))
        for (Generator s = 0; s < sys->rank(); ++s) {
          auto ys = sys->right_multiply(y, s);
          bool in_reps = is_minimal_rep(ys, subset, Side::Left);
          auto c = deodhar_case(subset, y, s);
          if (auto* l = std::get_if<DeodharLonger>(&c)) {
            EXPECT_TRUE(in_reps && ys.length() > y.length());
            EXPECT_EQ(l->ys, ys);
          } else if (auto* sh = std::get_if<DeodharShorter>(&c)) {
            EXPECT_TRUE(in_reps && ys.length() < y.length());
            EXPECT_EQ(sh->ys, ys);
          } else {
            Generator t = std::get<DeodharFolds>(c).t;
            EXPECT_FALSE(in_reps);
            EXPECT_TRUE(subset.contains(t));
            auto ty = sys->left_multiply(t, y);
            EXPECT_EQ(ty, ys);
            EXPECT_EQ(ys.length(), y.length() + 1);
            EXPECT_EQ(ty.length(), y.length() + 1);
          }
        }
  }
}

TEST(SystemFile, ParsesBothFlavours) {
  auto cartan = parse_system_document(R"({"labels":[1,2],"cartan":[[2,-1],[-3,2]]})", "g2");
  EXPECT_EQ(cartan->order(), 12u);
  EXPECT_EQ(cartan->name(), "g2");
  auto coxeter = parse_system_document(R"({"name":"aff","labels":[1,2],"coxeter":[[1,"inf"],["inf",1]]})", "x");
  EXPECT_FALSE(coxeter->is_finite());
  EXPECT_EQ(coxeter->name(), "aff");
  EXPECT_THROW(parse_system_document(R"({"labels":[1],"cartan":[[2]],"coxeter":[[1]]})", "x"), ParseError);
  EXPECT_THROW(parse_system_document(R"({"labels":[1]})", "x"), ParseError);
  EXPECT_THROW(parse_system_document(R"({"labels":[1,2],"coxeter":[[1,5],[5,1]]})", "x"), DomainError);
  EXPECT_THROW(parse_system_document("{not json", "x"), ParseError);
}
