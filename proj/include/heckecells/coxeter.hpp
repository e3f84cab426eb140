#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace heckecells {

/// Index of a simple reflection, 0-based, in the order of the system's labels.
using Generator = std::uint8_t;
using Word = std::vector<Generator>;
using IntMatrix = std::vector<std::vector<int>>;

/// Coxeter matrix entry standing for m = infinity.
inline constexpr int kInfiniteOrder = 0;

/// A subset of the simple reflections, as a bit mask over generator indices.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator g : gens) insert(g);
  }

  static GeneratorSet all(std::size_t rank) {
    return GeneratorSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  bool contains(Generator g) const { return (bits_ >> g) & 1U; }
  void insert(Generator g) { bits_ |= std::uint64_t{1} << g; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
  std::uint64_t bits() const { return bits_; }
  /// Members in increasing order.
  std::vector<Generator> members() const;

  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

class CoxeterSystem;

/// A group element in its ShortLex normal form: the lexicographically first
/// reduced word, comparing letters by generator index.
///
/// Ordering is (length, lexicographic on the normal form), the order used
/// for every sorted output in the library. Elements of different systems
/// never compare equal. An element refers to its system without owning it;
/// keep the system's shared_ptr alive for as long as its elements are used.
class CoxeterElement {
 public:
  CoxeterElement() = default;

  const CoxeterSystem& system() const { return *system_; }
  const CoxeterSystem* system_ptr() const { return system_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  /// Position in the system's enumeration, when the system is finite.
  std::optional<std::size_t> index() const;

  /// "e" for the identity, else the labels as digits ("2123") or
  /// comma-separated when some label exceeds 9.
  std::string to_string() const;

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.system_ == b.system_ && a.word_ == b.word_;
  }
  friend std::strong_ordering operator<=>(const CoxeterElement& a, const CoxeterElement& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  friend class CoxeterSystem;
  CoxeterElement(const CoxeterSystem* system, Word word, std::uint32_t index)
      : system_(system), word_(std::move(word)), index_(index) {}

  static constexpr std::uint32_t kNoIndex = ~std::uint32_t{0};

  const CoxeterSystem* system_ = nullptr;
  Word word_;
  std::uint32_t index_ = kNoIndex;
};

std::ostream& operator<<(std::ostream& os, const CoxeterElement& w);

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& w) const noexcept;
};

enum class Side { Left, Right };

/// Build knobs. Enumeration beyond `element_cap` elements classifies the
/// system as infinite for enumeration purposes.
struct BuildOptions {
  std::size_t element_cap = 2'000'000;
};

/// A crystallographic Coxeter system, realized through an integral
/// (generalized) Cartan matrix. Elements act on weight coordinates; the
/// orbit of the regular weight (1, ..., 1) is faithful, which gives exact
/// equality tests and descent sets for free.
///
/// Immutable after construction. For finite systems the full element list
/// and multiplication tables are built once and shared read-only.
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  /// Generalized Cartan matrix: diagonal 2, off-diagonal <= 0 and
  /// a_st = 0 iff a_ts = 0. m_st is 2, 3, 4, 6, inf according as a_st a_ts
  /// is 0, 1, 2, 3, >= 4.
  static std::shared_ptr<const CoxeterSystem> from_cartan(std::vector<int> labels, IntMatrix cartan,
                                                          std::string name = {}, BuildOptions options = {});
  /// Symmetric Coxeter matrix, diagonal 1, off-diagonal in {2, 3, 4, 6, kInfiniteOrder}.
  static std::shared_ptr<const CoxeterSystem> from_coxeter(std::vector<int> labels, IntMatrix coxeter,
                                                           std::string name = {}, BuildOptions options = {});

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  std::size_t rank() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(Generator s) const { return labels_.at(s); }
  /// Throws DomainError for an unknown label.
  Generator generator_of_label(int label) const;
  const std::string& name() const { return name_; }

  /// m_{s,t}; kInfiniteOrder for infinity.
  int coxeter_entry(Generator s, Generator t) const { return coxeter_[s][t]; }
  const IntMatrix& coxeter_matrix() const { return coxeter_; }
  /// The Cartan matrix used for the realization. For Coxeter-matrix input
  /// this is a derived integral realization.
  const IntMatrix& cartan_matrix() const { return cartan_; }
  bool built_from_cartan() const { return from_cartan_; }

  bool is_finite() const { return finite_; }
  /// Group order; throws DomainError when infinite.
  std::size_t order() const;

  CoxeterElement identity() const;
  CoxeterElement generator(Generator s) const;
  /// Normal form of the product of the letters.
  CoxeterElement element(const Word& word) const;
  /// Parses "e", "id", "2123" or "10,2,1" into the normal form.
  CoxeterElement parse_element(std::string_view text) const;
  std::string format_word(const Word& word) const;
  /// Parses "1,2" or "12" (labels) into a generator subset. An empty string
  /// is the empty set.
  GeneratorSet parse_generator_set(std::string_view text) const;
  std::string format_generator_set(GeneratorSet set) const;

  /// All elements sorted by (length, ShortLex). Throws DomainError when infinite.
  const std::vector<CoxeterElement>& elements() const;
  /// Position of w in elements(); finite systems only.
  std::size_t index_of(const CoxeterElement& w) const;
  const CoxeterElement& element_at(std::size_t index) const { return elements_.at(index); }
  /// Index of (element i) * s and s * (element i); finite systems only.
  std::size_t right_index(std::size_t i, Generator s) const { return right_table_[i * rank() + s]; }
  std::size_t left_index(std::size_t i, Generator s) const { return left_table_[i * rank() + s]; }
  std::shared_ptr<const CoxeterSystem> shared() const { return shared_from_this(); }

  CoxeterElement right_multiply(const CoxeterElement& w, Generator s) const;
  CoxeterElement left_multiply(Generator s, const CoxeterElement& w) const;
  bool is_right_descent(const CoxeterElement& w, Generator s) const;
  bool is_left_descent(const CoxeterElement& w, Generator s) const;

  /// The standard parabolic subsystem on `subset`, labels and Cartan entries
  /// inherited, generators ordered as in this system.
  std::shared_ptr<const CoxeterSystem> parabolic_subsystem(GeneratorSet subset) const;

  /// Weight-coordinate image w(1, ..., 1); faithful. Exposed for tests.
  std::vector<std::int64_t> weight_vector(const Word& word) const;

 private:
  struct Token {};

 public:
  CoxeterSystem(Token, std::vector<int> labels, IntMatrix cartan, IntMatrix coxeter, bool from_cartan,
                std::string name);

 private:
  void classify(const BuildOptions& options);
  void check_same(const CoxeterElement& w) const;
  Word normalize(std::vector<std::int64_t> weight) const;
  void reflect(std::vector<std::int64_t>& weight, Generator s) const;

  std::vector<int> labels_;
  IntMatrix cartan_;
  IntMatrix coxeter_;
  bool from_cartan_ = true;
  std::string name_;
  bool finite_ = false;

  // Finite systems only.
  std::vector<CoxeterElement> elements_;
  std::vector<std::uint32_t> right_table_;  // [index * rank + s]
  std::vector<std::uint32_t> left_table_;
  std::unordered_map<std::string, std::uint32_t> index_by_word_;
};

CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b);
CoxeterElement inverse(const CoxeterElement& w);
GeneratorSet descents(const CoxeterElement& w, Side side);

/// Bruhat order, decided by the descent recursion: for s a right descent of w,
/// u <= w iff min(u, us) <= ws.
bool bruhat_leq(const CoxeterElement& u, const CoxeterElement& w);

/// Elements of the parabolic subgroup W_I (in the ambient system), sorted.
/// Throws DomainError when W_I is infinite.
std::vector<CoxeterElement> parabolic_elements(const CoxeterSystem& system, GeneratorSet subset);

/// Minimal length coset representatives: Side::Left gives ^I W (no left
/// descent in I, representatives of W_I\W); Side::Right gives W^I.
/// For infinite W, `length_bound` limits the enumeration and is required.
std::vector<CoxeterElement> minimal_reps(const CoxeterSystem& system, GeneratorSet subset, Side side,
                                         std::optional<std::size_t> length_bound = std::nullopt);

bool is_minimal_rep(const CoxeterElement& w, GeneratorSet subset, Side side);

/// w = parabolic * representative (Side::Left) or representative * parabolic
/// (Side::Right), with lengths adding.
struct ParabolicDecomposition {
  CoxeterElement parabolic;       // in W_I
  CoxeterElement representative;  // in ^I W or W^I
};

ParabolicDecomposition coset_decompose(GeneratorSet subset, const CoxeterElement& w, Side side);

/// Outcome of Deodhar's lemma for y in ^I W and a simple reflection s.
struct DeodharLonger {
  CoxeterElement ys;
};
struct DeodharShorter {
  CoxeterElement ys;
};
struct DeodharFolds {
  Generator t;  // ys = t y with t in I
};
using DeodharCase = std::variant<DeodharLonger, DeodharShorter, DeodharFolds>;

DeodharCase deodhar_case(GeneratorSet subset, const CoxeterElement& y, Generator s);

/// A standard parabolic subgroup W_I together with its own Coxeter system
/// (I, m restricted), and the relabeling maps between the two.
class ParabolicSubgroup {
 public:
  /// Throws DomainError when W_I is infinite.
  ParabolicSubgroup(std::shared_ptr<const CoxeterSystem> ambient, GeneratorSet subset);

  const CoxeterSystem& ambient() const { return *ambient_; }
  const std::shared_ptr<const CoxeterSystem>& ambient_ptr() const { return ambient_; }
  const CoxeterSystem& subsystem() const { return *sub_; }
  const std::shared_ptr<const CoxeterSystem>& subsystem_ptr() const { return sub_; }
  GeneratorSet subset() const { return subset_; }

  bool contains(const CoxeterElement& ambient_element) const;
  CoxeterElement embed(const CoxeterElement& sub_element) const;
  /// Throws DomainError when w is not in W_I.
  CoxeterElement restrict(const CoxeterElement& ambient_element) const;

 private:
  std::shared_ptr<const CoxeterSystem> ambient_;
  GeneratorSet subset_;
  std::shared_ptr<const CoxeterSystem> sub_;
  std::vector<Generator> to_ambient_;
};

}  // namespace heckecells
