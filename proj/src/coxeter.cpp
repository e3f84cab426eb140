#include "heckecells/coxeter.hpp"

#include "heckecells/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace heckecells {

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (Generator g = 0; g < 64; ++g)
    if (contains(g)) out.push_back(g);
  return out;
}

namespace {

std::string word_key(const Word& word) { return std::string(word.begin(), word.end()); }

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

int coxeter_from_product(int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteOrder;
  }
}

void check_labels(const std::vector<int>& labels, std::size_t n) {
  if (labels.size() != n) throw DomainError("label count does not match matrix size");
  if (n == 0) throw DomainError("a Coxeter system needs at least one generator");
  if (n > 64) throw DomainError("rank above 64 is not supported");
  std::set<int> seen;
  for (int l : labels) {
    if (l <= 0) throw DomainError("generator labels must be positive integers");
    if (!seen.insert(l).second) throw DomainError("duplicate generator label " + std::to_string(l));
  }
}

void check_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("matrix is not square");
}

}  // namespace

CoxeterSystem::CoxeterSystem(Token, std::vector<int> labels, IntMatrix cartan, IntMatrix coxeter,
                             bool from_cartan, std::string name)
    : labels_(std::move(labels)),
      cartan_(std::move(cartan)),
      coxeter_(std::move(coxeter)),
      from_cartan_(from_cartan),
      name_(std::move(name)) {}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::from_cartan(std::vector<int> labels, IntMatrix cartan,
                                                                std::string name, BuildOptions options) {
  check_square(cartan);
  check_labels(labels, cartan.size());
  const std::size_t n = cartan.size();
  IntMatrix coxeter(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw DomainError("Cartan matrix diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw DomainError("Cartan matrix off-diagonal entries must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw DomainError("Cartan matrix must satisfy a_st = 0 iff a_ts = 0");
      coxeter[i][j] = coxeter_from_product(cartan[i][j] * cartan[j][i]);
    }
  }
  auto system = std::make_shared<CoxeterSystem>(Token{}, std::move(labels), std::move(cartan), std::move(coxeter),
                                                true, std::move(name));
  system->classify(options);
  return system;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::from_coxeter(std::vector<int> labels, IntMatrix coxeter,
                                                                 std::string name, BuildOptions options) {
  check_square(coxeter);
  check_labels(labels, coxeter.size());
  const std::size_t n = coxeter.size();
  // Integral realization: a_ij a_ji = 4 cos^2(pi / m_ij), with the larger
  // entry on the lower-index side.
  IntMatrix cartan(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coxeter[i][i] != 1) throw DomainError("Coxeter matrix diagonal entries must be 1");
    cartan[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (coxeter[i][j] != coxeter[j][i]) throw DomainError("Coxeter matrix must be symmetric");
      const int m = coxeter[i][j];
      int big = 0, small = 0;
      switch (m) {
        case 2: break;
        case 3: big = -1, small = -1; break;
        case 4: big = -2, small = -1; break;
        case 6: big = -3, small = -1; break;
        case kInfiniteOrder: big = -2, small = -2; break;
        default:
          throw DomainError("non-crystallographic Coxeter matrix entry m = " + std::to_string(m));
      }
      cartan[i][j] = i < j ? big : small;
    }
  }
  auto system = std::make_shared<CoxeterSystem>(Token{}, std::move(labels), std::move(cartan), std::move(coxeter),
                                                false, std::move(name));
  system->classify(options);
  return system;
}

void CoxeterSystem::reflect(std::vector<std::int64_t>& weight, Generator s) const {
  // s(lambda) = lambda - <lambda, alpha_s^vee> alpha_s, and <alpha_s, alpha_j^vee> = a_js.
  const std::int64_t c = weight[s];
  if (c == 0) return;
  for (std::size_t j = 0; j < weight.size(); ++j) weight[j] -= c * cartan_[j][s];
}

std::vector<std::int64_t> CoxeterSystem::weight_vector(const Word& word) const {
  std::vector<std::int64_t> weight(rank(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= rank()) throw DomainError("generator index out of range");
    reflect(weight, *it);
  }
  return weight;
}

Word CoxeterSystem::normalize(std::vector<std::int64_t> weight) const {
  // s is a left descent of w iff coordinate s of w(rho) is negative; peeling
  // the smallest left descent each time yields the lexicographically first
  // reduced word.
  Word word;
  for (;;) {
    std::size_t s = 0;
    while (s < weight.size() && weight[s] >= 0) ++s;
    if (s == weight.size()) return word;
    word.push_back(static_cast<Generator>(s));
    reflect(weight, static_cast<Generator>(s));
  }
}

void CoxeterSystem::classify(const BuildOptions& options) {
  // Cheap infinite detection first: a finite Weyl group with more than 4096
  // positive roots has rank >= 64 and so more than 2^64 elements.
  const std::size_t n = rank();
  constexpr std::size_t kRootCap = 4096;
  std::set<std::vector<std::int64_t>> roots;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> alpha(n, 0);
    alpha[i] = 1;
    roots.insert(alpha);
    queue.push_back(alpha);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[i][j];
      if (pairing == 0) continue;
      auto image = beta;
      image[i] -= pairing;
      if (image[i] < 0) continue;  // only beta = alpha_i leaves the positive cone
      if (roots.insert(image).second) {
        if (roots.size() > kRootCap) {
          finite_ = false;
          return;
        }
        queue.push_back(std::move(image));
      }
    }
  }

  // Enumerate the orbit of the regular weight.
  std::unordered_set<std::vector<std::int64_t>, VectorHash> seen;
  std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(n, 1)};
  seen.insert(frontier.front());
  std::vector<std::vector<std::int64_t>> all = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& weight : frontier) {
      for (std::size_t s = 0; s < n; ++s) {
        if (weight[s] <= 0) continue;  // left multiplication by s would shorten
        auto image = weight;
        reflect(image, static_cast<Generator>(s));
        if (seen.insert(image).second) {
          if (seen.size() > options.element_cap) {
            finite_ = false;
            return;
          }
          next.push_back(image);
          all.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  finite_ = true;

  std::vector<Word> words;
  words.reserve(all.size());
  for (auto& weight : all) words.push_back(normalize(std::move(weight)));
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  elements_.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    index_by_word_.emplace(word_key(words[i]), static_cast<std::uint32_t>(i));
    elements_.push_back(CoxeterElement(this, std::move(words[i]), static_cast<std::uint32_t>(i)));
  }
  right_table_.resize(elements_.size() * n);
  left_table_.resize(elements_.size() * n);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Word& w = elements_[i].word_;
    for (std::size_t s = 0; s < n; ++s) {
      Word right = w;
      right.push_back(static_cast<Generator>(s));
      Word left{static_cast<Generator>(s)};
      left.insert(left.end(), w.begin(), w.end());
      right_table_[i * n + s] = index_by_word_.at(word_key(normalize(weight_vector(right))));
      left_table_[i * n + s] = index_by_word_.at(word_key(normalize(weight_vector(left))));
    }
  }
}

std::size_t CoxeterSystem::order() const {
  if (!finite_) throw DomainError("Coxeter system is infinite");
  return elements_.size();
}

Generator CoxeterSystem::generator_of_label(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw DomainError("unknown generator label " + std::to_string(label));
  return static_cast<Generator>(it - labels_.begin());
}

CoxeterElement CoxeterSystem::identity() const { return element({}); }

CoxeterElement CoxeterSystem::generator(Generator s) const { return element({s}); }

CoxeterElement CoxeterSystem::element(const Word& word) const {
  if (finite_) {
    std::size_t i = 0;
    for (Generator s : word) {
      if (s >= rank()) throw DomainError("generator index out of range");
      i = right_table_[i * rank() + s];
    }
    return elements_[i];
  }
  return CoxeterElement(this, normalize(weight_vector(word)), CoxeterElement::kNoIndex);
}

CoxeterElement CoxeterSystem::parse_element(std::string_view text) const {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  if (text.empty()) throw ParseError("empty word", begin);
  if (text == "e" || text == "id") return identity();
  Word word;
  auto push_label = [&](std::string_view digits, std::size_t at) {
    if (digits.empty()) throw ParseError("empty generator label", at);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("invalid character in word", at);
    word.push_back(generator_of_label(std::stoi(std::string(digits))));
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
      push_label(piece, begin + start);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) push_label(text.substr(i, 1), begin + i);
  }
  return element(word);
}

std::string CoxeterSystem::format_word(const Word& word) const {
  if (word.empty()) return "e";
  const bool digits = std::all_of(labels_.begin(), labels_.end(), [](int l) { return l <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(labels_[word[i]]);
  }
  return out;
}

GeneratorSet CoxeterSystem::parse_generator_set(std::string_view text) const {
  GeneratorSet set;
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') cleaned += c;
  if (cleaned.empty()) return set;
  if (cleaned.find(',') == std::string::npos && labels_.size() > 0 &&
      std::all_of(labels_.begin(), labels_.end(), [](int l) { return l <= 9; })) {
    for (std::size_t i = 0; i < cleaned.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(cleaned[i]))) throw ParseError("invalid generator set", i);
      set.insert(generator_of_label(cleaned[i] - '0'));
    }
    return set;
  }
  std::stringstream ss(cleaned);
  std::string piece;
  std::size_t at = 0;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return std::isdigit(c); }))
      throw ParseError("invalid generator set", at);
    set.insert(generator_of_label(std::stoi(piece)));
    at += piece.size() + 1;
  }
  return set;
}

std::string CoxeterSystem::format_generator_set(GeneratorSet set) const {
  std::string out = "{";
  bool first = true;
  for (Generator g : set.members()) {
    if (g >= rank()) continue;
    if (!first) out += ',';
    out += std::to_string(labels_[g]);
    first = false;
  }
  return out + "}";
}

const std::vector<CoxeterElement>& CoxeterSystem::elements() const {
  if (!finite_) throw DomainError("cannot enumerate an infinite Coxeter system");
  return elements_;
}

std::size_t CoxeterSystem::index_of(const CoxeterElement& w) const {
  check_same(w);
  if (!finite_) throw DomainError("element indices exist only for finite systems");
  return w.index_;
}

void CoxeterSystem::check_same(const CoxeterElement& w) const {
  if (w.system_ != this) throw DomainError("element belongs to a different Coxeter system");
}

CoxeterElement CoxeterSystem::right_multiply(const CoxeterElement& w, Generator s) const {
  check_same(w);
  if (finite_) return elements_[right_table_[w.index_ * rank() + s]];
  Word word = w.word_;
  word.push_back(s);
  return element(word);
}

CoxeterElement CoxeterSystem::left_multiply(Generator s, const CoxeterElement& w) const {
  check_same(w);
  if (finite_) return elements_[left_table_[w.index_ * rank() + s]];
  Word word;
  word.reserve(w.word_.size() + 1);
  word.push_back(s);
  word.insert(word.end(), w.word_.begin(), w.word_.end());
  return element(word);
}

bool CoxeterSystem::is_left_descent(const CoxeterElement& w, Generator s) const {
  check_same(w);
  if (finite_) return elements_[left_table_[w.index_ * rank() + s]].length() < w.length();
  return weight_vector(w.word_)[s] < 0;
}

bool CoxeterSystem::is_right_descent(const CoxeterElement& w, Generator s) const {
  check_same(w);
  if (finite_) return elements_[right_table_[w.index_ * rank() + s]].length() < w.length();
  Word reversed(w.word_.rbegin(), w.word_.rend());
  return weight_vector(reversed)[s] < 0;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::parabolic_subsystem(GeneratorSet subset) const {
  auto members = subset.members();
  std::vector<int> labels;
  IntMatrix cartan;
  for (Generator i : members) {
    if (i >= rank()) throw DomainError("generator index out of range");
    labels.push_back(labels_[i]);
    std::vector<int> row;
    for (Generator j : members) row.push_back(cartan_[i][j]);
    cartan.push_back(std::move(row));
  }
  std::string sub_name = name_.empty() ? std::string() : name_ + "_" + format_generator_set(subset);
  // A submatrix of a valid Cartan matrix is valid; the empty subset gives the trivial group.
  IntMatrix coxeter(members.size(), std::vector<int>(members.size(), 1));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j) coxeter[i][j] = coxeter_[members[i]][members[j]];
  auto system = std::make_shared<CoxeterSystem>(Token{}, std::move(labels), std::move(cartan), std::move(coxeter),
                                                true, std::move(sub_name));
  system->classify(BuildOptions{});
  return system;
}

ParabolicSubgroup::ParabolicSubgroup(std::shared_ptr<const CoxeterSystem> ambient, GeneratorSet subset)
    : ambient_(std::move(ambient)), subset_(subset), sub_(ambient_->parabolic_subsystem(subset)),
      to_ambient_(subset.members()) {
  if (!sub_->is_finite()) throw DomainError("subset " + ambient_->format_generator_set(subset) + " is not finitary");
}

bool ParabolicSubgroup::contains(const CoxeterElement& w) const {
  return std::all_of(w.word().begin(), w.word().end(), [&](Generator s) { return subset_.contains(s); });
}

CoxeterElement ParabolicSubgroup::embed(const CoxeterElement& x) const {
  if (x.system_ptr() != sub_.get()) throw DomainError("element is not in the parabolic subsystem");
  Word word;
  for (Generator s : x.word()) word.push_back(to_ambient_[s]);
  return ambient_->element(word);
}

CoxeterElement ParabolicSubgroup::restrict(const CoxeterElement& w) const {
  if (w.system_ptr() != ambient_.get()) throw DomainError("element belongs to a different Coxeter system");
  if (!contains(w)) throw DomainError(w.to_string() + " is not in W_I for I = " + ambient_->format_generator_set(subset_));
  Word word;
  for (Generator s : w.word())
    word.push_back(static_cast<Generator>(std::find(to_ambient_.begin(), to_ambient_.end(), s) - to_ambient_.begin()));
  return sub_->element(word);
}

std::optional<std::size_t> CoxeterElement::index() const {
  if (index_ == kNoIndex) return std::nullopt;
  return index_;
}

std::string CoxeterElement::to_string() const {
  if (!system_) return "<null>";
  return system_->format_word(word_);
}

std::ostream& operator<<(std::ostream& os, const CoxeterElement& w) { return os << w.to_string(); }

std::size_t CoxeterElementHash::operator()(const CoxeterElement& w) const noexcept {
  return std::hash<std::string>()(word_key(w.word()));
}

CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b) {
  if (a.system_ptr() != b.system_ptr()) throw DomainError("elements belong to different Coxeter systems");
  Word word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return a.system().element(word);
}

CoxeterElement inverse(const CoxeterElement& w) {
  return w.system().element(Word(w.word().rbegin(), w.word().rend()));
}

GeneratorSet descents(const CoxeterElement& w, Side side) {
  const auto& sys = w.system();
  if (sys.is_finite()) {
    GeneratorSet out;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      auto g = static_cast<Generator>(s);
      if (side == Side::Left ? sys.is_left_descent(w, g) : sys.is_right_descent(w, g)) out.insert(g);
    }
    return out;
  }
  Word word = side == Side::Left ? w.word() : Word(w.word().rbegin(), w.word().rend());
  auto weight = sys.weight_vector(word);
  GeneratorSet out;
  for (std::size_t s = 0; s < sys.rank(); ++s)
    if (weight[s] < 0) out.insert(static_cast<Generator>(s));
  return out;
}

bool bruhat_leq(const CoxeterElement& u, const CoxeterElement& w) {
  if (u.system_ptr() != w.system_ptr()) throw DomainError("elements belong to different Coxeter systems");
  const auto& sys = w.system();
  CoxeterElement a = u;
  Word rest = w.word();
  while (a.length() <= rest.size()) {
    if (a.is_identity()) return true;
    if (a.length() == rest.size()) return a.word() == rest;
    const Generator s = rest.back();
    rest.pop_back();  // rest stays the normal form of ws: prefixes of lex-first words are lex-first
    if (sys.is_right_descent(a, s)) a = sys.right_multiply(a, s);
  }
  return false;
}

std::vector<CoxeterElement> parabolic_elements(const CoxeterSystem& system, GeneratorSet subset) {
  std::vector<CoxeterElement> out{system.identity()};
  std::set<CoxeterElement> seen{system.identity()};
  std::size_t cursor = 0;
  constexpr std::size_t kCap = 2'000'000;
  while (cursor < out.size()) {
    CoxeterElement w = out[cursor++];
    for (Generator s : subset.members()) {
      CoxeterElement ws = system.right_multiply(w, s);
      if (ws.length() > w.length() && seen.insert(ws).second) {
        if (seen.size() > kCap) throw DomainError("parabolic subgroup is not finite");
        out.push_back(ws);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_rep(const CoxeterElement& w, GeneratorSet subset, Side side) {
  GeneratorSet d = descents(w, side);
  return (d.bits() & subset.bits()) == 0;
}

std::vector<CoxeterElement> minimal_reps(const CoxeterSystem& system, GeneratorSet subset, Side side,
                                         std::optional<std::size_t> length_bound) {
  if (!system.parabolic_subsystem(subset)->is_finite())
    throw DomainError("subset " + system.format_generator_set(subset) + " is not finitary");
  if (system.is_finite() && !length_bound) {
    std::vector<CoxeterElement> out;
    for (const auto& w : system.elements())
      if (is_minimal_rep(w, subset, side)) out.push_back(w);
    return out;
  }
  if (!length_bound) throw DomainError("a length bound is required to enumerate an infinite quotient");
  // Minimal representatives are closed under taking prefixes (suffixes for W^I).
  std::vector<CoxeterElement> out{system.identity()};
  std::set<CoxeterElement> seen{system.identity()};
  std::size_t cursor = 0;
  while (cursor < out.size()) {
    CoxeterElement w = out[cursor++];
    if (w.length() >= *length_bound) continue;
    for (std::size_t s = 0; s < system.rank(); ++s) {
      auto g = static_cast<Generator>(s);
      CoxeterElement next = side == Side::Left ? system.right_multiply(w, g) : system.left_multiply(g, w);
      if (next.length() > w.length() && is_minimal_rep(next, subset, side) && seen.insert(next).second)
        out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicDecomposition coset_decompose(GeneratorSet subset, const CoxeterElement& w, Side side) {
  const auto& sys = w.system();
  CoxeterElement parabolic = sys.identity();
  CoxeterElement rest = w;
  Word peeled;
  for (bool changed = true; changed;) {
    changed = false;
    for (Generator s : subset.members()) {
      if (side == Side::Left ? sys.is_left_descent(rest, s) : sys.is_right_descent(rest, s)) {
        peeled.push_back(s);
        rest = side == Side::Left ? sys.left_multiply(s, rest) : sys.right_multiply(rest, s);
        changed = true;
        break;
      }
    }
  }
  if (side == Side::Right) std::reverse(peeled.begin(), peeled.end());
  parabolic = sys.element(peeled);
  return {parabolic, rest};
}

DeodharCase deodhar_case(GeneratorSet subset, const CoxeterElement& y, Generator s) {
  const auto& sys = y.system();
  if (!is_minimal_rep(y, subset, Side::Left))
    throw DomainError(y.to_string() + " is not a minimal left coset representative");
  CoxeterElement ys = sys.right_multiply(y, s);
  if (is_minimal_rep(ys, subset, Side::Left)) {
    if (ys.length() > y.length()) return DeodharLonger{ys};
    return DeodharShorter{ys};
  }
  CoxeterElement t = multiply(ys, inverse(y));
  if (t.length() != 1 || !subset.contains(t.word().front()))
    throw DomainError("Deodhar trichotomy failed for " + y.to_string());  // unreachable for a valid system
  return DeodharFolds{t.word().front()};
}

}  // namespace heckecells
