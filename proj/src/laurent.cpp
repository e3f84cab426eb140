#include "heckecells/laurent.hpp"

#include "heckecells/error.hpp"

#include <cctype>
#include <sstream>

namespace heckecells {

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coefficient, int exponent) {
  LaurentPolynomial p;
  if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
  return p;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPolynomial::min_degree() const { return terms_.begin()->first; }
int LaurentPolynomial::max_degree() const { return terms_.rbegin()->first; }

bool LaurentPolynomial::is_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool LaurentPolynomial::in_v_z_v() const { return terms_.empty() || terms_.begin()->first >= 1; }

Integer LaurentPolynomial::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial result;
  for (const auto& [e, c] : terms_) result.terms_.emplace_hint(result.terms_.begin(), -e, c);
  return result;
}

void LaurentPolynomial::add_term(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::add_product(const LaurentPolynomial& factor,
                                                  const LaurentPolynomial& other) {
  if (&other == this || &factor == this) return *this += factor * other;
  for (const auto& [e1, c1] : factor.terms_)
    for (const auto& [e2, c2] : other.terms_) add_term(e1 + e2, c1 * c2);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial result;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) result.add_term(e1 + e2, c1 * c2);
  return result;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial result = *this;
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

std::string LaurentPolynomial::to_string(bool compact) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (compact ? "" : " ") << (c < 0 ? '-' : '+') << (compact ? "" : " ");
    }
    first = false;
    if (e == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPolynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    LaurentPolynomial result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    parse_term(negative, result);
    skip_space();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_space();
      parse_term(op == '-', result);
      skip_space();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("polynomial: " + what, pos_); }

  Integer parse_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_vpow() {
    if (at_end() || peek() != 'v') fail("expected 'v'");
    ++pos_;
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = pos_;
    Integer e = parse_uint();
    if (e > 1'000'000'000) {
      pos_ = start;
      fail("exponent out of range");
    }
    int exponent = static_cast<int>(e);
    return negative ? -exponent : exponent;
  }

  void parse_term(bool negative, LaurentPolynomial& into) {
    if (at_end()) fail("expected a term");
    Integer coefficient = 1;
    int exponent = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_uint();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        exponent = parse_vpow();
      }
    } else {
      exponent = parse_vpow();
    }
    into += LaurentPolynomial::monomial(negative ? Integer(-coefficient) : coefficient, exponent);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace heckecells
