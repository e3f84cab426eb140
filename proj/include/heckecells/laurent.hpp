#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace heckecells {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[v, v^-1], stored sparsely as exponent -> nonzero coefficient.
///
/// The zero polynomial is the empty map. Every operation returns a value in
/// canonical form, so `operator==` is plain term-by-term comparison.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT: implicit by intent, 1 and 0 read naturally

  static LaurentPolynomial monomial(const Integer& coefficient, int exponent);
  /// v^exponent
  static LaurentPolynomial v(int exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coefficient(int exponent) const;

  int min_degree() const;  // requires !is_zero()
  int max_degree() const;  // requires !is_zero()

  /// All stored coefficients are positive (the zero polynomial qualifies).
  bool is_nonnegative() const;
  /// Only exponents >= 1 occur, i.e. the polynomial lies in vZ[v].
  bool in_v_z_v() const;
  Integer evaluate_at_one() const;

  /// v -> v^-1
  LaurentPolynomial bar() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  /// this += factor * other, without a temporary for the product when factor is a monomial.
  LaurentPolynomial& add_product(const LaurentPolynomial& factor, const LaurentPolynomial& other);

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  /// Text form in ascending exponent order, e.g. "v^-1 - v", "1 + 2*v^2", "0".
  /// The compact form drops the spaces around binary operators.
  std::string to_string(bool compact = false) const;

  /// Parses the grammar
  ///   poly := "0" | ["-"] term (("+"|"-") term)*
  ///   term := uint | uint "*" vpow | vpow
  ///   vpow := "v" | "v^" int
  /// Whitespace around tokens is ignored. Throws ParseError with the
  /// character offset of the first offending token.
  static LaurentPolynomial parse(std::string_view text);

 private:
  void add_term(int exponent, const Integer& coefficient);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

/// v^-1 - v, the coefficient in the quadratic relation.
inline LaurentPolynomial quadratic_coefficient() { return LaurentPolynomial::v(-1) - LaurentPolynomial::v(1); }

}  // namespace heckecells
