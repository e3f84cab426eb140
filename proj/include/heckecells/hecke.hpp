#pragma once

#include "heckecells/coxeter.hpp"
#include "heckecells/laurent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace heckecells {

/// An element of the Hecke algebra in the standard basis {H_w}: a finitely
/// supported map W -> Z[v, v^-1] with no zero values stored.
///
/// A default-constructed element is zero and adopts the system of whatever
/// it is combined with.
class HeckeElement {
 public:
  using Terms = std::map<CoxeterElement, LaurentPolynomial>;

  HeckeElement() = default;
  explicit HeckeElement(std::shared_ptr<const CoxeterSystem> system) : system_(std::move(system)) {}

  /// coefficient * H_w
  static HeckeElement standard(const CoxeterElement& w, LaurentPolynomial coefficient = 1);

  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return system_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPolynomial coefficient(const CoxeterElement& w) const;

  void add_term(const CoxeterElement& w, const LaurentPolynomial& coefficient);
  /// this += factor * other
  void add_scaled(const LaurentPolynomial& factor, const HeckeElement& other);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement& operator*=(const LaurentPolynomial& scalar);

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPolynomial& s, HeckeElement a) { return a *= s; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

  /// "1*H(2123) + (v^-1-v)*H(212)": leading (longest) term first.
  std::string to_string() const;

 private:
  void adopt(const std::shared_ptr<const CoxeterSystem>& system);

  std::shared_ptr<const CoxeterSystem> system_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HeckeElement& h);

/// h * H_s, via H_w H_s = H_ws if ws > w and H_ws + (v^-1 - v) H_w otherwise.
HeckeElement multiply_generator_right(const HeckeElement& h, Generator s);
/// H_s * h
HeckeElement multiply_generator_left(Generator s, const HeckeElement& h);
/// Bilinear product; b is peeled into generators along its normal forms.
HeckeElement std_multiply(const HeckeElement& a, const HeckeElement& b);
/// Same product, peeling generators off the left factor instead.
HeckeElement std_multiply_left_peel(const HeckeElement& a, const HeckeElement& b);

/// Z[v, v^-1]-linear anti-involution, H_x -> H_{x^-1}.
HeckeElement iota(const HeckeElement& h);

/// The Hecke algebra of a system, holding the memo table for bar(H_x).
///
/// bar is the ring involution with v -> v^-1 and H_x -> (H_{x^-1})^-1; it is
/// evaluated as the ordered product of H_s^-1 = H_s + (v - v^-1) along a
/// reduced word of x. The memo is guarded by a mutex, so concurrent callers
/// are fine.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const CoxeterSystem> system) : system_(std::move(system)) {}

  const CoxeterSystem& system() const { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return system_; }

  HeckeElement bar(const HeckeElement& h) const;
  const HeckeElement& bar_of_standard(const CoxeterElement& x) const;

 private:
  std::shared_ptr<const CoxeterSystem> system_;
  mutable std::mutex mutex_;
  mutable std::map<CoxeterElement, std::unique_ptr<HeckeElement>> memo_;
};

/// Relabel an element of H(W_I, I) into H(W, S).
HeckeElement parabolic_embed(const HeckeElement& h, const ParabolicSubgroup& parabolic);
/// Inverse of parabolic_embed; throws DomainError if the support leaves W_I.
HeckeElement parabolic_restrict(const HeckeElement& h, const ParabolicSubgroup& parabolic);

/// Index form for finite systems: element index (in CoxeterSystem::elements())
/// -> coefficient. Used by the table-driven algorithms, where every element
/// is already enumerated.
using IndexedElement = std::map<std::size_t, LaurentPolynomial>;

void add_term(IndexedElement& into, std::size_t index, const LaurentPolynomial& coefficient);
void add_scaled(IndexedElement& into, const LaurentPolynomial& factor, const IndexedElement& from);
IndexedElement multiply_generator_right(const CoxeterSystem& system, const IndexedElement& h, Generator s);
IndexedElement multiply_generator_left(const CoxeterSystem& system, Generator s, const IndexedElement& h);
HeckeElement to_hecke(const CoxeterSystem& system, const IndexedElement& h);
IndexedElement to_indexed(const HeckeElement& h);

}  // namespace heckecells
