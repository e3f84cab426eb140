#pragma once

#include "heckecells/hecke.hpp"

#include <random>

namespace testing_support {

inline heckecells::LaurentPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 3), exponent(-3, 3), coefficient(-3, 3);
  heckecells::LaurentPolynomial p;
  for (int i = count(rng); i > 0; --i) p += heckecells::LaurentPolynomial::monomial(coefficient(rng), exponent(rng));
  return p;
}

inline heckecells::HeckeElement random_element(std::mt19937& rng, const heckecells::CoxeterSystem& sys,
                                               int max_terms = 3) {
  const auto& elements = sys.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  heckecells::HeckeElement h(sys.shared());
  for (int i = count(rng); i > 0; --i) h.add_term(elements[pick(rng)], random_poly(rng));
  return h;
}

}  // namespace testing_support
