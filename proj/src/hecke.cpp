#include "heckecells/hecke.hpp"

#include "heckecells/error.hpp"

#include <sstream>

namespace heckecells {

HeckeElement HeckeElement::standard(const CoxeterElement& w, LaurentPolynomial coefficient) {
  HeckeElement h(w.system().shared());
  h.add_term(w, coefficient);
  return h;
}

LaurentPolynomial HeckeElement::coefficient(const CoxeterElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::adopt(const std::shared_ptr<const CoxeterSystem>& system) {
  if (!system) return;
  if (!system_) {
    system_ = system;
  } else if (system_ != system) {
    throw DomainError("Hecke elements belong to different Coxeter systems");
  }
}

void HeckeElement::add_term(const CoxeterElement& w, const LaurentPolynomial& coefficient) {
  if (coefficient.is_zero()) return;
  if (!system_) {
    system_ = w.system().shared();
  } else if (w.system_ptr() != system_.get()) {
    throw DomainError("element belongs to a different Coxeter system");
  }
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::add_scaled(const LaurentPolynomial& factor, const HeckeElement& other) {
  if (factor.is_zero()) return;
  adopt(other.system_);
  for (const auto& [w, c] : other.terms_) add_term(w, factor * c);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  adopt(other.system_);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  adopt(other.system_);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPolynomial& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& c = it->second;
    bool bare = c.size() == 1 && c.terms().begin()->second > 0;
    if (bare)
      os << c.to_string(true);
    else
      os << '(' << c.to_string(true) << ')';
    os << "*H(" << it->first.to_string() << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HeckeElement& h) { return os << h.to_string(); }

HeckeElement multiply_generator_right(const HeckeElement& h, Generator s) {
  HeckeElement out(h.system_ptr());
  if (h.is_zero()) return out;
  const auto& sys = *h.system_ptr();
  const LaurentPolynomial q = quadratic_coefficient();
  for (const auto& [w, c] : h.terms()) {
    CoxeterElement ws = sys.right_multiply(w, s);
    out.add_term(ws, c);
    if (ws.length() < w.length()) out.add_term(w, q * c);
  }
  return out;
}

HeckeElement multiply_generator_left(Generator s, const HeckeElement& h) {
  HeckeElement out(h.system_ptr());
  if (h.is_zero()) return out;
  const auto& sys = *h.system_ptr();
  const LaurentPolynomial q = quadratic_coefficient();
  for (const auto& [w, c] : h.terms()) {
    CoxeterElement sw = sys.left_multiply(s, w);
    out.add_term(sw, c);
    if (sw.length() < w.length()) out.add_term(w, q * c);
  }
  return out;
}

HeckeElement std_multiply(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out(a.system_ptr() ? a.system_ptr() : b.system_ptr());
  if (a.is_zero() || b.is_zero()) return out;
  if (a.system_ptr() != b.system_ptr()) throw DomainError("Hecke elements belong to different Coxeter systems");
  for (const auto& [y, q] : b.terms()) {
    HeckeElement partial = a;
    for (Generator s : y.word()) partial = multiply_generator_right(partial, s);
    out.add_scaled(q, partial);
  }
  return out;
}

HeckeElement std_multiply_left_peel(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out(a.system_ptr() ? a.system_ptr() : b.system_ptr());
  if (a.is_zero() || b.is_zero()) return out;
  if (a.system_ptr() != b.system_ptr()) throw DomainError("Hecke elements belong to different Coxeter systems");
  for (const auto& [x, p] : a.terms()) {
    HeckeElement partial = b;
    for (auto it = x.word().rbegin(); it != x.word().rend(); ++it) partial = multiply_generator_left(*it, partial);
    out.add_scaled(p, partial);
  }
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return std_multiply(a, b); }

HeckeElement iota(const HeckeElement& h) {
  HeckeElement out(h.system_ptr());
  for (const auto& [w, c] : h.terms()) out.add_term(inverse(w), c);
  return out;
}

const HeckeElement& HeckeAlgebra::bar_of_standard(const CoxeterElement& x) const {
  if (x.system_ptr() != system_.get()) throw DomainError("element belongs to a different Coxeter system");
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(x);
    if (it != memo_.end()) return *it->second;
  }
  HeckeElement value;
  if (x.is_identity()) {
    value = HeckeElement::standard(x);
  } else {
    // bar(H_x) = bar(H_{x s}) (H_s + v - v^-1) for the last letter s of x.
    const Generator s = x.word().back();
    const HeckeElement& prefix = bar_of_standard(system_->right_multiply(x, s));
    value = multiply_generator_right(prefix, s);
    value.add_scaled(LaurentPolynomial::v(1) - LaurentPolynomial::v(-1), prefix);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(x, nullptr);
  if (inserted) it->second = std::make_unique<HeckeElement>(std::move(value));
  return *it->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  HeckeElement out(system_);
  for (const auto& [x, c] : h.terms()) out.add_scaled(c.bar(), bar_of_standard(x));
  return out;
}

HeckeElement parabolic_embed(const HeckeElement& h, const ParabolicSubgroup& parabolic) {
  HeckeElement out(parabolic.ambient_ptr());
  for (const auto& [x, c] : h.terms()) out.add_term(parabolic.embed(x), c);
  return out;
}

HeckeElement parabolic_restrict(const HeckeElement& h, const ParabolicSubgroup& parabolic) {
  HeckeElement out(parabolic.subsystem_ptr());
  for (const auto& [w, c] : h.terms()) out.add_term(parabolic.restrict(w), c);
  return out;
}

void add_term(IndexedElement& into, std::size_t index, const LaurentPolynomial& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = into.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) into.erase(it);
  }
}

void add_scaled(IndexedElement& into, const LaurentPolynomial& factor, const IndexedElement& from) {
  if (factor.is_zero()) return;
  for (const auto& [i, c] : from) add_term(into, i, factor * c);
}

IndexedElement multiply_generator_right(const CoxeterSystem& system, const IndexedElement& h, Generator s) {
  const LaurentPolynomial q = quadratic_coefficient();
  IndexedElement out;
  for (const auto& [i, c] : h) {
    std::size_t j = system.right_index(i, s);
    add_term(out, j, c);
    if (j < i) add_term(out, i, q * c);  // indices are sorted by length first
  }
  return out;
}

IndexedElement multiply_generator_left(const CoxeterSystem& system, Generator s, const IndexedElement& h) {
  const LaurentPolynomial q = quadratic_coefficient();
  IndexedElement out;
  for (const auto& [i, c] : h) {
    std::size_t j = system.left_index(i, s);
    add_term(out, j, c);
    if (j < i) add_term(out, i, q * c);
  }
  return out;
}

HeckeElement to_hecke(const CoxeterSystem& system, const IndexedElement& h) {
  HeckeElement out(system.shared());
  for (const auto& [i, c] : h) out.add_term(system.element_at(i), c);
  return out;
}

IndexedElement to_indexed(const HeckeElement& h) {
  IndexedElement out;
  for (const auto& [w, c] : h.terms()) out.emplace(w.system().index_of(w), c);
  return out;
}

}  // namespace heckecells
