#pragma once

#include "heckecells/canonical.hpp"
#include "heckecells/cells.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace heckecells {

/// Everything needed to work with the I-hybrid basis {^pH_x H_y : x in W_I,
/// y in ^I W} of a finite W. Hybrid elements are precomputed and indexed by
/// the ambient index of xy.
class HybridContext {
 public:
  /// The W_I table is kl_table(W_I) at p = 0 and the extracted sub-table
  /// otherwise. Throws DomainError if that table fails validation.
  HybridContext(std::shared_ptr<const CanonicalTable> ambient, GeneratorSet subset);

  const CanonicalTable& ambient() const { return *ambient_; }
  const std::shared_ptr<const CanonicalTable>& ambient_ptr() const { return ambient_; }
  const CoxeterSystem& system() const { return ambient_->system(); }
  GeneratorSet subset() const { return parabolic_.subset(); }
  const ParabolicSubgroup& parabolic() const { return parabolic_; }
  const CanonicalTable& subgroup_table() const { return *subgroup_table_; }
  /// "kl" or "extracted".
  const std::string& subgroup_source() const { return subgroup_source_; }
  const CellPartition& subgroup_cells() const { return *subgroup_cells_; }
  /// ^I W, sorted.
  const std::vector<CoxeterElement>& minimal_reps() const { return reps_; }

  /// w = xy: subsystem index of x, ambient index of y.
  std::size_t factor_parabolic(std::size_t w) const { return factor_x_.at(w); }
  std::size_t factor_rep(std::size_t w) const { return factor_y_.at(w); }
  /// Ambient index of x * y for a subsystem index x and ambient index y.
  std::size_t compose(std::size_t x_sub, std::size_t y) const;
  std::size_t embed_index(std::size_t x_sub) const { return embed_.at(x_sub); }
  bool is_rep(std::size_t w) const { return factor_x_.at(w) == 0; }

  /// ^pH_x H_y in the standard basis, for w = xy.
  const IndexedElement& hybrid(std::size_t w) const { return hybrid_.at(w); }

 private:
  std::shared_ptr<const CanonicalTable> ambient_;
  ParabolicSubgroup parabolic_;
  std::shared_ptr<const CanonicalTable> subgroup_table_;
  std::string subgroup_source_;
  std::shared_ptr<const CellPartition> subgroup_cells_;
  std::vector<CoxeterElement> reps_;
  std::vector<std::size_t> factor_x_, factor_y_, embed_;
  std::vector<IndexedElement> hybrid_;
};

/// ^pH_x H_y; x is an ambient element lying in W_I and y lies in ^I W.
HeckeElement hybrid_element(const HybridContext& ctx, const CoxeterElement& x, const CoxeterElement& y);

/// Coefficients r^I: keyed by the ambient index of xy.
IndexedElement hybrid_expand(const HybridContext& ctx, const IndexedElement& a);

/// Coefficients keyed by (x, y) with x in W_I and y in ^I W.
using HybridCoefficients = std::map<std::pair<CoxeterElement, CoxeterElement>, LaurentPolynomial>;
HybridCoefficients hybrid_expand(const HybridContext& ctx, const HeckeElement& a);

/// (x, y) is below or equal to (u, w): equal, or x <=_R u in W_I and y < w.
bool hybrid_leq(const HybridContext& ctx, const CoxeterElement& x, const CoxeterElement& y, const CoxeterElement& u,
                const CoxeterElement& w);
bool hybrid_leq(const HybridContext& ctx, std::size_t xy, std::size_t uw);

/// For every w = xy: positivity of r^I_{., w} (a), support on the hybrid
/// order with r^I_{xy,xy} = 1 (b), and
/// h_{zw',xy} = sum_u r^I_{uw',xy} h_{z,u} for z in W_I, w' in ^I W (c).
TheoremReport verify_hybrid_theorems(const HybridContext& ctx);

}  // namespace heckecells
