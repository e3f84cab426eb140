#pragma once

#include "heckecells/canonical.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace heckecells {

enum class CellSide { Right, Left, TwoSided };

std::string to_string(CellSide side);
CellSide parse_cell_side(std::string_view text);

/// Edges of the cell graph on element indices: w -> x whenever ^pH_x occurs
/// in ^pH_w H_s (right) or H_s ^pH_w (left) for some s. Adjacency lists are
/// sorted and duplicate free, without self-loops. `generator_order` only changes the order in
/// which products are formed.
using CellGraph = std::vector<std::vector<std::size_t>>;
CellGraph cell_graph(const CanonicalTable& table, CellSide side, const std::vector<Generator>& generator_order = {});
/// Same graph built from products with ^pH_s instead of H_s.
CellGraph cell_graph_canonical_generators(const CanonicalTable& table, CellSide side);

/// Cells are the strongly connected components of a cell graph. They are
/// numbered topologically from the top ({e} first); ties go to the cell
/// whose ShortLex-minimal member comes first.
class CellPartition {
 public:
  CellPartition(std::shared_ptr<const CoxeterSystem> system, int p, CellSide side, CellGraph graph);

  const CoxeterSystem& system() const { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return system_; }
  int p() const { return p_; }
  CellSide side() const { return side_; }
  const CellGraph& graph() const { return graph_; }

  std::size_t size() const { return cells_.size(); }
  /// Member indices of cell k, ascending.
  const std::vector<std::size_t>& cell(std::size_t k) const { return cells_.at(k); }
  std::vector<CoxeterElement> members(std::size_t k) const;
  std::size_t cell_of(std::size_t element) const { return cell_of_.at(element); }
  std::size_t cell_of(const CoxeterElement& w) const { return cell_of_.at(system_->index_of(w)); }
  std::string label(std::size_t k) const { return "C" + std::to_string(k); }

  /// Cell a lies below or equal to cell b: a is reachable from b.
  bool cell_leq(std::size_t a, std::size_t b) const { return reach_[b][a]; }
  /// x <= y in the element preorder.
  bool leq(const CoxeterElement& x, const CoxeterElement& y) const { return cell_leq(cell_of(x), cell_of(y)); }
  /// Transitive reduction as (upper, lower) pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  std::shared_ptr<const CoxeterSystem> system_;
  int p_;
  CellSide side_;
  CellGraph graph_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cell_of_;
  std::vector<std::vector<bool>> reach_;
};

CellPartition cell_partition(const CanonicalTable& table, CellSide side);
/// Strongly connected components of the union of both graphs.
CellPartition two_sided(const CellPartition& right, const CellPartition& left);

/// Square matrices over Z[v, v^-1].
using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;
PolyMatrix identity_matrix(std::size_t n);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scale(const LaurentPolynomial& c, const PolyMatrix& a);

/// Right action of each H_s on the images of ^pH_w, w in C, in
/// H_{<=C} / H_{<C}. Row w of action[s] is the image of ^pH_w H_s, so a word
/// s1 s2 ... acts by action[s1] * action[s2] * ...
struct CellModule {
  std::vector<CoxeterElement> basis;
  std::vector<PolyMatrix> action;
};

/// Throws DomainError unless `partition` is a right partition of `table`.
CellModule cell_module(const CanonicalTable& table, const CellPartition& partition, std::size_t cell);

/// Quadratic and braid relations; returns a description of each failure.
std::vector<std::string> check_module_relations(const CoxeterSystem& system, const CellModule& module);

/// One line per cell: "<label>: <members>".
std::string format_partition(const CellPartition& partition);
/// "<upper> -> <lower>" per Hasse edge.
std::string format_hasse_text(const CellPartition& partition);
std::string format_hasse_dot(const CellPartition& partition);

}  // namespace heckecells
