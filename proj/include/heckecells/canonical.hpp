#pragma once

#include "heckecells/coxeter.hpp"
#include "heckecells/hecke.hpp"
#include "heckecells/laurent.hpp"
#include "heckecells/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heckecells {

/// The coefficient matrix (h_{y,x}) of a p-canonical basis of a finite W:
/// ^pH_x = sum_y h_{y,x} H_y. Columns are indexed by element index and
/// include the diagonal entry.
///
/// p = 0 tables come from kl_table; p > 0 tables are read from files.
/// Tables are immutable once built.
class CanonicalTable {
 public:
  using Column = IndexedElement;

  /// Columns must cover every element of the (finite) system.
  CanonicalTable(std::shared_ptr<const CoxeterSystem> system, int p, std::vector<Column> columns);

  const CoxeterSystem& system() const { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return system_; }
  int p() const { return p_; }
  std::size_t size() const { return columns_.size(); }

  /// How the system is referred to when saved ("C3", a file path, ...).
  const std::string& system_reference() const { return system_reference_; }
  void set_system_reference(std::string reference) { system_reference_ = std::move(reference); }

  const Column& column(std::size_t x) const { return columns_.at(x); }
  LaurentPolynomial entry(std::size_t y, std::size_t x) const;
  LaurentPolynomial entry(const CoxeterElement& y, const CoxeterElement& x) const;
  /// ^pH_x in the standard basis.
  HeckeElement canonical_element(const CoxeterElement& x) const;

  friend bool operator==(const CanonicalTable& a, const CanonicalTable& b) {
    return a.system_ == b.system_ && a.p_ == b.p_ && a.columns_ == b.columns_;
  }

 private:
  std::shared_ptr<const CoxeterSystem> system_;
  int p_;
  std::vector<Column> columns_;
  std::string system_reference_;
};

/// Kazhdan-Lusztig basis (p = 0) by induction on length:
/// H_x = H_s H_{sx} - sum_{y < sx, sy < y} mu(y, sx) H_y for the first letter
/// s of x, with mu(y, z) the coefficient of v in h_{y,z}.
/// Throws DomainError for infinite systems.
CanonicalTable kl_table(std::shared_ptr<const CoxeterSystem> system);

enum class TableCheck { Unitriangular, BruhatSupport, Positivity, IotaSymmetry, BarInvariance, DegreeBound };

std::string to_string(TableCheck check);

struct TableViolation {
  TableCheck check;
  CoxeterElement y;
  CoxeterElement x;
  LaurentPolynomial value;
  bool advisory = false;
};

struct ValidationReport {
  std::vector<TableViolation> violations;

  bool passes_mandatory() const;
  std::size_t count(TableCheck check) const;
  /// One line per check with its violation count, then one line per violation.
  std::string render() const;
};

/// Checks every axiom individually. Bar invariance is mandatory at p = 0 and
/// advisory otherwise; the vZ[v] degree bound applies at p = 0 only.
ValidationReport validate_table(const CanonicalTable& table);

/// Coordinates in the p-canonical basis: element -> coefficient of ^pH_w.
using CanonicalCoordinates = std::map<CoxeterElement, LaurentPolynomial>;

/// Triangular solve along decreasing (length, ShortLex).
CanonicalCoordinates to_canonical(const HeckeElement& h, const CanonicalTable& table);
HeckeElement to_standard(const CanonicalCoordinates& coordinates, const CanonicalTable& table);
/// Index-form variants used by the cell and hybrid code.
IndexedElement to_canonical(const IndexedElement& h, const CanonicalTable& table);
IndexedElement to_standard(const IndexedElement& coordinates, const CanonicalTable& table);

/// Entries with both indices in W_I, as a table of the subsystem.
CanonicalTable extract_subtable(const CanonicalTable& table, const ParabolicSubgroup& parabolic);

/// h_{yz,xz} = h_{y,x} for x, y in W_I and z in ^I W; at p = 0 also that
/// the W_I sub-table equals the intrinsic KL table of W_I.
TheoremReport check_parabolic_invariance(const CanonicalTable& table, GeneratorSet subset);

/// Line-oriented table file:
///   # comment
///   p = 2
///   system = B2
///   <x-word> TAB <y-word> TAB <polynomial>      (meaning h_{y,x})
/// Missing pairs are 0. Diagonal entries are either all present or all
/// omitted (then implied 1); a file listing some diagonals but not others is
/// rejected with "missing diagonal".
struct LoadOptions {
  /// Use this system instead of resolving the file's `system =` header.
  std::shared_ptr<const CoxeterSystem> system;
  /// Accept tables that fail mandatory validation.
  bool force = false;
};

CanonicalTable load_table(const std::string& path, const LoadOptions& options = {});
CanonicalTable parse_table(std::string_view text, const LoadOptions& options = {},
                           const std::string& base_directory = ".");
std::string format_table(const CanonicalTable& table);
void save_table(const CanonicalTable& table, const std::string& path);

}  // namespace heckecells
