#include "heckecells/canonical.hpp"

#include "heckecells/error.hpp"
#include "heckecells/systems.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace heckecells {

CanonicalTable::CanonicalTable(std::shared_ptr<const CoxeterSystem> system, int p, std::vector<Column> columns)
    : system_(std::move(system)), p_(p), columns_(std::move(columns)), system_reference_(system_->name()) {
  if (!system_->is_finite()) throw DomainError("canonical tables need a finite Coxeter system");
  if (columns_.size() != system_->order()) throw DomainError("canonical table must have one column per element");
  if (p_ < 0) throw DomainError("characteristic must be 0 or positive");
}

LaurentPolynomial CanonicalTable::entry(std::size_t y, std::size_t x) const {
  const auto& col = columns_.at(x);
  auto it = col.find(y);
  return it == col.end() ? LaurentPolynomial() : it->second;
}

LaurentPolynomial CanonicalTable::entry(const CoxeterElement& y, const CoxeterElement& x) const {
  return entry(system_->index_of(y), system_->index_of(x));
}

HeckeElement CanonicalTable::canonical_element(const CoxeterElement& x) const {
  return to_hecke(*system_, columns_.at(system_->index_of(x)));
}

CanonicalTable kl_table(std::shared_ptr<const CoxeterSystem> system) {
  if (!system->is_finite()) throw DomainError("KL table of an infinite Coxeter system");
  const auto& sys = *system;
  const std::size_t n = sys.order();
  std::vector<CanonicalTable::Column> columns(n);
  columns[0] = {{0, LaurentPolynomial(1)}};
  const LaurentPolynomial v = LaurentPolynomial::v();
  for (std::size_t x = 1; x < n; ++x) {
    const Generator s = sys.element_at(x).word().front();
    const std::size_t w = sys.left_index(x, s);
    const auto& below = columns[w];
    // (H_s + v) * H_w-column
    IndexedElement col = multiply_generator_left(sys, s, below);
    add_scaled(col, v, below);
    for (const auto& [y, h] : below) {
      if (y == w || sys.left_index(y, s) > y) continue;
      Integer mu = h.coefficient(1);
      if (mu != 0) add_scaled(col, LaurentPolynomial::monomial(-mu, 0), columns[y]);
    }
    columns[x] = std::move(col);
  }
  return CanonicalTable(std::move(system), 0, std::move(columns));
}

std::string to_string(TableCheck check) {
  switch (check) {
    case TableCheck::Unitriangular: return "unitriangular";
    case TableCheck::BruhatSupport: return "bruhat-support";
    case TableCheck::Positivity: return "positivity";
    case TableCheck::IotaSymmetry: return "iota-symmetry";
    case TableCheck::BarInvariance: return "bar-invariance";
    case TableCheck::DegreeBound: return "degree-bound";
  }
  return "?";
}

bool ValidationReport::passes_mandatory() const {
  for (const auto& v : violations)
    if (!v.advisory) return false;
  return true;
}

std::size_t ValidationReport::count(TableCheck check) const {
  std::size_t n = 0;
  for (const auto& v : violations) n += v.check == check;
  return n;
}

std::string ValidationReport::render() const {
  std::ostringstream os;
  for (auto check : {TableCheck::Unitriangular, TableCheck::BruhatSupport, TableCheck::Positivity,
                     TableCheck::IotaSymmetry, TableCheck::BarInvariance, TableCheck::DegreeBound}) {
    std::size_t n = count(check);
    bool advisory = false;
    for (const auto& v : violations)
      if (v.check == check && v.advisory) advisory = true;
    os << to_string(check) << ": " << (n == 0 ? "pass" : advisory ? "advisory" : "FAIL") << " (" << n
       << " violations)\n";
  }
  for (const auto& v : violations)
    os << "  " << to_string(v.check) << (v.advisory ? " [advisory]" : "") << " y=" << v.y << " x=" << v.x
       << " value=" << v.value << '\n';
  return os.str();
}

ValidationReport validate_table(const CanonicalTable& table) {
  ValidationReport report;
  const auto& sys = table.system();
  const bool characteristic_zero = table.p() == 0;
  auto flag = [&](TableCheck check, std::size_t y, std::size_t x, LaurentPolynomial value, bool advisory = false) {
    report.violations.push_back({check, sys.element_at(y), sys.element_at(x), std::move(value), advisory});
  };
  HeckeAlgebra algebra(table.system_ptr());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const auto& xe = sys.element_at(x);
    const auto& col = table.column(x);
    if (table.entry(x, x) != LaurentPolynomial(1)) flag(TableCheck::Unitriangular, x, x, table.entry(x, x));
    const std::size_t x_inv = sys.index_of(inverse(xe));
    for (const auto& [y, h] : col) {
      const auto& ye = sys.element_at(y);
      if (y != x && !bruhat_leq(ye, xe)) flag(TableCheck::BruhatSupport, y, x, h);
      if (!h.is_nonnegative()) flag(TableCheck::Positivity, y, x, h);
      if (characteristic_zero && y != x && !h.in_v_z_v()) flag(TableCheck::DegreeBound, y, x, h);
    }
    // iota symmetry, scanning the union of both supports
    std::set<std::size_t> ys;
    for (const auto& [y, h] : col) ys.insert(y);
    for (const auto& [y, h] : table.column(x_inv)) ys.insert(sys.index_of(inverse(sys.element_at(y))));
    for (std::size_t y : ys) {
      std::size_t y_inv = sys.index_of(inverse(sys.element_at(y)));
      if (table.entry(y, x) != table.entry(y_inv, x_inv))
        flag(TableCheck::IotaSymmetry, y, x, table.entry(y, x) - table.entry(y_inv, x_inv));
    }
    HeckeElement element = to_hecke(sys, col);
    HeckeElement defect = algebra.bar(element) - element;
    for (const auto& [y, d] : defect.terms())
      flag(TableCheck::BarInvariance, sys.index_of(y), x, d, !characteristic_zero);
  }
  return report;
}

IndexedElement to_canonical(const IndexedElement& h, const CanonicalTable& table) {
  IndexedElement rest = h, out;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const std::size_t w = top->first;
    const LaurentPolynomial c = top->second;
    const auto& col = table.column(w);
    if (col.empty() || col.rbegin()->first != w || col.rbegin()->second != LaurentPolynomial(1))
      throw DomainError("canonical table column " + table.system().element_at(w).to_string() +
                        " is not unitriangular");
    out.emplace(w, c);
    add_scaled(rest, -c, col);
  }
  return out;
}

IndexedElement to_standard(const IndexedElement& coordinates, const CanonicalTable& table) {
  IndexedElement out;
  for (const auto& [x, c] : coordinates) add_scaled(out, c, table.column(x));
  return out;
}

CanonicalCoordinates to_canonical(const HeckeElement& h, const CanonicalTable& table) {
  if (h.system_ptr() && h.system_ptr() != table.system_ptr())
    throw DomainError("element lies outside the table's domain");
  CanonicalCoordinates out;
  for (const auto& [i, c] : to_canonical(to_indexed(h), table)) out.emplace(table.system().element_at(i), c);
  return out;
}

HeckeElement to_standard(const CanonicalCoordinates& coordinates, const CanonicalTable& table) {
  IndexedElement indexed;
  for (const auto& [w, c] : coordinates) {
    if (w.system_ptr() != &table.system()) throw DomainError("element lies outside the table's domain");
    indexed.emplace(table.system().index_of(w), c);
  }
  return to_hecke(table.system(), to_standard(indexed, table));
}

CanonicalTable extract_subtable(const CanonicalTable& table, const ParabolicSubgroup& parabolic) {
  if (&parabolic.ambient() != &table.system()) throw DomainError("parabolic subgroup of a different system");
  const auto& sub = parabolic.subsystem();
  std::vector<CanonicalTable::Column> columns(sub.order());
  for (std::size_t x = 0; x < sub.order(); ++x) {
    std::size_t ambient_x = table.system().index_of(parabolic.embed(sub.element_at(x)));
    for (const auto& [y, h] : table.column(ambient_x)) {
      const auto& ye = table.system().element_at(y);
      if (parabolic.contains(ye)) columns[x].emplace(sub.index_of(parabolic.restrict(ye)), h);
    }
  }
  CanonicalTable out(parabolic.subsystem_ptr(), table.p(), std::move(columns));
  return out;
}

TheoremReport check_parabolic_invariance(const CanonicalTable& table, GeneratorSet subset) {
  const auto& sys = table.system();
  TheoremReport report("parabolic-invariance");
  report.parameter("system", table.system_reference())
      .parameter("I", sys.format_generator_set(subset))
      .parameter("p", std::to_string(table.p()));
  ParabolicSubgroup parabolic(table.system_ptr(), subset);
  auto parabolic_part = parabolic_elements(sys, subset);
  auto reps = minimal_reps(sys, subset, Side::Left);
  for (const auto& z : reps)
    for (const auto& x : parabolic_part)
      for (const auto& y : parabolic_part) {
        auto shifted = table.entry(multiply(y, z), multiply(x, z));
        auto base = table.entry(y, x);
        if (shifted != base)
          report.add_witness(Witness()
                                 .add("x", x.to_string())
                                 .add("y", y.to_string())
                                 .add("z", z.to_string())
                                 .add("h_yz_xz", shifted.to_string(true))
                                 .add("h_y_x", base.to_string(true)));
      }
  if (table.p() == 0) {
    auto extracted = extract_subtable(table, parabolic);
    auto intrinsic = kl_table(parabolic.subsystem_ptr());
    const auto& sub = parabolic.subsystem();
    for (std::size_t x = 0; x < sub.order(); ++x)
      for (std::size_t y = 0; y < sub.order(); ++y)
        if (extracted.entry(y, x) != intrinsic.entry(y, x))
          report.add_witness(Witness()
                                 .add("kind", "subtable")
                                 .add("x", parabolic.embed(sub.element_at(x)).to_string())
                                 .add("y", parabolic.embed(sub.element_at(y)).to_string())
                                 .add("extracted", extracted.entry(y, x).to_string(true))
                                 .add("intrinsic", intrinsic.entry(y, x).to_string(true)));
  }
  return report;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

CanonicalTable parse_table(std::string_view text, const LoadOptions& options, const std::string& base_directory) {
  std::optional<int> p;
  std::optional<std::string> system_reference;
  std::shared_ptr<const CoxeterSystem> system = options.system;
  struct Entry {
    std::size_t x, y;
    LaurentPolynomial value;
  };
  std::vector<Entry> entries;
  std::map<std::size_t, std::size_t> first_line_of_column;
  std::set<std::size_t> explicit_diagonal;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (raw.find('\t') == std::string::npos) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("table: expected a header or a tab-separated entry", line_no);
      std::string key = trim(std::string_view(line).substr(0, eq));
      std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key == "p") {
        try {
          std::size_t used = 0;
          p = std::stoi(value, &used);
          if (used != value.size() || *p < 0) throw std::invalid_argument("p");
        } catch (const std::exception&) {
          throw ParseError("table: invalid characteristic '" + value + "'", line_no);
        }
      } else if (key == "system") {
        system_reference = value;
        if (!system) {
          if (std::filesystem::path(value).is_relative() && !std::filesystem::exists(value) &&
              std::find(preset_names().begin(), preset_names().end(), value) == preset_names().end())
            value = (std::filesystem::path(base_directory) / value).string();
          try {
            system = resolve_system(value);
          } catch (const Error& e) {
            throw ParseError(std::string("table: cannot resolve system: ") + e.what(), line_no);
          }
        }
      } else {
        throw ParseError("table: unknown header '" + key + "'", line_no);
      }
      continue;
    }
    if (!p || !system) throw ParseError("table: entries must follow the 'p' and 'system' headers", line_no);
    std::vector<std::string> fields;
    std::stringstream ss(raw);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(trim(field));
    if (fields.size() != 3) throw ParseError("table: expected 3 tab-separated fields", line_no);
    std::size_t x = 0, y = 0;
    LaurentPolynomial value;
    try {
      x = system->index_of(system->parse_element(fields[0]));
      y = system->index_of(system->parse_element(fields[1]));
      value = LaurentPolynomial::parse(fields[2]);
    } catch (const Error& e) {
      throw ParseError(std::string("table: ") + e.what(), line_no);
    }
    if (!seen.insert({y, x}).second) throw ParseError("table: duplicate entry", line_no);
    first_line_of_column.try_emplace(x, line_no);
    if (x == y) explicit_diagonal.insert(x);
    entries.push_back({x, y, std::move(value)});
  }
  if (!p) throw ParseError("table: missing 'p' header", line_no);
  if (!system) throw ParseError("table: missing 'system' header", line_no);
  if (!system->is_finite()) throw ParseError("table: system is not finite", line_no);

  const std::size_t n = system->order();
  if (!explicit_diagonal.empty() && explicit_diagonal.size() != n) {
    for (std::size_t x = 0; x < n; ++x)
      if (!explicit_diagonal.count(x)) {
        auto it = first_line_of_column.find(x);
        throw ParseError("table: missing diagonal for column " + system->element_at(x).to_string(),
                         it == first_line_of_column.end() ? line_no : it->second);
      }
  }
  std::vector<CanonicalTable::Column> columns(n);
  if (explicit_diagonal.empty())
    for (std::size_t x = 0; x < n; ++x) columns[x].emplace(x, 1);
  for (auto& e : entries)
    if (!e.value.is_zero()) columns[e.x][e.y] = std::move(e.value);

  CanonicalTable table(system, *p, std::move(columns));
  if (system_reference) table.set_system_reference(*system_reference);
  if (!options.force) {
    auto report = validate_table(table);
    if (!report.passes_mandatory()) {
      std::size_t mandatory = 0;
      for (const auto& v : report.violations) mandatory += !v.advisory;
      throw Error("table violates mandatory axioms (" + std::to_string(mandatory) + " violations):\n" +
                  report.render());
    }
  }
  return table;
}

CanonicalTable load_table(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto dir = std::filesystem::path(path).parent_path();
  return parse_table(buffer.str(), options, dir.empty() ? "." : dir.string());
}

std::string format_table(const CanonicalTable& table) {
  std::ostringstream os;
  os << "# column x, row y, entry h_{y,x}\n";
  os << "p = " << table.p() << '\n';
  os << "system = " << table.system_reference() << '\n';
  const auto& sys = table.system();
  for (std::size_t x = 0; x < table.size(); ++x)
    for (const auto& [y, h] : table.column(x))
      os << sys.element_at(x) << '\t' << sys.element_at(y) << '\t' << h << '\n';
  return os.str();
}

void save_table(const CanonicalTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write table file '" + path + "'");
  out << format_table(table);
}

}  // namespace heckecells
