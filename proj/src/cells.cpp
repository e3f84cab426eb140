#include "heckecells/cells.hpp"

#include "heckecells/error.hpp"
#include "heckecells/parallel.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace heckecells {

std::string to_string(CellSide side) {
  switch (side) {
    case CellSide::Right: return "right";
    case CellSide::Left: return "left";
    case CellSide::TwoSided: return "two-sided";
  }
  return "?";
}

CellSide parse_cell_side(std::string_view text) {
  if (text == "right") return CellSide::Right;
  if (text == "left") return CellSide::Left;
  if (text == "two-sided") return CellSide::TwoSided;
  throw Error("unknown side '" + std::string(text) + "' (expected right, left or two-sided)");
}

namespace {

IndexedElement act(const CoxeterSystem& sys, const IndexedElement& h, Generator s, CellSide side) {
  return side == CellSide::Left ? multiply_generator_left(sys, s, h) : multiply_generator_right(sys, h, s);
}

IndexedElement act_by_standard(const CoxeterSystem& sys, IndexedElement h, const CoxeterElement& y, CellSide side) {
  const auto& word = y.word();
  if (side == CellSide::Left)
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = multiply_generator_left(sys, *it, h);
  else
    for (Generator s : word) h = multiply_generator_right(sys, h, s);
  return h;
}

void finish(std::vector<std::size_t>& targets, std::size_t source) {
  targets.erase(std::remove(targets.begin(), targets.end(), source), targets.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
}

void require_one_sided(CellSide side) {
  if (side == CellSide::TwoSided) throw Error("cell graphs are built per side; use two_sided to combine");
}

}  // namespace

CellGraph cell_graph(const CanonicalTable& table, CellSide side, const std::vector<Generator>& generator_order) {
  require_one_sided(side);
  const auto& sys = table.system();
  std::vector<Generator> order = generator_order;
  if (order.empty())
    for (Generator s = 0; s < sys.rank(); ++s) order.push_back(s);
  CellGraph graph(table.size());
  parallel_for(table.size(), [&](std::size_t w) {
    auto& targets = graph[w];
    for (Generator s : order)
      for (const auto& [x, c] : to_canonical(act(sys, table.column(w), s, side), table)) targets.push_back(x);
    finish(targets, w);
  });
  return graph;
}

CellGraph cell_graph_canonical_generators(const CanonicalTable& table, CellSide side) {
  require_one_sided(side);
  const auto& sys = table.system();
  CellGraph graph(table.size());
  parallel_for(table.size(), [&](std::size_t w) {
    auto& targets = graph[w];
    for (Generator s = 0; s < sys.rank(); ++s) {
      IndexedElement product;
      for (const auto& [y, c] : table.column(sys.index_of(sys.generator(s))))
        add_scaled(product, c, act_by_standard(sys, table.column(w), sys.element_at(y), side));
      for (const auto& [x, c] : to_canonical(product, table)) targets.push_back(x);
    }
    finish(targets, w);
  });
  return graph;
}

CellPartition::CellPartition(std::shared_ptr<const CoxeterSystem> system, int p, CellSide side, CellGraph graph)
    : system_(std::move(system)), p_(p), side_(side), graph_(std::move(graph)) {
  const std::size_t n = graph_.size();
  if (n != system_->order()) throw DomainError("cell graph does not cover the group");

  // Tarjan
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), component(n, SIZE_MAX), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, components = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : graph_[v]) {
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) visit(v);

  std::vector<std::size_t> first_member(components, SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v) first_member[component[v]] = std::min(first_member[component[v]], v);
  std::vector<std::vector<std::size_t>> successors(components);
  std::vector<std::size_t> indegree(components, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : graph_[v])
      if (component[v] != component[w]) successors[component[v]].push_back(component[w]);
  for (auto& s : successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t c : s) ++indegree[c];
  }

  // Kahn, ready cells ordered by their first member
  using Entry = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < components; ++c)
    if (indegree[c] == 0) ready.emplace(first_member[c], c);
  std::vector<std::size_t> rank_of(components);
  std::size_t next = 0;
  while (!ready.empty()) {
    auto [first, c] = ready.top();
    ready.pop();
    rank_of[c] = next++;
    for (std::size_t d : successors[c])
      if (--indegree[d] == 0) ready.emplace(first_member[d], d);
  }

  cells_.assign(components, {});
  cell_of_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    cell_of_[v] = rank_of[component[v]];
    cells_[cell_of_[v]].push_back(v);
  }
  reach_.assign(components, std::vector<bool>(components, false));
  for (std::size_t k = components; k-- > 0;) reach_[k][k] = true;
  std::vector<std::vector<std::size_t>> below(components);
  for (std::size_t c = 0; c < components; ++c)
    for (std::size_t d : successors[c]) below[rank_of[c]].push_back(rank_of[d]);
  for (std::size_t k = components; k-- > 0;)
    for (std::size_t j : below[k])
      for (std::size_t i = 0; i < components; ++i)
        if (reach_[j][i]) reach_[k][i] = true;
}

std::vector<CoxeterElement> CellPartition::members(std::size_t k) const {
  std::vector<CoxeterElement> out;
  for (std::size_t i : cells_.at(k)) out.push_back(system_->element_at(i));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> CellPartition::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t k = cells_.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b || !reach_[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < k && covered; ++c)
        if (c != a && c != b && reach_[a][c] && reach_[c][b]) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

CellPartition cell_partition(const CanonicalTable& table, CellSide side) {
  return CellPartition(table.system_ptr(), table.p(), side, cell_graph(table, side));
}

CellPartition two_sided(const CellPartition& right, const CellPartition& left) {
  if (right.system_ptr() != left.system_ptr() || right.p() != left.p())
    throw DomainError("two_sided needs partitions of the same table");
  if (right.side() != CellSide::Right || left.side() != CellSide::Left)
    throw DomainError("two_sided needs a right and a left partition");
  CellGraph graph(right.graph().size());
  for (std::size_t w = 0; w < graph.size(); ++w) {
    graph[w] = right.graph()[w];
    graph[w].insert(graph[w].end(), left.graph()[w].begin(), left.graph()[w].end());
    finish(graph[w], w);
  }
  return CellPartition(right.system_ptr(), right.p(), CellSide::TwoSided, std::move(graph));
}

PolyMatrix identity_matrix(std::size_t n) {
  PolyMatrix m(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix out(n, std::vector<LaurentPolynomial>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) out[i][j].add_product(a[i][k], b[k][j]);
    }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

PolyMatrix scale(const LaurentPolynomial& c, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

CellModule cell_module(const CanonicalTable& table, const CellPartition& partition, std::size_t cell) {
  if (partition.side() != CellSide::Right || partition.system_ptr() != table.system_ptr() ||
      partition.p() != table.p())
    throw DomainError("cell modules need the right partition of the same table");
  if (cell >= partition.size()) throw DomainError("no such cell");
  const auto& sys = table.system();
  CellModule module;
  const auto& members = partition.cell(cell);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < members.size(); ++i) {
    position[members[i]] = i;
    module.basis.push_back(sys.element_at(members[i]));
  }
  for (Generator s = 0; s < sys.rank(); ++s) {
    PolyMatrix m(members.size(), std::vector<LaurentPolynomial>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (const auto& [u, c] : to_canonical(multiply_generator_right(sys, table.column(members[i]), s), table)) {
        auto it = position.find(u);
        if (it != position.end()) m[i][it->second] = c;
      }
    module.action.push_back(std::move(m));
  }
  return module;
}

std::vector<std::string> check_module_relations(const CoxeterSystem& system, const CellModule& module) {
  std::vector<std::string> failures;
  const std::size_t n = module.basis.size();
  const auto one = identity_matrix(n);
  for (Generator s = 0; s < system.rank(); ++s) {
    const auto& m = module.action.at(s);
    if (m * m != scale(quadratic_coefficient(), m) + one)
      failures.push_back("quadratic relation fails for " + std::to_string(system.label(s)));
  }
  for (Generator s = 0; s < system.rank(); ++s)
    for (Generator t = s + 1; t < system.rank(); ++t) {
      int order = system.coxeter_entry(s, t);
      if (order == kInfiniteOrder) continue;
      PolyMatrix a = one, b = one;
      for (int i = 0; i < order; ++i) {
        a = a * module.action[i % 2 == 0 ? s : t];
        b = b * module.action[i % 2 == 0 ? t : s];
      }
      if (a != b)
        failures.push_back("braid relation fails for " + std::to_string(system.label(s)) + "," +
                           std::to_string(system.label(t)));
    }
  return failures;
}

std::string format_partition(const CellPartition& partition) {
  std::ostringstream os;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    os << partition.label(k) << ':';
    for (const auto& w : partition.members(k)) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

std::string format_hasse_text(const CellPartition& partition) {
  std::ostringstream os;
  for (auto [a, b] : partition.hasse_edges()) os << partition.label(a) << " -> " << partition.label(b) << '\n';
  return os.str();
}

std::string format_hasse_dot(const CellPartition& partition) {
  std::ostringstream os;
  os << "digraph cells {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < partition.size(); ++k) {
    os << "  " << partition.label(k) << " [label=\"" << partition.label(k) << ":";
    for (const auto& w : partition.members(k)) os << ' ' << w;
    os << "\"];\n";
  }
  for (auto [a, b] : partition.hasse_edges())
    os << "  " << partition.label(a) << " -> " << partition.label(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace heckecells
