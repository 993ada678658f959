#pragma once

#include "transvect/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace transvect {

/// e x e matrix (m_ij) of edge multiplicities between the L vertices (rows,
/// the Q(x) factors) and the R vertices (columns, the Q(y) factors). Every
/// vertex has degree at most 2.
class BipartiteMultigraph {
public:
  explicit BipartiteMultigraph(int e);
  BipartiteMultigraph(int e, std::vector<std::uint8_t> entries);

  int size() const { return e_; }
  int at(int i, int j) const { return m_[static_cast<std::size_t>(i * e_ + j)]; }
  void set(int i, int j, int v) { m_[static_cast<std::size_t>(i * e_ + j)] = static_cast<std::uint8_t>(v); }

  int row_sum(int i) const;
  int col_sum(int j) const;
  int total() const;
  bool valid() const;

  const std::vector<std::uint8_t>& entries() const { return m_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const BipartiteMultigraph&, const BipartiteMultigraph&) = default;

private:
  int e_;
  std::vector<std::uint8_t> m_;
};

enum class ComponentKind { Cycle, ChainLL, ChainRR, ChainLR };

std::string to_string(ComponentKind kind);

struct Component {
  ComponentKind kind;
  int edges;
  int l_vertices;
  int r_vertices;
};

struct ComponentReport {
  std::vector<Component> components;

  int cycles() const;
  bool has_lr_chain() const;
};

/// Calls `visit` on every graph with total edge count 2p, in row-major
/// lexicographic order of the matrix entries.
void for_each_graph(int e, int p, const std::function<void(const BipartiteMultigraph&)>& visit);

std::vector<BipartiteMultigraph> enumerate(int e, int p);

std::uint64_t count_graphs(int e, int p);

ComponentReport components(const BipartiteMultigraph& g);

/// (2p)! 2^{2e} / (prod m_ij! prod (2-l_i)! prod (2-c_j)!)
Rational weight(const BipartiteMultigraph& g);

/// Summand of the graph sum: weight(g) 2^{C(G) - 2p}, or 0 when g has an
/// L-R chain component.
Rational n1_term(const BipartiteMultigraph& g);

/// Weighted count over admissible graphs. `jobs` > 1 partitions the search
/// by the first row and merges the partial sums.
Rational n1_via_graphs(int e, int p, int jobs = 1);

} // namespace transvect
