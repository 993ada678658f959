#include "transvect/diagrams.hpp"

#include "transvect/parallel.hpp"

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace transvect {

BipartiteMultigraph::BipartiteMultigraph(int e) : e_(e), m_(static_cast<std::size_t>(e * e), 0) {
  if (e < 1) {
    throw std::invalid_argument("BipartiteMultigraph: e must be positive");
  }
}

BipartiteMultigraph::BipartiteMultigraph(int e, std::vector<std::uint8_t> entries)
    : e_(e), m_(std::move(entries)) {
  if (e < 1 || m_.size() != static_cast<std::size_t>(e * e)) {
    throw std::invalid_argument("BipartiteMultigraph: entry count does not match e*e");
  }
}

int BipartiteMultigraph::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < e_; ++j) {
    s += at(i, j);
  }
  return s;
}

int BipartiteMultigraph::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < e_; ++i) {
    s += at(i, j);
  }
  return s;
}

int BipartiteMultigraph::total() const { return std::accumulate(m_.begin(), m_.end(), 0); }

bool BipartiteMultigraph::valid() const {
  for (int i = 0; i < e_; ++i) {
    if (row_sum(i) > 2 || col_sum(i) > 2) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> BipartiteMultigraph::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) {
      out[static_cast<std::size_t>(i)].push_back(at(i, j));
    }
  }
  return out;
}

std::string to_string(ComponentKind kind) {
  switch (kind) {
  case ComponentKind::Cycle:
    return "cycle";
  case ComponentKind::ChainLL:
    return "chain-LL";
  case ComponentKind::ChainRR:
    return "chain-RR";
  case ComponentKind::ChainLR:
    return "chain-LR";
  }
  return "?";
}

int ComponentReport::cycles() const {
  int c = 0;
  for (const auto& comp : components) {
    c += comp.kind == ComponentKind::Cycle;
  }
  return c;
}

bool ComponentReport::has_lr_chain() const {
  for (const auto& comp : components) {
    if (comp.kind == ComponentKind::ChainLR) {
      return true;
    }
  }
  return false;
}

namespace {

void check_range(int e, int p) {
  if (e < 1 || p < 0 || p > e) {
    throw std::invalid_argument("graph enumeration: need e >= 1 and 0 <= p <= e");
  }
}

// Depth-first search over cells in row-major order. State is kept in flat
// arrays; Leaf is invoked with the filled matrix.
class GraphSearch {
public:
  GraphSearch(int e, int p) : e_(e), target_(2 * p), g_(e), rows_(e, 0), cols_(e, 0) {}

  template <class Leaf>
  void run_from(int cell, int placed, Leaf& leaf) {
    if (placed == target_) {
      leaf(g_);
      return;
    }
    const int n = e_ * e_;
    if (cell == n) {
      return;
    }
    const int i = cell / e_, j = cell % e_;
    // Upper bound on what the remaining cells can still absorb.
    int row_cap = 2 - rows_[i] + 2 * (e_ - 1 - i);
    int col_cap = 0;
    for (int c = 0; c < e_; ++c) {
      col_cap += 2 - cols_[c];
    }
    if (target_ - placed > std::min(row_cap, col_cap)) {
      return;
    }
    int hi = std::min({2, 2 - rows_[i], 2 - cols_[j], target_ - placed});
    for (int v = 0; v <= hi; ++v) {
      g_.set(i, j, v);
      rows_[i] += v;
      cols_[j] += v;
      run_from(cell + 1, placed + v, leaf);
      rows_[i] -= v;
      cols_[j] -= v;
    }
    g_.set(i, j, 0);
  }

  // Seeds the first row with a fixed assignment; returns false if invalid.
  bool seed_first_row(const std::vector<int>& row) {
    int s = 0;
    for (int j = 0; j < e_; ++j) {
      g_.set(0, j, row[static_cast<std::size_t>(j)]);
      cols_[j] = row[static_cast<std::size_t>(j)];
      s += row[static_cast<std::size_t>(j)];
    }
    rows_[0] = s;
    return s <= 2 && s <= target_;
  }

private:
  int e_;
  int target_;
  BipartiteMultigraph g_;
  std::vector<int> rows_;
  std::vector<int> cols_;
};

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

// Exponent of 2 in the weight denominator: every factorial there is 0!, 1! or 2!.
int denominator_twos(const BipartiteMultigraph& g) {
  const int e = g.size();
  int t = 0;
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) {
      t += g.at(i, j) == 2;
    }
    t += g.row_sum(i) == 0;
    t += g.col_sum(i) == 0;
  }
  return t;
}

std::vector<std::vector<int>> first_rows(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> row(static_cast<std::size_t>(e), 0);
  // Row-major lexicographic order over rows with sum <= 2.
  std::function<void(int, int)> rec = [&](int j, int sum) {
    if (j == e) {
      out.push_back(row);
      return;
    }
    for (int v = 0; v <= 2 - sum; ++v) {
      row[static_cast<std::size_t>(j)] = v;
      rec(j + 1, sum + v);
    }
    row[static_cast<std::size_t>(j)] = 0;
  };
  rec(0, 0);
  return out;
}

} // namespace

void for_each_graph(int e, int p, const std::function<void(const BipartiteMultigraph&)>& visit) {
  check_range(e, p);
  GraphSearch search(e, p);
  auto leaf = [&](const BipartiteMultigraph& g) { visit(g); };
  search.run_from(0, 0, leaf);
}

std::vector<BipartiteMultigraph> enumerate(int e, int p) {
  std::vector<BipartiteMultigraph> out;
  for_each_graph(e, p, [&](const BipartiteMultigraph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_graphs(int e, int p) {
  check_range(e, p);
  std::uint64_t n = 0;
  GraphSearch search(e, p);
  auto leaf = [&](const BipartiteMultigraph&) { ++n; };
  search.run_from(0, 0, leaf);
  return n;
}

ComponentReport components(const BipartiteMultigraph& g) {
  const int e = g.size();
  UnionFind uf(2 * e);
  std::vector<int> degree(static_cast<std::size_t>(2 * e), 0);
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) {
      int m = g.at(i, j);
      if (m > 0) {
        uf.unite(i, e + j);
        degree[static_cast<std::size_t>(i)] += m;
        degree[static_cast<std::size_t>(e + j)] += m;
      }
    }
  }
  struct Acc {
    int edges2 = 0; // twice the edge count
    int l = 0, r = 0;
    int l_ends = 0, r_ends = 0;
    bool seen = false;
  };
  std::vector<Acc> acc(static_cast<std::size_t>(2 * e));
  std::vector<int> order;
  for (int v = 0; v < 2 * e; ++v) {
    auto& a = acc[static_cast<std::size_t>(uf.find(v))];
    if (!a.seen) {
      a.seen = true;
      order.push_back(uf.find(v));
    }
    int deg = degree[static_cast<std::size_t>(v)];
    a.edges2 += deg;
    bool left = v < e;
    (left ? a.l : a.r) += 1;
    // Path endpoints have degree 1; an isolated vertex is both ends of a
    // zero-edge chain.
    int ends = deg == 0 ? 2 : (deg == 1 ? 1 : 0);
    (left ? a.l_ends : a.r_ends) += ends;
  }
  ComponentReport report;
  for (int root : order) {
    const auto& a = acc[static_cast<std::size_t>(root)];
    Component c{ComponentKind::Cycle, a.edges2 / 2, a.l, a.r};
    if (a.l_ends + a.r_ends == 0) {
      c.kind = ComponentKind::Cycle;
    } else if (a.l_ends == 2) {
      c.kind = ComponentKind::ChainLL;
    } else if (a.r_ends == 2) {
      c.kind = ComponentKind::ChainRR;
    } else {
      c.kind = ComponentKind::ChainLR;
    }
    report.components.push_back(c);
  }
  return report;
}

Rational weight(const BipartiteMultigraph& g) {
  if (!g.valid()) {
    throw std::invalid_argument("weight: vertex degree exceeds 2");
  }
  const int e = g.size();
  Integer num = factorial(static_cast<unsigned long>(g.total())) * pow2(2 * static_cast<unsigned long>(e));
  Integer den = 1;
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) {
      den *= factorial(static_cast<unsigned long>(g.at(i, j)));
    }
    den *= factorial(static_cast<unsigned long>(2 - g.row_sum(i)));
    den *= factorial(static_cast<unsigned long>(2 - g.col_sum(i)));
  }
  Rational w(num, den);
  w.canonicalize();
  return w;
}

Rational n1_term(const BipartiteMultigraph& g) {
  auto report = components(g);
  if (report.has_lr_chain()) {
    return 0;
  }
  const long shift = report.cycles() - g.total(); // C(G) - 2p
  Rational t = weight(g);
  if (shift >= 0) {
    t *= Rational(pow2(static_cast<unsigned long>(shift)));
  } else {
    t /= Rational(pow2(static_cast<unsigned long>(-shift)));
  }
  return t;
}

Rational n1_via_graphs(int e, int p, int jobs) {
  check_range(e, p);
  // Each admissible summand is (2p)! 2^{2e-2p} 2^{C(G) - t(G)} where 2^t(G) is
  // the weight denominator; tally graphs by C - t and sum exactly at the end.
  using Histogram = std::map<int, std::uint64_t>;
  auto tally = [](Histogram& h) {
    return [&h](const BipartiteMultigraph& g) {
      auto report = components(g);
      if (report.has_lr_chain()) {
        return;
      }
      ++h[report.cycles() - denominator_twos(g)];
    };
  };

  Histogram total;
  if (jobs <= 1 || e == 1) {
    GraphSearch search(e, p);
    auto leaf = tally(total);
    search.run_from(0, 0, leaf);
  } else {
    auto seeds = first_rows(e);
    std::vector<Histogram> parts(seeds.size());
    parallel_for(seeds.size(), jobs, [&](std::size_t k) {
      GraphSearch search(e, p);
      if (!search.seed_first_row(seeds[k])) {
        return;
      }
      int placed = std::accumulate(seeds[k].begin(), seeds[k].end(), 0);
      auto leaf = tally(parts[k]);
      search.run_from(e, placed, leaf);
    });
    for (const auto& part : parts) {
      for (const auto& [k, n] : part) {
        total[k] += n;
      }
    }
  }

  Rational sum = 0;
  for (const auto& [k, n] : total) {
    Rational term = Rational(Integer(static_cast<unsigned long>(n)));
    if (k >= 0) {
      term *= Rational(pow2(static_cast<unsigned long>(k)));
    } else {
      term /= Rational(pow2(static_cast<unsigned long>(-k)));
    }
    sum += term;
  }
  sum *= Rational(factorial(2 * static_cast<unsigned long>(p)) *
                  pow2(2 * static_cast<unsigned long>(e - p)));
  return sum;
}

} // namespace transvect
