#include "koszulkit/bar_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "koszulkit/error.hpp"
#include "parallel.hpp"

namespace koszulkit {

std::optional<std::size_t> ChainFamily::find(const Chain& c) const {
  auto it = std::lower_bound(chains.begin(), chains.end(), c);
  if (it == chains.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - chains.begin());
}

namespace {

void check_degrees(int n, int m) {
  if (n < 0 || m < 0) throw InvalidParameterError("degrees must be nonnegative");
}

// Depth-first extension in ascending element order, which yields the chains
// already sorted lexicographically.
void extend(const Poset& p, const std::vector<std::vector<Index>>& above, int n, int m,
            Chain& chain, int used, std::vector<Chain>& out) {
  const int steps_left = n - static_cast<int>(chain.size() - 1);
  if (steps_left == 0) {
    if (used == m) out.push_back(chain);
    return;
  }
  Index last = chain.back();
  for (Index y : above[last]) {
    int l = p.length(last, y);
    // Each remaining step has length at least 1.
    if (used + l + (steps_left - 1) > m) continue;
    chain.push_back(y);
    extend(p, above, n, m, chain, used + l, out);
    chain.pop_back();
  }
}

std::vector<std::vector<Index>> strict_upper_sets(const Poset& p) {
  std::vector<std::vector<Index>> above(p.size());
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (p.less(x, y)) above[x].push_back(y);
  return above;
}

ChainFamily enumerate_with(const Poset& p, const std::vector<std::vector<Index>>& above, int n,
                           int m) {
  ChainFamily family{n, m, {}};
  if (m < n) return family;
  Chain chain;
  for (Index x = 0; x < p.size(); ++x) {
    chain.assign(1, x);
    extend(p, above, n, m, chain, 0, family.chains);
  }
  return family;
}

std::size_t homology(std::size_t dim, std::size_t rank_out, std::size_t rank_in) {
  if (rank_out + rank_in > dim) throw std::logic_error("ranks exceed chain-space dimension");
  return dim - rank_out - rank_in;
}

}  // namespace

ChainFamily enumerate_chains(const Poset& p, int n, int m) {
  check_degrees(n, m);
  p.require_graded();
  return enumerate_with(p, strict_upper_sets(p), n, m);
}

SparseMatrix build_differential(const ChainFamily& source, const ChainFamily& target) {
  SparseMatrix d(target.size(), source.size());
  Chain face;
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Chain& x = source.chains[col];
    const std::size_t n = x.size() - 1;
    for (std::size_t i = 1; i + 1 <= n; ++i) {
      face.assign(x.begin(), x.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      auto row = target.find(face);
      if (!row) throw std::logic_error("face of a chain is missing from the target basis");
      d.add(*row, col, (i % 2 == 1) ? 1 : -1);
    }
  }
  return d;
}

SparseMatrix build_differential(const Poset& p, int n, int m) {
  if (n < 1) throw InvalidParameterError("differential degree must be at least 1");
  return build_differential(enumerate_chains(p, n, m), enumerate_chains(p, n - 1, m));
}

std::size_t tor_dimension(const Poset& p, int n, int m, const FieldSpec& field) {
  check_degrees(n, m);
  p.require_graded();
  if (m < n) return 0;
  if (n == 0) return m == 0 ? p.size() : 0;
  auto above = strict_upper_sets(p);
  ChainFamily lower = enumerate_with(p, above, n - 1, m);
  ChainFamily here = enumerate_with(p, above, n, m);
  ChainFamily upper = enumerate_with(p, above, n + 1, m);
  std::size_t rank_out = n >= 2 ? rank(build_differential(here, lower), field) : 0;
  std::size_t rank_in = rank(build_differential(upper, here), field);
  return homology(here.size(), rank_out, rank_in);
}

std::size_t TorTable::at(int n, int m) const {
  auto it = dims.find({n, m});
  return it == dims.end() ? 0 : it->second;
}

TorTable tor_table(const Poset& p, const FieldSpec& field, const ComputeOptions& options) {
  p.require_graded();
  TorTable table;
  table.field = field;
  table.max_length = p.max_interval_length();
  const int top = table.max_length;
  auto above = strict_upper_sets(p);

  // families[m][n] for 0 <= n <= m + 1 (the n = m + 1 slot stays empty).
  std::vector<std::vector<ChainFamily>> families(top + 1);
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= m + 1; ++n) families[m].push_back(enumerate_with(p, above, n, m));

  // rank of d_n in internal degree m, for 2 <= n <= m; other differentials vanish.
  std::vector<std::pair<int, int>> work;
  for (int m = 2; m <= top; ++m)
    for (int n = 2; n <= m; ++n) work.emplace_back(n, m);
  std::vector<std::size_t> ranks(work.size());
  detail::parallel_for(work.size(), detail::resolve_threads(options.threads), [&](std::size_t i) {
    auto [n, m] = work[i];
    ranks[i] = rank(build_differential(families[m][n], families[m][n - 1]), field);
  });
  auto rank_of = [&](int n, int m) -> std::size_t {
    if (n < 2 || n > m) return 0;
    auto it = std::find(work.begin(), work.end(), std::make_pair(n, m));
    return ranks[static_cast<std::size_t>(it - work.begin())];
  };

  for (int m = 0; m <= top; ++m) {
    for (int n = 0; n <= m; ++n) {
      std::size_t dim = homology(families[m][n].size(), rank_of(n, m), rank_of(n + 1, m));
      table.dims[{n, m}] = dim;
      if (n != m && dim > 0) table.witnesses.push_back({n, m, dim});
    }
  }
  table.koszul = table.witnesses.empty();
  return table;
}

std::string to_tsv(const TorTable& table, bool full) {
  std::ostringstream os;
  os << "n\tm\tdim\n";
  for (int m = 0; m <= table.max_length; ++m) {
    for (int n = 0; n <= m; ++n) {
      std::size_t dim = table.at(n, m);
      if (full || dim > 0) os << n << '\t' << m << '\t' << dim << '\n';
    }
  }
  os << "koszul\t" << (table.koszul ? "true" : "false") << '\n';
  return os.str();
}

std::vector<Vector> witness_cycles(const Poset& p, int n, int m, const FieldSpec& field) {
  check_degrees(n, m);
  p.require_graded();
  ChainFamily here = enumerate_chains(p, n, m);
  if (here.empty()) return {};
  // d_0 and d_1 vanish, so every chain is a cycle there.
  SparseMatrix d_out = n >= 2 ? build_differential(here, enumerate_chains(p, n - 1, m))
                              : SparseMatrix(0, here.size());
  std::vector<Vector> cycles = kernel_basis(d_out, field);

  Echelon boundaries(here.size(), field);
  Echelon seen(here.size(), field);
  SparseMatrix d_in = build_differential(enumerate_chains(p, n + 1, m), here);
  for (std::size_t c = 0; c < d_in.cols(); ++c) {
    Vector v(here.size(), 0);
    for (const auto& [r, value] : d_in.column(c)) v[r] = value;
    boundaries.insert(v);
    seen.insert(v);
  }
  std::vector<Vector> out;
  for (const auto& z : cycles)
    if (seen.insert(z)) out.push_back(boundaries.reduce(z));
  return out;
}

std::string format_chain_combination(const Poset& p, const ChainFamily& basis, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer mag = abs(v[i]);
    if (first) {
      if (v[i] < 0) os << "-";
    } else {
      os << (v[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << "·";
    const Chain& c = basis.chains[i];
    if (c.size() == 1) {
      os << "e(" << p.name(c[0]) << "," << p.name(c[0]) << ")";
      continue;
    }
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      if (k > 0) os << "⊗";
      os << "e(" << p.name(c[k]) << "," << p.name(c[k + 1]) << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

void check_frontier_module(const Poset& p, Index target, std::span<const Index> generators) {
  p.require_graded();
  if (target >= p.size()) throw InvalidTargetError("target index out of range");
  if (!p.is_maximal(target)) {
    throw InvalidTargetError("target '" + p.name(target) + "' is not a maximal element");
  }
  for (Index u : generators) {
    if (u >= p.size() || !p.less(u, target)) {
      throw InvalidGeneratorError("generator '" + (u < p.size() ? p.name(u) : std::string("?")) +
                                  "' is not strictly below the target");
    }
  }
}

}  // namespace

ChainFamily frontier_chains(const Poset& p, Index target, std::span<const Index> generators, int k,
                            int m) {
  check_degrees(k, m);
  check_frontier_module(p, target, generators);
  ChainFamily family{k, m, {}};
  for (auto& c : enumerate_chains(p, k, m).chains) {
    if (c.back() != target) continue;
    if (k > 0) {
      Index last_below = c[c.size() - 2];
      bool covered = std::any_of(generators.begin(), generators.end(),
                                 [&](Index u) { return p.leq(last_below, u); });
      if (!covered) continue;
    }
    family.chains.push_back(std::move(c));
  }
  return family;
}

std::size_t frontier_homology(const Poset& p, Index target, std::span<const Index> generators,
                              int k, int m, const FieldSpec& field) {
  ChainFamily here = frontier_chains(p, target, generators, k, m);
  if (here.empty()) return 0;
  std::size_t rank_out = 0;
  if (k >= 2) {
    rank_out = rank(build_differential(here, frontier_chains(p, target, generators, k - 1, m)), field);
  }
  std::size_t rank_in =
      rank(build_differential(frontier_chains(p, target, generators, k + 1, m), here), field);
  return homology(here.size(), rank_out, rank_in);
}

std::size_t module_tor(const Poset& p, Index target, std::span<const Index> generators, int n,
                       int m, const FieldSpec& field) {
  check_degrees(n, m);
  return frontier_homology(p, target, generators, n + 1, m, field);
}

}  // namespace koszulkit
