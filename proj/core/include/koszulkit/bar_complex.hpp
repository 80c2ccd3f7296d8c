#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/linalg.hpp"
#include "koszulkit/poset.hpp"

namespace koszulkit {

// x_0 < x_1 < ... < x_n; the basis tensor e_{x0,x1} ⊗ ... ⊗ e_{x(n-1),xn}.
using Chain = std::vector<Index>;

// Basis of the degree-n, internal-degree-m part of the normalized bar
// complex: every n-chain whose steps have total interval length m. A chain's
// vector of step lengths is its positive n-partition of m.
struct ChainFamily {
  int n = 0;
  int m = 0;
  // Lexicographic in element positions.
  std::vector<Chain> chains;

  std::size_t size() const { return chains.size(); }
  bool empty() const { return chains.empty(); }
  std::optional<std::size_t> find(const Chain& c) const;
};

struct ComputeOptions {
  // 0 = KOSZULKIT_THREADS, then hardware concurrency.
  unsigned threads = 0;
};

// Throws NotGradedError; InvalidParameterError for negative degrees.
ChainFamily enumerate_chains(const Poset& p, int n, int m);

// d_n : Ω_n(A,m) -> Ω_{n-1}(A,m). Deleting the interior point x_i carries
// sign (-1)^(i-1); d_1 is the zero map.
SparseMatrix build_differential(const Poset& p, int n, int m);
// Same formula between explicit bases; every face of a source chain must lie
// in target (the target spans a subcomplex).
SparseMatrix build_differential(const ChainFamily& source, const ChainFamily& target);

// dim T_{n,m}(A) = |P_{n,m}| - rank d_n - rank d_{n+1}.
std::size_t tor_dimension(const Poset& p, int n, int m, const FieldSpec& field);

struct TorCell {
  int n = 0;
  int m = 0;
  std::size_t dim = 0;
  friend bool operator==(const TorCell&, const TorCell&) = default;
};

struct TorTable {
  FieldSpec field;
  int max_length = 0;
  // Every cell with 0 <= n <= m <= max_length, zeros included.
  std::map<std::pair<int, int>, std::size_t> dims;
  bool koszul = true;
  // Off-diagonal nonzero cells, ascending (m, n).
  std::vector<TorCell> witnesses;

  // 0 outside the computed range.
  std::size_t at(int n, int m) const;
};

// Complete decision procedure: every T_{n,m} with m > max_length vanishes.
TorTable tor_table(const Poset& p, const FieldSpec& field, const ComputeOptions& options = {});

// "n\tm\tdim" header, nonzero cells (or all with full = true) ordered by
// (m, n), then "koszul\ttrue|false".
std::string to_tsv(const TorTable& table, bool full = false);

// One cycle per independent class of T_{n,m}, each reduced modulo the
// boundaries (pivot coordinates of the boundary echelon cleared) and
// normalized. Coordinates follow enumerate_chains(p, n, m).
std::vector<Vector> witness_cycles(const Poset& p, int n, int m, const FieldSpec& field);

// "e(s,x)⊗e(x,t) - e(s,y)⊗e(y,t)".
std::string format_chain_combination(const Poset& p, const ChainFamily& basis, const Vector& v);

// k-chains (x_0 < ... < x_(k-1) < t) of internal length m whose last element
// below t is <= some generator. k = 0 gives the single chain (t) at m = 0.
// These span the subcomplex computing Tor^B(S, M) for M = sum B e_{u,t},
// with B the incidence ring of p minus t.
ChainFamily frontier_chains(const Poset& p, Index target, std::span<const Index> generators, int k,
                            int m);
// Homology of that subcomplex in position k (k >= 0).
std::size_t frontier_homology(const Poset& p, Index target, std::span<const Index> generators,
                              int k, int m, const FieldSpec& field);
// dim Tor^B_{n,m}(S, M) = frontier_homology at k = n + 1. Throws
// InvalidTargetError when target is not maximal, InvalidGeneratorError when
// a generator is not strictly below target.
std::size_t module_tor(const Poset& p, Index target, std::span<const Index> generators, int n,
                       int m, const FieldSpec& field);

}  // namespace koszulkit
