#include "koszulkit/quadratic_dual.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "koszulkit/error.hpp"
#include "parallel.hpp"

namespace koszulkit {

std::size_t ShriekSpace::dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.basis.size();
  return d;
}

namespace {

void cover_walk(const Poset& p, std::optional<Index> end, int n, Chain& chain,
                std::vector<Chain>& out) {
  if (static_cast<int>(chain.size()) == n + 1) {
    if (!end || chain.back() == *end) out.push_back(chain);
    return;
  }
  for (Index y : p.upper_covers(chain.back())) {
    if (end && !p.leq(y, *end)) continue;
    chain.push_back(y);
    cover_walk(p, end, n, chain, out);
    chain.pop_back();
  }
}

// All cover-n-chains starting at x, lexicographic.
std::vector<Chain> cover_chains_from(const Poset& p, Index x, int n) {
  std::vector<Chain> out;
  Chain chain{x};
  cover_walk(p, std::nullopt, n, chain, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Contracting positions pos-1, pos, pos+1 of a cover chain into a single
// length-2 step: the map 1 ⊗ ... ⊗ mu_{1,1} ⊗ ... ⊗ 1.
SparseMatrix contraction_matrix(const std::vector<Chain>& chains, std::size_t pos) {
  std::vector<Chain> images;
  images.reserve(chains.size());
  for (const auto& c : chains) {
    Chain img = c;
    img.erase(img.begin() + static_cast<std::ptrdiff_t>(pos));
    images.push_back(std::move(img));
  }
  std::vector<Chain> rows = images;
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  SparseMatrix m(rows.size(), chains.size());
  for (std::size_t col = 0; col < chains.size(); ++col) {
    auto it = std::lower_bound(rows.begin(), rows.end(), images[col]);
    m.add(static_cast<std::size_t>(it - rows.begin()), col, 1);
  }
  return m;
}

}  // namespace

std::vector<Chain> cover_chains(const Poset& p, Index start, Index end, int n) {
  if (n < 0) throw InvalidParameterError("chain length must be nonnegative");
  std::vector<Chain> out;
  Chain chain{start};
  cover_walk(p, end, n, chain, out);
  std::sort(out.begin(), out.end());
  return out;
}

ShriekSpace compute_shriek(const Poset& p, int n, const FieldSpec& field) {
  if (n < 0) throw InvalidParameterError("degree must be nonnegative");
  p.require_graded();
  ShriekSpace space;
  space.n = n;
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y) || p.length(x, y) != n) continue;
      ShriekBlock block;
      block.start = x;
      block.end = y;
      block.chains = cover_chains(p, x, y, n);
      if (n <= 1) {
        block.basis.assign(1, Vector{1});
      } else {
        std::vector<std::vector<Vector>> kernels;
        for (int pos = 1; pos <= n - 1; ++pos) {
          kernels.push_back(
              kernel_basis(contraction_matrix(block.chains, static_cast<std::size_t>(pos)), field));
        }
        block.basis = intersect_subspaces(kernels, block.chains.size(), field);
      }
      if (!block.basis.empty()) space.blocks.push_back(std::move(block));
    }
  }
  return space;
}

QuadraticData quadratic_data(const Poset& p, const FieldSpec& field) {
  p.require_graded();
  QuadraticData data;
  data.field = field;
  data.cover_basis = p.covers();
  for (Index x = 0; x < p.size(); ++x)
    for (auto& c : cover_chains_from(p, x, 2)) data.cover_pairs.push_back(std::move(c));
  std::sort(data.cover_pairs.begin(), data.cover_pairs.end());
  data.relation_basis = kernel_basis(contraction_matrix(data.cover_pairs, 1), field);
  for (int n = 0; n <= p.max_interval_length(); ++n)
    data.shriek.push_back(compute_shriek(p, n, field));
  return data;
}

SparseMatrix KoszulSlice::differential(int n) const {
  if (n < 1 || n >= static_cast<int>(embedding.size())) {
    throw InvalidParameterError("no Koszul differential at this position");
  }
  return eta[n] * embedding[n];
}

KoszulSlice koszul_slice(const Poset& p, int q, const std::vector<ShriekSpace>& shriek,
                         const FieldSpec& field) {
  (void)field;
  p.require_graded();
  KoszulSlice slice;
  slice.q = q;
  const int positions = q + 1;
  slice.ambient_basis.resize(positions);
  slice.embedding.resize(positions);
  slice.eta.resize(positions);

  std::vector<std::map<std::pair<Index, Chain>, std::size_t>> lookup(positions);
  for (int n = 0; n < positions; ++n) {
    auto& basis = slice.ambient_basis[n];
    for (Index w = 0; w < p.size(); ++w) {
      for (Index x = 0; x < p.size(); ++x) {
        if (!p.leq(w, x) || p.length(w, x) != q - n) continue;
        for (auto& c : cover_chains_from(p, x, n)) basis.emplace_back(w, std::move(c));
      }
    }
    std::sort(basis.begin(), basis.end());
    for (std::size_t i = 0; i < basis.size(); ++i) lookup[n][basis[i]] = i;
  }

  for (int n = 0; n < positions; ++n) {
    const auto& ambient = slice.ambient_basis[n];
    std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;
    if (n < static_cast<int>(shriek.size())) {
      for (Index w = 0; w < p.size(); ++w) {
        for (Index x = 0; x < p.size(); ++x) {
          if (!p.leq(w, x) || p.length(w, x) != q - n) continue;
          for (const auto& block : shriek[n].blocks) {
            if (block.start != x) continue;
            for (const auto& b : block.basis) {
              std::vector<std::pair<std::size_t, Integer>> col;
              for (std::size_t j = 0; j < block.chains.size(); ++j)
                if (b[j] != 0) col.emplace_back(lookup[n].at({w, block.chains[j]}), b[j]);
              columns.push_back(std::move(col));
            }
          }
        }
      }
    }
    SparseMatrix emb(ambient.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [r, v] : columns[c]) emb.add(r, c, v);
    slice.embedding[n] = std::move(emb);

    if (n >= 1) {
      SparseMatrix eta(slice.ambient_basis[n - 1].size(), ambient.size());
      for (std::size_t i = 0; i < ambient.size(); ++i) {
        const auto& [w, chain] = ambient[i];
        Chain tail(chain.begin() + 1, chain.end());
        eta.add(lookup[n - 1].at({w, tail}), i, 1);
      }
      slice.eta[n] = std::move(eta);
    }
  }

  // Augmentation: e_{x,x} ⊗ 1 -> e_x in R; everything of positive degree maps to 0.
  const std::size_t k0 = slice.embedding[0].cols();
  slice.augmentation = SparseMatrix(q == 0 ? p.size() : 0, k0);
  if (q == 0) {
    for (std::size_t i = 0; i < slice.ambient_basis[0].size(); ++i)
      slice.augmentation.add(slice.ambient_basis[0][i].first, i, 1);
  }

#ifndef NDEBUG
  // eta regroups A^!_n into A_1 ⊗ A^!_{n-1}: the image of each differential
  // must stay inside the span of K_{n-1}.
  for (int n = 1; n < positions; ++n) {
    SparseMatrix both = slice.embedding[n - 1];
    both.append_columns(slice.differential(n));
    if (rank(both, field) != rank(slice.embedding[n - 1], field)) {
      throw std::logic_error("Koszul differential leaves K_{n-1}");
    }
  }
#endif
  return slice;
}

KoszulExactness koszul_complex_exact(const Poset& p, const FieldSpec& field) {
  p.require_graded();
  const int top = p.max_interval_length();
  std::vector<ShriekSpace> shriek;
  for (int n = 0; n <= top; ++n) shriek.push_back(compute_shriek(p, n, field));

  // homology[q][n + 1] for positions -1..q.
  std::vector<std::vector<std::size_t>> homology(top + 1);
  detail::parallel_for(static_cast<std::size_t>(top + 1), detail::resolve_threads(0),
                       [&](std::size_t qi) {
                         const int q = static_cast<int>(qi);
                         KoszulSlice slice = koszul_slice(p, q, shriek, field);
                         std::vector<std::size_t> ranks(q + 2, 0);  // ranks[n]: out of position n
                         ranks[0] = rank(slice.augmentation, field);
                         for (int n = 1; n <= q; ++n) ranks[n] = rank(slice.differential(n), field);
                         auto& h = homology[qi];
                         h.push_back(slice.augmentation.rows() - ranks[0]);
                         for (int n = 0; n <= q; ++n) {
                           std::size_t dim = slice.embedding[n].cols();
                           h.push_back(dim - ranks[n] - ranks[n + 1]);
                         }
                       });

  KoszulExactness report;
  for (int q = 0; q <= top && report.exact; ++q) {
    for (std::size_t i = 0; i < homology[q].size(); ++i) {
      if (homology[q][i] != 0) {
        report.exact = false;
        report.failure = std::make_pair(static_cast<int>(i) - 1, q);
        report.failure_dim = homology[q][i];
        break;
      }
    }
  }
  return report;
}

PhiDimensionReport phi_dimension_check(const Poset& p, const FieldSpec& field,
                                       const ComputeOptions& options) {
  TorTable table = tor_table(p, field, options);
  PhiDimensionReport report;
  report.koszul = table.koszul;
  bool equal = true;
  for (int n = 0; n <= table.max_length; ++n) {
    std::size_t shriek = compute_shriek(p, n, field).dim();
    std::size_t diag = table.at(n, n);
    report.pairs.emplace_back(shriek, diag);
    equal = equal && shriek == diag;
  }
  report.agree = equal && table.koszul;
  return report;
}

std::string to_tsv(const PhiDimensionReport& report) {
  std::ostringstream os;
  os << "n\tdim_shriek\tdim_tor_diag\n";
  for (std::size_t n = 0; n < report.pairs.size(); ++n)
    os << n << '\t' << report.pairs[n].first << '\t' << report.pairs[n].second << '\n';
  os << "agree\t" << (report.agree ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace koszulkit
