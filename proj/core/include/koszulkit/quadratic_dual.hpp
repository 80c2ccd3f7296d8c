#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/bar_complex.hpp"
#include "koszulkit/linalg.hpp"
#include "koszulkit/poset.hpp"

namespace koszulkit {

// One endpoint block of A^!_n: the cover-n-chains from start to end and a
// basis of the block as coordinate vectors over them.
struct ShriekBlock {
  Index start = 0;
  Index end = 0;
  std::vector<Chain> chains;
  std::vector<Vector> basis;
};

// A^!_n as a direct sum of endpoint blocks (blocks ordered by (start, end)).
struct ShriekSpace {
  int n = 0;
  std::vector<ShriekBlock> blocks;

  std::size_t dim() const;
};

struct QuadraticData {
  FieldSpec field;
  // Basis of V = A_1.
  std::vector<Cover> cover_basis;
  // Cover-2-chains x ⋖ y ⋖ z, the coordinates of relation_basis.
  std::vector<Chain> cover_pairs;
  // Basis of W = Ker(mu_{1,1} : A_1 ⊗ A_1 -> A_2).
  std::vector<Vector> relation_basis;
  // A^!_n for 0 <= n <= max interval length.
  std::vector<ShriekSpace> shriek;
};

// Cover chains c_0 ⋖ c_1 ⋖ ... ⋖ c_n from start to end, lexicographic.
std::vector<Chain> cover_chains(const Poset& p, Index start, Index end, int n);

// A^!_n = intersection over positions 1..n-1 of V^(p-1) ⊗ W ⊗ V^(n-p-1),
// computed per endpoint block. n <= 1 gives the canonical bases.
ShriekSpace compute_shriek(const Poset& p, int n, const FieldSpec& field);

QuadraticData quadratic_data(const Poset& p, const FieldSpec& field);

// Internal degree q slice of the Koszul complex K_*(A) augmented by R.
// Position n >= 0 has basis pairs (interval e_{w,x} of length q - n, basis
// vector of A^!_n in a block starting at x). Ambient coordinates of position
// n are pairs (interval e_{w,x}, cover-n-chain starting at x).
struct KoszulSlice {
  int q = 0;
  // ambient_basis[n]: (w, cover chain) pairs.
  std::vector<std::vector<std::pair<Index, Chain>>> ambient_basis;
  // embedding[n]: columns are the basis of K_n(A)_q in ambient coordinates.
  std::vector<SparseMatrix> embedding;
  // eta[n] (n >= 1): ambient position n -> ambient position n-1,
  // e_{w,x} ⊗ e_{x,c1} ⊗ tail  |->  e_{w,c1} ⊗ tail.
  std::vector<SparseMatrix> eta;
  // Augmentation K_0(A)_q -> R_q (nonzero only for q = 0).
  SparseMatrix augmentation;

  // The differential of position n >= 1 as a map from K_n basis
  // coordinates to ambient coordinates of position n-1.
  SparseMatrix differential(int n) const;
};

KoszulSlice koszul_slice(const Poset& p, int q, const std::vector<ShriekSpace>& shriek,
                         const FieldSpec& field);

struct KoszulExactness {
  bool exact = true;
  // First (position, internal degree) with nonzero homology. Position -1
  // stands for the cokernel of the augmentation.
  std::optional<std::pair<int, int>> failure;
  std::size_t failure_dim = 0;
};

// Exactness of ... -> K_1(A) -> K_0(A) -> R -> 0 in every internal degree.
KoszulExactness koszul_complex_exact(const Poset& p, const FieldSpec& field);

struct PhiDimensionReport {
  bool agree = false;
  bool koszul = false;
  // (dim A^!_n, dim T_{n,n}) for 0 <= n <= max interval length.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Diagonal comparison of A^! with T(A); agree also requires the Tor verdict.
PhiDimensionReport phi_dimension_check(const Poset& p, const FieldSpec& field,
                                       const ComputeOptions& options = {});

// "n\tdim_shriek\tdim_tor_diag" rows, then "agree\ttrue|false".
std::string to_tsv(const PhiDimensionReport& report);

}  // namespace koszulkit
