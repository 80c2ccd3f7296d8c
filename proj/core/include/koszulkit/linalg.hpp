#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koszulkit {

using Integer = mpz_class;

// Dense coordinate vector. Over the rationals a subspace is spanned by
// primitive integer vectors (content 1, first nonzero entry positive); over
// F_p entries are canonical residues in [0, p) with first nonzero entry 1.
using Vector = std::vector<Integer>;

inline constexpr std::uint32_t kDefaultPrime = 32003;

struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t prime = 0;

  static FieldSpec rationals() { return {}; }
  // Throws InvalidParameterError unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p = kDefaultPrime);
  // "q" or "fp:<prime>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return kind == Kind::rationals; }
  // "Q" or "F_<p>".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// Column-major sparse integer matrix; stored entries are never zero.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Integer>;
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  // Accumulates into (r, c); an entry that cancels to zero is removed.
  void add(std::size_t r, std::size_t c, const Integer& value);
  Integer at(std::size_t r, std::size_t c) const;
  // Entries sorted by row.
  const Column& column(std::size_t c) const { return columns_[c]; }

  Vector apply(const Vector& v) const;
  SparseMatrix transpose() const;
  // Appends the columns of other (same row count).
  void append_columns(const SparseMatrix& other);

  // "rows cols" header, then one "i j value" line per entry in column order.
  std::string to_triplets() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> columns_;
};

// Incrementally built echelon basis of a subspace of k^dim. Pivots follow the
// leftmost-nonzero rule, so results depend only on insertion order.
class Echelon {
 public:
  Echelon(std::size_t dim, FieldSpec field);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  std::size_t dim() const;
  std::size_t rank() const;
  const FieldSpec& field() const { return field_; }

  // True when v was independent of the current span (and is now part of it).
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  // Representative of v modulo the span with every pivot coordinate cleared,
  // normalized as described for Vector. Zero iff v lies in the span.
  Vector reduce(const Vector& v) const;

 private:
  struct Impl;
  FieldSpec field_;
  std::unique_ptr<Impl> impl_;
};

std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

// cols - rank vectors spanning the null space, one per non-pivot column of
// the reduced row echelon form (ascending), with a 1-normalized free entry.
std::vector<Vector> kernel_basis(const SparseMatrix& m, const FieldSpec& field);

// Basis of the intersection of the spans. Each inner list is a basis (or
// spanning set) of one subspace of k^ambient_dim; an empty inner list is the
// zero subspace. Throws ShapeError on a length mismatch.
std::vector<Vector> intersect_subspaces(const std::vector<std::vector<Vector>>& bases,
                                        std::size_t ambient_dim, const FieldSpec& field);

// Canonical form of a vector over the field (see Vector).
Vector normalize(Vector v, const FieldSpec& field);

}  // namespace koszulkit
