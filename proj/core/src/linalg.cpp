#include "koszulkit/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <type_traits>
#include <variant>

#include "koszulkit/error.hpp"

namespace koszulkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidParameterError("field modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  FieldSpec f;
  f.kind = Kind::prime_field;
  f.prime = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime_field(p);
    }
  }
  throw InvalidParameterError("field must be \"q\" or \"fp:<prime>\", got \"" +
                              std::string(text) + "\"");
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(prime);
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.columns_[c].emplace_back(static_cast<std::uint32_t>(r), rows[r][c]);
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  if (value == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  } else {
    col.emplace(it, static_cast<std::uint32_t>(r), value);
  }
}

Integer SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : Integer(0);
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("vector length does not match column count");
  Vector out(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (const auto& [r, value] : columns_[c]) out[r] += value * v[c];
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, value] : columns_[c])
      t.columns_[r].emplace_back(static_cast<std::uint32_t>(c), value);
  return t;
}

void SparseMatrix::append_columns(const SparseMatrix& other) {
  if (other.rows_ != rows_) throw ShapeError("row counts differ");
  columns_.insert(columns_.end(), other.columns_.begin(), other.columns_.end());
  cols_ += other.cols_;
}

std::string SparseMatrix::to_triplets() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, value] : columns_[c]) os << r << ' ' << c << ' ' << value << '\n';
  return os.str();
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("inner dimensions differ");
  SparseMatrix out(a.rows_, b.cols_);
  for (std::size_t c = 0; c < b.cols_; ++c)
    for (const auto& [k, bv] : b.columns_[c])
      for (const auto& [r, av] : a.columns_[k]) out.add(r, c, av * bv);
  return out;
}

// ---------------------------------------------------------------------------
// Elimination kernels. Rows are sparse, sorted by column.

namespace {

// Fraction-free integer arithmetic: rows are kept primitive with a positive
// leading entry, so they stand for rational rows up to scale.
struct IntegerOps {
  using Value = mpz_class;

  Value from(const Integer& x) const { return x; }
  Integer to_integer(const Value& x) const { return x; }

  static void make_primitive(std::vector<std::pair<std::uint32_t, Value>>& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    bool flip = row.front().second < 0;
    if (g != 1 || flip) {
      if (flip) g = -g;
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  void normalize(std::vector<std::pair<std::uint32_t, Value>>& row) const { make_primitive(row); }

  // target <- a * target - b * source, with (a, b) the lead pair divided by
  // their gcd so growth stays bounded.
  void eliminate(std::vector<std::pair<std::uint32_t, Value>>& target, const Value& target_coeff,
                 const std::vector<std::pair<std::uint32_t, Value>>& source,
                 const Value& source_coeff) const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), source_coeff.get_mpz_t(), target_coeff.get_mpz_t());
    mpz_class a = source_coeff / g;
    mpz_class b = target_coeff / g;
    std::vector<std::pair<std::uint32_t, Value>> out;
    out.reserve(target.size() + source.size());
    auto i = target.begin();
    auto j = source.begin();
    while (i != target.end() || j != source.end()) {
      if (j == source.end() || (i != target.end() && i->first < j->first)) {
        out.emplace_back(i->first, a * i->second);
        ++i;
      } else if (i == target.end() || j->first < i->first) {
        out.emplace_back(j->first, -b * j->second);
        ++j;
      } else {
        mpz_class v = a * i->second - b * j->second;
        if (v != 0) out.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    target = std::move(out);
    make_primitive(target);
  }
};

struct ModularOps {
  using Value = std::int64_t;
  std::int64_t p;

  Value from(const Integer& x) const {
    return static_cast<Value>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
  }
  Integer to_integer(const Value& x) const { return Integer(static_cast<long>(x)); }

  Value inverse(Value a) const {
    // Fermat: a^(p-2).
    Value result = 1, base = a % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }

  void normalize(std::vector<std::pair<std::uint32_t, Value>>& row) const {
    if (row.empty() || row.front().second == 1) return;
    Value inv = inverse(row.front().second);
    for (auto& [c, v] : row) v = v * inv % p;
  }

  // target <- target - (target_coeff / source_coeff) * source.
  void eliminate(std::vector<std::pair<std::uint32_t, Value>>& target, const Value& target_coeff,
                 const std::vector<std::pair<std::uint32_t, Value>>& source,
                 const Value& source_coeff) const {
    Value factor = target_coeff * inverse(source_coeff) % p;
    std::vector<std::pair<std::uint32_t, Value>> out;
    out.reserve(target.size() + source.size());
    auto i = target.begin();
    auto j = source.begin();
    while (i != target.end() || j != source.end()) {
      if (j == source.end() || (i != target.end() && i->first < j->first)) {
        out.push_back(*i);
        ++i;
      } else if (i == target.end() || j->first < i->first) {
        out.emplace_back(j->first, (p - factor * j->second % p) % p);
        ++j;
      } else {
        Value v = ((i->second - factor * j->second) % p + p) % p;
        if (v != 0) out.emplace_back(i->first, v);
        ++i;
        ++j;
      }
    }
    target = std::move(out);
  }
};

template <class Ops>
class BasicEchelon {
 public:
  using Value = typename Ops::Value;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  BasicEchelon(std::size_t dim, Ops ops) : ops_(ops), pivot_row_(dim, -1) {}

  std::size_t dim() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }

  Row to_row(const Vector& v) const {
    if (v.size() != dim()) throw ShapeError("vector length does not match ambient dimension");
    Row row;
    for (std::size_t c = 0; c < v.size(); ++c) {
      Value x = ops_.from(v[c]);
      if (x != 0) row.emplace_back(static_cast<std::uint32_t>(c), std::move(x));
    }
    return row;
  }

  Vector to_vector(Row row) const {
    ops_.normalize(row);
    Vector v(dim(), 0);
    for (auto& [c, x] : row) v[c] = ops_.to_integer(x);
    return v;
  }

  bool insert_row(Row row) {
    while (!row.empty()) {
      auto c = row.front().first;
      int r = pivot_row_[c];
      if (r < 0) break;
      Value lead = row.front().second;
      ops_.eliminate(row, lead, rows_[r], rows_[r].front().second);
    }
    if (row.empty()) return false;
    ops_.normalize(row);
    pivot_row_[row.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  // Clears every pivot coordinate, scanning columns left to right; each
  // elimination only touches columns to the right of the cleared one.
  Row reduce_row(Row row) const {
    std::uint32_t next = 0;
    while (true) {
      auto it = std::find_if(row.begin(), row.end(), [&](const auto& e) {
        return e.first >= next && pivot_row_[e.first] >= 0;
      });
      if (it == row.end()) break;
      const Row& src = rows_[pivot_row_[it->first]];
      next = it->first + 1;
      Value coeff = it->second;
      ops_.eliminate(row, coeff, src, src.front().second);
    }
    return row;
  }

  // Reduced row echelon rows, sorted by pivot column.
  std::vector<Row> reduced_rows() const {
    std::vector<std::uint32_t> pivots;
    for (std::uint32_t c = 0; c < dim(); ++c)
      if (pivot_row_[c] >= 0) pivots.push_back(c);
    std::vector<Row> out(pivots.size());
    BasicEchelon done(dim(), ops_);
    for (std::size_t k = pivots.size(); k-- > 0;) {
      // The leading column has no pivot in `done` yet, so only later pivot
      // columns are cleared.
      Row full = done.reduce_row(rows_[pivot_row_[pivots[k]]]);
      ops_.normalize(full);
      done.pivot_row_[pivots[k]] = static_cast<int>(done.rows_.size());
      done.rows_.push_back(full);
      out[k] = std::move(full);
    }
    return out;
  }

  const Ops& ops() const { return ops_; }

 private:
  Ops ops_;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
};

template <class Ops>
std::size_t rank_with(const SparseMatrix& m, Ops ops) {
  // Columns and rows give the same rank; columns are already stored sparse.
  BasicEchelon<Ops> ech(m.rows(), ops);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    typename BasicEchelon<Ops>::Row row;
    for (const auto& [r, v] : m.column(c)) {
      auto x = ops.from(v);
      if (x != 0) row.emplace_back(r, std::move(x));
    }
    ech.insert_row(std::move(row));
    if (ech.rank() == std::min(m.rows(), m.cols())) break;
  }
  return ech.rank();
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

template <class Ops>
std::vector<Vector> kernel_with(const SparseMatrix& m, Ops ops) {
  using Row = typename BasicEchelon<Ops>::Row;
  SparseMatrix t = m.transpose();
  BasicEchelon<Ops> ech(m.cols(), ops);
  for (std::size_t r = 0; r < t.cols(); ++r) {
    Row row;
    for (const auto& [c, v] : t.column(r)) {
      auto x = ops.from(v);
      if (x != 0) row.emplace_back(c, std::move(x));
    }
    ech.insert_row(std::move(row));
  }
  std::vector<Row> rref = ech.reduced_rows();
  std::vector<int> is_pivot(m.cols(), 0);
  for (const auto& row : rref) is_pivot[row.front().first] = 1;

  std::vector<Vector> basis;
  for (std::uint32_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    // Rows with a nonzero entry in the free column f.
    std::vector<std::pair<const Row*, typename Ops::Value>> hits;
    for (const auto& row : rref) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it != row.end() && it->first == f) hits.emplace_back(&row, it->second);
    }
    Vector v(m.cols(), 0);
    if constexpr (std::is_same_v<Ops, IntegerOps>) {
      mpz_class scale = 1;
      for (const auto& [row, a] : hits) scale = lcm(scale, row->front().second);
      v[f] = scale;
      for (const auto& [row, a] : hits) v[row->front().first] = -a * scale / row->front().second;
    } else {
      v[f] = 1;
      for (const auto& [row, a] : hits)
        v[row->front().first] = (ops.p - a * ops.inverse(row->front().second) % ops.p) % ops.p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

// ---------------------------------------------------------------------------
// Echelon (type-erased over the field).

struct Echelon::Impl {
  std::variant<BasicEchelon<IntegerOps>, BasicEchelon<ModularOps>> ech;
};

Echelon::Echelon(std::size_t dim, FieldSpec field) : field_(field) {
  if (field.is_rational()) {
    impl_.reset(new Impl{BasicEchelon<IntegerOps>(dim, IntegerOps{})});
  } else {
    impl_.reset(new Impl{BasicEchelon<ModularOps>(dim, ModularOps{field.prime})});
  }
}

Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

std::size_t Echelon::dim() const {
  return std::visit([](const auto& e) { return e.dim(); }, impl_->ech);
}

std::size_t Echelon::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->ech);
}

bool Echelon::insert(const Vector& v) {
  return std::visit([&](auto& e) { return e.insert_row(e.to_row(v)); }, impl_->ech);
}

bool Echelon::contains(const Vector& v) const {
  return std::visit([&](const auto& e) { return e.reduce_row(e.to_row(v)).empty(); }, impl_->ech);
}

Vector Echelon::reduce(const Vector& v) const {
  return std::visit([&](const auto& e) { return e.to_vector(e.reduce_row(e.to_row(v))); },
                    impl_->ech);
}

// ---------------------------------------------------------------------------

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
  if (field.is_rational()) return rank_with(m, IntegerOps{});
  return rank_with(m, ModularOps{field.prime});
}

std::vector<Vector> kernel_basis(const SparseMatrix& m, const FieldSpec& field) {
  std::vector<Vector> basis = field.is_rational() ? kernel_with(m, IntegerOps{})
                                                  : kernel_with(m, ModularOps{field.prime});
  for (auto& v : basis) v = normalize(std::move(v), field);
  return basis;
}

std::vector<Vector> intersect_subspaces(const std::vector<std::vector<Vector>>& bases,
                                        std::size_t ambient_dim, const FieldSpec& field) {
  // U_1 ∩ ... ∩ U_k is the common null space of all the annihilators U_i^⊥.
  std::vector<Vector> annihilators;
  for (const auto& basis : bases) {
    for (const auto& v : basis) {
      if (v.size() != ambient_dim) {
        throw ShapeError("basis vector of length " + std::to_string(v.size()) +
                         " in ambient dimension " + std::to_string(ambient_dim));
      }
    }
    auto ann = kernel_basis(SparseMatrix::from_rows(basis, ambient_dim), field);
    annihilators.insert(annihilators.end(), std::make_move_iterator(ann.begin()),
                        std::make_move_iterator(ann.end()));
  }
  return kernel_basis(SparseMatrix::from_rows(annihilators, ambient_dim), field);
}

Vector normalize(Vector v, const FieldSpec& field) {
  if (field.is_rational()) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
  }
  ModularOps ops{field.prime};
  for (auto& x : v) x = Integer(static_cast<long>(ops.from(x)));
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (first == v.end()) return v;
  std::int64_t inv = ops.inverse(first->get_si());
  for (auto& x : v) x = Integer(static_cast<long>(x.get_si() * inv % ops.p));
  return v;
}

}  // namespace koszulkit
