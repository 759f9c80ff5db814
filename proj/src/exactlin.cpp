#include "ttba/exactlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ttba {

namespace {

struct IntEntry {
  std::size_t col;
  mpz_class value;
};
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators and divides out the content.
IntRow to_int_row(const std::vector<SparseEntry>& row) {
  mpz_class l = 1;
  for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.den().get_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    mpz_class v = e.value.num() * (l / e.value.den());
    out.push_back({e.col, std::move(v)});
  }
  make_primitive(out);
  return out;
}

const mpz_class* coefficient(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntEntry& e, std::size_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return nullptr;
  return &it->value;
}

// target <- (p/g)*target - (t/g)*pivot where p is pivot's coefficient at col
// and t target's; the result has no entry at col.
void eliminate(IntRow& target, const IntRow& pivot, std::size_t col, const mpz_class& p) {
  const mpz_class* tp = coefficient(target, col);
  if (!tp) return;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), tp->get_mpz_t());
  mpz_class ps = p / g;
  mpz_class ts = *tp / g;
  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto a = target.begin();
  auto b = pivot.begin();
  mpz_class v;
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->col < b->col)) {
      v = ps * a->value;
      out.push_back({a->col, v});
      ++a;
    } else if (a == target.end() || b->col < a->col) {
      v = -ts * b->value;
      out.push_back({b->col, v});
      ++b;
    } else {
      v = ps * a->value - ts * b->value;
      if (v != 0) out.push_back({a->col, v});
      ++a;
      ++b;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

// Incremental row echelon form keyed by leading column.
class Echelon {
public:
  explicit Echelon(std::size_t cols) : pivot_of_(cols + 1, npos) {}

  bool insert(IntRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().col;
      const std::size_t idx = pivot_of_[lead];
      if (idx == npos) {
        pivot_of_[lead] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
      }
      eliminate(row, rows_[idx], lead, rows_[idx].front().value);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(std::size_t col) const { return pivot_of_[col] != npos; }

  // Back-substitution to reduced form; returns rows sorted by leading column,
  // scaled to leading coefficient 1.
  std::vector<std::vector<SparseEntry>> reduced() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return rows_[x].front().col > rows_[y].front().col;
    });
    for (std::size_t idx : order) {
      IntRow& r = rows_[idx];
      std::vector<std::size_t> targets;
      for (std::size_t k = 1; k < r.size(); ++k)
        if (pivot_of_[r[k].col] != npos) targets.push_back(r[k].col);
      for (std::size_t c : targets) {
        const IntRow& p = rows_[pivot_of_[c]];
        eliminate(r, p, c, p.front().value);
      }
    }
    std::reverse(order.begin(), order.end());
    std::vector<std::vector<SparseEntry>> out;
    out.reserve(order.size());
    for (std::size_t idx : order) {
      const IntRow& r = rows_[idx];
      const mpz_class& lead = r.front().value;
      std::vector<SparseEntry> row;
      row.reserve(r.size());
      for (const auto& e : r) row.push_back({e.col, Rational(e.value, lead)});
      out.push_back(std::move(row));
    }
    return out;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_of_;
  std::vector<IntRow> rows_;
};

std::vector<std::vector<SparseEntry>> reduced_rows(const RatMatrix& m) {
  Echelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) ech.insert(to_int_row(m.row(r)));
  return ech.reduced();
}

Vector dense_row(const std::vector<SparseEntry>& row, std::size_t n) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  for (const auto& e : row)
    if (e.col < n) v(static_cast<Eigen::Index>(e.col)) = e.value;
  return v;
}

}  // namespace

RatMatrix RatMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size();) {
    const std::size_t r = entries[i].row, c = entries[i].col;
    if (r >= rows || c >= cols) throw std::out_of_range("triplet index out of range");
    Rational sum = entries[i].value;
    std::size_t j = i + 1;
    for (; j < entries.size() && entries[j].row == r && entries[j].col == c; ++j) sum += entries[j].value;
    if (!sum.is_zero()) m.rows_[r].push_back({c, std::move(sum)});
    i = j;
  }
  return m;
}

RatMatrix RatMatrix::from_dense(const Matrix& d) {
  RatMatrix m(static_cast<std::size_t>(d.rows()), static_cast<std::size_t>(d.cols()));
  for (Eigen::Index r = 0; r < d.rows(); ++r)
    for (Eigen::Index c = 0; c < d.cols(); ++c)
      if (!d(r, c).is_zero()) m.rows_[r].push_back({static_cast<std::size_t>(c), d(r, c)});
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Rational(1)});
  return m;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : Rational(0);
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (v.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    row.insert(it, {c, v});
  }
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({r, e.value});
  return t;
}

Matrix RatMatrix::to_dense() const {
  Matrix d = Matrix::Zero(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col)) = e.value;
  return d;
}

Vector RatMatrix::operator*(const Vector& v) const {
  if (static_cast<std::size_t>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(rows()));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational acc = 0;
    for (const auto& e : rows_[r]) {
      const Rational& x = v(static_cast<Eigen::Index>(e.col));
      if (!x.is_zero()) acc += e.value * x;
    }
    out(static_cast<Eigen::Index>(r)) = acc;
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& ea : a.row(r))
      for (const auto& eb : b.row(ea.col)) out.push_back({r, eb.col, ea.value * eb.value});
  return RatMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

std::size_t rank(const RatMatrix& m) {
  // rank(M) = rank(M^T); eliminate over the shorter side.
  if (m.rows() > m.cols()) return rank(m.transpose());
  Echelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) ech.insert(to_int_row(m.row(r)));
  return ech.rank();
}

std::size_t rank(const Matrix& m) { return rank(RatMatrix::from_dense(m)); }

std::vector<Vector> kernel_basis(const RatMatrix& m) {
  const auto rows = reduced_rows(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rows) is_pivot[r.front().col] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(f)) = 1;
    for (const auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), f,
                                 [](const SparseEntry& e, std::size_t c) { return e.col < c; });
      if (it != r.end() && it->col == f) v(static_cast<Eigen::Index>(r.front().col)) = -it->value;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_basis(const Matrix& m) { return kernel_basis(RatMatrix::from_dense(m)); }

std::optional<Vector> solve(const RatMatrix& m, const Vector& b) {
  if (static_cast<std::size_t>(b.size()) != m.rows()) throw std::invalid_argument("right-hand side length differs from row count");
  const std::size_t n = m.cols();
  Echelon ech(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<SparseEntry> row = m.row(r);
    if (!b(static_cast<Eigen::Index>(r)).is_zero()) row.push_back({n, b(static_cast<Eigen::Index>(r))});
    if (!row.empty()) ech.insert(to_int_row(row));
  }
  if (ech.has_pivot(n)) return std::nullopt;
  Vector x = Vector::Zero(static_cast<Eigen::Index>(n));
  for (const auto& r : ech.reduced()) {
    if (r.back().col == n) x(static_cast<Eigen::Index>(r.front().col)) = r.back().value;
  }
  return x;
}

std::vector<Vector> row_space_basis(const RatMatrix& m) {
  std::vector<Vector> out;
  for (const auto& r : reduced_rows(m)) out.push_back(dense_row(r, m.cols()));
  return out;
}

RatMatrix rows_matrix(const std::vector<Vector>& vectors, std::size_t ambient) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<std::size_t>(vectors[i].size()) != ambient) throw std::invalid_argument("vector length differs from ambient dimension");
    for (std::size_t j = 0; j < ambient; ++j)
      if (!vectors[i](static_cast<Eigen::Index>(j)).is_zero()) t.push_back({i, j, vectors[i](static_cast<Eigen::Index>(j))});
  }
  return RatMatrix::from_triplets(vectors.size(), ambient, std::move(t));
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient) {
  return row_space_basis(rows_matrix(vectors, ambient));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(m.rows());
  Echelon ech(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<SparseEntry> row;
    for (std::size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero()) row.push_back({c, m(r, c)});
    row.push_back({n + r, Rational(1)});
    ech.insert(to_int_row(row));
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!ech.has_pivot(c)) return std::nullopt;
  Matrix inv = Matrix::Zero(m.rows(), m.cols());
  const auto rows = ech.reduced();
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& e : rows[r])
      if (e.col >= n) inv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col - n)) = e.value;
  return inv;
}

Matrix identity_matrix(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(i)) = 1;
  return v;
}

bool is_zero(const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

SubspaceQuotient::SubspaceQuotient(std::size_t ambient, const std::vector<Vector>& spanning)
    : ambient_(ambient), basis_(span_basis(spanning, ambient)) {
  std::vector<bool> is_pivot(ambient, false);
  for (const auto& b : basis_) {
    for (std::size_t i = 0; i < ambient; ++i) {
      if (!b(static_cast<Eigen::Index>(i)).is_zero()) {
        pivots_.push_back(i);
        is_pivot[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < ambient; ++i)
    if (!is_pivot[i]) complement_.push_back(i);
}

Vector SubspaceQuotient::reduce(const Vector& v) const {
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational c = r(static_cast<Eigen::Index>(pivots_[k]));
    if (!c.is_zero()) r -= basis_[k] * c;
  }
  return r;
}

Vector SubspaceQuotient::project(const Vector& v) const {
  const Vector r = reduce(v);
  Vector q(static_cast<Eigen::Index>(complement_.size()));
  for (std::size_t k = 0; k < complement_.size(); ++k) q(static_cast<Eigen::Index>(k)) = r(static_cast<Eigen::Index>(complement_[k]));
  return q;
}

Vector SubspaceQuotient::lift(const Vector& q) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(ambient_));
  for (std::size_t k = 0; k < complement_.size(); ++k) v(static_cast<Eigen::Index>(complement_[k])) = q(static_cast<Eigen::Index>(k));
  return v;
}

bool SubspaceQuotient::contains(const Vector& v) const {
  const Vector r = reduce(v);
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (!r(i).is_zero()) return false;
  return true;
}

}  // namespace ttba
