#include "lcalc/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::column(const IntVector& entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::column_vector(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hstack: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
  if (cols_ != other.cols_) throw std::invalid_argument("vstack: column count mismatch");
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(rows_ + r, c) = other(r, c);
  return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("IntMatrix::block");
  IntMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += q * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += q * (*this)(r, j);
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector: dimension mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& s = a(r, k);
      if (s == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += s * b(k, c);
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix m = a;
  for (auto& v : m.data_) v *= s;
  return m;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntVector SmithDecomposition::invariants() const {
  IntVector out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(diagonal(i, i));
  return out;
}

Integer reduce_mod(const Integer& a, const Integer& d) {
  if (d == 0) return a;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  if (r < 0) r += abs(d);
  return r;
}

namespace {

// Row and column operations are mirrored into U, U^-1, V, V^-1 so the
// identity U * M * V == S holds after every step.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : s_(m),
        u_(IntMatrix::identity(m.rows())),
        uinv_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        vinv_(IntMatrix::identity(m.cols())) {}

  SmithDecomposition run() {
    const std::size_t limit = std::min(s_.rows(), s_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!move_smallest_to(t, t, /*whole_block=*/true)) break;
      reduce_pivot(t);
      if (s_(t, t) < 0) row_negate(t);
    }
    SmithDecomposition out{u_, uinv_, s_, v_, vinv_, 0};
    for (std::size_t i = 0; i < limit; ++i)
      if (s_(i, i) != 0) ++out.rank;
    return out;
  }

 private:
  void row_add(std::size_t i, std::size_t j, const Integer& q) {
    s_.add_row_multiple(i, j, q);
    u_.add_row_multiple(i, j, q);
    uinv_.add_col_multiple(j, i, -q);
  }
  void row_swap(std::size_t i, std::size_t j) {
    s_.swap_rows(i, j);
    u_.swap_rows(i, j);
    uinv_.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    s_.negate_row(i);
    u_.negate_row(i);
    uinv_.negate_col(i);
  }
  void col_add(std::size_t i, std::size_t j, const Integer& q) {
    s_.add_col_multiple(i, j, q);
    v_.add_col_multiple(i, j, q);
    vinv_.add_row_multiple(j, i, -q);
  }
  void col_swap(std::size_t i, std::size_t j) {
    s_.swap_cols(i, j);
    v_.swap_cols(i, j);
    vinv_.swap_rows(i, j);
  }

  // Smallest nonzero |entry| in the trailing block (whole_block) or in
  // row t / column t only; moved to (t, t).
  bool move_smallest_to(std::size_t t, std::size_t, bool whole_block) {
    bool found = false;
    std::size_t br = t, bc = t;
    Integer best;
    auto consider = [&](std::size_t r, std::size_t c) {
      const Integer& v = s_(r, c);
      if (v == 0) return;
      if (!found || abs(v) < best) {
        found = true;
        best = abs(v);
        br = r;
        bc = c;
      }
    };
    if (whole_block) {
      for (std::size_t r = t; r < s_.rows(); ++r)
        for (std::size_t c = t; c < s_.cols(); ++c) consider(r, c);
    } else {
      for (std::size_t c = t; c < s_.cols(); ++c) consider(t, c);
      for (std::size_t r = t + 1; r < s_.rows(); ++r) consider(r, t);
    }
    if (!found) return false;
    row_swap(t, br);
    col_swap(t, bc);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < s_.rows(); ++r) {
        if (s_(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s_(r, t).get_mpz_t(), s_(t, t).get_mpz_t());
        row_add(r, t, -q);
        if (s_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < s_.cols(); ++c) {
        if (s_(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s_(t, c).get_mpz_t(), s_(t, t).get_mpz_t());
        col_add(c, t, -q);
        if (s_(t, c) != 0) clean = false;
      }
      if (!clean) {
        move_smallest_to(t, t, /*whole_block=*/false);
        continue;
      }
      // Pivot must divide the rest of the block.
      bool fixed = false;
      for (std::size_t r = t + 1; r < s_.rows() && !fixed; ++r)
        for (std::size_t c = t + 1; c < s_.cols(); ++c) {
          if (!mpz_divisible_p(s_(r, c).get_mpz_t(), s_(t, t).get_mpz_t())) {
            row_add(t, r, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) return;
    }
  }

  IntMatrix s_, u_, uinv_, v_, vinv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

IntMatrix kernel_lattice(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  const std::size_t n = m.cols();
  return snf.right.block(0, snf.rank, n, n - snf.rank);
}

bool solve_integer(const IntMatrix& m, const IntVector& y, IntVector& solution) {
  if (y.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const SmithDecomposition snf = smith_normal_form(m);
  const IntVector uy = snf.left * y;
  IntVector w(m.cols(), Integer(0));
  for (std::size_t i = 0; i < uy.size(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.diagonal(i, i);
      if (!mpz_divisible_p(uy[i].get_mpz_t(), d.get_mpz_t())) return false;
      w[i] = uy[i] / d;
    } else if (uy[i] != 0) {
      return false;
    }
  }
  solution = snf.right * w;
  return true;
}

}  // namespace lcalc
