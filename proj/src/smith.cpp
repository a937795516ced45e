#include "evoaut/smith.hpp"

#include <sstream>

namespace evoaut {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<std::vector<BigInt>>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "integer matrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < rank; ++k) out.push_back(D(k, k));
  return out;
}

std::vector<BigInt> SmithDecomposition::invariant_factors() const {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < rank; ++k) {
    if (D(k, k) != 1) out.push_back(D(k, k));
  }
  return out;
}

namespace detail {

namespace {

BigInt reduce(const BigInt& v, const BigInt& modulus) {
  if (modulus.is_zero()) return v;
  BigInt r = v % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace

void RowPayload::swap_rows(std::size_t a, std::size_t b) {
  for (auto& col : cols) std::swap(col[a], col[b]);
}

void RowPayload::add_row(std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c][target] = reduce(cols[c][target] + factor * cols[c][source], moduli[c]);
}

void RowPayload::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c][r] = reduce(-cols[c][r], moduli[c]);
}

SmithCore smith_reduce(IntMatrix a, RowPayload& payload) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix v = IntMatrix::identity(n);

  auto add_row = [&](std::size_t target, std::size_t source, const BigInt& f) {
    for (std::size_t c = 0; c < n; ++c) a(target, c) += f * a(source, c);
    payload.add_row(target, source, f);
  };
  auto add_col = [&](std::size_t target, std::size_t source, const BigInt& f) {
    for (std::size_t r = 0; r < m; ++r) a(r, target) += f * a(r, source);
    for (std::size_t r = 0; r < n; ++r) v(r, target) += f * v(r, source);
  };

  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block, row-major ties
      std::size_t pr = m, pc = n;
      BigInt best;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          if (a(r, c).is_zero()) continue;
          const BigInt mag = abs(a(r, c));
          if (pr == m || mag < best) {
            best = mag;
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == m) goto done;
      a.swap_rows(t, pr);
      payload.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool remainder = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a(r, t).is_zero()) continue;
        const BigInt q = a(r, t) / a(t, t);
        if (!q.is_zero()) add_row(r, t, -q);
        remainder = remainder || !a(r, t).is_zero();
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a(t, c).is_zero()) continue;
        const BigInt q = a(t, c) / a(t, t);
        if (!q.is_zero()) add_col(c, t, -q);
        remainder = remainder || !a(t, c).is_zero();
      }
      if (remainder) continue;

      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r) {
        for (std::size_t c = t + 1; c < n; ++c) {
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
        }
      }
      if (bad == m) break;
      add_row(t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      payload.negate_row(t);
    }
  }
done:
  return SmithCore{std::move(a), std::move(v), t};
}

}  // namespace detail

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  detail::RowPayload payload;
  payload.cols.assign(m, std::vector<BigInt>(m));
  payload.moduli.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) payload.cols[i][i] = 1;

  detail::SmithCore core = detail::smith_reduce(a, payload);
  IntMatrix u(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) u(r, c) = payload.cols[c][r];
  }
  SmithDecomposition out{std::move(u), std::move(core.D), std::move(core.V), core.rank};

  if (!(out.U * a * out.V == out.D)) invariant_failure("Smith normal form: U*A*V != D");
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const bool on_diag = r == c && r < out.rank;
      if (on_diag ? out.D(r, c) <= 0 : !out.D(r, c).is_zero()) invariant_failure("Smith normal form: D not diagonal");
    }
  }
  for (std::size_t k = 1; k < out.rank; ++k) {
    if (out.D(k, k) % out.D(k - 1, k - 1) != 0) invariant_failure("Smith normal form: divisibility chain");
  }
  constexpr std::size_t kUnimodularCheckLimit = 48;
  if (m <= kUnimodularCheckLimit && abs(determinant(out.U)) != 1) invariant_failure("Smith normal form: U not unimodular");
  if (a.cols() <= kUnimodularCheckLimit && abs(determinant(out.V)) != 1) {
    invariant_failure("Smith normal form: V not unimodular");
  }
  return out;
}

}  // namespace evoaut
