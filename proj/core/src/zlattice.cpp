#include "engelkit/zlattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace engelkit {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& av = a.at(r, k);
      if (av == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out.at(r, c) += av * b.at(k, c);
    }
  return out;
}

std::vector<Int> IntMatrix::row_vector(int r) const {
  std::vector<Int> v(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[static_cast<std::size_t>(c)] = at(r, c);
  return v;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row_i -= q * row_j
void row_axpy(IntMatrix& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}

void col_axpy(IntMatrix& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

Int floor_div(const Int& a, const Int& d) {
  Int q = a / d;
  if (a % d != 0 && ((a < 0) != (d < 0))) --q;
  return q;
}

struct Xgcd {
  Int g, s, t;  // s*a + t*b = g, g >= 0
};

Xgcd xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

}  // namespace

HnfResult hnf(const IntMatrix& A) {
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  int r = 0;
  for (int col = 0; col < H.cols() && r < H.rows(); ++col) {
    // Clear everything below position r in this column; minimal-absolute
    // pivot keeps entry growth down.
    while (true) {
      int best = -1;
      for (int i = r; i < H.rows(); ++i) {
        const Int& v = H.at(i, col);
        if (v == 0) continue;
        if (best < 0 || abs(v) < abs(H.at(best, col))) best = i;
      }
      if (best < 0) break;
      swap_rows(H, r, best);
      swap_rows(U, r, best);
      bool any_left = false;
      for (int i = r + 1; i < H.rows(); ++i) {
        if (H.at(i, col) == 0) continue;
        Int q = H.at(i, col) / H.at(r, col);
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
        if (H.at(i, col) != 0) any_left = true;
      }
      if (!any_left) break;
    }
    if (H.at(r, col) == 0) continue;
    if (H.at(r, col) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(H.at(i, col), H.at(r, col));
      row_axpy(H, i, r, q);
      row_axpy(U, i, r, q);
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

SnfResult snf(const IntMatrix& A) {
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  IntMatrix V = IntMatrix::identity(A.cols());
  int t = 0;
  int bound = std::min(D.rows(), D.cols());
  while (t < bound) {
    // Locate the minimal-absolute nonzero entry of the trailing block.
    int pr = -1, pc = -1;
    for (int i = t; i < D.rows(); ++i)
      for (int j = t; j < D.cols(); ++j) {
        const Int& v = D.at(i, j);
        if (v == 0) continue;
        if (pr < 0 || abs(v) < abs(D.at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    swap_rows(D, t, pr);
    swap_rows(U, t, pr);
    swap_cols(D, t, pc);
    swap_cols(V, t, pc);

    bool dirty = false;
    for (int i = t + 1; i < D.rows(); ++i) {
      if (D.at(i, t) == 0) continue;
      Int q = D.at(i, t) / D.at(t, t);
      row_axpy(D, i, t, q);
      row_axpy(U, i, t, q);
      if (D.at(i, t) != 0) dirty = true;
    }
    if (dirty) continue;
    for (int j = t + 1; j < D.cols(); ++j) {
      if (D.at(t, j) == 0) continue;
      Int q = D.at(t, j) / D.at(t, t);
      col_axpy(D, j, t, q);
      col_axpy(V, j, t, q);
      if (D.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Divisibility: fold in any offending row and retry with a smaller pivot.
    const Int& d = D.at(t, t);
    bool fixed = true;
    for (int i = t + 1; i < D.rows() && fixed; ++i)
      for (int j = t + 1; j < D.cols() && fixed; ++j)
        if (D.at(i, j) % d != 0) {
          row_axpy(D, t, i, Int(-1));
          row_axpy(U, t, i, Int(-1));
          fixed = false;
        }
    if (!fixed) continue;

    if (D.at(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
    ++t;
  }
  return {std::move(D), std::move(U), std::move(V)};
}

std::vector<Int> invariant_factors(const IntMatrix& A) {
  SnfResult s = snf(A);
  std::vector<Int> out;
  int bound = std::min(A.rows(), A.cols());
  for (int i = 0; i < bound; ++i)
    if (s.D.at(i, i) != 0) out.push_back(s.D.at(i, i));
  return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                              std::span<const Int> b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("right-hand side size mismatch");
  SnfResult s = snf(A);
  // A x = b  <=>  D y = U b with x = V y.
  std::vector<Int> ub(static_cast<std::size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < A.rows(); ++j) acc += s.U.at(i, j) * b[static_cast<std::size_t>(j)];
    ub[static_cast<std::size_t>(i)] = std::move(acc);
  }
  std::vector<Int> y(static_cast<std::size_t>(A.cols()));
  int bound = std::min(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i) {
    const Int& rhs = ub[static_cast<std::size_t>(i)];
    if (i < bound && s.D.at(i, i) != 0) {
      if (rhs % s.D.at(i, i) != 0) return std::nullopt;
      y[static_cast<std::size_t>(i)] = rhs / s.D.at(i, i);
    } else if (rhs != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(static_cast<std::size_t>(A.cols()));
  for (int i = 0; i < A.cols(); ++i) {
    Int acc = 0;
    for (int j = 0; j < A.cols(); ++j) acc += s.V.at(i, j) * y[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return x;
}

bool lattice_member(const IntMatrix& L, std::span<const Int> v) {
  return solve_integer(L.transposed(), v).has_value();
}

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant needs square");
  int n = A.rows();
  if (n == 0) return 1;
  IntMatrix m = A;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Sparse rows and the incremental echelon lattice.

SparseRow sparse_add_scaled(const SparseRow& a, const Int& ca,
                            const SparseRow& b, const Int& cb) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      Int v = ca * a[i].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
    } else if (i >= a.size() || b[j].first < a[i].first) {
      Int v = cb * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Int v = ca * a[i].second + cb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

int EchelonLattice::find_pivot_slot(int col) const {
  int lo = 0, hi = static_cast<int>(rows_.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (rows_[static_cast<std::size_t>(mid)].row.front().first < col)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < static_cast<int>(rows_.size()) &&
      rows_[static_cast<std::size_t>(lo)].row.front().first == col)
    return lo;
  return -1;
}

bool EchelonLattice::insert(SparseRow row, int id) {
  SparseRow prov;
  if (track_ && !row.empty()) prov.emplace_back(id, 1);
  bool grew = false;
  while (!row.empty()) {
    int col = row.front().first;
    int slot = find_pivot_slot(col);
    if (slot < 0) {
      if (row.front().second < 0) {
        row = sparse_add_scaled(row, Int(-1), {}, Int(0));
        if (track_) prov = sparse_add_scaled(prov, Int(-1), {}, Int(0));
      }
      auto pos = std::lower_bound(
          rows_.begin(), rows_.end(), col,
          [](const Entry& e, int c) { return e.row.front().first < c; });
      rows_.insert(pos, Entry{std::move(row), std::move(prov)});
      return true;
    }
    Entry& e = rows_[static_cast<std::size_t>(slot)];
    const Int& d = e.row.front().second;
    const Int& a = row.front().second;
    if (a % d == 0) {
      Int q = a / d;
      row = sparse_add_scaled(row, Int(1), e.row, -q);
      if (track_) prov = sparse_add_scaled(prov, Int(1), e.prov, -q);
    } else {
      // Merge via the extended gcd: the pivot shrinks, so the lattice grew.
      Xgcd x = xgcd(d, a);
      SparseRow new_pivot = sparse_add_scaled(e.row, x.s, row, x.t);
      SparseRow new_prov;
      if (track_) new_prov = sparse_add_scaled(e.prov, x.s, prov, x.t);
      SparseRow rest = sparse_add_scaled(row, d / x.g, e.row, -(a / x.g));
      if (track_) prov = sparse_add_scaled(prov, d / x.g, e.prov, -(a / x.g));
      e.row = std::move(new_pivot);
      e.prov = std::move(new_prov);
      row = std::move(rest);
      grew = true;
    }
  }
  return grew;
}

bool EchelonLattice::contains(const SparseRow& v) const {
  SparseRow w = v;
  while (!w.empty()) {
    int slot = find_pivot_slot(w.front().first);
    if (slot < 0) return false;
    const Entry& e = rows_[static_cast<std::size_t>(slot)];
    const Int& d = e.row.front().second;
    if (w.front().second % d != 0) return false;
    Int q = w.front().second / d;
    w = sparse_add_scaled(w, Int(1), e.row, -q);
  }
  return true;
}

SparseRow EchelonLattice::residue(SparseRow v) const {
  SparseRow out;
  while (!v.empty()) {
    int slot = find_pivot_slot(v.front().first);
    if (slot < 0 || v.front().second % rows_[static_cast<std::size_t>(slot)]
                                           .row.front()
                                           .second !=
                        0) {
      out.push_back(v.front());
      v.erase(v.begin());
      continue;
    }
    const Entry& e = rows_[static_cast<std::size_t>(slot)];
    Int q = v.front().second / e.row.front().second;
    v = sparse_add_scaled(v, Int(1), e.row, -q);
  }
  return out;
}

std::vector<SparseRow> EchelonLattice::basis_rows() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (const Entry& e : rows_) out.push_back(e.row);
  return out;
}

std::optional<std::vector<std::pair<int, Int>>> EchelonLattice::express(
    const SparseRow& v) const {
  if (!track_) throw std::logic_error("provenance tracking is off");
  SparseRow w = v;
  SparseRow combo;
  while (!w.empty()) {
    int slot = find_pivot_slot(w.front().first);
    if (slot < 0) return std::nullopt;
    const Entry& e = rows_[static_cast<std::size_t>(slot)];
    const Int& d = e.row.front().second;
    if (w.front().second % d != 0) return std::nullopt;
    Int q = w.front().second / d;
    w = sparse_add_scaled(w, Int(1), e.row, -q);
    combo = sparse_add_scaled(combo, Int(1), e.prov, q);
  }
  return combo;
}

}  // namespace engelkit
