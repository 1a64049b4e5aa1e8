#pragma once

#include <optional>
#include <span>
#include <vector>

#include "engelkit/bigint.hpp"

namespace engelkit {

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size()) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<Int> row_vector(int r) const;

 private:
  std::size_t size() const {
    return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// U*A = H with U unimodular and H in row Hermite normal form: echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Pivot selection is minimal absolute value, ties to the lowest row, so the
// output is deterministic.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};
HnfResult hnf(const IntMatrix& A);

// U*A*V = D diagonal with d1 | d2 | ..., all di >= 0, U and V unimodular.
struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};
SnfResult snf(const IntMatrix& A);

std::vector<Int> invariant_factors(const IntMatrix& A);

// Exact solution of A x = b over the integers, or nullopt.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                              std::span<const Int> b);

// Is v in the lattice spanned by the rows of L?
bool lattice_member(const IntMatrix& L, std::span<const Int> v);

// Fraction-free determinant (Bareiss). Square matrices only.
Int determinant(const IntMatrix& A);

// Sparse integer row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Int>>;

SparseRow sparse_add_scaled(const SparseRow& a, const Int& ca,
                            const SparseRow& b, const Int& cb);

// Incremental row-echelon lattice over sparse rows, with optional provenance
// tracking (each stored row remembered as an integer combination of the
// inserted originals). Supports membership tests and expressing a vector
// over the original rows, which is how the certificate solvers in `engel`
// and `decomp` recover exponents.
class EchelonLattice {
 public:
  explicit EchelonLattice(bool track_provenance = false)
      : track_(track_provenance) {}

  // Inserts row with external tag `id`; returns true if the lattice grew.
  bool insert(SparseRow row, int id);

  // Pure membership test (no mutation).
  bool contains(const SparseRow& v) const;

  // Greedy reduction of v against the stored rows; empty iff contains(v).
  // A nonzero result is a concrete surviving representative of v's class.
  SparseRow residue(SparseRow v) const;

  // Integer coordinates of v over the original inserted rows, or nullopt.
  // Requires provenance tracking.
  std::optional<std::vector<std::pair<int, Int>>> express(const SparseRow& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }

  // Current echelon basis rows, ordered by pivot column.
  std::vector<SparseRow> basis_rows() const;

 private:
  struct Entry {
    SparseRow row;   // leading column = pivot
    SparseRow prov;  // combination over original ids
  };
  bool track_;
  std::vector<Entry> rows_;  // sorted by pivot column

  int find_pivot_slot(int col) const;
};

}  // namespace engelkit
