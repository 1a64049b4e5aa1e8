#pragma once

#include <map>
#include <optional>
#include <vector>

#include "engelkit/bigint.hpp"
#include "engelkit/words.hpp"

namespace engelkit {

// A noncommutative monomial X_{i1} X_{i2} ... ; the empty sequence is 1.
using Monomial = std::vector<int>;

// Orders by (degree, lexicographic indices): the serialization order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Monomial, Int, MonomialOrder>;

bool has_repeated_index(const Monomial& m);

// Truncated integer power series in noncommuting variables. Terms beyond
// the truncation degree are dropped on every operation; zero coefficients
// are never stored.
class TruncSeries {
 public:
  explicit TruncSeries(int degree_cap);
  static TruncSeries one(int degree_cap);

  int degree_cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  Int coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Int& c);

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  // Smallest degree >= 1 carrying a nonzero coefficient; nullopt if the
  // series is constant.
  std::optional<int> lowest_degree() const;

  // Multiplies in place by the Magnus image of a single letter:
  // x ->  1 + X, x^-1 -> 1 - X + X^2 - ... (exact in the truncated ring).
  void mul_letter(int gen, int sign);

 private:
  int cap_;
  TermMap terms_;
};

// Magnus expansion x_i -> 1 + X_i truncated at degree_cap.
TruncSeries expand(const Word& w, int degree_cap);

// Inverse of a series with constant term +-1; throws otherwise.
TruncSeries series_inverse(const TruncSeries& a);

TruncSeries series_pow(const TruncSeries& a, const Int& e);

// The quotient ring where every monomial with a repeated variable is zero.
// Monomials therefore have pairwise-distinct indices and degree <= n.
class ReducedSeries {
 public:
  explicit ReducedSeries(int num_generators);
  static ReducedSeries one(int num_generators);

  int num_generators() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_one() const;

  Int coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Int& c);

  ReducedSeries& operator+=(const ReducedSeries& o);
  friend ReducedSeries operator*(const ReducedSeries& a, const ReducedSeries& b);
  friend bool operator==(const ReducedSeries&, const ReducedSeries&) = default;

  void mul_letter(int gen, int sign);

 private:
  int n_;
  TermMap terms_;
};

// Reduced Magnus expansion: expand(w, n) with repeated-index monomials
// deleted (computed eagerly in the quotient ring).
ReducedSeries reduced_expand(const Word& w, int num_generators);

// Deletes repeated-index monomials from a full expansion. Test oracle for
// reduced_expand; also handles caps != n.
ReducedSeries reduce(const TruncSeries& s, int num_generators);

// Lowest nonzero degree of expand(w, cap): w lies in the cap-th lower
// central term at least when this returns nullopt, and in exactly the
// d-th (not the (d+1)-st) when it returns d.
std::optional<int> lcs_degree(const Word& w, int cap);

}  // namespace engelkit
