#include "engelkit/magnus.hpp"

#include <algorithm>
#include <stdexcept>

namespace engelkit {

bool has_repeated_index(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i] == m[j]) return true;
  return false;
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(int degree_cap) : cap_(degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("degree cap must be >= 0");
}

TruncSeries TruncSeries::one(int degree_cap) {
  TruncSeries s(degree_cap);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

bool TruncSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

Int TruncSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void TruncSeries::add_term(const Monomial& m, const Int& c) {
  if (c == 0 || static_cast<int>(m.size()) > cap_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int cap = std::min(a.cap_, b.cap_);
  TruncSeries out(cap);
  for (const auto& [ma, ca] : a.terms_) {
    int room = cap - static_cast<int>(ma.size());
    if (room < 0) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(mb.size()) > room) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::optional<int> TruncSeries::lowest_degree() const {
  for (const auto& [m, c] : terms_)
    if (!m.empty()) return static_cast<int>(m.size());
  return std::nullopt;
}

void TruncSeries::mul_letter(int gen, int sign) {
  TermMap out;
  auto acc = [&out](Monomial&& m, const Int& c) {
    auto [it, inserted] = out.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [m, c] : terms_) {
    int room = cap_ - static_cast<int>(m.size());
    if (sign > 0) {
      acc(Monomial(m), c);
      if (room >= 1) {
        Monomial ext = m;
        ext.push_back(gen);
        acc(std::move(ext), c);
      }
    } else {
      // (1 + X)^-1 = 1 - X + X^2 - ... truncated
      Monomial ext = m;
      Int coef = c;
      acc(Monomial(m), c);
      for (int k = 1; k <= room; ++k) {
        ext.push_back(gen);
        coef = -coef;
        acc(Monomial(ext), coef);
      }
    }
  }
  terms_ = std::move(out);
}

TruncSeries expand(const Word& w, int degree_cap) {
  TruncSeries s = TruncSeries::one(degree_cap);
  for (const Letter& l : w.letters()) s.mul_letter(l.gen, l.sign);
  return s;
}

TruncSeries series_inverse(const TruncSeries& a) {
  Int c0 = a.coefficient({});
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("series inverse requires constant term +-1");
  // a = c0 (1 + N) with N of positive degree; invert by the finite
  // geometric series, then scale by c0.
  TruncSeries n(a.degree_cap());
  for (const auto& [m, c] : a.terms())
    if (!m.empty()) n.add_term(m, c0 * c);  // N = c0^-1 (a - c0), c0^-1 = c0
  TruncSeries acc = TruncSeries::one(a.degree_cap());
  TruncSeries power = TruncSeries::one(a.degree_cap());
  for (int k = 1; k <= a.degree_cap(); ++k) {
    power = power * n;
    if (power.is_zero()) break;
    if (k % 2 == 1) {
      acc -= power;
    } else {
      acc += power;
    }
  }
  TruncSeries out(a.degree_cap());
  for (const auto& [m, c] : acc.terms()) out.add_term(m, c0 * c);
  return out;
}

TruncSeries series_pow(const TruncSeries& a, const Int& e) {
  TruncSeries base = e < 0 ? series_inverse(a) : a;
  Int k = abs(e);
  TruncSeries acc = TruncSeries::one(a.degree_cap());
  while (k > 0) {
    if (k % 2 == 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// ReducedSeries

ReducedSeries::ReducedSeries(int num_generators) : n_(num_generators) {
  if (num_generators < 1) throw std::invalid_argument("need >= 1 generator");
}

ReducedSeries ReducedSeries::one(int num_generators) {
  ReducedSeries s(num_generators);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

bool ReducedSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

Int ReducedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void ReducedSeries::add_term(const Monomial& m, const Int& c) {
  if (c == 0 || has_repeated_index(m)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ReducedSeries& ReducedSeries::operator+=(const ReducedSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ReducedSeries operator*(const ReducedSeries& a, const ReducedSeries& b) {
  ReducedSeries out(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);  // repeated-index products die here
    }
  }
  return out;
}

void ReducedSeries::mul_letter(int gen, int sign) {
  TermMap out;
  auto acc = [&out](Monomial&& m, const Int& c) {
    auto [it, inserted] = out.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  // In the reduced ring X^2 = 0, so both x and x^-1 expand to 1 -+ ... with
  // a single X term: (1+X)^-1 = 1 - X exactly.
  for (const auto& [m, c] : terms_) {
    acc(Monomial(m), c);
    if (std::find(m.begin(), m.end(), gen) == m.end()) {
      Monomial ext = m;
      ext.push_back(gen);
      acc(std::move(ext), sign > 0 ? c : -c);
    }
  }
  terms_ = std::move(out);
}

ReducedSeries reduced_expand(const Word& w, int num_generators) {
  ReducedSeries s = ReducedSeries::one(num_generators);
  for (const Letter& l : w.letters()) s.mul_letter(l.gen, l.sign);
  return s;
}

ReducedSeries reduce(const TruncSeries& s, int num_generators) {
  ReducedSeries out(num_generators);
  for (const auto& [m, c] : s.terms()) out.add_term(m, c);
  return out;
}

std::optional<int> lcs_degree(const Word& w, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  return expand(w, cap).lowest_degree();
}

}  // namespace engelkit
