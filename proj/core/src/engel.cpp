#include "engelkit/engel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace engelkit {

namespace {

// Reduced words of each exact length 1..max_len, lexicographic within a
// length; letter order x1, x1^-1, x2, x2^-1, ...
std::vector<std::vector<Word>> words_by_length(int n, int max_len) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(max_len) + 1);
  std::vector<std::vector<Letter>> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : frontier) {
      for (int g = 1; g <= n; ++g) {
        for (int s : {+1, -1}) {
          if (!prefix.empty() && prefix.back().gen == g && prefix.back().sign == -s)
            continue;
          auto ext = prefix;
          ext.push_back({g, s});
          out[static_cast<std::size_t>(len)].push_back(Word::from_letters(ext));
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

int monomial_rank(const Monomial& m, int n) {
  int r = 0;
  for (int idx : m) r = r * n + (idx - 1);
  return r;
}

Monomial monomial_unrank(int rank, int degree, int n) {
  Monomial m(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    m[static_cast<std::size_t>(i)] = rank % n + 1;
    rank /= n;
  }
  return m;
}

// Column layout of the solver: degree-3 block, then degree-4 block.
int column_of(const Monomial& m, int n) {
  int d = static_cast<int>(m.size());
  if (d == 3) return monomial_rank(m, n);
  return n * n * n + monomial_rank(m, n);
}

struct SolverFactor {
  Word instance;
  Word conjugator;  // empty or a single generator
};

// Candidate rows are the degree-(3,4) Magnus data of enumerated instances
// conjugated by the identity and by each generator. Everything in sight
// lies in the third lower central term, so products are coordinate-wise
// additive at truncation degree 4 and membership is an exact integer
// lattice question.
class EngelSolver {
 public:
  explicit EngelSolver(int n) : n_(n), lattice_(/*track_provenance=*/true) {}

  int n() const { return n_; }
  const std::vector<SolverFactor>& factors() const { return factors_; }
  const EchelonLattice& lattice() const { return lattice_; }
  const std::vector<SparseRow>& instance_degree3_rows() const { return deg3_rows_; }

  // Adds all instances of stage s (max(|w|,|v|) = s). The callback runs
  // after every `batch` instances and stops the stage early when it
  // returns true.
  template <typename Callback>
  void grow_stage(int stage, int batch, Callback&& should_stop) {
    if (static_cast<int>(words_.size()) <= stage)
      words_ = words_by_length(n_, stage);
    int count = 0;
    auto feed = [&](const Word& w, const Word& v) -> bool {
      add_instance(w, v);
      if (++count % batch == 0 && should_stop()) return true;
      return false;
    };
    // |w| = stage first, then |v| = stage with shorter w.
    for (const Word& w : words_[static_cast<std::size_t>(stage)])
      for (int lv = 1; lv <= stage; ++lv)
        for (const Word& v : words_[static_cast<std::size_t>(lv)])
          if (feed(w, v)) return;
    for (int lw = 1; lw < stage; ++lw)
      for (const Word& w : words_[static_cast<std::size_t>(lw)])
        for (const Word& v : words_[static_cast<std::size_t>(stage)])
          if (feed(w, v)) return;
  }

  // Sparse (deg-3 | deg-4) vector of an expansion. Degrees 1 and 2 must be
  // absent; callers ensure it.
  SparseRow row_of(const TruncSeries& s) const {
    SparseRow row;
    for (const auto& [m, c] : s.terms()) {
      if (m.size() < 3) continue;
      row.emplace_back(column_of(m, n_), c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  std::optional<std::vector<CertFactor>> express(const SparseRow& target) const {
    auto combo = lattice_.express(target);
    if (!combo) return std::nullopt;
    std::vector<CertFactor> out;
    for (const auto& [id, coef] : *combo) {
      const SolverFactor& f = factors_[static_cast<std::size_t>(id)];
      out.push_back({f.instance, f.conjugator, coef});
    }
    return out;
  }

  bool contains(const SparseRow& target) const { return lattice_.contains(target); }

 private:
  void add_instance(const Word& w, const Word& v) {
    Word e = commutator(w, w.conjugated_by(v));
    if (e.empty() || !seen_.insert(e).second) return;
    TruncSeries full = expand(e, 4);
    SparseRow base = row_of(full);
    if (base.empty()) return;

    SparseRow deg3;
    for (const auto& [col, c] : base)
      if (col < n_ * n_ * n_) deg3.emplace_back(col, c);
    deg3_rows_.push_back(deg3);

    push_factor(e, Word{}, base);
    // Conjugating by a generator only shifts the degree-4 block, by the
    // bracket of the degree-3 part with that generator.
    for (int g = 1; g <= n_; ++g) {
      SparseRow row = base;
      for (const auto& [col, c] : deg3) {
        Monomial m = monomial_unrank(col, 3, n_);
        Monomial right = m;
        right.push_back(g);
        Monomial left;
        left.push_back(g);
        left.insert(left.end(), m.begin(), m.end());
        SparseRow delta;
        delta.emplace_back(column_of(right, n_), c);
        delta.emplace_back(column_of(left, n_), -c);
        std::sort(delta.begin(), delta.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        row = sparse_add_scaled(row, Int(1), delta, Int(1));
      }
      push_factor(e, Word::generator(g), row);
    }
  }

  void push_factor(const Word& inst, const Word& conj, SparseRow row) {
    int id = static_cast<int>(factors_.size());
    factors_.push_back({inst, conj});
    lattice_.insert(std::move(row), id);
  }

  int n_;
  EchelonLattice lattice_;
  std::vector<SolverFactor> factors_;
  std::vector<SparseRow> deg3_rows_;
  std::set<Word> seen_;
  std::vector<std::vector<Word>> words_;
};

constexpr int kSolverBatch = 64;

}  // namespace

std::vector<EngelInstance> engel_instances(int n, int depth) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (depth < 1) throw std::invalid_argument("need depth >= 1");
  auto words = words_by_length(n, depth);
  std::vector<EngelInstance> out;
  std::set<Word> seen;
  auto consider = [&](const Word& w, const Word& v) {
    Word e = commutator(w, w.conjugated_by(v));
    if (e.empty() || !seen.insert(e).second) return;
    out.push_back({w, v, e});
  };
  for (int stage = 1; stage <= depth; ++stage) {
    for (const Word& w : words[static_cast<std::size_t>(stage)])
      for (int lv = 1; lv <= stage; ++lv)
        for (const Word& v : words[static_cast<std::size_t>(lv)]) consider(w, v);
    for (int lw = 1; lw < stage; ++lw)
      for (const Word& w : words[static_cast<std::size_t>(lw)])
        for (const Word& v : words[static_cast<std::size_t>(stage)]) consider(w, v);
  }
  return out;
}

bool verify_certificate(const EngelCertificate& cert, int n) {
  if (max_generator(cert.target) > n) return false;
  TruncSeries product = TruncSeries::one(4);
  for (const CertFactor& f : cert.factors) {
    if (max_generator(f.instance) > n || max_generator(f.conjugator) > n) return false;
    Word conj = f.instance.conjugated_by(f.conjugator);
    product = product * series_pow(expand(conj, 4), f.exponent);
  }
  return product == expand(cert.target, 4);
}

EchelonLattice degree3_relation_lattice(int n) {
  using LieVec = std::map<Monomial, Int, MonomialOrder>;
  auto bracket = [](const LieVec& u, const LieVec& v) {
    LieVec out;
    auto acc = [&out](Monomial m, Int c) {
      auto [it, ins] = out.emplace(std::move(m), c);
      if (!ins) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    };
    for (const auto& [mu, cu] : u)
      for (const auto& [mv, cv] : v) {
        Monomial ab = mu;
        ab.insert(ab.end(), mv.begin(), mv.end());
        Monomial ba = mv;
        ba.insert(ba.end(), mu.begin(), mu.end());
        acc(std::move(ab), cu * cv);
        acc(std::move(ba), -cu * cv);
      }
    return out;
  };
  auto gen = [](int i) { return LieVec{{Monomial{i}, Int(1)}}; };
  auto to_row = [n](const LieVec& v) {
    SparseRow row;
    for (const auto& [m, c] : v) row.emplace_back(monomial_rank(m, n), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };

  EchelonLattice lat;
  int id = 0;
  // Polarization of [u,[u,v]] over integer vectors u, v: the squares
  // [a,[a,b]] and the mixed sums [a,[b,c]] + [b,[a,c]].
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      lat.insert(to_row(bracket(gen(a), bracket(gen(a), gen(b)))), id++);
    }
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        LieVec first = bracket(gen(a), bracket(gen(b), gen(c)));
        LieVec second = bracket(gen(b), bracket(gen(a), gen(c)));
        SparseRow row = sparse_add_scaled(to_row(first), Int(1), to_row(second), Int(1));
        lat.insert(std::move(row), id++);
      }
  return lat;
}

namespace {

std::vector<std::vector<int>> all_index_tuples(int n, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(len), 1);
  while (true) {
    out.push_back(idx);
    int pos = len - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < len; ++i) idx[static_cast<std::size_t>(i)] = 1;
  }
  return out;
}

Word left_normed_generators(const std::vector<int>& idx) {
  std::vector<Word> parts;
  parts.reserve(idx.size());
  for (int i : idx) parts.push_back(Word::generator(i));
  return left_normed_commutator(parts);
}

}  // namespace

Class3Report certify_class3(int n, int depth) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("certify_class3 supports 1 <= n <= 4");
  if (depth < 1) throw std::invalid_argument("need depth >= 1");

  Class3Report rep;
  rep.n = n;
  rep.depth = depth;

  struct Pending {
    std::size_t slot;
    SparseRow row;
  };
  std::vector<Pending> pending;

  EngelSolver solver(n);
  for (const auto& idx : all_index_tuples(n, 4)) {
    Class3Target t;
    t.indices = idx;
    t.word = left_normed_generators(idx);
    rep.targets.push_back(std::move(t));
    Class3Target& stored = rep.targets.back();
    if (stored.word.empty()) {
      stored.certificate = EngelCertificate{stored.word, {}, true, 0};
      continue;
    }
    pending.push_back({rep.targets.size() - 1, solver.row_of(expand(stored.word, 4))});
  }

  for (int stage = 1; stage <= depth && !pending.empty(); ++stage) {
    auto sweep = [&]() {
      std::erase_if(pending, [&](const Pending& p) {
        auto factors = solver.express(p.row);
        if (!factors) return false;
        EngelCertificate cert{rep.targets[p.slot].word, std::move(*factors), false, stage};
        cert.verified = verify_certificate(cert, n);
        rep.targets[p.slot].certificate = std::move(cert);
        return true;
      });
      return pending.empty();
    };
    solver.grow_stage(stage, kSolverBatch, sweep);
    sweep();
  }

  rep.complete = true;
  for (const auto& t : rep.targets)
    if (!t.certificate || !t.certificate->verified) rep.complete = false;
  return rep;
}

EngelDecision is_trivial_engel(const Word& w, int n, int depth) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (max_generator(w) > n)
    throw std::invalid_argument("word uses generators beyond the context");

  EngelDecision out;
  TruncSeries s = expand(w, 4);
  if (s.is_one()) {
    out.kind = EngelTriviality::CertifiedTrivial;
    out.certificate = EngelCertificate{w, {}, true, 0};
    return out;
  }
  int low = *s.lowest_degree();
  if (low <= 2) {
    for (const auto& [m, c] : s.terms()) {
      if (static_cast<int>(m.size()) == low) {
        out.kind = EngelTriviality::Nontrivial;
        out.obstruction = EngelObstruction{low, m, c};
        return out;
      }
    }
  }
  if (low == 3) {
    SparseRow t3;
    for (const auto& [m, c] : s.terms())
      if (m.size() == 3)
        t3.emplace_back(monomial_rank(m, n), c);
    std::sort(t3.begin(), t3.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow res = degree3_relation_lattice(n).residue(std::move(t3));
    if (!res.empty()) {
      out.kind = EngelTriviality::Nontrivial;
      out.obstruction =
          EngelObstruction{3, monomial_unrank(res.front().first, 3, n), res.front().second};
      return out;
    }
  }

  EngelSolver solver(n);
  SparseRow target = solver.row_of(s);
  for (int stage = 1; stage <= depth; ++stage) {
    bool done = false;
    auto probe = [&]() { return done = solver.contains(target); };
    solver.grow_stage(stage, kSolverBatch, probe);
    if (done || solver.contains(target)) {
      auto factors = solver.express(target);
      EngelCertificate cert{w, std::move(*factors), false, stage};
      cert.verified = verify_certificate(cert, n);
      if (cert.verified) {
        out.kind = EngelTriviality::CertifiedTrivial;
        out.certificate = std::move(cert);
        return out;
      }
      break;
    }
  }
  out.kind = EngelTriviality::UnknownAtDepth;
  return out;
}

GradedPresentation build_graded_presentation(int n, int depth) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  GradedPresentation pres;
  pres.n = n;
  pres.depth = depth;
  pres.relation_lattice.resize(5);
  pres.relation_lattice[1] = IntMatrix(0, n);
  pres.relation_lattice[2] = IntMatrix(0, n * n);

  EngelSolver solver(n);
  auto never = []() { return false; };
  for (int stage = 1; stage <= depth; ++stage)
    solver.grow_stage(stage, kSolverBatch, never);

  const int n3 = n * n * n;
  const int n4 = n3 * n;
  auto to_matrix = [](const std::vector<SparseRow>& rows, int cols, int shift) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (const auto& [col, c] : rows[static_cast<std::size_t>(r)])
        m.at(r, col - shift) = c;
    return m;
  };

  pres.relation_lattice[3] =
      hnf(to_matrix(solver.instance_degree3_rows(), n3, 0)).H;

  // The echelon basis has degree-3 columns leading, so the rows whose pivot
  // falls in the degree-4 block span exactly the degree-4 lattice after
  // degree-3 elimination.
  std::vector<SparseRow> deg4;
  for (const SparseRow& row : solver.lattice().basis_rows())
    if (row.front().first >= n3) deg4.push_back(row);
  pres.relation_lattice[4] = hnf(to_matrix(deg4, n4, n3)).H;
  return pres;
}

}  // namespace engelkit
