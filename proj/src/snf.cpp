#include "charp/snf.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace charp {

PolyMatrix::PolyMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, UniPoly(field)) {}

PolyMatrix PolyMatrix::identity(PrimeField field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UniPoly::one(field);
  return m;
}

PolyMatrix PolyMatrix::diagonal(PrimeField field, const std::vector<UniPoly>& entries) {
  PolyMatrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix m(field_, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = at(rows[r], cols[c]);
  }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw ContextError("matrix dimension mismatch");
  PolyMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const UniPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return out;
}

UniPoly ElementaryDivisors::largest(const PrimeField& field) const {
  return divisors.empty() ? UniPoly::one(field) : divisors.back();
}

std::vector<UniPoly> ElementaryDivisors::non_units() const {
  std::vector<UniPoly> out;
  for (const auto& d : divisors) {
    if (!d.is_unit()) out.push_back(d);
  }
  return out;
}

namespace {

// Diagonalizes `a` in place. Pivot: nonzero entry of least degree, ties
// broken by row then column. Each round strictly lowers the pivot degree
// until it divides its row, its column and the rest of the block.
class Eliminator {
 public:
  Eliminator(PolyMatrix& a, PolyMatrix* left, PolyMatrix* right) : a_(a), left_(left), right_(right) {}

  std::vector<UniPoly> run() {
    std::vector<UniPoly> diag;
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t k = 0; k < limit; ++k) {
      auto pivot = min_degree_entry(k, a_.rows(), k, a_.cols());
      if (!pivot) break;
      move_to(k, pivot->first, pivot->second);
      while (!settle(k)) {
      }
      const FieldElem inv = a_.field().inv(a_.at(k, k).leading());
      scale_row(k, inv);
      diag.push_back(a_.at(k, k));
    }
    return diag;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(std::size_t r0, std::size_t r1, std::size_t c0,
                                                                      std::size_t c1) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    for (std::size_t r = r0; r < r1; ++r) {
      for (std::size_t c = c0; c < c1; ++c) {
        const UniPoly& e = a_.at(r, c);
        if (e.is_zero()) continue;
        if (!best || e.degree() < best_deg) {
          best = {r, c};
          best_deg = e.degree();
          if (best_deg == 0) return best;
        }
      }
    }
    return best;
  }

  void move_to(std::size_t k, std::size_t r, std::size_t c) {
    if (r != k) swap_rows(k, r);
    if (c != k) swap_cols(k, c);
  }

  // One elimination round at pivot (k, k); true when the pivot is final.
  bool settle(std::size_t k) {
    const std::size_t m = a_.rows(), n = a_.cols();
    const UniPoly pivot = a_.at(k, k);
    for (std::size_t i = k + 1; i < m; ++i) {
      if (a_.at(i, k).is_zero()) continue;
      add_row_multiple(i, k, -(a_.at(i, k) / pivot));
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a_.at(k, j).is_zero()) continue;
      add_col_multiple(j, k, -(a_.at(k, j) / pivot));
    }
    // Remainders left in the pivot row or column have smaller degree.
    std::optional<std::pair<std::size_t, std::size_t>> smaller;
    int best = pivot.degree();
    for (std::size_t i = k + 1; i < m; ++i) {
      if (!a_.at(i, k).is_zero() && a_.at(i, k).degree() < best) {
        smaller = {i, k};
        best = a_.at(i, k).degree();
      }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!a_.at(k, j).is_zero() && a_.at(k, j).degree() < best) {
        smaller = {k, j};
        best = a_.at(k, j).degree();
      }
    }
    if (smaller) {
      move_to(k, smaller->first, smaller->second);
      return false;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a_.at(i, j).is_zero() && !divides(pivot, a_.at(i, j))) {
          add_row_multiple(k, i, UniPoly::one(a_.field()));
          return false;
        }
      }
    }
    return true;
  }

  void swap_rows(std::size_t r, std::size_t s) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_.at(r, c), a_.at(s, c));
    if (left_) {
      for (std::size_t c = 0; c < left_->cols(); ++c) std::swap(left_->at(r, c), left_->at(s, c));
    }
  }

  void swap_cols(std::size_t c, std::size_t d) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_.at(r, c), a_.at(r, d));
    if (right_) {
      for (std::size_t r = 0; r < right_->rows(); ++r) std::swap(right_->at(r, c), right_->at(r, d));
    }
  }

  // row_dst += factor * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const UniPoly& factor) {
    auto apply = [&](PolyMatrix& m) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m.at(src, c).is_zero()) m.at(dst, c) += factor * m.at(src, c);
      }
    };
    apply(a_);
    if (left_) apply(*left_);
  }

  // col_dst += factor * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const UniPoly& factor) {
    auto apply = [&](PolyMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.at(r, src).is_zero()) m.at(r, dst) += factor * m.at(r, src);
      }
    };
    apply(a_);
    if (right_) apply(*right_);
  }

  void scale_row(std::size_t r, FieldElem c) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(r, j) = a_.at(r, j).scale(c);
    if (left_) {
      for (std::size_t j = 0; j < left_->cols(); ++j) left_->at(r, j) = left_->at(r, j).scale(c);
    }
  }

  PolyMatrix& a_;
  PolyMatrix* left_;
  PolyMatrix* right_;
};

// Turns a multiset of nonzero monic polynomials into the divisibility chain
// of the diagonal matrix they form, via (a, b) -> (gcd, lcm).
std::vector<UniPoly> chain(std::vector<UniPoly> ds) {
  std::stable_sort(ds.begin(), ds.end(), [](const UniPoly& a, const UniPoly& b) { return a.degree() < b.degree(); });
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (divides(ds[i], ds[j])) continue;
      UniPoly g = uni_gcd(ds[i], ds[j]);
      UniPoly l = (ds[i] * ds[j] / g).monic();
      ds[i] = std::move(g);
      ds[j] = std::move(l);
    }
  }
  return ds;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

PolyMatrix mult_matrix(const MultiPoly& f, std::uint64_t q) {
  const RingPtr& ring = f.ring();
  const std::uint32_t p = ring->field().characteristic();
  if (log_p(q, p) == 0) throw PreconditionError("q must be a positive power of the characteristic");
  if (q > 64) throw PreconditionError("q too large for a dense multiplication matrix");
  const std::size_t t = ring->require_index("t");
  const std::size_t x = ring->require_index("x");
  const std::size_t y = ring->require_index("y");
  for (const auto& term : f.terms()) {
    if (term.mono.degree() != term.mono[t] + term.mono[x] + term.mono[y]) {
      throw PreconditionError("multiplication matrix needs a polynomial in t, x, y");
    }
  }
  const std::size_t n = q * q;
  PolyMatrix m(ring->field(), n, n);
  for (const auto& term : f.terms()) {
    const UniPoly c = UniPoly::monomial(ring->field(), term.coeff, term.mono[t]);
    for (std::size_t i = 0; i + term.mono[x] < q; ++i) {
      for (std::size_t j = 0; j + term.mono[y] < q; ++j) {
        const std::size_t row = (i + term.mono[x]) * q + (j + term.mono[y]);
        m.at(row, i * q + j) += c;
      }
    }
  }
  return m;
}

ElementaryDivisors smith_normal_form(const PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> parent(rows + cols);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m.at(r, c).is_zero()) continue;
      parent[find_root(parent, r)] = find_root(parent, rows + c);
    }
  }
  std::vector<std::vector<std::size_t>> block_rows(rows + cols), block_cols(rows + cols);
  for (std::size_t r = 0; r < rows; ++r) block_rows[find_root(parent, r)].push_back(r);
  for (std::size_t c = 0; c < cols; ++c) block_cols[find_root(parent, rows + c)].push_back(c);

  std::size_t units = 0;
  std::vector<UniPoly> others;
  for (std::size_t b = 0; b < rows + cols; ++b) {
    if (block_rows[b].empty() || block_cols[b].empty()) continue;
    PolyMatrix sub = m.submatrix(block_rows[b], block_cols[b]);
    for (auto& d : Eliminator(sub, nullptr, nullptr).run()) {
      if (d.is_unit()) {
        ++units;
      } else {
        others.push_back(std::move(d));
      }
    }
  }
  ElementaryDivisors out;
  out.divisors.assign(units, UniPoly::one(m.field()));
  for (auto& d : chain(std::move(others))) out.divisors.push_back(std::move(d));
  out.free_rank = rows - out.divisors.size();
  return out;
}

SmithDecomposition smith_with_transforms(const PolyMatrix& m) {
  PolyMatrix a = m;
  PolyMatrix left = PolyMatrix::identity(m.field(), m.rows());
  PolyMatrix right = PolyMatrix::identity(m.field(), m.cols());
  std::vector<UniPoly> diag = Eliminator(a, &left, &right).run();
  ElementaryDivisors divisors{diag, m.rows() - diag.size()};
  return {std::move(divisors), std::move(left), std::move(a), std::move(right)};
}

}  // namespace charp
