#ifndef FROBFP_LINALG_HPP
#define FROBFP_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "frobfp/matrix.hpp"
#include "frobfp/rational.hpp"
#include "frobfp/report.hpp"

namespace frobfp {

namespace detail {

/// Row echelon form produced by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Row scaling by positive rationals
/// preserves rank, row space and solution sets, so the echelon data answers
/// all questions exactly.
struct Echelon {
  std::vector<std::vector<mpz_class>> mat;  // rows x cols, echelon shape
  std::vector<std::size_t> pivot_cols;      // one per pivot row, increasing
  std::size_t rows = 0, cols = 0;

  std::size_t rank() const { return pivot_cols.size(); }
};

inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("bareiss: inexact division");
  return q;
}

/// Bareiss one-step elimination with row pivoting. `pivot_limit` restricts
/// the columns eligible as pivots (used by solve to keep pivots out of the
/// right-hand-side block); elimination still updates all columns.
inline Echelon bareiss_echelon(const RatMatrix& m, std::size_t pivot_limit) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.mat.assign(e.rows, std::vector<mpz_class>(e.cols));

  // Clear denominators row by row and strip content to keep numbers small.
  for (std::size_t i = 0; i < e.rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < e.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    mpz_class g(0);
    for (std::size_t j = 0; j < e.cols; ++j) {
      e.mat[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.mat[i][j].get_mpz_t());
    }
    if (g > 1)
      for (std::size_t j = 0; j < e.cols; ++j) e.mat[i][j] /= g;
  }

  mpz_class prev(1);
  std::size_t pr = 0;  // next pivot row
  for (std::size_t pc = 0; pc < pivot_limit && pr < e.rows; ++pc) {
    std::size_t sel = pr;
    while (sel < e.rows && e.mat[sel][pc] == 0) ++sel;
    if (sel == e.rows) continue;
    if (sel != pr) std::swap(e.mat[sel], e.mat[pr]);

    const mpz_class piv = e.mat[pr][pc];
    for (std::size_t i = pr + 1; i < e.rows; ++i) {
      for (std::size_t j = pc + 1; j < e.cols; ++j)
        e.mat[i][j] = exact_div(piv * e.mat[i][j] - e.mat[i][pc] * e.mat[pr][j], prev);
      e.mat[i][pc] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(pc);
    ++pr;
  }
  return e;
}

inline Echelon bareiss_echelon(const RatMatrix& m) { return bareiss_echelon(m, m.cols()); }

}  // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank(const RatMatrix& m) { return detail::bareiss_echelon(m).rank(); }

/// Returns any exact solution x of a*x = b, or nullopt when the system is
/// inconsistent. Free variables are set to zero. b may have several columns.
inline std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw Error("DimensionMismatch", "solve: a has " + std::to_string(a.rows()) + " rows, b has " + std::to_string(b.rows()));

  RatMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const auto e = detail::bareiss_echelon(aug, a.cols());

  // Rows below the pivot block must vanish on the RHS too.
  for (std::size_t i = e.rank(); i < e.rows; ++i)
    for (std::size_t j = a.cols(); j < e.cols; ++j)
      if (e.mat[i][j] != 0) return std::nullopt;

  RatMatrix x(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t ri = e.rank(); ri-- > 0;) {
      const std::size_t pc = e.pivot_cols[ri];
      Rat acc(mpz_class(e.mat[ri][a.cols() + col]));
      for (std::size_t j = pc + 1; j < a.cols(); ++j)
        if (e.mat[ri][j] != 0 && !x(j, col).is_zero()) acc -= Rat(mpz_class(e.mat[ri][j])) * x(j, col);
      x(pc, col) = acc / Rat(mpz_class(e.mat[ri][pc]));
    }
  }
  return x;
}

/// Exact basis of the right null space {v : m*v = 0}, one column vector per
/// free column; size is cols - rank.
inline std::vector<RatMatrix> kernel_basis(const RatMatrix& m) {
  const auto e = detail::bareiss_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : e.pivot_cols) is_pivot[pc] = true;

  std::vector<RatMatrix> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    RatMatrix v(m.cols(), 1);
    v(fc, 0) = Rat(1);
    for (std::size_t ri = e.rank(); ri-- > 0;) {
      const std::size_t pc = e.pivot_cols[ri];
      if (pc > fc) continue;
      Rat acc;
      for (std::size_t j = pc + 1; j <= fc; ++j)
        if (e.mat[ri][j] != 0 && !v(j, 0).is_zero()) acc -= Rat(mpz_class(e.mat[ri][j])) * v(j, 0);
      v(pc, 0) = acc / Rat(mpz_class(e.mat[ri][pc]));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the row space: nonzero echelon rows, normalized to leading
/// coefficient 1.
inline std::vector<std::vector<Rat>> row_space_basis(const RatMatrix& m) {
  const auto e = detail::bareiss_echelon(m);
  std::vector<std::vector<Rat>> basis;
  for (std::size_t ri = 0; ri < e.rank(); ++ri) {
    const Rat lead(mpz_class(e.mat[ri][e.pivot_cols[ri]]));
    std::vector<Rat> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = Rat(mpz_class(e.mat[ri][j])) / lead;
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace frobfp

#endif  // FROBFP_LINALG_HPP
