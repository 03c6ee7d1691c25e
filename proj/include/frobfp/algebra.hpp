#ifndef FROBFP_ALGEBRA_HPP
#define FROBFP_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "frobfp/linalg.hpp"
#include "frobfp/matrix.hpp"
#include "frobfp/rational.hpp"
#include "frobfp/report.hpp"

namespace frobfp {

/// Finite-dimensional algebra over Q given by structure constants:
/// e_i * e_j = sum_k sc(i,j,k) e_k, with a distinguished unit vector.
struct StructureAlgebra {
  std::size_t dim = 0;
  std::vector<Rat> structure_constants;  // flattened n^3, index (i*n + j)*n + k
  std::vector<Rat> unit;

  const Rat& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_constants[(i * dim + j) * dim + k];
  }
  Rat& sc(std::size_t i, std::size_t j, std::size_t k) { return structure_constants[(i * dim + j) * dim + k]; }
};

/// Linear functional on a StructureAlgebra, by its values on the basis.
struct LinearFunctional {
  std::vector<Rat> coefficients;

  Rat operator()(const std::vector<Rat>& x) const {
    if (x.size() != coefficients.size()) throw Error("DimensionMismatch", "functional applied to wrong dimension");
    Rat v;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) v += coefficients[i] * x[i];
    return v;
  }
};

inline void require_well_formed(const StructureAlgebra& a) {
  if (a.dim == 0) throw Error("InvalidAlgebra", "algebra must have positive dimension");
  if (a.structure_constants.size() != a.dim * a.dim * a.dim)
    throw Error("InvalidAlgebra", "structure constant array has wrong size");
  if (a.unit.size() != a.dim) throw Error("InvalidAlgebra", "unit vector has wrong size");
}

/// Bilinear product through the structure constants.
inline std::vector<Rat> multiply(const StructureAlgebra& a, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  require_well_formed(a);
  if (x.size() != a.dim || y.size() != a.dim)
    throw Error("DimensionMismatch", "multiply: operands must have length " + std::to_string(a.dim));
  std::vector<Rat> out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      const Rat xy = x[i] * y[j];
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rat& c = a.sc(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

inline std::vector<Rat> basis_vector(std::size_t dim, std::size_t i) {
  std::vector<Rat> v(dim);
  v[i] = Rat(1);
  return v;
}

/// Matrix of left multiplication by x: column b holds the coordinates of
/// x * e_b.
inline RatMatrix left_mult_matrix(const StructureAlgebra& a, const std::vector<Rat>& x) {
  RatMatrix m(a.dim, a.dim);
  for (std::size_t b = 0; b < a.dim; ++b) {
    const auto col = multiply(a, x, basis_vector(a.dim, b));
    for (std::size_t k = 0; k < a.dim; ++k) m(k, b) = col[k];
  }
  return m;
}

inline RatMatrix right_mult_matrix(const StructureAlgebra& a, const std::vector<Rat>& x) {
  RatMatrix m(a.dim, a.dim);
  for (std::size_t b = 0; b < a.dim; ++b) {
    const auto col = multiply(a, basis_vector(a.dim, b), x);
    for (std::size_t k = 0; k < a.dim; ++k) m(k, b) = col[k];
  }
  return m;
}

/// Checks associativity on all basis triples and the two-sided unit law.
/// Failures are findings, not errors; an empty report means the structure
/// constants define an algebra.
inline CheckReport check_axioms(const StructureAlgebra& a) {
  require_well_formed(a);
  CheckReport report;
  const std::size_t n = a.dim;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k vs e_i (e_j e_k), coefficient of e_l
        for (std::size_t l = 0; l < n; ++l) {
          Rat lhs, rhs;
          for (std::size_t m = 0; m < n; ++m) {
            if (!a.sc(i, j, m).is_zero()) lhs += a.sc(i, j, m) * a.sc(m, k, l);
            if (!a.sc(j, k, m).is_zero()) rhs += a.sc(j, k, m) * a.sc(i, m, l);
          }
          if (lhs != rhs) {
            report.add("assoc(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                       "coefficient of e_" + std::to_string(l) + ": " + lhs.str() + " != " + rhs.str());
            break;
          }
        }
      }

  for (std::size_t b = 0; b < n; ++b) {
    const auto eb = basis_vector(n, b);
    if (multiply(a, a.unit, eb) != eb) report.add("unit*e_" + std::to_string(b), "left unit law fails");
    if (multiply(a, eb, a.unit) != eb) report.add("e_" + std::to_string(b) + "*unit", "right unit law fails");
  }
  return report;
}

inline void require_algebra(const StructureAlgebra& a, const char* who) {
  if (!check_axioms(a).passed()) throw Error("InvalidAlgebra", std::string(who) + ": structure constant axioms fail");
}

/// Exact basis of the center {z : z x = x z for all x}, as the kernel of the
/// stacked commutator-with-basis map.
inline std::vector<std::vector<Rat>> center_basis(const StructureAlgebra& a) {
  require_algebra(a, "center_basis");
  const std::size_t n = a.dim;
  RatMatrix stacked(n * n, n);
  for (std::size_t b = 0; b < n; ++b) {
    // rows [b*n, b*n+n): coordinates of z*e_b - e_b*z as a function of z
    for (std::size_t zi = 0; zi < n; ++zi)
      for (std::size_t k = 0; k < n; ++k) stacked(b * n + k, zi) = a.sc(zi, b, k) - a.sc(b, zi, k);
  }
  std::vector<std::vector<Rat>> basis;
  for (const auto& v : kernel_basis(stacked)) basis.push_back(v.col_vector(0));
  return basis;
}

/// Basis of the commutator subspace span{x y - y x}; its codimension is
/// dim A/[A,A].
inline std::vector<std::vector<Rat>> commutator_subspace(const StructureAlgebra& a) {
  require_algebra(a, "commutator_subspace");
  const std::size_t n = a.dim;
  RatMatrix rows(n * n, n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j, ++r)
      for (std::size_t k = 0; k < n; ++k) rows(r, k) = a.sc(i, j, k) - a.sc(j, i, k);
  return row_space_basis(rows);
}

/// Gram matrix G[i][j] = form(e_i e_j).
inline RatMatrix gram_matrix(const StructureAlgebra& a, const LinearFunctional& form) {
  if (form.coefficients.size() != a.dim) throw Error("DimensionMismatch", "form has wrong dimension");
  RatMatrix g(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Rat v;
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!a.sc(i, j, k).is_zero()) v += a.sc(i, j, k) * form.coefficients[k];
      g(i, j) = v;
    }
  return g;
}

/// Symmetric Frobenius form check: symmetry of form(e_i e_j) in (i, j) and
/// nondegeneracy of its Gram matrix.
inline CheckReport check_symmetric_frobenius(const StructureAlgebra& a, const LinearFunctional& form) {
  require_algebra(a, "check_symmetric_frobenius");
  CheckReport report;
  const RatMatrix g = gram_matrix(a, form);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (g(i, j) != g(j, i))
        report.add("pair(e_" + std::to_string(i) + ",e_" + std::to_string(j) + ")",
                   "form(e_i e_j) = " + g(i, j).str() + " but form(e_j e_i) = " + g(j, i).str());
  const std::size_t rk = rank(g);
  if (rk != a.dim)
    report.add("gram", "pairing is degenerate: rank " + std::to_string(rk) + " < " + std::to_string(a.dim));
  return report;
}

/// Semisimplicity over Q via nondegeneracy of the trace form
/// T(x, y) = tr(L_x L_y) — valid in characteristic zero.
inline bool check_semisimple(const StructureAlgebra& a) {
  require_algebra(a, "check_semisimple");
  const std::size_t n = a.dim;
  std::vector<RatMatrix> left(n, RatMatrix());
  for (std::size_t b = 0; b < n; ++b) left[b] = left_mult_matrix(a, basis_vector(n, b));
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat v;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!left[i](p, q).is_zero()) v += left[i](p, q) * left[j](q, p);
      t(i, j) = v;
      t(j, i) = v;
    }
  return rank(t) == n;
}

struct GroupAlgebraResult {
  StructureAlgebra algebra;
  LinearFunctional form;  // coefficient of the group unit
};

/// Group algebra Q[G] from a multiplication table (table[i][j] = index of
/// g_i g_j), with the canonical symmetric form picking the unit coefficient.
/// The table is verified to be a group first.
inline GroupAlgebraResult group_algebra(const std::vector<std::vector<std::size_t>>& table, std::size_t unit_index) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("NotAGroup", "empty table");
  if (unit_index >= n) throw Error("NotAGroup", "unit index out of range");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("NotAGroup", "table is not square");
    for (auto v : row)
      if (v >= n) throw Error("NotAGroup", "table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[unit_index][i] != i || table[i][unit_index] != i)
      throw Error("NotAGroup", "unit law fails at element " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == unit_index && table[j][i] == unit_index) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw Error("NotAGroup", "element " + std::to_string(i) + " has no inverse");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw Error("NotAGroup", "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + ")");

  StructureAlgebra a;
  a.dim = n;
  a.structure_constants.assign(n * n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.sc(i, j, table[i][j]) = Rat(1);
  a.unit = basis_vector(n, unit_index);

  LinearFunctional form{std::vector<Rat>(n)};
  form.coefficients[unit_index] = Rat(1);
  return {std::move(a), std::move(form)};
}

}  // namespace frobfp

#endif  // FROBFP_ALGEBRA_HPP
