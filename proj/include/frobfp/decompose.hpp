#ifndef FROBFP_DECOMPOSE_HPP
#define FROBFP_DECOMPOSE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "frobfp/algebra.hpp"
#include "frobfp/linalg.hpp"
#include "frobfp/skeletal.hpp"

namespace frobfp {

namespace detail {

// Polynomials over Q as coefficient vectors, lowest degree first.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
  poly_trim(d);
  return d;
}

inline Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rat q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    poly_trim(a);
  }
  return a;
}

inline bool poly_is_squarefree(const Poly& p) {
  Poly a = p, b = poly_derivative(p);
  // Euclid; squarefree iff gcd with the derivative is constant.
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

/// Divides p by (x - root); remainder must vanish.
inline Poly poly_deflate(const Poly& p, const Rat& root) {
  Poly q(p.size() - 1);
  Rat carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  if (p[0] + carry * root != Rat(0)) throw std::logic_error("poly_deflate: not a root");
  return q;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}

/// All rational roots of p, with multiplicity, by the rational root theorem
/// on the denominator-cleared polynomial. remainder_degree reports what is
/// left after deflating every rational root (0 means p splits over Q).
struct RationalRoots {
  std::vector<Rat> roots;
  std::size_t remainder_degree = 0;
};

inline RationalRoots rational_roots(Poly p) {
  poly_trim(p);
  RationalRoots out;
  if (p.size() <= 1) return out;

  while (p.size() > 1) {
    if (p[0].is_zero()) {
      out.roots.push_back(Rat(0));
      p.erase(p.begin());
      continue;
    }
    // Clear denominators: candidates are ±num_div/den_div.
    mpz_class l(1);
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class a0 = Rat(Rat(mpz_class(l)) * p.front()).numerator();
    const mpz_class an = Rat(Rat(mpz_class(l)) * p.back()).numerator();

    bool found = false;
    for (const auto& num : positive_divisors(a0)) {
      for (const auto& den : positive_divisors(an)) {
        for (int sign : {1, -1}) {
          const Rat cand(mpz_class(sign * num));
          const Rat candidate = cand / Rat(mpz_class(den));
          if (poly_eval(p, candidate).is_zero()) {
            out.roots.push_back(candidate);
            p = poly_deflate(p, candidate);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;  // remaining factor has no rational root
  }
  out.remainder_degree = p.size() - 1;
  return out;
}

/// Monic minimal polynomial of z, from the first linear dependence among the
/// powers 1, z, z^2, ... (equivalently, powers of left multiplication by z
/// applied to the unit).
inline Poly minimal_polynomial(const StructureAlgebra& a, const std::vector<Rat>& z) {
  std::vector<std::vector<Rat>> powers{a.unit};
  for (std::size_t k = 1; k <= a.dim; ++k) {
    powers.push_back(multiply(a, powers.back(), z));
    RatMatrix lhs(a.dim, k);
    RatMatrix rhs(a.dim, 1);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < k; ++j) lhs(i, j) = powers[j][i];
      rhs(i, 0) = powers[k][i];
    }
    if (const auto c = solve(lhs, rhs)) {
      Poly m(k + 1);
      m[k] = Rat(1);
      for (std::size_t j = 0; j < k; ++j) m[j] = -(*c)(j, 0);
      return m;
    }
  }
  throw std::logic_error("minimal_polynomial: no dependence up to the algebra dimension");
}

}  // namespace detail

/// Wedderburn data at the structure-constant level: the skeletal block
/// dimensions together with the central primitive idempotents realizing
/// them. Block i of the skeleton is the block cut out by idempotents[i].
struct Decomposition {
  SemisimpleSkeleton skeleton;
  std::vector<std::vector<Rat>> idempotents;
};

struct DecomposeResult {
  Decomposition decomposition;
  FrobeniusAlgebra frobenius;
};

/// Decomposes a split semisimple symmetric Frobenius algebra into skeletal
/// form: draws a random central element (seeded), splits it through its
/// minimal polynomial (required squarefree with rational roots), forms the
/// Lagrange interpolation idempotents, and reads off block dimensions d_i
/// and form scalars lambda_i = form(e_i)/d_i. Blocks are sorted by
/// (dimension, lambda) so the output is independent of the seed.
inline DecomposeResult decompose(const StructureAlgebra& a, const LinearFunctional& form, std::uint64_t seed = 0) {
  require_algebra(a, "decompose");
  if (!check_semisimple(a)) throw Error("NotSemisimple", "trace form is degenerate");
  if (!check_symmetric_frobenius(a, form).passed())
    throw Error("InvalidForm", "form is not a symmetric nondegenerate Frobenius form");

  const auto center = center_basis(a);
  const std::size_t r = center.size();

  std::mt19937_64 rng(seed);
  std::vector<Rat> z;
  detail::Poly minpoly;
  std::vector<Rat> eigenvalues;

  constexpr int kMaxAttempts = 16;
  int attempt = 0;
  for (; attempt < kMaxAttempts; ++attempt) {
    const long spread = 4 + attempt;
    std::uniform_int_distribution<long> coeff(-spread, spread);
    z.assign(a.dim, Rat(0));
    for (const auto& basis_elem : center) {
      const Rat c(coeff(rng));
      for (std::size_t k = 0; k < a.dim; ++k) z[k] += c * basis_elem[k];
    }
    minpoly = detail::minimal_polynomial(a, z);
    if (!detail::poly_is_squarefree(minpoly))
      throw Error("NotSemisimple", "central element has non-squarefree minimal polynomial");
    const auto roots = detail::rational_roots(minpoly);
    if (roots.remainder_degree > 0)
      throw Error("NotSplit", "central element has irrational eigenvalues (minimal polynomial keeps a degree-" +
                                  std::to_string(roots.remainder_degree) + " factor)");
    if (roots.roots.size() == r) {
      eigenvalues = roots.roots;
      break;
    }
    // repeated eigenvalue across blocks: resample
  }
  if (attempt == kMaxAttempts)
    throw Error("DegenerateSample", "no central element with distinct eigenvalues after " +
                                        std::to_string(kMaxAttempts) + " attempts");

  std::sort(eigenvalues.begin(), eigenvalues.end());

  // Lagrange interpolation idempotents e_i = prod_{t != i} (z - mu_t)/(mu_i - mu_t).
  std::vector<std::vector<Rat>> idempotents;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rat> e = a.unit;
    for (std::size_t t = 0; t < r; ++t) {
      if (t == i) continue;
      std::vector<Rat> factor = z;
      for (std::size_t k = 0; k < a.dim; ++k) factor[k] -= eigenvalues[t] * a.unit[k];
      const Rat denom = eigenvalues[i] - eigenvalues[t];
      e = multiply(a, e, factor);
      for (auto& x : e) x /= denom;
    }
    idempotents.push_back(std::move(e));
  }

  // Internal consistency: orthogonal idempotents summing to the unit.
  std::vector<Rat> total(a.dim);
  for (const auto& e : idempotents)
    for (std::size_t k = 0; k < a.dim; ++k) total[k] += e[k];
  if (total != a.unit) throw std::logic_error("decompose: idempotents do not sum to the unit");
  for (std::size_t i = 0; i < r; ++i)
    if (multiply(a, idempotents[i], idempotents[i]) != idempotents[i])
      throw std::logic_error("decompose: Lagrange element is not idempotent");

  // Block dimensions: dim(A e_i) must be a perfect square d_i^2.
  struct Block {
    std::size_t d;
    Rat lambda;
    std::vector<Rat> idempotent;
  };
  std::vector<Block> blocks;
  std::size_t dim_sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    RatMatrix image(a.dim, a.dim);
    for (std::size_t b = 0; b < a.dim; ++b) {
      const auto col = multiply(a, basis_vector(a.dim, b), idempotents[i]);
      for (std::size_t k = 0; k < a.dim; ++k) image(k, b) = col[k];
    }
    const std::size_t block_dim = rank(image);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), mpz_class(static_cast<unsigned long>(block_dim)).get_mpz_t());
    const std::size_t d = root.get_ui();
    if (d * d != block_dim)
      throw Error("NotSplit", "block " + std::to_string(i + 1) + " has dimension " + std::to_string(block_dim) +
                                  ", not a perfect square");
    dim_sum += block_dim;
    const Rat lambda_i = form(idempotents[i]) / Rat(static_cast<long>(d));
    if (lambda_i.is_zero()) throw Error("InvalidForm", "form vanishes on a block identity");
    blocks.push_back({d, lambda_i, idempotents[i]});
  }
  if (dim_sum != a.dim) throw Error("NotSplit", "block dimensions do not fill the algebra");

  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    if (x.d != y.d) return x.d < y.d;
    return x.lambda < y.lambda;
  });

  DecomposeResult out;
  for (auto& blk : blocks) {
    out.decomposition.skeleton.block_dims.push_back(blk.d);
    out.decomposition.idempotents.push_back(std::move(blk.idempotent));
    out.frobenius.lambdas.push_back(blk.lambda);
  }
  out.frobenius.skeleton = out.decomposition.skeleton;
  return out;
}

/// Finds the central invertible z with form'(x) = form(z x) for all x, the
/// ratio between two symmetric Frobenius forms on the same algebra. Returns
/// nullopt when no such element exists (only possible when the inputs
/// violate the symmetric-Frobenius preconditions).
inline std::optional<std::vector<Rat>> frobenius_ratio(const StructureAlgebra& a, const LinearFunctional& form,
                                                       const LinearFunctional& form_prime) {
  require_algebra(a, "frobenius_ratio");
  if (form.coefficients.size() != a.dim || form_prime.coefficients.size() != a.dim)
    throw Error("DimensionMismatch", "frobenius_ratio: functional dimension mismatch");

  // form(z e_j) = sum_i z_i form(e_i e_j): solve G^T z = form'.
  const RatMatrix g = gram_matrix(a, form);
  RatMatrix rhs(a.dim, 1);
  for (std::size_t j = 0; j < a.dim; ++j) rhs(j, 0) = form_prime.coefficients[j];
  const auto sol = solve(g.transposed(), rhs);
  if (!sol) return std::nullopt;
  const std::vector<Rat> z = sol->col_vector(0);

  // Verify the defining identity, centrality and invertibility.
  for (std::size_t j = 0; j < a.dim; ++j) {
    if (form(multiply(a, z, basis_vector(a.dim, j))) != form_prime.coefficients[j]) return std::nullopt;
    const auto ej = basis_vector(a.dim, j);
    if (multiply(a, z, ej) != multiply(a, ej, z)) return std::nullopt;
  }
  RatMatrix unit_col(a.dim, 1);
  for (std::size_t k = 0; k < a.dim; ++k) unit_col(k, 0) = a.unit[k];
  if (!solve(left_mult_matrix(a, z), unit_col)) return std::nullopt;
  return z;
}

}  // namespace frobfp

#endif  // FROBFP_DECOMPOSE_HPP
