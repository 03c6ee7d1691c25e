#ifndef FROBFP_SKELETAL_HPP
#define FROBFP_SKELETAL_HPP

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "frobfp/matrix.hpp"
#include "frobfp/rational.hpp"
#include "frobfp/report.hpp"

namespace frobfp {

// ---------------------------------------------------------------------------
// Permutations (0-based internally; JSON uses 1-based entries)
// ---------------------------------------------------------------------------

using Permutation = std::vector<std::size_t>;

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Permutation identity_permutation(std::size_t r) {
  Permutation p(r);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline Permutation compose_permutations(const Permutation& outer, const Permutation& inner) {
  Permutation p(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) p[i] = outer[inner[i]];
  return p;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

/// Matrix with P[p[i]][i] = 1: sends the i-th basis vector to the p(i)-th.
inline RatMatrix permutation_matrix(const Permutation& p) {
  RatMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = Rat(1);
  return m;
}

// ---------------------------------------------------------------------------
// Skeletal semisimple data
// ---------------------------------------------------------------------------

/// A split semisimple algebra up to isomorphism: the list of matrix-block
/// dimensions [d_1..d_r].
struct SemisimpleSkeleton {
  std::vector<std::size_t> block_dims;

  std::size_t block_count() const { return block_dims.size(); }
  std::size_t total_dim() const {
    std::size_t n = 0;
    for (auto d : block_dims) n += d * d;
    return n;
  }

  friend bool operator==(const SemisimpleSkeleton&, const SemisimpleSkeleton&) = default;
};

/// Skeleton plus the symmetric Frobenius form in block coordinates: the form
/// is the sum of lambdas[i] times the i-th block trace. An empty lambdas
/// vector means "skeleton only, no form chosen".
struct FrobeniusAlgebra {
  SemisimpleSkeleton skeleton;
  std::vector<Rat> lambdas;

  bool has_form() const { return !lambdas.empty(); }
  std::size_t block_count() const { return skeleton.block_count(); }

  friend bool operator==(const FrobeniusAlgebra&, const FrobeniusAlgebra&) = default;
};

inline void require_skeleton(const SemisimpleSkeleton& s, const std::string& who) {
  if (s.block_count() == 0) throw Error("InvalidContext", who + ": skeleton needs at least one block");
  for (auto d : s.block_dims)
    if (d == 0) throw Error("InvalidContext", who + ": block dimensions must be positive");
}

inline void require_frobenius_algebra(const FrobeniusAlgebra& a, const std::string& who) {
  require_skeleton(a.skeleton, who);
  if (!a.has_form()) return;
  if (a.lambdas.size() != a.block_count())
    throw Error("InvalidContext", who + ": lambdas size differs from block count");
  for (std::size_t i = 0; i < a.lambdas.size(); ++i)
    if (a.lambdas[i].is_zero())
      throw Error("InvalidContext", who + ": lambda on block " + std::to_string(i + 1) + " is zero");
}

/// Bimodule between skeletal semisimple algebras, recorded by its simple
/// multiplicities: mult[j][i] copies of T_j (x) S_i.
struct SkeletalBimodule {
  SemisimpleSkeleton source;  // r simples S_i
  SemisimpleSkeleton target;  // s simples T_j
  std::vector<std::vector<std::size_t>> mult;  // s rows by r columns
};

/// Part of a Morita equivalence: true iff the multiplicity matrix is a
/// permutation matrix, i.e. exactly one T (x) S summand per block on either
/// side.
inline bool is_morita_bimodule(const SkeletalBimodule& m) {
  const std::size_t r = m.source.block_count();
  if (m.target.block_count() != r)
    throw Error("BlockCountMismatch", "bimodule between skeletons with " + std::to_string(r) + " and " +
                                          std::to_string(m.target.block_count()) + " blocks");
  if (m.mult.size() != r) return false;
  std::vector<std::size_t> row_sum(r, 0), col_sum(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    if (m.mult[j].size() != r) return false;
    for (std::size_t i = 0; i < r; ++i) {
      if (m.mult[j][i] > 1) return false;
      row_sum[j] += m.mult[j][i];
      col_sum[i] += m.mult[j][i];
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    if (row_sum[i] != 1 || col_sum[i] != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Morita contexts in skeletal normal form
// ---------------------------------------------------------------------------

/// Morita context (M, N, eps, eta) between skeletal algebras, in normal form:
/// M = (+)_i T_{perm(i)} (x) S_i, N the mirror, and the bimodule isomorphisms
/// eps: N (x)_B M -> A and eta: B -> M (x)_A N reduced to one nonzero scalar
/// per source block.
///
/// Scalar convention: eta[i] is read against the dual-basis identification of
/// B with M (x)_A N — the chart in which the two snake composites are
/// identities exactly when eps[i] = eta[i]. Blockwise the snake triangles
/// evaluate to eps[i]/eta[i] on M and eta[i]/eps[i] on N, so the context
/// axioms hold iff eps[i] = eta[i] for every block, and the identity context
/// (all scalars 1) is valid.
struct MoritaContext {
  FrobeniusAlgebra source;  // A, blocks indexed by i
  FrobeniusAlgebra target;  // B, block perm[i] pairs with source block i
  Permutation perm;
  std::vector<Rat> eps;  // per source block
  std::vector<Rat> eta;  // per source block
};

/// Structural validity: matching block counts, genuine permutation, block
/// dimensions aligned along perm, scalars present and nonzero. Throws
/// Error("InvalidContext") otherwise; the eps = eta axiom is *not* assumed
/// here (check_morita_axioms reports on it).
inline void require_context_shape(const MoritaContext& m) {
  require_frobenius_algebra(m.source, "context source");
  require_frobenius_algebra(m.target, "context target");
  const std::size_t r = m.source.block_count();
  if (m.target.block_count() != r)
    throw Error("InvalidContext", "source has " + std::to_string(r) + " blocks, target has " +
                                      std::to_string(m.target.block_count()));
  if (m.perm.size() != r || !is_permutation(m.perm))
    throw Error("InvalidContext", "perm is not a permutation of the blocks");
  for (std::size_t i = 0; i < r; ++i)
    if (m.source.skeleton.block_dims[i] != m.target.skeleton.block_dims[m.perm[i]])
      throw Error("InvalidContext", "block " + std::to_string(i + 1) + " has dimension " +
                                        std::to_string(m.source.skeleton.block_dims[i]) +
                                        " but pairs with target dimension " +
                                        std::to_string(m.target.skeleton.block_dims[m.perm[i]]));
  if (m.eps.size() != r || m.eta.size() != r)
    throw Error("InvalidContext", "eps/eta must carry one scalar per block");
  for (std::size_t i = 0; i < r; ++i)
    if (m.eps[i].is_zero() || m.eta[i].is_zero())
      throw Error("InvalidContext", "eps/eta scalar on block " + std::to_string(i + 1) + " is zero");
}

inline MoritaContext identity_context(const FrobeniusAlgebra& a) {
  const std::size_t r = a.block_count();
  return MoritaContext{a, a, identity_permutation(r), std::vector<Rat>(r, Rat(1)), std::vector<Rat>(r, Rat(1))};
}

/// The multiplicity matrix of the underlying bimodule M.
inline SkeletalBimodule underlying_bimodule(const MoritaContext& m) {
  require_context_shape(m);
  const std::size_t r = m.source.block_count();
  SkeletalBimodule b{m.source.skeleton, m.target.skeleton,
                     std::vector<std::vector<std::size_t>>(r, std::vector<std::size_t>(r, 0))};
  for (std::size_t i = 0; i < r; ++i) b.mult[m.perm[i]][i] = 1;
  return b;
}

/// Evaluates both snake diagrams blockwise; in normal form both reduce to
/// eps[i] = eta[i] (see the scalar convention above). Failing blocks are
/// reported.
inline CheckReport check_morita_axioms(const MoritaContext& m) {
  require_context_shape(m);
  CheckReport report;
  for (std::size_t i = 0; i < m.eps.size(); ++i) {
    const Rat snake_m = m.eps[i] / m.eta[i];  // composite on M
    const Rat snake_n = m.eta[i] / m.eps[i];  // composite on N
    if (!snake_m.is_one() || !snake_n.is_one())
      report.add("block " + std::to_string(i + 1),
                 "snake composites are " + snake_m.str() + " and " + snake_n.str() + " (need 1 = 1): eps = " +
                     m.eps[i].str() + ", eta = " + m.eta[i].str());
  }
  return report;
}

inline bool is_valid_context(const MoritaContext& m) { return check_morita_axioms(m).passed(); }

inline void require_valid_context(const MoritaContext& m, const char* who) {
  const auto report = check_morita_axioms(m);
  if (!report.passed())
    throw Error("InvalidContext", std::string(who) + ": context fails Morita axioms on " +
                                      std::to_string(report.findings.size()) + " block(s)");
}

/// Composite context: first m1 (A -> B), then m2 (B -> C). Scalars compose
/// multiplicatively along m1's permutation.
inline MoritaContext compose(const MoritaContext& m2, const MoritaContext& m1) {
  if (!(m1.target == m2.source))
    throw Error("SourceTargetMismatch", "compose: middle algebras differ");
  require_valid_context(m1, "compose");
  require_valid_context(m2, "compose");
  const std::size_t r = m1.source.block_count();
  MoritaContext c{m1.source, m2.target, compose_permutations(m2.perm, m1.perm), std::vector<Rat>(r),
                  std::vector<Rat>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    c.eps[i] = m1.eps[i] * m2.eps[m1.perm[i]];
    c.eta[i] = m1.eta[i] * m2.eta[m1.perm[i]];
  }
  return c;
}

/// Inverse context: perm inverted, scalars inverted and transported so that
/// compose(invert(m), m) is the identity context on the source.
inline MoritaContext invert(const MoritaContext& m) {
  require_valid_context(m, "invert");
  const std::size_t r = m.source.block_count();
  MoritaContext inv{m.target, m.source, inverse_permutation(m.perm), std::vector<Rat>(r), std::vector<Rat>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    inv.eps[m.perm[i]] = m.eps[i].inverse();
    inv.eta[m.perm[i]] = m.eta[i].inverse();
  }
  return inv;
}

/// The induced isomorphism A/[A,A] -> B/[B,B] in block-trace coordinates.
/// Since [A,A] is exactly the trace-zero part, A/[A,A] has the block traces
/// as canonical chart, and the induced map is the permutation matrix of
/// perm — independent of the eps/eta scalars.
inline RatMatrix induced_f(const MoritaContext& m) {
  require_valid_context(m, "induced_f");
  return permutation_matrix(m.perm);
}

enum class CompatMode {
  Diagram = 1,          // lambda^B after induced_f equals lambda^A on the chart basis
  CentralElements = 2,  // m.a = b.m and n.b^{-1} = a^{-1}.n blockwise
  BlockScalars = 3,     // lambda^A_i = lambda^B_{perm(i)}
};

/// The three equivalent formulations of compatibility between a Morita
/// context and the Frobenius forms. All modes agree on every valid input;
/// they evaluate along different routes.
inline bool check_compatible(const MoritaContext& m, CompatMode mode) {
  require_valid_context(m, "check_compatible");
  if (!m.source.has_form() || !m.target.has_form())
    throw Error("MissingFrobeniusData", "check_compatible needs Frobenius forms on both algebras");
  const std::size_t r = m.source.block_count();

  switch (mode) {
    case CompatMode::Diagram: {
      // Row vectors of the two forms in trace coordinates; the diagram
      // commutes iff lambda^B . f = lambda^A as functionals.
      RatMatrix lam_a(1, r), lam_b(1, r);
      for (std::size_t i = 0; i < r; ++i) {
        lam_a(0, i) = m.source.lambdas[i];
        lam_b(0, i) = m.target.lambdas[i];
      }
      return lam_b * induced_f(m) == lam_a;
    }
    case CompatMode::CentralElements: {
      // a = (lambda^A_i) in Z(A), b = (lambda^B_j) in Z(B). On the summand
      // T_{perm(i)} (x) S_i the right a-action is the scalar lambda^A_i and
      // the left b-action the scalar lambda^B_{perm(i)}.
      for (std::size_t i = 0; i < r; ++i) {
        const Rat& a_i = m.source.lambdas[i];
        const Rat& b_i = m.target.lambdas[m.perm[i]];
        if (a_i != b_i) return false;                      // m.a = b.m
        if (b_i.inverse() != a_i.inverse()) return false;  // n.b^{-1} = a^{-1}.n
      }
      return true;
    }
    case CompatMode::BlockScalars: {
      for (std::size_t i = 0; i < r; ++i)
        if (m.source.lambdas[i] != m.target.lambdas[m.perm[i]]) return false;
      return true;
    }
  }
  throw Error("InvalidContext", "check_compatible: unknown mode");
}

// ---------------------------------------------------------------------------
// Morphisms of Morita contexts
// ---------------------------------------------------------------------------

/// Morphism of Morita contexts (f: M -> M', g: N -> N'), blockwise scalars
/// indexed by the source algebra's blocks. Only defined between contexts
/// with equal permutation.
struct MoritaMorphism {
  std::vector<Rat> f_scalars;
  std::vector<Rat> g_scalars;

  std::size_t block_count() const { return f_scalars.size(); }

  friend bool operator==(const MoritaMorphism&, const MoritaMorphism&) = default;
};

inline void require_morphism_shape(const MoritaMorphism& p, std::size_t r, const char* who) {
  if (p.f_scalars.size() != r || p.g_scalars.size() != r)
    throw Error("ShapeMismatch", std::string(who) + ": morphism must carry one f and one g scalar per block");
  for (std::size_t i = 0; i < r; ++i)
    if (p.f_scalars[i].is_zero() || p.g_scalars[i].is_zero())
      throw Error("ShapeMismatch", std::string(who) + ": morphism scalar on block " + std::to_string(i + 1) + " is zero");
}

/// The two triangle conditions of a morphism of Morita contexts:
/// f_i g_i eta_i = eta'_i and eps'_i g_i f_i = eps_i.
inline bool check_context_morphism(const MoritaContext& m, const MoritaContext& mp, const MoritaMorphism& phi) {
  require_context_shape(m);
  require_context_shape(mp);
  if (m.perm != mp.perm) throw Error("PermMismatch", "context morphism between contexts with different perms");
  const std::size_t r = m.source.block_count();
  require_morphism_shape(phi, r, "check_context_morphism");
  for (std::size_t i = 0; i < r; ++i) {
    if (phi.f_scalars[i] * phi.g_scalars[i] * m.eta[i] != mp.eta[i]) return false;
    if (mp.eps[i] * phi.g_scalars[i] * phi.f_scalars[i] != m.eps[i]) return false;
  }
  return true;
}

inline MoritaMorphism identity_morphism(std::size_t r) {
  return MoritaMorphism{std::vector<Rat>(r, Rat(1)), std::vector<Rat>(r, Rat(1))};
}

/// Vertical composite: second after first, blockwise products.
inline MoritaMorphism vcompose(const MoritaMorphism& second, const MoritaMorphism& first) {
  if (second.block_count() != first.block_count() || second.g_scalars.size() != first.g_scalars.size())
    throw Error("ShapeMismatch", "vcompose: block counts differ");
  MoritaMorphism out = first;
  for (std::size_t i = 0; i < out.f_scalars.size(); ++i) {
    out.f_scalars[i] *= second.f_scalars[i];
    out.g_scalars[i] *= second.g_scalars[i];
  }
  return out;
}

/// Horizontal composite outer * inner for 2-morphisms on composable legs:
/// inner sits on the first-applied leg; outer's scalars are transported back
/// along the permutation of inner's source context.
inline MoritaMorphism hcompose(const MoritaMorphism& outer, const MoritaMorphism& inner,
                               const Permutation& inner_source_perm) {
  const std::size_t r = inner.block_count();
  if (inner_source_perm.size() != r || outer.block_count() != r)
    throw Error("ShapeMismatch", "hcompose: block counts differ");
  MoritaMorphism out{std::vector<Rat>(r), std::vector<Rat>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    out.f_scalars[i] = inner.f_scalars[i] * outer.f_scalars[inner_source_perm[i]];
    out.g_scalars[i] = inner.g_scalars[i] * outer.g_scalars[inner_source_perm[i]];
  }
  return out;
}

inline MoritaMorphism invert(const MoritaMorphism& p) {
  MoritaMorphism out = p;
  for (auto& x : out.f_scalars) x = x.inverse();
  for (auto& x : out.g_scalars) x = x.inverse();
  return out;
}

}  // namespace frobfp

#endif  // FROBFP_SKELETAL_HPP
