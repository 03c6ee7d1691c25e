#ifndef FROBFP_CYCAT_HPP
#define FROBFP_CYCAT_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobfp/linalg.hpp"
#include "frobfp/matrix.hpp"
#include "frobfp/skeletal.hpp"

namespace frobfp {

/// Skeletal finite semisimple linear category with a trace on every
/// endomorphism algebra: r simple objects and the trace scalar on each.
/// Zero traces are representable so that the axiom checker can witness how
/// nondegeneracy fails.
struct CYCategory {
  std::size_t simples = 0;
  std::vector<Rat> traces;
};

/// Object up to isomorphism: multiplicities of the simples.
struct CYObject {
  std::vector<std::size_t> multiplicities;
};

/// Morphism between objects c -> d: one mult(d)_i x mult(c)_i block per
/// simple. Endomorphisms are the square case.
struct CYHom {
  std::vector<RatMatrix> blocks;
};

using CYEndo = CYHom;

/// Skeletal linear equivalence between CY categories: a permutation of the
/// simples.
struct CYFunctorData {
  Permutation perm;
};

inline void require_cy_shapes(const CYCategory& cy, const CYObject& c, const char* who) {
  if (cy.traces.size() != cy.simples)
    throw Error("ShapeMismatch", std::string(who) + ": category needs one trace per simple");
  if (c.multiplicities.size() != cy.simples)
    throw Error("ShapeMismatch", std::string(who) + ": object multiplicities do not match the simples");
}

inline void require_hom_shape(const CYObject& from, const CYObject& to, const CYHom& h, const char* who) {
  if (h.blocks.size() != from.multiplicities.size() || to.multiplicities.size() != from.multiplicities.size())
    throw Error("ShapeMismatch", std::string(who) + ": block count mismatch");
  for (std::size_t i = 0; i < h.blocks.size(); ++i)
    if (h.blocks[i].rows() != to.multiplicities[i] || h.blocks[i].cols() != from.multiplicities[i])
      throw Error("ShapeMismatch", std::string(who) + ": block " + std::to_string(i + 1) + " has shape " +
                                       std::to_string(h.blocks[i].rows()) + "x" + std::to_string(h.blocks[i].cols()));
}

inline CYHom compose_hom(const CYHom& second, const CYHom& first) {
  if (second.blocks.size() != first.blocks.size()) throw Error("ShapeMismatch", "compose_hom: block count mismatch");
  CYHom out;
  out.blocks.reserve(first.blocks.size());
  for (std::size_t i = 0; i < first.blocks.size(); ++i) out.blocks.push_back(second.blocks[i] * first.blocks[i]);
  return out;
}

inline CYObject direct_sum(const CYObject& c, const CYObject& d) {
  CYObject out = c;
  for (std::size_t i = 0; i < out.multiplicities.size(); ++i) out.multiplicities[i] += d.multiplicities[i];
  return out;
}

inline CYEndo direct_sum_endo(const CYObject& c, const CYEndo& f, const CYObject& d, const CYEndo& g) {
  CYEndo out;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const std::size_t mc = c.multiplicities[i], md = d.multiplicities[i];
    RatMatrix blk(mc + md, mc + md);
    for (std::size_t p = 0; p < mc; ++p)
      for (std::size_t q = 0; q < mc; ++q) blk(p, q) = f.blocks[i](p, q);
    for (std::size_t p = 0; p < md; ++p)
      for (std::size_t q = 0; q < md; ++q) blk(mc + p, mc + q) = g.blocks[i](p, q);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

/// tr^C_c(f) = sum_i traces[i] * tr(block_i).
inline Rat trace_of(const CYCategory& cy, const CYObject& c, const CYEndo& f) {
  require_cy_shapes(cy, c, "trace_of");
  require_hom_shape(c, c, f, "trace_of");
  Rat t;
  for (std::size_t i = 0; i < cy.simples; ++i) t += cy.traces[i] * trace(f.blocks[i]);
  return t;
}

namespace detail {

inline Rat random_small_rat(std::mt19937_64& rng) {
  // nonzero scalars from {+-1..+-5, +-1/2, +-1/3}
  static const long nums[] = {1, 2, 3, 4, 5};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> sign(0, 1);
  const int k = pick(rng);
  Rat v = (k < 5) ? Rat(nums[k]) : (k == 5 ? Rat(1, 2) : Rat(1, 3));
  return sign(rng) ? v : -v;
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(entry(rng));
  return m;
}

inline CYHom random_hom(std::mt19937_64& rng, const CYObject& from, const CYObject& to) {
  CYHom h;
  for (std::size_t i = 0; i < from.multiplicities.size(); ++i)
    h.blocks.push_back(random_matrix(rng, to.multiplicities[i], from.multiplicities[i]));
  return h;
}

/// Gram matrix of the pairing Hom(c,d) x Hom(d,c) -> K on the matrix-unit
/// bases; nondegeneracy is full rank.
inline RatMatrix pairing_gram(const CYCategory& cy, const CYObject& c, const CYObject& d) {
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> basis_cd, basis_dc;
  for (std::size_t i = 0; i < cy.simples; ++i) {
    for (std::size_t p = 0; p < d.multiplicities[i]; ++p)
      for (std::size_t q = 0; q < c.multiplicities[i]; ++q) basis_cd.push_back({i, {p, q}});
    for (std::size_t p = 0; p < c.multiplicities[i]; ++p)
      for (std::size_t q = 0; q < d.multiplicities[i]; ++q) basis_dc.push_back({i, {p, q}});
  }
  RatMatrix gram(basis_cd.size(), basis_dc.size());
  for (std::size_t a = 0; a < basis_cd.size(); ++a)
    for (std::size_t b = 0; b < basis_dc.size(); ++b) {
      const auto& [i, pq] = basis_cd[a];
      const auto& [j, uv] = basis_dc[b];
      if (i != j) continue;  // cross-simple pairings vanish blockwise
      // tr(E_uv E_pq) = delta_{v p} delta_{u q}
      if (uv.second == pq.first && uv.first == pq.second) gram(a, b) = cy.traces[i];
    }
  return gram;
}

}  // namespace detail

/// Checks the trace axioms on the sampled objects: cyclicity of the pairing
/// on random Hom blocks, additivity under direct sums, and nondegeneracy of
/// the pairing Gram matrix (equivalent to every trace scalar being nonzero;
/// both routes are evaluated and cross-checked).
inline CheckReport check_cy_axioms(const CYCategory& cy, const std::vector<CYObject>& sample_objects,
                                   std::uint64_t seed = 0) {
  if (cy.traces.size() != cy.simples)
    throw Error("ShapeMismatch", "check_cy_axioms: category needs one trace per simple");
  CheckReport report;
  std::mt19937_64 rng(seed);

  for (std::size_t oi = 0; oi < sample_objects.size(); ++oi) {
    const auto& c = sample_objects[oi];
    require_cy_shapes(cy, c, "check_cy_axioms");
    for (std::size_t oj = 0; oj < sample_objects.size(); ++oj) {
      const auto& d = sample_objects[oj];

      // (1) cyclicity on random f: c -> d, g: d -> c
      for (int rep = 0; rep < 4; ++rep) {
        const auto f = detail::random_hom(rng, c, d);
        const auto g = detail::random_hom(rng, d, c);
        if (trace_of(cy, c, compose_hom(g, f)) != trace_of(cy, d, compose_hom(f, g)))
          report.add("objects (" + std::to_string(oi + 1) + "," + std::to_string(oj + 1) + ")",
                     "cyclicity tr(g f) = tr(f g) fails");
      }

      // (3) nondegeneracy of the pairing on Hom(c,d) x Hom(d,c)
      const auto gram = detail::pairing_gram(cy, c, d);
      const bool full_rank = rank(gram) == gram.rows();
      bool traces_nonzero = true;
      for (std::size_t i = 0; i < cy.simples; ++i)
        if (c.multiplicities[i] > 0 && d.multiplicities[i] > 0 && cy.traces[i].is_zero()) traces_nonzero = false;
      if (!full_rank)
        report.add("objects (" + std::to_string(oi + 1) + "," + std::to_string(oj + 1) + ")",
                   "trace pairing is degenerate (Gram rank " + std::to_string(rank(gram)) + " of " +
                       std::to_string(gram.rows()) + ")");
      if (full_rank != traces_nonzero)
        report.add("objects (" + std::to_string(oi + 1) + "," + std::to_string(oj + 1) + ")",
                   "internal: Gram rank disagrees with the nonzero-trace criterion");
    }

    // (2) additivity on direct sums
    for (std::size_t oj = 0; oj < sample_objects.size(); ++oj) {
      const auto& d = sample_objects[oj];
      const auto f = detail::random_hom(rng, c, c);
      const auto g = detail::random_hom(rng, d, d);
      const auto sum = direct_sum(c, d);
      const auto fg = direct_sum_endo(c, f, d, g);
      if (trace_of(cy, sum, fg) != trace_of(cy, c, f) + trace_of(cy, d, g))
        report.add("objects (" + std::to_string(oi + 1) + "," + std::to_string(oj + 1) + ")",
                   "additivity tr(f (+) g) = tr(f) + tr(g) fails");
    }
  }
  return report;
}

/// A linear equivalence is a CY functor iff it matches the traces along the
/// permutation of simples.
inline bool check_cy_functor(const CYCategory& src, const CYCategory& dst, const CYFunctorData& f) {
  if (src.simples != dst.simples)
    throw Error("SimpleCountMismatch", "functor between categories with " + std::to_string(src.simples) + " and " +
                                           std::to_string(dst.simples) + " simples");
  if (f.perm.size() != src.simples || !is_permutation(f.perm))
    throw Error("ShapeMismatch", "check_cy_functor: perm is not a permutation of the simples");
  if (src.traces.size() != src.simples || dst.traces.size() != dst.simples)
    throw Error("ShapeMismatch", "check_cy_functor: trace vectors have wrong size");
  for (std::size_t i = 0; i < src.simples; ++i)
    if (src.traces[i] != dst.traces[f.perm[i]]) return false;
  return true;
}

/// Hattori-Stallings trace of f on the module (+) S_i^{m_i}, in the
/// block-trace chart of A/[A,A]: component i is tr(block_i). The class of a
/// rank-one idempotent in block i is the i-th chart basis vector.
inline std::vector<Rat> hs_trace(const SemisimpleSkeleton& a, const CYObject& module, const CYEndo& f) {
  if (module.multiplicities.size() != a.block_count())
    throw Error("ShapeMismatch", "hs_trace: module does not match the skeleton");
  require_hom_shape(module, module, f, "hs_trace");
  std::vector<Rat> out(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) out[i] = trace(f.blocks[i]);
  return out;
}

/// The representation category of a skeletal Frobenius algebra, with the CY
/// structure obtained by following the Hattori-Stallings trace with the
/// form: t_i = lambda_i.
inline CYCategory rep_object(const FrobeniusAlgebra& a) {
  require_frobenius_algebra(a, "rep_object");
  if (!a.has_form()) throw Error("MissingFrobeniusData", "rep_object needs a Frobenius form");
  return CYCategory{a.block_count(), a.lambdas};
}

/// Tensoring with the Morita bimodule permutes the simples.
inline CYFunctorData rep_morphism(const MoritaContext& m) {
  require_valid_context(m, "rep_morphism");
  return CYFunctorData{m.perm};
}

}  // namespace frobfp

#endif  // FROBFP_CYCAT_HPP
