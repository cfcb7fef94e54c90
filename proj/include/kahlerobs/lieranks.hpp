// Graded ranks of Malcev Lie algebras, their quadratic (holonomy) models,
// and the maps induced by homomorphisms.

#ifndef KAHLEROBS_LIERANKS_HPP_
#define KAHLEROBS_LIERANKS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_hom.hpp"
#include "homology.hpp"
#include "intlinalg.hpp"
#include "magnus.hpp"
#include "presentation.hpp"
#include "quotient_algebra.hpp"
#include "sparse.hpp"
#include "verify.hpp"

namespace kahlerobs {

  /// dim gr_n of the rational lower central series, n = 1..d.
  inline GradedRanks lcs_ranks(Presentation const& p,
                               std::size_t         d,
                               std::size_t budget = QuotientAlgebra::default_budget) {
    return lie_ranks(QuotientAlgebra::of_presentation(p, d, budget));
  }

  /// Tensor algebra on H_1 tensor Q modulo the quadratic relations dual to
  /// the cup product. Variable i is dual to cup_injectivity_check(p)
  /// .h1_basis[i].
  inline QuotientAlgebra holonomy_algebra(
      Presentation const& p,
      std::size_t         d,
      std::size_t         budget = QuotientAlgebra::default_budget) {
    CupInjectivity cup = cup_injectivity_check(p);
    std::size_t    b   = cup.h1_basis.size();
    std::size_t    pairs = cup.wedge_basis.size();
    // Relations: the annihilator of the cup-product kernel.
    RatMatrix kernel(cup.kernel.size(), pairs);
    for (std::size_t i = 0; i < cup.kernel.size(); ++i) {
      for (std::size_t k = 0; k < pairs; ++k) {
        kernel(i, k) = cup.kernel[i][k];
      }
    }
    if (MonomialIndex::dimension(b, d) > budget) {
      throw BudgetExceeded(MonomialIndex::dimension(b, d), budget);
    }
    std::vector<TruncatedSeries> seeds;
    for (auto const& k : nullspace(kernel)) {
      TruncatedSeries s(b, d);
      for (std::size_t w = 0; w < pairs; ++w) {
        if (k[w] == 0 || d < 2) {
          continue;
        }
        auto [i, j]      = cup.wedge_basis[w];
        auto        ii   = static_cast<std::uint32_t>(i);
        auto        jj   = static_cast<std::uint32_t>(j);
        mpq_class   neg  = -k[w];
        s.add_term(Monomial{ii, jj}, k[w]);
        s.add_term(Monomial{jj, ii}, neg);
      }
      seeds.push_back(std::move(s));
    }
    return QuotientAlgebra(b, d, seeds, budget);
  }

  inline GradedRanks holonomy_ranks(Presentation const& p,
                                    std::size_t         d,
                                    std::size_t budget = QuotientAlgebra::default_budget) {
    return lie_ranks(holonomy_algebra(p, d, budget));
  }

  struct FormalityResult {
    GradedRanks                lcs;
    GradedRanks                holonomy;
    std::optional<std::size_t> witness_degree;  // first mismatch

    bool fires() const noexcept {
      return witness_degree.has_value();
    }
  };

  /// Compares lcs and holonomy ranks up to degree d >= 3. A mismatch shows
  /// the Malcev Lie algebra is not quadratically presented.
  inline FormalityResult formality_test(Presentation const& p,
                                        std::size_t         d,
                                        std::size_t budget = QuotientAlgebra::default_budget) {
    if (d < 3) {
      throw InputError("formality test needs degree at least 3");
    }
    FormalityResult r{lcs_ranks(p, d, budget), holonomy_ranks(p, d, budget), {}};
    for (std::size_t n = 1; n <= 2; ++n) {
      if (r.lcs[n] != r.holonomy[n]) {
        throw std::logic_error("lcs and holonomy ranks differ in degree "
                               + std::to_string(n));
      }
    }
    for (std::size_t n = 3; n <= d; ++n) {
      if (r.lcs[n] != r.holonomy[n]) {
        r.witness_degree = n;
        break;
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Malcev maps
  ////////////////////////////////////////////////////////////////////////

  /// A left-normed bracket [g_w0, [g_w1, [..., g_wk]]] of chosen generators
  /// together with its value.
  struct LieElement {
    std::vector<std::uint32_t> word;
    TruncatedSeries            value;
  };

  /// Entry k-1: brackets of length k in the given generators, pruned to a
  /// basis of their span modulo the ideal.
  inline std::vector<std::vector<LieElement>> bracket_spans(
      QuotientAlgebra const&              q,
      std::vector<TruncatedSeries> const& gens) {
    std::vector<std::vector<LieElement>> spans;
    for (std::size_t k = 1; k <= q.degree(); ++k) {
      SparseEchelon           e = q.ideal();
      std::vector<LieElement> kept;
      auto                    consider = [&](LieElement c) {
        if (e.insert(c.value.to_sparse(q.index()))) {
          kept.push_back(std::move(c));
        }
      };
      for (std::uint32_t i = 0; i < gens.size(); ++i) {
        if (k == 1) {
          consider({{i}, gens[i]});
          continue;
        }
        for (auto const& b : spans.back()) {
          std::vector<std::uint32_t> w{i};
          w.insert(w.end(), b.word.begin(), b.word.end());
          consider({std::move(w), bracket(gens[i], b.value)});
        }
      }
      spans.push_back(std::move(kept));
    }
    return spans;
  }

  /// log(1 + x_i) for every generator: the Lie generators of the Malcev
  /// algebra inside the completed group algebra.
  inline std::vector<TruncatedSeries> malcev_generators(std::size_t g,
                                                        std::size_t d) {
    std::vector<TruncatedSeries> out;
    for (std::uint32_t i = 0; i < g; ++i) {
      out.push_back(series_log(TruncatedSeries::one(g, d)
                               + TruncatedSeries::variable(g, d, i)));
    }
    return out;
  }

  /// A basis of L/C^{d+1} made of brackets of the Malcev generators, with
  /// filtration degrees: the elements of degree >= n span C^n.
  struct FilteredBasis {
    std::vector<LieElement>  elements;
    std::vector<std::size_t> degrees;
  };

  inline FilteredBasis filtered_basis(QuotientAlgebra const& q) {
    auto spans = bracket_spans(q, malcev_generators(q.num_gens(), q.degree()));
    SparseEchelon e = q.ideal();
    FilteredBasis top_down;
    for (std::size_t k = spans.size(); k >= 1; --k) {
      for (auto const& b : spans[k - 1]) {
        if (e.insert(b.value.to_sparse(q.index()))) {
          top_down.elements.push_back(b);
          top_down.degrees.push_back(k);
        }
      }
    }
    FilteredBasis out;
    for (std::size_t k = 1; k <= spans.size(); ++k) {
      for (std::size_t i = 0; i < top_down.elements.size(); ++i) {
        if (top_down.degrees[i] == k) {
          out.elements.push_back(top_down.elements[i]);
          out.degrees.push_back(k);
        }
      }
    }
    return out;
  }

  /// Value of a left-normed bracket word on the given generators.
  inline TruncatedSeries evaluate_bracket(std::vector<std::uint32_t> const& word,
                                          std::vector<TruncatedSeries> const& gens) {
    TruncatedSeries v = gens.at(word.back());
    for (std::size_t k = word.size() - 1; k-- > 0;) {
      v = bracket(gens.at(word[k]), v);
    }
    return v;
  }

  struct MalcevMap {
    FilteredBasis source_basis;
    FilteredBasis target_basis;
    RatMatrix     matrix;  // target basis x source basis

    /// Rows of target filtration degree n (all columns).
    RatMatrix degree_block(std::size_t n) const {
      return select(n, 0);
    }

    /// Rows of target degree n against columns of source degree n: the map
    /// on the associated graded.
    RatMatrix graded_block(std::size_t n) const {
      return select(n, n);
    }

    bool is_zero() const {
      return matrix.is_zero();
    }

   private:
    RatMatrix select(std::size_t row_degree, std::size_t col_degree) const {
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < target_basis.degrees.size(); ++i) {
        if (target_basis.degrees[i] == row_degree) {
          rows.push_back(i);
        }
      }
      for (std::size_t j = 0; j < source_basis.degrees.size(); ++j) {
        if (col_degree == 0 || source_basis.degrees[j] == col_degree) {
          cols.push_back(j);
        }
      }
      RatMatrix m(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          m(i, j) = matrix(rows[i], cols[j]);
        }
      }
      return m;
    }
  };

  namespace detail {

    inline std::vector<TruncatedSeries> image_generators(GroupHom const& h,
                                                         std::size_t     d) {
      std::size_t                  g = h.target().num_generators();
      std::vector<TruncatedSeries> out;
      for (auto const& w : h.images()) {
        out.push_back(series_log(magnus_expansion(w, g, d)));
      }
      return out;
    }

    /// dim of the span of the given vectors modulo the ideal of q.
    inline std::size_t dim_mod_ideal(QuotientAlgebra const&        q,
                                     std::vector<SparseVec> const& vs) {
      SparseEchelon e = q.ideal();
      std::size_t   n = 0;
      for (auto const& v : vs) {
        n += e.insert(v);
      }
      return n;
    }

  }  // namespace detail

  /// Matrix of the induced map L(source)/C^{d+1} -> L(target)/C^{d+1} in
  /// bracket bases of the two algebras.
  inline MalcevMap malcev_map(GroupHom const& h,
                              std::size_t     d,
                              std::size_t budget = QuotientAlgebra::default_budget) {
    require_verified(h, Verification::nilpotent(d));
    QuotientAlgebra src = QuotientAlgebra::of_presentation(h.source(), d, budget);
    QuotientAlgebra tgt = QuotientAlgebra::of_presentation(h.target(), d, budget);
    MalcevMap       m;
    m.source_basis = filtered_basis(src);
    m.target_basis = filtered_basis(tgt);

    SparseEchelon e;
    for (auto const& [p, row] : tgt.ideal().rows()) {
      e.insert(row.vec);
    }
    for (std::size_t t = 0; t < m.target_basis.elements.size(); ++t) {
      e.insert(m.target_basis.elements[t].value.to_sparse(tgt.index()),
               sparse::unit(t));
    }

    auto images = detail::image_generators(h, d);
    m.matrix    = RatMatrix(m.target_basis.elements.size(),
                         m.source_basis.elements.size());
    for (std::size_t s = 0; s < m.source_basis.elements.size(); ++s) {
      TruncatedSeries v =
          evaluate_bracket(m.source_basis.elements[s].word, images);
      auto coords = e.coordinates(v.to_sparse(tgt.index()));
      if (!coords) {
        throw std::logic_error("Malcev image is not a Lie element");
      }
      for (auto const& [t, c] : *coords) {
        m.matrix(t, s) = c;
      }
    }
    return m;
  }

  struct StrictnessDegree {
    std::size_t degree             = 0;
    std::size_t image_of_level     = 0;  // dim h(C^n L_1)
    std::size_t image_meets_level  = 0;  // dim h(L_1) cap C^n L_2
    bool        strict() const noexcept {
      return image_of_level == image_meets_level;
    }
  };

  struct StrictnessResult {
    std::vector<StrictnessDegree> degrees;

    /// First degree at which strictness fails.
    std::optional<std::size_t> failure() const {
      for (auto const& s : degrees) {
        if (!s.strict()) {
          return s.degree;
        }
      }
      return std::nullopt;
    }
  };

  /// Compares h(C^n L_1) with h(L_1) cap C^n L_2 for n = 1..d.
  inline StrictnessResult strictness_check(
      GroupHom const& h,
      std::size_t     d,
      std::size_t     budget = QuotientAlgebra::default_budget) {
    require_verified(h, Verification::nilpotent(d));
    QuotientAlgebra tgt = QuotientAlgebra::of_presentation(h.target(), d, budget);
    auto image_spans    = bracket_spans(tgt, detail::image_generators(h, d));
    auto level_spans =
        bracket_spans(tgt, malcev_generators(tgt.num_gens(), d));
    auto from = [&](std::vector<std::vector<LieElement>> const& spans,
                    std::size_t                                 n) {
      std::vector<SparseVec> vs;
      for (std::size_t k = n; k <= spans.size(); ++k) {
        for (auto const& b : spans[k - 1]) {
          vs.push_back(b.value.to_sparse(tgt.index()));
        }
      }
      return vs;
    };
    std::vector<SparseVec> whole   = from(image_spans, 1);
    std::size_t            dim_img = detail::dim_mod_ideal(tgt, whole);
    StrictnessResult       r;
    for (std::size_t n = 1; n <= d; ++n) {
      std::vector<SparseVec> level = from(level_spans, n);
      std::vector<SparseVec> sum(whole);
      sum.insert(sum.end(), level.begin(), level.end());
      StrictnessDegree s;
      s.degree            = n;
      s.image_of_level    = detail::dim_mod_ideal(tgt, from(image_spans, n));
      s.image_meets_level = dim_img + detail::dim_mod_ideal(tgt, level)
                            - detail::dim_mod_ideal(tgt, sum);
      r.degrees.push_back(s);
    }
    return r;
  }

  struct CommutatorImageResult {
    bool                       images_in_commutator = false;
    std::optional<std::size_t> nonzero_generator;  // image not in the ideal

    bool fires() const noexcept {
      return images_in_commutator && nonzero_generator.has_value();
    }
  };

  /// Fires when every generator image lies in the commutator subgroup of
  /// the target and the induced Malcev map is nonzero: a map strictly
  /// compatible with the filtrations would then vanish on the associated
  /// graded, hence vanish.
  inline CommutatorImageResult commutator_image_check(
      GroupHom const& h,
      std::size_t     d,
      std::size_t     budget = QuotientAlgebra::default_budget) {
    require_verified(h, Verification::nilpotent(d));
    CommutatorImageResult r;
    IntMatrix             at  = h.target().exponent_matrix().transpose();
    SNFResult             snf = smith_normal_form(at);
    r.images_in_commutator    = true;
    for (auto const& w : h.images()) {
      auto      sums = w.exponent_sums(h.target().num_generators());
      IntVector e(sums.begin(), sums.end());
      if (!solve_integer(at, e, snf)) {
        r.images_in_commutator = false;
        break;
      }
    }
    QuotientAlgebra tgt = QuotientAlgebra::of_presentation(h.target(), d, budget);
    auto            images = detail::image_generators(h, d);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!tgt.contains(images[i])) {
        r.nonzero_generator = i;
        break;
      }
    }
    return r;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_LIERANKS_HPP_
