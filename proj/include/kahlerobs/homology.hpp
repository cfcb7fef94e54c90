// First homology, Fox calculus and cup products of a presentation 2-complex.

#ifndef KAHLEROBS_HOMOLOGY_HPP_
#define KAHLEROBS_HOMOLOGY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_hom.hpp"
#include "intlinalg.hpp"
#include "presentation.hpp"
#include "verify.hpp"
#include "word.hpp"

namespace kahlerobs {

  inline AbelianStructure h1(Presentation const& p) {
    return cokernel(p.exponent_matrix());
  }

  inline std::size_t betti1(Presentation const& p) {
    return p.num_generators() - rank(p.exponent_matrix());
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced maps on H_1
  ////////////////////////////////////////////////////////////////////////

  struct H1ParityReport {
    std::size_t source_b1     = 0;
    std::size_t target_b1     = 0;
    std::size_t rank_image    = 0;
    std::size_t rank_kernel   = 0;
    std::size_t rank_cokernel = 0;
    IntMatrix   induced;  // target gens x source gens exponent sums

    /// Some rank is odd.
    bool fires() const noexcept {
      return rank_image % 2 || rank_kernel % 2 || rank_cokernel % 2;
    }
  };

  /// Ranks of the image, kernel and cokernel of h_* on H_1 tensor Q.
  inline H1ParityReport h1_parity_check(GroupHom const& h) {
    require_verified(h, Verification::abelianization());
    H1ParityReport r;
    r.induced     = h.abelianized_matrix();
    r.source_b1   = betti1(h.source());
    r.target_b1   = betti1(h.target());
    IntMatrix rel = h.target().exponent_matrix().transpose();
    std::size_t both = rank(rel.hconcat(r.induced));
    r.rank_image     = both - rank(rel);
    r.rank_kernel    = r.source_b1 - r.rank_image;
    r.rank_cokernel  = r.target_b1 - r.rank_image;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fox calculus
  ////////////////////////////////////////////////////////////////////////

  /// Integral group ring of a free group.
  using FreeGroupRingElement = std::map<Word, mpz_class>;

  /// d w / d x_gen by the Leibniz rule:
  /// d(uv) = du + u dv, dx/dx = 1, dx^-1/dx = -x^-1.
  inline FreeGroupRingElement fox_derivative_free(Word const&   w,
                                                  std::uint32_t gen) {
    FreeGroupRingElement out;
    std::vector<Letter>  prefix;
    for (Letter l : w) {
      if (l.gen == gen) {
        if (!l.inverted) {
          out[free_reduce(prefix)] += 1;
        } else {
          std::vector<Letter> with(prefix);
          with.push_back(l);
          out[free_reduce(with)] -= 1;
        }
      }
      prefix.push_back(l);
    }
    std::erase_if(out, [](auto const& e) { return e.second == 0; });
    return out;
  }

  /// Coordinates on H_1 = Z^gens / (relator rows) adapted to the Smith
  /// form: free coordinates are integers, torsion coordinates are reduced
  /// modulo their invariant factor, and coordinates with factor 1 are
  /// dropped.
  class H1Coordinates {
   public:
    explicit H1Coordinates(Presentation const& p)
        : num_gens_(p.num_generators()),
          snf_(smith_normal_form(p.exponent_matrix())) {
      for (std::size_t i = 0; i < num_gens_; ++i) {
        mpz_class d = i < snf_.diagonal.size() ? snf_.diagonal[i] : 0;
        if (d != 1) {
          kept_.push_back(i);
          moduli_.push_back(d);
        }
      }
    }

    /// 0 for a free coordinate, the invariant factor for a torsion one.
    std::vector<mpz_class> const& moduli() const noexcept {
      return moduli_;
    }

    std::vector<mpz_class> of_exponents(std::vector<long> const& x) const {
      std::vector<mpz_class> y;
      for (std::size_t k = 0; k < kept_.size(); ++k) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < num_gens_; ++j) {
          s += x[j] * snf_.V(j, kept_[k]);
        }
        if (moduli_[k] != 0) {
          mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), moduli_[k].get_mpz_t());
        }
        y.push_back(s);
      }
      return y;
    }

    std::vector<mpz_class> of_word(Word const& w) const {
      return of_exponents(w.exponent_sums(num_gens_));
    }

   private:
    std::size_t              num_gens_;
    SNFResult                snf_;
    std::vector<std::size_t> kept_;
    std::vector<mpz_class>   moduli_;
  };

  /// Rational group ring of H_1, keyed by H1Coordinates.
  using AbelianGroupRingElement = std::map<std::vector<mpz_class>, mpq_class>;

  /// Relators x generators matrix of Fox derivatives pushed into Q[H_1].
  class FoxMatrix {
   public:
    FoxMatrix(Presentation const& p) : coords_(p) {
      for (auto const& r : p.relators()) {
        std::vector<AbelianGroupRingElement> row;
        for (std::uint32_t i = 0; i < p.num_generators(); ++i) {
          AbelianGroupRingElement e;
          for (auto const& [w, c] : fox_derivative_free(r, i)) {
            e[coords_.of_word(w)] += mpq_class(c);
          }
          std::erase_if(e, [](auto const& t) { return t.second == 0; });
          row.push_back(std::move(e));
        }
        entries_.push_back(std::move(row));
      }
      cols_ = p.num_generators();
    }

    std::size_t rows() const noexcept {
      return entries_.size();
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    AbelianGroupRingElement const& operator()(std::size_t i, std::size_t j) const {
      return entries_.at(i).at(j);
    }
    H1Coordinates const& coordinates() const noexcept {
      return coords_;
    }

    /// Every group element sent to 1.
    IntMatrix specialize() const {
      IntMatrix m(rows(), cols());
      for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
          mpq_class s = 0;
          for (auto const& [g, c] : entries_[i][j]) {
            s += c;
          }
          if (s.get_den() != 1) {
            throw std::logic_error("Fox specialization is not integral");
          }
          m(i, j) = s.get_num();
        }
      }
      return m;
    }

   private:
    H1Coordinates                                     coords_;
    std::vector<std::vector<AbelianGroupRingElement>> entries_;
    std::size_t                                       cols_ = 0;
  };

  inline FoxMatrix fox_derivatives(Presentation const& p) {
    FoxMatrix f(p);
    if (f.specialize() != p.exponent_matrix()) {
      throw std::logic_error("Fox matrix does not specialize to exponent sums");
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cohomology of the presentation complex
  ////////////////////////////////////////////////////////////////////////

  /// A homomorphism to Q given by its values on the generators.
  using OneCocycle = RatVector;

  /// A 2-cochain (one value per relator), compared modulo coboundaries.
  struct TwoCochainClass {
    RatVector values;
  };

  /// Basis of H^1(P; Q), as cocycles.
  inline std::vector<OneCocycle> h1_cocycle_basis(Presentation const& p) {
    return nullspace(p.exponent_matrix());
  }

  inline bool is_cocycle(Presentation const& p, OneCocycle const& a) {
    if (a.size() != p.num_generators()) {
      return false;
    }
    RatVector v = to_rational(p.exponent_matrix()) * a;
    for (auto const& x : v) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  /// True if the cochain is a coboundary, i.e. lies in the column space of
  /// the exponent matrix.
  inline bool is_coboundary(Presentation const& p, RatVector const& values) {
    return solve_rational(p.exponent_matrix(), values).has_value();
  }

  inline bool same_class(Presentation const&    p,
                         TwoCochainClass const& a,
                         TwoCochainClass const& b) {
    RatVector d(a.values.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = a.values[i] - b.values[i];
    }
    return is_coboundary(p, d);
  }

  /// Cup product on the presentation complex. On a relator
  /// y_1^e_1 ... y_m^e_m with prefixes p_k = y_1^e_1 ... y_k^e_k, a letter
  /// y contributes a(p_{k-1}) b(y) and a letter y^-1 contributes
  /// -a(p_k) b(y). This is the Fox-calculus formula
  /// sum_{i,j} a_i b_j eps(d_i d_j r), and is antisymmetric up to
  /// coboundaries.
  inline TwoCochainClass cup_product(Presentation const& p,
                                     OneCocycle const&   a,
                                     OneCocycle const&   b) {
    if (!is_cocycle(p, a) || !is_cocycle(p, b)) {
      throw InputError("cup_product: argument is not a cocycle");
    }
    TwoCochainClass out;
    for (auto const& r : p.relators()) {
      mpq_class value = 0, prefix = 0;
      for (Letter l : r) {
        if (!l.inverted) {
          value += prefix * b[l.gen];
          prefix += a[l.gen];
        } else {
          prefix -= a[l.gen];
          value -= prefix * b[l.gen];
        }
      }
      out.values.push_back(value);
    }
    return out;
  }

  struct CupInjectivity {
    bool                    injective = true;
    std::vector<OneCocycle> h1_basis;
    /// Pairs (i, j), i < j, indexing h1_basis; the coordinates below refer
    /// to this order.
    std::vector<std::pair<std::size_t, std::size_t>> wedge_basis;
    std::vector<RatVector>                           kernel;
  };

  /// Kernel of the cup product from the exterior square of H^1 to H^2 of
  /// the presentation complex.
  inline CupInjectivity cup_injectivity_check(Presentation const& p) {
    CupInjectivity r;
    r.h1_basis         = h1_cocycle_basis(p);
    std::size_t b      = r.h1_basis.size();
    std::size_t rels   = p.relators().size();
    std::size_t gens   = p.num_generators();
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i + 1; j < b; ++j) {
        r.wedge_basis.emplace_back(i, j);
      }
    }
    std::size_t pairs = r.wedge_basis.size();
    // Solutions of C w = A f, projected to w.
    RatMatrix   m(rels, pairs + gens);
    IntMatrix   a = p.exponent_matrix();
    for (std::size_t k = 0; k < pairs; ++k) {
      auto [i, j] = r.wedge_basis[k];
      auto c      = cup_product(p, r.h1_basis[i], r.h1_basis[j]).values;
      for (std::size_t row = 0; row < rels; ++row) {
        m(row, k) = c[row];
      }
    }
    for (std::size_t row = 0; row < rels; ++row) {
      for (std::size_t g = 0; g < gens; ++g) {
        m(row, pairs + g) = -mpq_class(a(row, g));
      }
    }
    std::vector<RatVector> vs;
    for (auto const& v : nullspace(m)) {
      vs.emplace_back(v.begin(), v.begin() + pairs);
    }
    if (!vs.empty()) {
      RatMatrix stacked(vs.size(), pairs);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t k = 0; k < pairs; ++k) {
          stacked(i, k) = vs[i][k];
        }
      }
      RowEchelon e = reduced_row_echelon(stacked);
      for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        r.kernel.push_back(e.R.row(i));
      }
    }
    r.injective = r.kernel.empty();
    return r;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_HOMOLOGY_HPP_
