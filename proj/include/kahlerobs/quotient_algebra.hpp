// Quotients of the truncated free associative algebra by a two-sided ideal,
// and the ranks of the Lie subalgebra generated in degree one.

#ifndef KAHLEROBS_QUOTIENT_ALGEBRA_HPP_
#define KAHLEROBS_QUOTIENT_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "magnus.hpp"
#include "presentation.hpp"
#include "sparse.hpp"

namespace kahlerobs {

  /// Per-degree dimensions r_1, ..., r_d.
  struct GradedRanks {
    std::vector<std::size_t> ranks;

    std::size_t degree() const noexcept {
      return ranks.size();
    }
    /// r_n for 1 <= n <= degree().
    std::size_t operator[](std::size_t n) const {
      return ranks.at(n - 1);
    }
    bool operator==(GradedRanks const&) const = default;

    std::string to_string() const {
      std::string s = "(";
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        s += (i ? "," : "") + std::to_string(ranks[i]);
      }
      return s + ")";
    }
  };

  /// T_d / J where T_d = Q<x_1..x_g> truncated above degree d and J is the
  /// two-sided ideal generated by a list of seed elements.
  ///
  /// J is stored as an echelon basis whose pivots are lowest-degree
  /// monomials, so the rows with pivot in degree n are exactly the elements
  /// of J of order n and their degree-n parts span the leading forms of J in
  /// that degree.
  class QuotientAlgebra {
   public:
    static constexpr std::size_t default_budget = 5000;

    QuotientAlgebra(std::size_t                         num_gens,
                    std::size_t                         degree,
                    std::vector<TruncatedSeries> const& seeds,
                    std::size_t dim_budget = default_budget)
        : index_(check_budget(num_gens, degree, dim_budget)) {
      for (auto const& s : seeds) {
        if (s.num_gens() != num_gens || s.degree() != degree) {
          throw InputError("ideal seed lives in a different algebra");
        }
        if (s.coefficient(Monomial{}) != 0) {
          throw InputError("ideal seed has a nonzero constant term");
        }
        add_seed(s);
      }
    }

    /// The completed group algebra of P, truncated: seeds magnus(r) - 1.
    static QuotientAlgebra of_presentation(Presentation const& p,
                                           std::size_t         degree,
                                           std::size_t dim_budget = default_budget) {
      check_budget(p.num_generators(), degree, dim_budget);
      std::vector<TruncatedSeries> seeds;
      for (auto const& r : p.relators()) {
        seeds.push_back(magnus_expansion(r, p.num_generators(), degree)
                        - TruncatedSeries::one(p.num_generators(), degree));
      }
      return QuotientAlgebra(p.num_generators(), degree, seeds, dim_budget);
    }

    MonomialIndex const& index() const noexcept {
      return index_;
    }
    std::size_t num_gens() const noexcept {
      return index_.num_gens();
    }
    std::size_t degree() const noexcept {
      return index_.degree();
    }
    SparseEchelon const& ideal() const noexcept {
      return ideal_;
    }

    /// Number of ideal basis rows of order n.
    std::size_t ideal_rank(std::size_t n) const {
      std::size_t count = 0;
      for (auto it = ideal_.rows().lower_bound(index_.begin(n));
           it != ideal_.rows().end() && it->first < index_.end(n);
           ++it) {
        ++count;
      }
      return count;
    }

    /// Dimension of the degree-n graded piece of the quotient.
    std::size_t dimension(std::size_t n) const {
      return (index_.end(n) - index_.begin(n)) - ideal_rank(n);
    }

    /// Dimensions for degrees 0..d.
    std::vector<std::size_t> dimensions() const {
      std::vector<std::size_t> dims;
      for (std::size_t n = 0; n <= degree(); ++n) {
        dims.push_back(dimension(n));
      }
      return dims;
    }

    /// Degree-n monomials that are not pivots; their images form a basis of
    /// the degree-n graded piece.
    std::vector<Monomial> standard_monomials(std::size_t n) const {
      std::vector<Monomial> out;
      for (std::size_t i = index_.begin(n); i < index_.end(n); ++i) {
        if (!ideal_.rows().contains(i)) {
          out.push_back(index_.monomial(i));
        }
      }
      return out;
    }

    /// Degree-n parts of the ideal rows of order n.
    std::vector<SparseVec> leading_forms(std::size_t n) const {
      std::vector<SparseVec> out;
      for (auto it = ideal_.rows().lower_bound(index_.begin(n));
           it != ideal_.rows().end() && it->first < index_.end(n);
           ++it) {
        out.push_back(
            sparse::restrict(it->second.vec, index_.begin(n), index_.end(n)));
      }
      return out;
    }

    bool contains(TruncatedSeries const& s) const {
      return ideal_.contains(s.to_sparse(index_));
    }

    /// Canonical representative of s modulo J.
    TruncatedSeries normal_form(TruncatedSeries const& s) const {
      return TruncatedSeries::from_sparse(
          ideal_.reduce(s.to_sparse(index_)).residual, index_);
    }

   private:
    static MonomialIndex check_budget(std::size_t num_gens,
                                      std::size_t degree,
                                      std::size_t budget) {
      if (degree < 1) {
        throw InputError("truncation degree must be at least 1");
      }
      std::size_t need = MonomialIndex::dimension(num_gens, degree);
      if (need > budget) {
        throw BudgetExceeded(need, budget);
      }
      return MonomialIndex(num_gens, degree);
    }

    // Inserts m * s * m' for every pair of monomials that keeps some term
    // within the truncation.
    void add_seed(TruncatedSeries const& s) {
      if (s.is_zero()) {
        return;
      }
      std::size_t low = s.lowest_degree();
      std::size_t d   = degree();
      for (std::size_t total = 0; low + total <= d; ++total) {
        for (std::size_t left = 0; left <= total; ++left) {
          std::size_t right = total - left;
          for (std::size_t i = index_.begin(left); i < index_.end(left); ++i) {
            Monomial m = index_.monomial(i);
            for (std::size_t j = index_.begin(right); j < index_.end(right);
                 ++j) {
              ideal_.insert(s.sandwich(m, index_.monomial(j)).to_sparse(index_));
            }
          }
        }
      }
    }

    MonomialIndex index_;
    SparseEchelon ideal_;
  };

  /// Degree-n bracket generators of the Lie subalgebra of the associated
  /// graded quotient: left-normed brackets [x_i, b] pruned to a basis modulo
  /// the leading forms of the ideal. Entry n-1 holds the degree-n basis as
  /// homogeneous sparse vectors.
  inline std::vector<std::vector<SparseVec>> graded_lie_basis(
      QuotientAlgebra const& q) {
    MonomialIndex const&                idx = q.index();
    std::vector<std::vector<SparseVec>> basis;
    for (std::size_t n = 1; n <= q.degree(); ++n) {
      SparseEchelon echelon;
      for (auto const& f : q.leading_forms(n)) {
        echelon.insert(f);
      }
      std::vector<SparseVec> kept;
      auto                   consider = [&](SparseVec v) {
        if (!v.empty() && echelon.insert(v)) {
          kept.push_back(std::move(v));
        }
      };
      if (n == 1) {
        for (std::uint32_t i = 0; i < q.num_gens(); ++i) {
          consider(sparse::unit(idx.index(Monomial{i})));
        }
      } else {
        for (std::uint32_t i = 0; i < q.num_gens(); ++i) {
          TruncatedSeries x = TruncatedSeries::variable(q.num_gens(), n, i);
          for (auto const& b : basis.back()) {
            TruncatedSeries bs(q.num_gens(), n);
            for (auto const& [k, c] : b) {
              bs.add_term(idx.monomial(k), c);
            }
            consider(bracket(x, bs).to_sparse(idx));
          }
        }
      }
      basis.push_back(std::move(kept));
    }
    return basis;
  }

  /// dim of the degree-n Lie part of the associated graded quotient.
  inline GradedRanks lie_ranks(QuotientAlgebra const& q) {
    GradedRanks r;
    for (auto const& b : graded_lie_basis(q)) {
      r.ranks.push_back(b.size());
    }
    return r;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_QUOTIENT_ALGEBRA_HPP_
