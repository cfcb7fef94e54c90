// Checking that a map of presentations is a homomorphism.

#ifndef KAHLEROBS_VERIFY_HPP_
#define KAHLEROBS_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "dehn.hpp"
#include "errors.hpp"
#include "group_hom.hpp"
#include "intlinalg.hpp"
#include "magnus.hpp"
#include "presentation.hpp"
#include "quotient_algebra.hpp"

namespace kahlerobs {

  /// True if every relator is a commutator of two distinct generators and
  /// every pair of generators has one.
  inline bool is_free_abelian_presentation(Presentation const& p) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (auto const& r : p.relators()) {
      if (r.size() != 4 || r[2] != r[0].inverse() || r[3] != r[1].inverse()
          || r[0].gen == r[1].gen) {
        return false;
      }
      pairs.insert(std::minmax(r[0].gen, r[1].gen));
    }
    std::size_t n = p.num_generators();
    return pairs.size() == n * (n - 1) / 2;
  }

  /// Decides triviality of words in presentations whose word problem is
  /// handled here: free groups, free abelian groups and C'(1/6) groups.
  class WordProblem {
   public:
    enum class Method { free, free_abelian, dehn };

    /// Throws UnsupportedWordProblem for any other presentation.
    explicit WordProblem(Presentation const& p) : num_gens_(p.num_generators()) {
      if (p.relators().empty()) {
        method_ = Method::free;
      } else if (is_free_abelian_presentation(p)) {
        method_ = Method::free_abelian;
      } else if (satisfies_c_sixth(p)) {
        method_ = Method::dehn;
        dehn_.emplace(p);
      } else {
        throw UnsupportedWordProblem(
            "no word problem algorithm for presentation '" + p.name() + "'");
      }
    }

    static bool supported(Presentation const& p) {
      return p.relators().empty() || is_free_abelian_presentation(p)
             || satisfies_c_sixth(p);
    }

    Method method() const noexcept {
      return method_;
    }

    bool is_trivial(Word const& w) const {
      switch (method_) {
        case Method::free:
          return w.empty();
        case Method::free_abelian:
          for (long e : w.exponent_sums(num_gens_)) {
            if (e != 0) {
              return false;
            }
          }
          return true;
        case Method::dehn:
          return dehn_->is_trivial(w);
      }
      return false;
    }

   private:
    std::size_t               num_gens_;
    Method                    method_ = Method::free;
    std::optional<DehnSolver> dehn_;
  };

  namespace detail {

    inline void check_abelianization(GroupHom const& h) {
      IntMatrix at = h.target().exponent_matrix().transpose();
      SNFResult snf = smith_normal_form(at);
      for (std::size_t j = 0; j < h.source().relators().size(); ++j) {
        auto      sums = h.apply(h.source().relators()[j])
                        .exponent_sums(h.target().num_generators());
        IntVector e(sums.begin(), sums.end());
        if (!solve_integer(at, e, snf)) {
          throw VerificationError("relator " + std::to_string(j + 1)
                                      + " of '" + h.source().name()
                                      + "' is nontrivial in the abelianization"
                                        " of the target",
                                  j);
        }
      }
    }

    inline void check_nilpotent(GroupHom const& h,
                                std::size_t     c,
                                std::size_t     dim_budget) {
      QuotientAlgebra q =
          QuotientAlgebra::of_presentation(h.target(), c, dim_budget);
      std::size_t g = h.target().num_generators();
      for (std::size_t j = 0; j < h.source().relators().size(); ++j) {
        TruncatedSeries m = magnus_expansion(h.apply(h.source().relators()[j]),
                                             g, c)
                            - TruncatedSeries::one(g, c);
        if (!q.contains(m)) {
          throw VerificationError(
              "relator " + std::to_string(j + 1) + " of '" + h.source().name()
                  + "' is nontrivial in the class-" + std::to_string(c)
                  + " nilpotent quotient of the target",
              j);
        }
      }
    }

  }  // namespace detail

  /// Checks that every source relator maps to the identity at the requested
  /// level and returns h annotated with that level. Throws
  /// VerificationError naming the first failing relator, or
  /// UnsupportedWordProblem if exact verification is impossible.
  inline GroupHom verify_hom(GroupHom const&    h,
                             Verification const& level,
                             std::size_t dim_budget = QuotientAlgebra::default_budget) {
    switch (level.level) {
      case VerificationLevel::unverified:
        return h.with_verification(level);
      case VerificationLevel::abelianization:
        detail::check_abelianization(h);
        return h.with_verification(level);
      case VerificationLevel::nilpotent:
        if (level.nilpotency_class < 1) {
          throw InputError("nilpotency class must be at least 1");
        }
        detail::check_abelianization(h);
        detail::check_nilpotent(h, level.nilpotency_class, dim_budget);
        return h.with_verification(level);
      case VerificationLevel::exact: {
        WordProblem wp(h.target());
        for (std::size_t j = 0; j < h.source().relators().size(); ++j) {
          if (!wp.is_trivial(h.apply(h.source().relators()[j]))) {
            throw VerificationError("relator " + std::to_string(j + 1)
                                        + " of '" + h.source().name()
                                        + "' maps to a nontrivial element",
                                    j);
          }
        }
        return h.with_verification(level);
      }
    }
    return h;
  }

  /// Throws InputError unless h is verified at least at `required`.
  inline void require_verified(GroupHom const& h, Verification const& required) {
    if (!h.verification().implies(required)) {
      throw InputError("homomorphism '" + h.name() + "' is "
                       + h.verification().to_string() + " but "
                       + required.to_string() + " is required");
    }
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_VERIFY_HPP_
