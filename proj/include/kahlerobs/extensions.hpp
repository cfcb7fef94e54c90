// Central extensions given by presentations with marked central generators,
// their extension classes, and the splitting criterion.

#ifndef KAHLEROBS_EXTENSIONS_HPP_
#define KAHLEROBS_EXTENSIONS_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_hom.hpp"
#include "homology.hpp"
#include "intlinalg.hpp"
#include "lieranks.hpp"
#include "magnus.hpp"
#include "presentation.hpp"
#include "quotient_algebra.hpp"
#include "verify.hpp"

namespace kahlerobs {

  /// A presented group H with generators c_1..c_k declared central, read as
  /// 1 -> <c> -> H -> G -> 1.
  ///
  /// Each non-centrality relator of H has the form r_j(x) c^{-v_j} up to
  /// moving central letters; v_j is its lift vector and r_j the matching
  /// relator of G.
  struct CentralExtension {
    Presentation               total;
    std::vector<std::uint32_t> central;          // indices into total
    std::vector<std::uint32_t> base_generators;  // total index of each base gen
    Presentation               base;
    std::vector<std::size_t>   base_relator_origin;  // total relator index
    IntMatrix                  lifts;  // base relators x k
    /// log of each central generator is independent in the class-2
    /// rational quotient of the total group.
    bool kernel_hypothesis = false;

    std::size_t rank() const noexcept {
      return central.size();
    }
    IntMatrix base_exponent_matrix() const {
      return base.exponent_matrix();
    }
    IntVector lift_vector(std::size_t relator) const {
      return lifts.row(relator);
    }
  };

  namespace detail {

    /// The two generators of a relator of the form u v u^-1 v^-1 with u, v
    /// letters on distinct generators.
    inline std::optional<std::pair<std::uint32_t, std::uint32_t>>
    generator_commutator(Word const& r) {
      if (r.size() != 4 || r[2] != r[0].inverse() || r[3] != r[1].inverse()
          || r[0].gen == r[1].gen) {
        return std::nullopt;
      }
      return std::minmax(r[0].gen, r[1].gen);
    }

    inline bool kernel_hypothesis(Presentation const&               total,
                                  std::vector<std::uint32_t> const& central,
                                  std::size_t                       budget) {
      if (central.empty()) {
        return true;
      }
      QuotientAlgebra q = QuotientAlgebra::of_presentation(total, 2, budget);
      auto            gens = malcev_generators(total.num_generators(), 2);
      SparseEchelon   e    = q.ideal();
      for (auto c : central) {
        if (!e.insert(gens[c].to_sparse(q.index()))) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  /// Splits the relators of P into centrality relators [x, c] and lifted
  /// base relators. Throws InputError if a central generator fails to
  /// commute with some generator or a relator involves central generators
  /// only.
  inline CentralExtension recognize_extension(
      Presentation const&             p,
      std::vector<std::string> const& central_names,
      std::size_t budget = QuotientAlgebra::default_budget) {
    CentralExtension e;
    e.total = p;
    std::vector<bool> is_central(p.num_generators(), false);
    for (auto const& name : central_names) {
      auto idx = p.generator_index(name);
      if (!idx) {
        throw InputError("unknown central generator '" + name + "'");
      }
      if (is_central[*idx]) {
        throw InputError("central generator '" + name + "' listed twice");
      }
      is_central[*idx] = true;
      e.central.push_back(*idx);
    }
    std::vector<std::uint32_t> new_index(p.num_generators());
    std::vector<std::string>   base_names;
    std::uint32_t constexpr deleted = static_cast<std::uint32_t>(-1);
    for (std::uint32_t i = 0; i < p.num_generators(); ++i) {
      if (is_central[i]) {
        new_index[i] = deleted;
      } else {
        new_index[i] = static_cast<std::uint32_t>(base_names.size());
        e.base_generators.push_back(i);
        base_names.push_back(p.generator_name(i));
      }
    }

    std::set<std::pair<std::uint32_t, std::uint32_t>> commuting;
    std::vector<Word>                                 base_relators;
    std::vector<std::vector<long>>                    lift_rows;
    for (std::size_t j = 0; j < p.relators().size(); ++j) {
      Word const& r    = p.relators()[j];
      auto        pair = detail::generator_commutator(r);
      if (pair && (is_central[pair->first] || is_central[pair->second])) {
        commuting.insert(*pair);
        continue;
      }
      if (r.empty()) {
        continue;
      }
      Word base = r.delete_generators(new_index, deleted);
      auto sums = r.exponent_sums(p.num_generators());
      std::vector<long> v;
      for (auto c : e.central) {
        v.push_back(-sums[c]);
      }
      if (base.empty()) {
        throw InputError("relator " + std::to_string(j + 1)
                         + " involves central generators only");
      }
      base_relators.push_back(std::move(base));
      lift_rows.push_back(std::move(v));
      e.base_relator_origin.push_back(j);
    }
    for (auto c : e.central) {
      for (std::uint32_t y = 0; y < p.num_generators(); ++y) {
        if (y != c && !commuting.contains(std::minmax(c, y))) {
          throw InputError("missing centrality relator [" + p.generator_name(y)
                           + "," + p.generator_name(c) + "]");
        }
      }
    }
    e.base  = Presentation(p.name().empty() ? "base" : p.name() + "_base",
                          std::move(base_names),
                          std::move(base_relators));
    e.lifts = IntMatrix(lift_rows.size(), e.central.size());
    for (std::size_t j = 0; j < lift_rows.size(); ++j) {
      for (std::size_t l = 0; l < e.central.size(); ++l) {
        e.lifts(j, l) = lift_rows[j][l];
      }
    }
    e.kernel_hypothesis = detail::kernel_hypothesis(p, e.central, budget);
    return e;
  }

  enum class ClassVerdict { zero, torsion, non_torsion };

  inline std::string to_string(ClassVerdict v) {
    switch (v) {
      case ClassVerdict::zero:
        return "zero";
      case ClassVerdict::torsion:
        return "torsion";
      case ClassVerdict::non_torsion:
        return "non-torsion";
    }
    return "";
  }

  /// The class of an extension in H^2(G; Z^k) of the presentation complex
  /// of G, and its order.
  struct ExtensionClass {
    IntMatrix    lifts;  // base relators x k
    ClassVerdict verdict = ClassVerdict::zero;
    /// 1 for zero, the order for torsion, 0 for non-torsion.
    mpz_class order = 1;
    /// Torsion: column l solves A w = -v_l over Q.
    std::optional<RatMatrix> certificate;
    /// Non-torsion: a central coordinate whose equation has no rational
    /// solution.
    std::optional<std::size_t> unsolvable_coordinate;
    std::vector<std::string>   caveats;
  };

  inline ExtensionClass class_and_torsion(CentralExtension const& e) {
    ExtensionClass c;
    c.lifts      = e.lifts;
    IntMatrix a  = e.base_exponent_matrix();
    SNFResult snf = smith_normal_form(a);
    std::size_t k = e.rank();
    bool        non_torsion = false;
    mpz_class   order       = 1;
    for (std::size_t l = 0; l < k; ++l) {
      IntVector u = snf.U * e.lifts.column(l);
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) {
          continue;
        }
        if (i >= snf.rank) {
          non_torsion = true;
          if (!c.unsolvable_coordinate) {
            c.unsolvable_coordinate = l;
          }
        } else {
          mpz_class g, part;
          mpz_gcd(g.get_mpz_t(), snf.diagonal[i].get_mpz_t(), u[i].get_mpz_t());
          part = snf.diagonal[i] / g;
          mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
        }
      }
    }
    // Independent rational check of the verdict.
    RatMatrix cert(a.cols(), k);
    bool      rational = true;
    for (std::size_t l = 0; l < k; ++l) {
      RatVector rhs;
      for (auto const& x : e.lifts.column(l)) {
        rhs.push_back(mpq_class(-x));
      }
      auto w = solve_rational(a, rhs);
      if (!w) {
        rational = false;
        continue;
      }
      for (std::size_t i = 0; i < a.cols(); ++i) {
        cert(i, l) = (*w)[i];
      }
    }
    if (rational == non_torsion) {
      throw std::logic_error("extension class: rational and Smith-form "
                             "torsion tests disagree");
    }
    if (non_torsion) {
      c.verdict = ClassVerdict::non_torsion;
      c.order   = 0;
    } else {
      c.certificate = std::move(cert);
      c.order       = order;
      c.verdict = order == 1 ? ClassVerdict::zero : ClassVerdict::torsion;
    }
    if (!e.kernel_hypothesis) {
      c.caveats.push_back(
          "central generators were not shown to span a free abelian group "
          "of rank " + std::to_string(k));
    }
    return c;
  }

  /// The pushout of the extension along multiplication by n on the kernel:
  /// base relators become r_j(x) c^{-n v_j}.
  inline Presentation build_Hn(CentralExtension const& e, long n) {
    if (n < 1) {
      throw InputError("build_Hn needs n >= 1");
    }
    std::vector<Word> rels(e.total.relators());
    for (std::size_t j = 0; j < e.base_relator_origin.size(); ++j) {
      Word w = e.base.relators()[j].substitute([&] {
        std::vector<Word> images;
        for (auto g : e.base_generators) {
          images.push_back(Word::generator(g));
        }
        return images;
      }());
      for (std::size_t l = 0; l < e.rank(); ++l) {
        mpz_class ex = -n * e.lifts(j, l);
        w            = w * Word::generator(e.central[l]).pow(
                        static_cast<int>(ex.get_si()));
      }
      rels[e.base_relator_origin[j]] = w;
    }
    std::string name = e.total.name() + "_" + std::to_string(n);
    return Presentation(name, e.total.generators(), std::move(rels));
  }

  /// A splitting G -> H^(n), x_i -> x_i c^{w_i}.
  struct Section {
    long      n = 1;
    IntMatrix w;  // base generators x k
  };

  namespace detail {

    inline GroupHom section_hom(CentralExtension const& e,
                                Presentation const&     hn,
                                IntMatrix const&        w) {
      std::vector<Word> images;
      for (std::size_t i = 0; i < e.base_generators.size(); ++i) {
        Word img = Word::generator(e.base_generators[i]);
        for (std::size_t l = 0; l < e.rank(); ++l) {
          img = img * Word::generator(e.central[l])
                          .pow(static_cast<int>(w(i, l).get_si()));
        }
        images.push_back(std::move(img));
      }
      return GroupHom("section", e.base, hn, std::move(images));
    }

  }  // namespace detail

  /// Looks for a section of H^(n) -> G of the form x_i -> x_i c^{w_i}; this
  /// is a homomorphism iff A w = -n v. Witnesses are re-checked as
  /// homomorphisms in the class-2 quotient of H^(n).
  inline std::optional<Section> section_search(
      CentralExtension const& e,
      long                    n,
      std::size_t budget = QuotientAlgebra::default_budget) {
    IntMatrix a   = e.base_exponent_matrix();
    SNFResult snf = smith_normal_form(a);
    Section   s{n, IntMatrix(a.cols(), e.rank())};
    for (std::size_t l = 0; l < e.rank(); ++l) {
      IntVector rhs;
      for (auto const& x : e.lifts.column(l)) {
        rhs.push_back(-n * x);
      }
      auto w = solve_integer(a, rhs, snf);
      if (!w) {
        return std::nullopt;
      }
      for (std::size_t i = 0; i < a.cols(); ++i) {
        s.w(i, l) = (*w)[i];
      }
    }
    Presentation hn = build_Hn(e, n);
    try {
      verify_hom(detail::section_hom(e, hn, s.w), Verification::nilpotent(2),
                 budget);
    } catch (VerificationError const&) {
      throw std::logic_error("section candidate failed verification");
    }
    return s;
  }

  /// Upper end of the section scan: product of the nonzero invariant
  /// factors of the base exponent matrix.
  inline mpz_class section_scan_bound(CentralExtension const& e) {
    mpz_class bound = 1;
    for (auto const& d : smith_normal_form(e.base_exponent_matrix()).diagonal) {
      if (d != 0) {
        bound *= d;
      }
    }
    return bound;
  }

  ////////////////////////////////////////////////////////////////////////
  // The class-2 pushforward of the abelianization
  ////////////////////////////////////////////////////////////////////////

  struct CanonicalExtension {
    std::size_t      b1 = 0;
    std::size_t      gr2_rank = 0;
    CentralExtension extension;
    ExtensionClass   cls;
  };

  /// The extension 1 -> (lattice in gr_2 tensor Q) -> (class-2 quotient mod
  /// torsion) -> H_1 / torsion -> 1, presented on lifts t_i of a basis of
  /// H_1 / torsion and central generators z_l.
  inline CanonicalExtension canonical_class2_extension(
      Presentation const& p,
      std::size_t         budget = QuotientAlgebra::default_budget) {
    IntMatrix   a   = p.exponent_matrix();
    SNFResult   snf = smith_normal_form(a);
    std::size_t g   = p.num_generators();
    std::size_t b   = g - snf.rank;

    QuotientAlgebra q   = QuotientAlgebra::of_presentation(p, 2, budget);
    auto const&     idx = q.index();
    // Degree-one parts of lifts of a basis of H_1 / torsion.
    std::vector<TruncatedSeries> t;
    for (std::size_t i = snf.rank; i < g; ++i) {
      TruncatedSeries s(g, 2);
      for (std::uint32_t j = 0; j < g; ++j) {
        s.add_term(Monomial{j}, mpq_class(snf.V_inv(i, j)));
      }
      t.push_back(std::move(s));
    }
    auto basis = graded_lie_basis(q);
    SparseEchelon e;
    for (auto const& f : q.leading_forms(2)) {
      e.insert(f);
    }
    for (std::size_t m = 0; m < basis[1].size(); ++m) {
      e.insert(basis[1][m], sparse::unit(m));
    }
    std::size_t r2 = basis[1].size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<RatVector>                           coords;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i + 1; j < b; ++j) {
        auto c = e.coordinates(bracket(t[i], t[j]).to_sparse(idx));
        if (!c) {
          throw std::logic_error("commutator of lifts is not in gr_2");
        }
        RatVector v(r2, mpq_class(0));
        for (auto const& [m, x] : *c) {
          v[m] = x;
        }
        pairs.emplace_back(i, j);
        coords.push_back(std::move(v));
      }
    }
    // Integral lattice spanned by the commutators.
    mpz_class den = 1;
    for (auto const& v : coords) {
      for (auto const& x : v) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      }
    }
    IntMatrix m(r2, pairs.size());
    for (std::size_t p_ = 0; p_ < pairs.size(); ++p_) {
      for (std::size_t i = 0; i < r2; ++i) {
        mpq_class x = coords[p_][i] * den;
        m(i, p_)    = x.get_num();
      }
    }
    SNFResult   lat = smith_normal_form(m);
    std::size_t k   = lat.rank;

    std::vector<std::string> names;
    for (std::size_t i = 1; i <= b; ++i) {
      names.push_back("t" + std::to_string(i));
    }
    for (std::size_t l = 1; l <= k; ++l) {
      names.push_back("z" + std::to_string(l));
    }
    auto z = [&](std::size_t l) {
      return Word::generator(static_cast<std::uint32_t>(b + l));
    };
    std::vector<Word> rels;
    for (std::size_t p_ = 0; p_ < pairs.size(); ++p_) {
      auto [i, j] = pairs[p_];
      Word w      = commutator(Word::generator(static_cast<std::uint32_t>(i)),
                          Word::generator(static_cast<std::uint32_t>(j)));
      IntVector u = lat.U * m.column(p_);
      for (std::size_t l = 0; l < k; ++l) {
        mpz_class v = u[l] / lat.diagonal[l];
        w           = w * z(l).pow(-static_cast<int>(v.get_si()));
      }
      rels.push_back(std::move(w));
    }
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t i = 0; i < b; ++i) {
        rels.push_back(
            commutator(Word::generator(static_cast<std::uint32_t>(i)), z(l)));
      }
      for (std::size_t l2 = l + 1; l2 < k; ++l2) {
        rels.push_back(commutator(z(l), z(l2)));
      }
    }
    std::vector<std::string> central(names.begin() + b, names.end());
    Presentation total(p.name() + "_class2", names, std::move(rels));
    CanonicalExtension out;
    out.b1        = b;
    out.gr2_rank  = r2;
    out.extension = recognize_extension(total, central, budget);
    out.cls       = class_and_torsion(out.extension);
    return out;
  }

  enum class PipelineVerdict { not_kahler, inconclusive };

  struct AbelianizationClassResult {
    PipelineVerdict                   verdict = PipelineVerdict::inconclusive;
    std::size_t                       b1      = 0;
    std::optional<bool>               cup_injective;
    std::optional<CanonicalExtension> canonical;
    std::string                       reason;
  };

  /// If b_1 = 2, or b_1 = 4 with injective cup product, the class of the
  /// abelianization extension must be torsion for a Kahler group; a
  /// non-torsion class-2 pushforward therefore obstructs.
  inline AbelianizationClassResult abelianization_class_test(
      Presentation const& p,
      std::size_t         budget = QuotientAlgebra::default_budget) {
    AbelianizationClassResult r;
    r.b1 = betti1(p);
    if (r.b1 == 4) {
      r.cup_injective = cup_injectivity_check(p).injective;
    }
    if (!(r.b1 == 2 || (r.b1 == 4 && *r.cup_injective))) {
      r.reason = r.b1 == 4 ? "b1 = 4 but the cup product on H^1 is not injective"
                           : "b1 = " + std::to_string(r.b1)
                                 + " is neither 2 nor 4";
      return r;
    }
    r.canonical = canonical_class2_extension(p, budget);
    if (r.canonical->cls.verdict == ClassVerdict::non_torsion) {
      r.verdict = PipelineVerdict::not_kahler;
      r.reason  = "class-2 pushforward of the abelianization class is not "
                 "torsion";
    } else {
      r.reason = "class-2 pushforward is " + to_string(r.canonical->cls.verdict)
                 + ", which says nothing about the full class";
    }
    return r;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_EXTENSIONS_HPP_
