// Surface groups, orbifold surface groups, and obstructions for central
// extensions of surface groups.

#ifndef KAHLEROBS_SURFACE_HPP_
#define KAHLEROBS_SURFACE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehn.hpp"
#include "errors.hpp"
#include "extensions.hpp"
#include "group_hom.hpp"
#include "homology.hpp"
#include "intlinalg.hpp"
#include "presentation.hpp"
#include "verify.hpp"

namespace kahlerobs {

  /// [a_1, a_{g+1}] [a_2, a_{g+2}] ... [a_g, a_{2g}] on generator indices
  /// offset .. offset + 2g - 1.
  inline Word surface_relator(std::size_t g, std::uint32_t offset = 0) {
    Word r;
    for (std::uint32_t i = 0; i < g; ++i) {
      r = r * commutator(Word::generator(offset + i),
                         Word::generator(offset + i + static_cast<std::uint32_t>(g)));
    }
    return r;
  }

  inline Presentation surface_group(std::size_t g) {
    if (g < 1) {
      throw InputError("surface group genus must be at least 1");
    }
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= 2 * g; ++i) {
      gens.push_back("a" + std::to_string(i));
    }
    return Presentation(
        "Gamma" + std::to_string(g), std::move(gens), {surface_relator(g)});
  }

  inline bool dehn_trivial(std::size_t g, Word const& w) {
    if (g < 2) {
      throw InputError("Dehn's algorithm needs genus at least 2");
    }
    if (w.generator_bound() > 2 * g) {
      throw InputError("word uses a generator outside the surface group");
    }
    return DehnSolver(surface_group(g)).is_trivial(w);
  }

  /// True if w is a cyclic rotation of r or of r^-1.
  inline bool is_cyclic_conjugate(Word const& w, Word const& r) {
    if (w.size() != r.size()) {
      return false;
    }
    for (Word const& target : {r, r.inverse()}) {
      std::vector<Letter> letters(target.begin(), target.end());
      for (std::size_t k = 0; k < letters.size() || k == 0; ++k) {
        std::vector<Letter> rot(letters.begin() + k, letters.end());
        rot.insert(rot.end(), letters.begin(), letters.begin() + k);
        if (std::equal(rot.begin(), rot.end(), w.begin(), w.end())) {
          return true;
        }
        if (letters.empty()) {
          break;
        }
      }
    }
    return false;
  }

  /// Genus g if p is the standard presentation of a surface group (single
  /// relator a cyclic conjugate of the surface relator or its inverse).
  inline std::optional<std::size_t> surface_genus(Presentation const& p) {
    std::size_t n = p.num_generators();
    if (n == 0 || n % 2 || p.relators().size() != 1) {
      return std::nullopt;
    }
    if (!is_cyclic_conjugate(p.relators()[0], surface_relator(n / 2))) {
      return std::nullopt;
    }
    return n / 2;
  }

  struct OrbifoldSurfaceGroup {
    std::size_t            genus = 1;
    std::vector<long>      orders;
    Presentation           presentation;
  };

  /// < a_1..a_2g, q_1..q_r | R q_1 ... q_r, q_i^{m_i} >.
  inline OrbifoldSurfaceGroup orbifold_group(std::size_t              g,
                                             std::vector<long> const& orders) {
    if (g < 1) {
      throw InputError("orbifold genus must be at least 1");
    }
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= 2 * g; ++i) {
      gens.push_back("a" + std::to_string(i));
    }
    Word              r = surface_relator(g);
    std::vector<Word> powers;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] < 2) {
        throw InputError("orbifold orders must be at least 2");
      }
      gens.push_back("q" + std::to_string(i + 1));
      auto q = Word::generator(static_cast<std::uint32_t>(2 * g + i));
      r      = r * q;
      powers.push_back(q.pow(static_cast<int>(orders[i])));
    }
    std::vector<Word> rels{r};
    rels.insert(rels.end(), powers.begin(), powers.end());
    std::string name = "Orbifold" + std::to_string(g);
    for (long m : orders) {
      name += "_" + std::to_string(m);
    }
    return {g, orders, Presentation(name, std::move(gens), std::move(rels))};
  }

  struct OrbifoldH1Report {
    AbelianStructure h1;
    AbelianStructure kernel;  // of H_1(O) -> H_1(Gamma_g)

    bool kernel_is_torsion() const noexcept {
      return kernel.is_finite();
    }
  };

  /// H_1 of the orbifold group and the kernel of the map on H_1 induced by
  /// killing the cone-point generators.
  inline OrbifoldH1Report orbifold_kernel_h1_check(OrbifoldSurfaceGroup const& o) {
    OrbifoldH1Report r;
    IntMatrix        a = o.presentation.exponent_matrix();
    r.h1               = cokernel(a);
    std::size_t surf   = 2 * o.genus;
    std::size_t cone   = o.orders.size();
    // Kernel = Z^cone / {y : (0, y) in the row span of a}.
    IntMatrix surf_part_t(surf, a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < surf; ++j) {
        surf_part_t(j, i) = a(i, j);
      }
    }
    auto      combos = integer_kernel(surf_part_t);
    IntMatrix rel(combos.size(), cone);
    for (std::size_t k = 0; k < combos.size(); ++k) {
      for (std::size_t j = 0; j < cone; ++j) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
          s += combos[k][i] * a(i, surf + j);
        }
        rel(k, j) = s;
      }
    }
    r.kernel = cokernel(rel);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Surjections onto surface groups
  ////////////////////////////////////////////////////////////////////////

  enum class SurfaceVerdict { not_kahler, conditional, consistent };

  inline std::string to_string(SurfaceVerdict v) {
    switch (v) {
      case SurfaceVerdict::not_kahler:
        return "not_kahler";
      case SurfaceVerdict::conditional:
        return "conditional";
      case SurfaceVerdict::consistent:
        return "consistent";
    }
    return "";
  }

  struct SurfaceExtensionResult {
    SurfaceVerdict           verdict = SurfaceVerdict::consistent;
    std::size_t              genus   = 0;
    std::vector<std::string> central;
    CentralExtension         extension;
    ExtensionClass           cls;
    bool                     maximal = false;
    /// "asserted", "derived from b1" or "not established".
    std::string maximality;
    /// Surjectivity is only checked on H_1.
    std::string surjectivity = "H1";
    std::string reason;
  };

  /// For a surjection h from a central extension onto Gamma_g (g >= 2): a
  /// non-torsion extension class together with maximality of h rules out a
  /// Kahler source. Maximality is the caller's assertion, or follows when
  /// b_1(source) < 2g + 2.
  inline SurfaceExtensionResult surface_extension_test(
      GroupHom const& h_in,
      bool            maximality_asserted,
      std::size_t     budget = QuotientAlgebra::default_budget) {
    auto genus = surface_genus(h_in.target());
    if (!genus || *genus < 2) {
      throw InputError("target of '" + h_in.name()
                       + "' is not a surface group of genus at least 2");
    }
    GroupHom h = h_in.verification().implies(Verification::exact())
                     ? h_in
                     : verify_hom(h_in, Verification::exact(), budget);
    DehnSolver const dehn(h.target());

    SurfaceExtensionResult r;
    r.genus = *genus;
    std::size_t              g2 = 2 * *genus;
    std::vector<bool>        used(g2, false);
    for (std::uint32_t i = 0; i < h.source().num_generators(); ++i) {
      Word const& img = h.images()[i];
      if (dehn.is_trivial(img)) {
        r.central.push_back(h.source().generator_name(i));
        continue;
      }
      if (img.size() != 1 || img[0].inverted || used[img[0].gen]) {
        throw InputError("generator '" + h.source().generator_name(i)
                         + "' does not map to a distinct target generator");
      }
      used[img[0].gen] = true;
    }

    IntMatrix m   = h.abelianized_matrix();
    SNFResult snf = smith_normal_form(m);
    bool      onto = snf.rank == g2;
    for (std::size_t i = 0; onto && i < snf.rank; ++i) {
      onto = snf.diagonal[i] == 1;
    }
    if (!onto) {
      throw InputError("'" + h.name() + "' is not surjective on H_1");
    }

    r.extension = recognize_extension(h.source(), r.central, budget);
    bool has_surface_relator = false;
    for (auto j : r.extension.base_relator_origin) {
      Word img = h.apply(h.source().relators()[j]).cyclically_reduced();
      has_surface_relator =
          has_surface_relator || is_cyclic_conjugate(img, h.target().relators()[0]);
    }
    if (!has_surface_relator) {
      throw InputError("no relator of '" + h.source().name()
                       + "' lifts the surface relator");
    }
    r.cls = class_and_torsion(r.extension);

    std::size_t b1 = betti1(h.source());
    if (maximality_asserted) {
      r.maximal    = true;
      r.maximality = "asserted";
    } else if (b1 < g2 + 2) {
      r.maximal    = true;
      r.maximality = "derived from b1";
    } else {
      r.maximality = "not established";
    }

    if (r.cls.verdict != ClassVerdict::non_torsion) {
      r.verdict = SurfaceVerdict::consistent;
      r.reason  = "extension class is " + to_string(r.cls.verdict);
    } else if (r.maximal) {
      r.verdict = SurfaceVerdict::not_kahler;
      r.reason  = "non-torsion extension class for a maximal surjection onto "
                 "a surface group";
    } else {
      r.verdict = SurfaceVerdict::conditional;
      r.reason  = "non-torsion extension class; obstructs if the surjection "
                 "is maximal";
    }
    return r;
  }

  /// The projection of a central extension onto its base, when the base is
  /// the standard presentation of a surface group.
  inline std::optional<GroupHom> projection_to_surface(CentralExtension const& e) {
    auto genus = surface_genus(e.base);
    if (!genus) {
      return std::nullopt;
    }
    Presentation      target = surface_group(*genus);
    std::vector<Word> images(e.total.num_generators());
    for (std::size_t i = 0; i < e.base_generators.size(); ++i) {
      images[e.base_generators[i]] =
          Word::generator(static_cast<std::uint32_t>(i));
    }
    // The base relator may be a rotation of the standard one; that is the
    // same group on the same generators.
    return GroupHom("projection", e.total, target, std::move(images));
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_SURFACE_HPP_
