// The obstruction batteries run by the command-line tool.

#ifndef KAHLEROBS_ANALYSIS_HPP_
#define KAHLEROBS_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "extensions.hpp"
#include "group_hom.hpp"
#include "homology.hpp"
#include "lieranks.hpp"
#include "parser.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "surface.hpp"
#include "verify.hpp"

namespace kahlerobs {

  struct AnalysisOptions {
    std::size_t   max_degree = 3;
    std::size_t   dim_budget = QuotientAlgebra::default_budget;
    std::uint64_t seed       = 0;
    /// The user asserts that the surjection onto the surface group does not
    /// factor through a surface group of larger genus.
    bool maximal = false;
  };

  namespace detail {

    /// Runs body(record); a budget overrun turns the record inconclusive.
    template <typename Body>
    TestRecord guarded(std::string name, std::string anchor, Body body) {
      TestRecord t{std::move(name), std::move(anchor), Verdict::inconclusive, Json::object()};
      try {
        body(t);
      } catch (BudgetExceeded const& e) {
        t.verdict = Verdict::inconclusive;
        t.witness = Json::object();
        t.witness["reason"]   = e.what();
        t.witness["required"] = e.required();
        t.witness["budget"]   = e.budget();
      }
      return t;
    }

    inline Json ranks_json(GradedRanks const& r) {
      return Json(r.ranks);
    }

    inline Json class_json(ExtensionClass const& c) {
      Json j;
      j["class"] = to_string(c.verdict);
      j["order"] = to_json(c.order);
      j["certificate"] =
          c.certificate ? to_json(*c.certificate) : Json(nullptr);
      j["caveats"] = c.caveats;
      return j;
    }

  }  // namespace detail

  inline TestRecord h1_parity_record(Presentation const& p) {
    return detail::guarded(
        "h1_parity", "first Betti number of a Kahler group is even",
        [&](TestRecord& t) {
          AbelianStructure a = h1(p);
          t.witness["b1"]    = a.rank;
          t.witness["h1"]    = a.to_string();
          t.verdict = a.rank % 2 ? Verdict::not_kahler : Verdict::consistent;
        });
  }

  inline TestRecord formality_record(Presentation const&    p,
                                     AnalysisOptions const& o) {
    return detail::guarded(
        "formality",
        "Malcev Lie algebra of a Kahler group has a quadratic presentation",
        [&](TestRecord& t) {
          t.witness["max_degree"] = o.max_degree;
          if (o.max_degree < 3) {
            t.witness["reason"] = "needs degree at least 3";
            return;
          }
          FormalityResult f = formality_test(p, o.max_degree, o.dim_budget);
          t.witness["lcs"]      = detail::ranks_json(f.lcs);
          t.witness["holonomy"] = detail::ranks_json(f.holonomy);
          if (f.fires()) {
            t.witness["witness_degree"] = *f.witness_degree;
            t.verdict                   = Verdict::not_kahler;
          } else {
            t.witness["witness_degree"] = nullptr;
            t.verdict                   = Verdict::consistent;
          }
        });
  }

  inline TestRecord abelianization_class_record(Presentation const&    p,
                                                AnalysisOptions const& o) {
    return detail::guarded(
        "abelianization_class",
        "abelianization extension class is torsion when b1 = 2, or b1 = 4 "
        "with injective cup product",
        [&](TestRecord& t) {
          AbelianizationClassResult r = abelianization_class_test(p, o.dim_budget);
          t.witness["b1"] = r.b1;
          t.witness["cup_injective"] =
              r.cup_injective ? Json(*r.cup_injective) : Json(nullptr);
          if (r.canonical) {
            t.witness["gr2_rank"] = r.canonical->gr2_rank;
            t.witness["lifts"]    = to_json(r.canonical->cls.lifts);
            t.witness.update(detail::class_json(r.canonical->cls));
          }
          t.witness["reason"] = r.reason;
          t.verdict = r.verdict == PipelineVerdict::not_kahler
                          ? Verdict::not_kahler
                          : Verdict::inconclusive;
        });
  }

  inline TestRecord extension_record(GroupDecl const&       g,
                                     AnalysisOptions const& o) {
    return detail::guarded(
        "extension_class",
        "extension class of a maximal surjection onto a surface group is "
        "torsion",
        [&](TestRecord& t) {
          t.witness["central"] = g.central;
          CentralExtension e;
          try {
            e = recognize_extension(g.presentation, g.central, o.dim_budget);
          } catch (InputError const& err) {
            t.witness["reason"] = std::string("not a central extension: ")
                                  + err.what();
            return;
          }
          ExtensionClass c = class_and_torsion(e);
          t.witness["base"]                 = to_text(e.base);
          t.witness["base_exponent_matrix"] = to_json(e.base_exponent_matrix());
          t.witness["lifts"]                = to_json(e.lifts);
          t.witness["kernel_hypothesis"]    = e.kernel_hypothesis;
          t.witness.update(detail::class_json(c));

          auto genus = surface_genus(e.base);
          if (!genus || *genus < 2) {
            t.witness["surface_genus"] =
                genus ? Json(*genus) : Json(nullptr);
            if (c.verdict == ClassVerdict::non_torsion) {
              t.witness["reason"] =
                  "non-torsion class, but the base is not a surface group of "
                  "genus at least 2";
            } else {
              t.witness["reason"] = "class is " + to_string(c.verdict);
              t.verdict           = Verdict::consistent;
            }
            return;
          }
          SurfaceExtensionResult s =
              surface_extension_test(*projection_to_surface(e), o.maximal,
                                     o.dim_budget);
          t.witness["surface_genus"] = s.genus;
          t.witness["maximality"]    = s.maximality;
          t.witness["surjectivity"]  = s.surjectivity;
          t.witness["reason"]        = s.reason;
          switch (s.verdict) {
            case SurfaceVerdict::not_kahler:
              t.verdict =
                  e.kernel_hypothesis ? Verdict::not_kahler : Verdict::caveat;
              break;
            case SurfaceVerdict::conditional:
              t.verdict = Verdict::inconclusive;
              break;
            case SurfaceVerdict::consistent:
              t.verdict = Verdict::consistent;
              break;
          }
        });
  }

  /// Full battery for one group: H_1 parity, formality, the abelianization
  /// class and, with a central clause, the surface-extension class.
  inline ObstructionReport analyze(GroupDecl const&       g,
                                   std::string            file,
                                   std::string const&     contents,
                                   AnalysisOptions const& o) {
    ObstructionReport r;
    r.file    = std::move(file);
    r.hash    = fnv1a_hex(contents);
    r.seed    = o.seed;
    r.subject = g.presentation.name();
    r.tests.push_back(h1_parity_record(g.presentation));
    r.tests.push_back(formality_record(g.presentation, o));
    r.tests.push_back(abelianization_class_record(g.presentation, o));
    if (!g.central.empty()) {
      r.tests.push_back(extension_record(g, o));
    }
    return r;
  }

  /// Verifies h exactly when the target's word problem is supported, and
  /// in the class-d nilpotent quotient otherwise.
  inline GroupHom verify_for_analysis(GroupHom const& h, AnalysisOptions const& o) {
    if (WordProblem::supported(h.target())) {
      return verify_hom(h, Verification::exact(), o.dim_budget);
    }
    return verify_hom(h, Verification::nilpotent(o.max_degree), o.dim_budget);
  }

  inline ObstructionReport analyze_hom(GroupHom const&        h_in,
                                       std::string            file,
                                       std::string const&     contents,
                                       AnalysisOptions const& o) {
    GroupHom          h = verify_for_analysis(h_in, o);
    std::string       level = h.verification().to_string();
    ObstructionReport r;
    r.file    = std::move(file);
    r.hash    = fnv1a_hex(contents);
    r.seed    = o.seed;
    r.subject = h.name();

    r.tests.push_back(detail::guarded(
        "h1_parity_hom",
        "image, kernel and cokernel of a Kahler homomorphism on H1 have even "
        "rank",
        [&](TestRecord& t) {
          H1ParityReport p         = h1_parity_check(h);
          t.witness["verification"]  = level;
          t.witness["source_b1"]     = p.source_b1;
          t.witness["target_b1"]     = p.target_b1;
          t.witness["rank_image"]    = p.rank_image;
          t.witness["rank_kernel"]   = p.rank_kernel;
          t.witness["rank_cokernel"] = p.rank_cokernel;
          t.witness["induced"]       = to_json(p.induced);
          t.verdict = p.fires() ? Verdict::not_kahler_hom : Verdict::consistent;
        }));

    r.tests.push_back(detail::guarded(
        "strictness",
        "a Kahler homomorphism strictly preserves the lower central series",
        [&](TestRecord& t) {
          t.witness["verification"] = level;
          t.witness["max_degree"]   = o.max_degree;
          StrictnessResult s = strictness_check(h, o.max_degree, o.dim_budget);
          Json             degrees = Json::array();
          for (auto const& d : s.degrees) {
            Json x;
            x["degree"]            = d.degree;
            x["image_of_level"]    = d.image_of_level;
            x["image_meets_level"] = d.image_meets_level;
            degrees.push_back(std::move(x));
          }
          t.witness["degrees"] = std::move(degrees);
          auto fail            = s.failure();
          t.witness["failure_degree"] = fail ? Json(*fail) : Json(nullptr);
          t.verdict = fail ? Verdict::not_kahler_hom : Verdict::consistent;
        }));

    r.tests.push_back(detail::guarded(
        "commutator_image",
        "a Kahler homomorphism with image in the commutator subgroup induces "
        "the zero Malcev map",
        [&](TestRecord& t) {
          t.witness["verification"] = level;
          t.witness["max_degree"]   = o.max_degree;
          CommutatorImageResult c =
              commutator_image_check(h, o.max_degree, o.dim_budget);
          t.witness["images_in_commutator"] = c.images_in_commutator;
          t.witness["nonzero_generator"] =
              c.nonzero_generator
                  ? Json(h.source().generator_name(*c.nonzero_generator))
                  : Json(nullptr);
          t.verdict = c.fires() ? Verdict::not_kahler_hom : Verdict::consistent;
        }));
    return r;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_ANALYSIS_HPP_
