#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace kahlerobs;
using testing::Rng;

namespace {

  GroupDecl intro_group() {
    return parse_group(R"(
      group G {
        gens: a1, a2, a3, a4, c;
        rels: [a1,a3][a2,a4] = c, [a1,c], [a2,c], [a3,c], [a4,c];
        central: c;
      })");
  }

  GroupDecl split_product() {
    return parse_group(R"(
      group G2xZ {
        gens: a1, a2, a3, a4, c;
        rels: [a1,a3][a2,a4], [a1,c], [a2,c], [a3,c], [a4,c];
        central: c;
      })");
  }

  GroupDecl order_two() {
    return parse_group(R"(
      group T {
        gens: x, y, c;
        rels: x^2 y^-2 = c, [x,c], [y,c];
        central: c;
      })");
  }

  CentralExtension recognize(GroupDecl const& g) {
    return recognize_extension(g.presentation, g.central);
  }

  /// Base relators r_j and lifts v_j: total relators r_j c^-v_j plus all
  /// centrality commutators.
  GroupDecl random_extension(Rng& rng, IntMatrix& lifts_out) {
    std::uint32_t m = static_cast<std::uint32_t>(rng.range(1, 3));
    std::uint32_t k = static_cast<std::uint32_t>(rng.range(1, 2));
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < m; ++i) {
      names.push_back("x" + std::to_string(i + 1));
    }
    std::vector<std::string> central;
    for (std::uint32_t l = 0; l < k; ++l) {
      central.push_back("c" + std::to_string(l + 1));
      names.push_back(central.back());
    }
    std::vector<Word>              rels;
    std::vector<std::vector<long>> lifts;
    for (long j = rng.range(1, 3); j > 0; --j) {
      Word r = testing::random_word(rng, m, 6).cyclically_reduced();
      if (r.empty()) {
        continue;
      }
      std::vector<long> v;
      for (std::uint32_t l = 0; l < k; ++l) {
        v.push_back(rng.range(-3, 3));
        r = r * Word::generator(m + l, -static_cast<int>(v.back()));
      }
      rels.push_back(r);
      lifts.push_back(v);
    }
    for (std::uint32_t l = 0; l < k; ++l) {
      for (std::uint32_t y = 0; y < m + k; ++y) {
        if (y != m + l && (y < m || y > m + l)) {
          rels.push_back(commutator(Word::generator(y), Word::generator(m + l)));
        }
      }
    }
    lifts_out = IntMatrix(lifts.size(), k);
    for (std::size_t j = 0; j < lifts.size(); ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        lifts_out(j, l) = lifts[j][l];
      }
    }
    return {Presentation("E", names, rels), central};
  }

}  // namespace

TEST_CASE("recognize central extensions", "[extensions]") {
  CentralExtension e = recognize(intro_group());
  CHECK(surface_genus(e.base) == 2);
  CHECK(e.lifts == IntMatrix{{1}});
  CHECK(e.base_exponent_matrix() == IntMatrix(1, 4));
  CHECK(e.kernel_hypothesis);

  CentralExtension h = recognize_extension(presentations::heisenberg(), {"c"});
  CHECK(h.base.relators()
        == std::vector<Word>{commutator(Word::generator(0), Word::generator(1))});
  CHECK(h.lifts == IntMatrix{{1}});
  CHECK(h.base_exponent_matrix() == IntMatrix(1, 2));

  CentralExtension s = recognize(split_product());
  CHECK(s.lifts == IntMatrix{{0}});
}

TEST_CASE("recognition rejects non-central data", "[extensions]") {
  CHECK_THROWS_AS(recognize_extension(presentations::heisenberg(), {"x"}), InputError);
  CHECK_THROWS_AS(recognize_extension(presentations::heisenberg(), {"q"}), InputError);
  CHECK_THROWS_AS(recognize_extension(presentations::heisenberg(), {"c", "c"}),
                  InputError);
  GroupDecl only_central = parse_group("gens: x, c; rels: c^2, [x,c];");
  CHECK_THROWS_AS(recognize_extension(only_central.presentation, {"c"}), InputError);
}

TEST_CASE("extension classes", "[extensions][class]") {
  ExtensionClass intro = class_and_torsion(recognize(intro_group()));
  CHECK(intro.verdict == ClassVerdict::non_torsion);
  CHECK(intro.order == 0);
  CHECK(intro.unsolvable_coordinate == 0u);
  CHECK_FALSE(intro.certificate);

  ExtensionClass heis =
      class_and_torsion(recognize_extension(presentations::heisenberg(), {"c"}));
  CHECK(heis.verdict == ClassVerdict::non_torsion);

  CentralExtension t  = recognize(order_two());
  ExtensionClass   tc = class_and_torsion(t);
  CHECK(tc.verdict == ClassVerdict::torsion);
  CHECK(tc.order == 2);
  REQUIRE(tc.certificate);
  // The certificate solves A w = -v over Q.
  CHECK(2 * (*tc.certificate)(0, 0) - 2 * (*tc.certificate)(1, 0) == -1);

  ExtensionClass split = class_and_torsion(recognize(split_product()));
  CHECK(split.verdict == ClassVerdict::zero);
  CHECK(split.order == 1);
  CHECK(split.caveats.empty());
}

TEST_CASE("kernel hypothesis failure is reported as a caveat", "[extensions][class]") {
  // x^2 = 1 forces c = [x,y] to have order 2.
  GroupDecl g = parse_group("gens: x, y, c; rels: [x,y] = c, [x,c], [y,c], x^2;");
  CentralExtension e = recognize_extension(g.presentation, {"c"});
  CHECK_FALSE(e.kernel_hypothesis);
  CHECK_FALSE(class_and_torsion(e).caveats.empty());
}

TEST_CASE("pushout presentations", "[extensions][pushout]") {
  CentralExtension e  = recognize(intro_group());
  Presentation     h2 = build_Hn(e, 2);
  Word expected = commutator(Word::generator(0), Word::generator(2))
                  * commutator(Word::generator(1), Word::generator(3))
                  * Word::generator(4, -2);
  CHECK(h2.relators()[0] == expected.cyclically_reduced());
  CHECK(build_Hn(e, 1).relators() == e.total.relators());

  CentralExtension s = recognize(split_product());
  for (long n = 1; n <= 4; ++n) {
    CHECK(build_Hn(s, n).relators() == s.total.relators());
  }
  CHECK_THROWS_AS(build_Hn(e, 0), InputError);
}

TEST_CASE("section search", "[extensions][section]") {
  CentralExtension e = recognize(intro_group());
  for (long n = 1; n <= 6; ++n) {
    CHECK_FALSE(section_search(e, n));
  }

  CentralExtension t = recognize(order_two());
  CHECK_FALSE(section_search(t, 1));
  auto s = section_search(t, 2);
  REQUIRE(s);
  CHECK(2 * s->w(0, 0) - 2 * s->w(1, 0) == -2);
  CHECK(section_scan_bound(t) == 2);

  auto split = section_search(recognize(split_product()), 1);
  REQUIRE(split);
  CHECK(split->w.is_zero());
}

TEST_CASE("class verdict agrees with the section scan", "[extensions][property]") {
  Rng         rng(1009);
  std::size_t seen = 0, non_torsion = 0, torsion = 0, zero = 0;
  while (seen < 40) {
    IntMatrix lifts;
    GroupDecl g = random_extension(rng, lifts);
    CentralExtension e = recognize_extension(g.presentation, g.central);
    mpz_class        bound = section_scan_bound(e);
    if (bound > 60) {
      continue;
    }
    ++seen;
    CHECK(e.lifts == lifts);
    ExtensionClass c = class_and_torsion(e);
    long           first = 0;
    for (long n = 1; n <= bound.get_si() && first == 0; ++n) {
      if (section_search(e, n)) {
        first = n;
      }
    }
    INFO(to_text(g.presentation, g.central));
    switch (c.verdict) {
      case ClassVerdict::zero:
        ++zero;
        CHECK(first == 1);
        break;
      case ClassVerdict::torsion:
        ++torsion;
        CHECK(c.order == first);
        // Sections exist exactly at multiples of the order.
        for (long n = 1; n <= 2 * first; ++n) {
          CHECK(section_search(e, n).has_value() == (n % first == 0));
        }
        break;
      case ClassVerdict::non_torsion:
        ++non_torsion;
        CHECK(first == 0);
        CHECK_FALSE(section_search(e, bound.get_si() + 1));
        break;
    }
  }
  CHECK(zero > 0);
  CHECK(torsion > 0);
  CHECK(non_torsion > 0);
}

TEST_CASE("class-2 pushforward of the abelianization", "[extensions][canonical]") {
  CanonicalExtension h = canonical_class2_extension(presentations::heisenberg());
  CHECK(h.b1 == 2);
  CHECK(h.gr2_rank == 1);
  CHECK(h.cls.verdict == ClassVerdict::non_torsion);
  CHECK(h.extension.base_exponent_matrix().is_zero());

  CanonicalExtension z4 = canonical_class2_extension(presentations::free_abelian(4));
  CHECK(z4.gr2_rank == 0);
  CHECK(z4.cls.verdict == ClassVerdict::zero);

  CanonicalExtension g2 = canonical_class2_extension(surface_group(2));
  CHECK(g2.gr2_rank == 5);
  CHECK(g2.cls.verdict == ClassVerdict::non_torsion);

  // Torsion in H_1 is dropped: Z/2 x Heisenberg still has b1 = 2.
  GroupDecl t = parse_group(
      "gens: x, y, c, s; rels: [x,y] = c, [x,c], [y,c], s^2, [s,x], [s,y], [s,c];");
  CanonicalExtension tc = canonical_class2_extension(t.presentation);
  CHECK(tc.b1 == 2);
  CHECK(tc.cls.verdict == ClassVerdict::non_torsion);
}

TEST_CASE("abelianization class pipeline", "[extensions][canonical]") {
  auto heis = abelianization_class_test(presentations::heisenberg());
  CHECK(heis.verdict == PipelineVerdict::not_kahler);
  CHECK(heis.b1 == 2);

  auto h5 = abelianization_class_test(presentations::heisenberg5());
  CHECK(h5.verdict == PipelineVerdict::inconclusive);
  CHECK(h5.cup_injective == false);
  CHECK_FALSE(h5.canonical);

  auto z2 = abelianization_class_test(presentations::free_abelian(2));
  CHECK(z2.verdict == PipelineVerdict::inconclusive);
  REQUIRE(z2.canonical);
  CHECK(z2.canonical->cls.verdict == ClassVerdict::zero);

  auto z4 = abelianization_class_test(presentations::free_abelian(4));
  CHECK(z4.cup_injective == true);
  CHECK(z4.verdict == PipelineVerdict::inconclusive);

  auto g2 = abelianization_class_test(surface_group(2));
  CHECK(g2.verdict == PipelineVerdict::inconclusive);
  CHECK(g2.cup_injective == false);

  auto z3 = abelianization_class_test(presentations::free_abelian(3));
  CHECK(z3.verdict == PipelineVerdict::inconclusive);
  CHECK_FALSE(z3.cup_injective);
}
