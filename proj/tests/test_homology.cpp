#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace kahlerobs;
using testing::Rng;

namespace {

  Document example24() {
    return parse_document(R"(
      group Z2 { gens: x1, x2; rels: [x1,x2]; }
      group Z4 {
        gens: y1, y2, y3, y4;
        rels: [y1,y2], [y1,y3], [y1,y4], [y2,y3], [y2,y4], [y3,y4];
      }
      hom p : Z2 -> Z4 { x1 => y1, x2 => y2 }
      hom q : Z4 -> Z2 { y1 => x1, y2 => 1, y3 => x2, y4 => 1 }
      hom qp : Z2 -> Z2 = q * p;
    )");
  }

  H1ParityReport parity(GroupHom const& h) {
    return h1_parity_check(verify_hom(h, Verification::exact()));
  }

  /// Sum over the word of alpha(prefix) beta(letter), from the second Fox
  /// derivatives: value = sum_{i,j} a_i b_j eps(d_i d_j r), expanded
  /// letter by letter with d_j applied first.
  mpq_class second_fox_oracle(Word const& r, RatVector const& a, RatVector const& b) {
    std::size_t n = a.size();
    mpq_class   total = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      for (auto const& [u, c] : fox_derivative_free(r, j)) {
        for (std::uint32_t i = 0; i < n; ++i) {
          mpz_class eps = 0;
          for (auto const& [v, d] : fox_derivative_free(u, i)) {
            eps += d;
          }
          total += a[i] * b[j] * mpq_class(c * eps);
        }
      }
    }
    return total;
  }

  RatVector random_combination(Rng& rng, std::vector<OneCocycle> const& basis,
                               std::size_t n) {
    RatVector v(n, mpq_class(0));
    for (auto const& b : basis) {
      mpq_class k(rng.range(-3, 3));
      for (std::size_t i = 0; i < n; ++i) {
        v[i] += k * b[i];
      }
    }
    return v;
  }

  /// A presentation whose relators all have zero exponent sums, so that
  /// every vector is a 1-cocycle.
  Presentation commutator_presentation(Rng& rng, std::uint32_t gens) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < gens; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    std::vector<Word> rels;
    for (long k = rng.range(1, 3); k > 0; --k) {
      Word r = commutator(testing::random_word(rng, gens, 4),
                          testing::random_word(rng, gens, 4));
      if (rng.coin()) {
        r = r * commutator(testing::random_word(rng, gens, 3),
                           testing::random_word(rng, gens, 3));
      }
      if (!r.cyclically_reduced().empty()) {
        rels.push_back(r);
      }
    }
    return Presentation("C", names, rels);
  }

}  // namespace

TEST_CASE("first Betti numbers", "[homology]") {
  CHECK(betti1(presentations::heisenberg()) == 2);
  CHECK(betti1(presentations::free_abelian(5)) == 5);
  CHECK(betti1(surface_group(3)) == 6);
  CHECK(h1(presentations::heisenberg()).to_string() == "Z^2");
}

TEST_CASE("induced maps on H1", "[homology]") {
  Document d  = example24();
  auto     qp = parity(d.hom("qp"));
  CHECK(qp.rank_image == 1);
  CHECK(qp.rank_kernel == 1);
  CHECK(qp.rank_cokernel == 1);
  CHECK(qp.fires());

  auto p = parity(d.hom("p"));
  CHECK(p.induced == IntMatrix{{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  CHECK((std::array{p.rank_image, p.rank_kernel, p.rank_cokernel})
        == std::array<std::size_t, 3>{2, 0, 2});
  CHECK_FALSE(p.fires());

  auto q = parity(d.hom("q"));
  CHECK(q.induced == IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK((std::array{q.rank_image, q.rank_kernel, q.rank_cokernel})
        == std::array<std::size_t, 3>{2, 2, 0});
  CHECK_FALSE(q.fires());

  auto id = parity(identity_hom(surface_group(2)));
  CHECK((std::array{id.rank_image, id.rank_kernel, id.rank_cokernel})
        == std::array<std::size_t, 3>{4, 0, 0});

  CHECK_THROWS_AS(h1_parity_check(d.hom("p")), InputError);
}

TEST_CASE("H1 parity ranks obey rank-nullity on random maps", "[homology][property]") {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t  m = static_cast<std::size_t>(rng.range(1, 4));
    std::size_t  n = static_cast<std::size_t>(rng.range(1, 4));
    Presentation src = presentations::free_abelian(m, "x");
    Presentation tgt = presentations::free_abelian(n, "y");
    std::vector<Word> images;
    IntMatrix         oracle(n, m);
    for (std::size_t j = 0; j < m; ++j) {
      Word w;
      for (std::uint32_t i = 0; i < n; ++i) {
        long e = rng.range(-2, 2);
        oracle(i, j) = e;
        w = w * Word::generator(i, static_cast<int>(e));
      }
      images.push_back(w);
    }
    auto r = parity(GroupHom("h", src, tgt, images));
    CHECK(r.induced == oracle);
    CHECK(r.rank_image == rank(oracle));
    CHECK(r.rank_image + r.rank_kernel == m);
    CHECK(r.rank_image + r.rank_cokernel == n);
  }
}

TEST_CASE("Fox derivatives by hand", "[homology][fox]") {
  Word x = Word::generator(0), y = Word::generator(1);
  auto d = fox_derivative_free(commutator(x, y), 0);
  CHECK(d == FreeGroupRingElement{{Word(), 1}, {x * y * x.inverse(), -1}});
  auto cube = fox_derivative_free(x.pow(3), 0);
  CHECK(cube == FreeGroupRingElement{{Word(), 1}, {x, 1}, {x.pow(2), 1}});
  CHECK(fox_derivative_free(y, 0).empty());
  auto inv = fox_derivative_free(x.inverse(), 0);
  CHECK(inv == FreeGroupRingElement{{x.inverse(), -1}});
}

TEST_CASE("fundamental formula of Fox calculus", "[homology][fox][property]") {
  // sum_j (d w / d x_j)(x_j - 1) = w - 1 in the free group ring.
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    Word                 w = testing::random_word(rng, 3, 14);
    FreeGroupRingElement sum;
    for (std::uint32_t j = 0; j < 3; ++j) {
      for (auto const& [u, c] : fox_derivative_free(w, j)) {
        sum[u * Word::generator(j)] += c;
        sum[u] -= c;
      }
    }
    sum[w] -= 1;
    sum[Word()] += 1;
    std::erase_if(sum, [](auto const& kv) { return kv.second == 0; });
    CHECK(sum.empty());
  }
}

TEST_CASE("Fox matrix specializes to the exponent matrix", "[homology][fox]") {
  for (Presentation const& p :
       {presentations::heisenberg(), surface_group(2),
        orbifold_group(2, {3, 3}).presentation, presentations::free_abelian(3)}) {
    FoxMatrix f = fox_derivatives(p);
    CHECK(f.specialize() == p.exponent_matrix());
  }
  // Z^2: d[x,y]/dx = 1 - y in Q[H_1].
  FoxMatrix f = fox_derivatives(presentations::free_abelian(2));
  auto const& c = f.coordinates();
  AbelianGroupRingElement expected{{c.of_exponents({0, 0}), 1},
                                   {c.of_exponents({0, 1}), -1}};
  CHECK(f(0, 0) == expected);
}

TEST_CASE("cup products by hand", "[homology][cup]") {
  Presentation z2 = presentations::free_abelian(2);
  RatVector    xs{1, 0}, ys{0, 1};
  CHECK(cup_product(z2, xs, ys).values == RatVector{1});
  CHECK(cup_product(z2, ys, xs).values == RatVector{-1});

  Presentation g2 = surface_group(2);
  RatVector    a1{1, 0, 0, 0}, a2{0, 1, 0, 0}, a3{0, 0, 1, 0};
  CHECK(cup_product(g2, a1, a3).values == RatVector{1});
  CHECK(cup_product(g2, a1, a2).values == RatVector{0});

  CHECK_THROWS_AS(cup_product(presentations::heisenberg(), RatVector{0, 0, 1},
                              RatVector{1, 0, 0}),
                  InputError);
}

TEST_CASE("cup product equals the second Fox derivative formula", "[homology][cup][property]") {
  Rng rng(23);
  for (int t = 0; t < 80; ++t) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.range(2, 4));
    Presentation  p = commutator_presentation(rng, n);
    RatVector     a, b;
    for (std::uint32_t i = 0; i < n; ++i) {
      a.push_back(rng.range(-3, 3));
      b.push_back(rng.range(-3, 3));
    }
    auto c = cup_product(p, a, b);
    for (std::size_t j = 0; j < p.relators().size(); ++j) {
      CHECK(c.values[j] == second_fox_oracle(p.relators()[j], a, b));
    }
  }
}

TEST_CASE("cup product is graded commutative in cohomology", "[homology][cup][property]") {
  Rng rng(29);
  for (int t = 0; t < 80; ++t) {
    std::uint32_t     n = static_cast<std::uint32_t>(rng.range(2, 4));
    std::vector<Word> rels;
    for (long k = rng.range(1, 3); k > 0; --k) {
      Word r = testing::random_word(rng, n, 8).cyclically_reduced();
      if (!r.empty()) {
        rels.push_back(r);
      }
    }
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    Presentation p("R", names, rels);
    auto         basis = h1_cocycle_basis(p);
    RatVector    a     = random_combination(rng, basis, n);
    RatVector    b     = random_combination(rng, basis, n);
    REQUIRE(is_cocycle(p, a));
    auto ab = cup_product(p, a, b), ba = cup_product(p, b, a);
    for (auto& v : ba.values) {
      v = -v;
    }
    CHECK(same_class(p, ab, ba));
    auto aa = cup_product(p, a, a);
    CHECK(is_coboundary(p, aa.values));
  }
}

TEST_CASE("cup product injectivity", "[homology][cup]") {
  auto h5 = cup_injectivity_check(presentations::heisenberg5());
  CHECK_FALSE(h5.injective);
  REQUIRE(h5.h1_basis.size() == 4);
  REQUIRE(h5.kernel.size() == 1);
  // The basis is x1*, y1*, x2*, y2*; the kernel is x1*^y1* + x2*^y2*.
  for (std::size_t i = 0; i < 4; ++i) {
    RatVector e(5, mpq_class(0));
    e[i] = 1;
    CHECK(h5.h1_basis[i] == e);
  }
  RatVector expected(6, mpq_class(0));
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = h5.wedge_basis[k];
    if ((i == 0 && j == 1) || (i == 2 && j == 3)) {
      expected[k] = 1;
    }
  }
  CHECK(h5.kernel[0] == expected);

  auto z4 = cup_injectivity_check(presentations::free_abelian(4));
  CHECK(z4.injective);
  CHECK(z4.wedge_basis.size() == 6);

  auto g2 = cup_injectivity_check(surface_group(2));
  CHECK_FALSE(g2.injective);
  CHECK(g2.kernel.size() == 5);
}

TEST_CASE("cup kernel vectors map to coboundaries", "[homology][cup][property]") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    Presentation p   = commutator_presentation(rng, static_cast<std::uint32_t>(rng.range(2, 4)));
    auto         cup = cup_injectivity_check(p);
    std::size_t  b   = cup.h1_basis.size();
    // Dimension count: Lambda^2 H^1 -> H^2 has rank at most dim H^2.
    std::size_t h2 = p.relators().size() - rank(p.exponent_matrix());
    CHECK(cup.wedge_basis.size() - cup.kernel.size() <= h2);
    for (auto const& k : cup.kernel) {
      RatVector total(p.relators().size(), mpq_class(0));
      for (std::size_t w = 0; w < k.size(); ++w) {
        auto [i, j] = cup.wedge_basis[w];
        auto c      = cup_product(p, cup.h1_basis[i], cup.h1_basis[j]);
        for (std::size_t r = 0; r < total.size(); ++r) {
          total[r] += k[w] * c.values[r];
        }
      }
      CHECK(is_coboundary(p, total));
    }
    CHECK(cup.injective == cup.kernel.empty());
    CHECK(b == betti1(p));
  }
}
