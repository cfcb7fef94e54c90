#include <catch_amalgamated.hpp>

#include <functional>

#include "support.hpp"

using namespace kahlerobs;
using testing::Rng;

namespace {

  /// Laplace expansion; only used on small matrices.
  mpz_class laplace_det(std::vector<std::vector<mpz_class>> const& m) {
    std::size_t n = m.size();
    if (n == 0) {
      return 1;
    }
    mpz_class det = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[0][j] == 0) {
        continue;
      }
      std::vector<std::vector<mpz_class>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<mpz_class> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) {
            row.push_back(m[i][k]);
          }
        }
        minor.push_back(std::move(row));
      }
      mpz_class term = m[0][j] * laplace_det(minor);
      det += j % 2 ? mpz_class(-term) : term;
    }
    return det;
  }

  void subsets(std::size_t n, std::size_t k,
               std::function<void(std::vector<std::size_t> const&)> const& f) {
    std::vector<std::size_t> s;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (s.size() == k) {
        f(s);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        s.push_back(i);
        rec(i + 1);
        s.pop_back();
      }
    };
    rec(0);
  }

  /// gcd of all k x k minors.
  mpz_class determinantal_divisor(IntMatrix const& a, std::size_t k) {
    mpz_class g = 0;
    subsets(a.rows(), k, [&](auto const& rows) {
      subsets(a.cols(), k, [&](auto const& cols) {
        std::vector<std::vector<mpz_class>> m;
        for (auto i : rows) {
          std::vector<mpz_class> r;
          for (auto j : cols) {
            r.push_back(a(i, j));
          }
          m.push_back(std::move(r));
        }
        mpz_class d = laplace_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    return g;
  }

  bool is_diagonal_chain(SNFResult const& s) {
    for (std::size_t i = 0; i < s.D.rows(); ++i) {
      for (std::size_t j = 0; j < s.D.cols(); ++j) {
        if (i != j && s.D(i, j) != 0) {
          return false;
        }
      }
    }
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      if (s.diagonal[i] < 0 || s.diagonal[i] != s.D(i, i)) {
        return false;
      }
      if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0
          && s.diagonal[i + 1] % s.diagonal[i] != 0) {
        return false;
      }
      if (i + 1 < s.diagonal.size() && s.diagonal[i] == 0 && s.diagonal[i + 1] != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("Smith normal form examples", "[snf]") {
  SNFResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.diagonal == std::vector<mpz_class>{2, 4});
  CHECK(s.rank == 2);

  CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal
        == std::vector<mpz_class>{1, 1, 1});

  SNFResult z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.diagonal == std::vector<mpz_class>{0, 0});
  CHECK(z.rank == 0);
}

TEST_CASE("Smith normal form against determinantal divisors", "[snf][property]") {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 6));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    IntMatrix   a = testing::random_matrix(rng, m, n, 9);
    SNFResult   s = smith_normal_form(a);
    INFO("trial " << t);
    CHECK(s.U * a * s.V == s.D);
    CHECK(testing::is_identity(s.U * s.U_inv));
    CHECK(testing::is_identity(s.V * s.V_inv));
    CHECK(abs(laplace_det([&] {
            std::vector<std::vector<mpz_class>> u;
            for (std::size_t i = 0; i < s.U.rows(); ++i) {
              u.push_back(s.U.row(i));
            }
            return u;
          }())) == 1);
    CHECK(is_diagonal_chain(s));
    // d_1 d_2 ... d_k = gcd of k x k minors.
    mpz_class prod = 1;
    for (std::size_t k = 1; k <= std::min<std::size_t>({m, n, 4}); ++k) {
      prod *= s.diagonal[k - 1];
      CHECK(prod == determinantal_divisor(a, k));
    }
  }
}

TEST_CASE("determinant", "[intlinalg]") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    IntMatrix   a = testing::random_matrix(rng, n, n, 9);
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(a.row(i));
    }
    CHECK(determinant(a) == laplace_det(rows));
  }
}

TEST_CASE("integer solutions", "[intlinalg]") {
  IntMatrix a{{2, -2}};
  auto      x = solve_integer(a, IntVector{-2});
  REQUIRE(x);
  CHECK(a * *x == IntVector{-2});
  CHECK_FALSE(solve_integer(a, IntVector{-1}));
  CHECK_FALSE(solve_integer(IntMatrix(1, 1), IntVector{1}));
  auto id = solve_integer(IntMatrix::identity(2), IntVector{3, 5});
  REQUIRE(id);
  CHECK(*id == IntVector{3, 5});
}

TEST_CASE("rational solutions", "[intlinalg]") {
  IntMatrix a{{2, -2}};
  auto      x = solve_rational(a, RatVector{mpq_class(-1)});
  REQUIRE(x);
  CHECK(2 * (*x)[0] - 2 * (*x)[1] == -1);
  auto zero = solve_rational(IntMatrix(2, 2), RatVector{0, 0});
  REQUIRE(zero);
  CHECK(*zero == RatVector{0, 0});
  CHECK_FALSE(solve_rational(IntMatrix{{1}, {1}}, RatVector{1, 2}));
}

TEST_CASE("solvers agree with substitution on random systems", "[intlinalg][property]") {
  Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 5));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    IntMatrix   a = testing::random_matrix(rng, m, n, 6);
    IntVector   x0;
    for (std::size_t j = 0; j < n; ++j) {
      x0.push_back(rng.range(-5, 5));
    }
    IntVector b = a * x0;
    auto      x = solve_integer(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);

    // Perturbing b: integral solvability matches the Smith form test.
    b[0] += rng.range(1, 3);
    SNFResult s  = smith_normal_form(a);
    IntVector ub = s.U * b;
    bool      ok = true;
    for (std::size_t i = 0; i < ub.size(); ++i) {
      mpz_class d = i < s.diagonal.size() ? s.diagonal[i] : 0;
      ok          = ok && (d == 0 ? ub[i] == 0 : ub[i] % d == 0);
    }
    auto y = solve_integer(a, b);
    CHECK(y.has_value() == ok);
    if (y) {
      CHECK(a * *y == b);
    }
    auto q = solve_rational(a, to_rational(b));
    if (q) {
      CHECK(to_rational(a) * *q == to_rational(b));
    }
    IntMatrix augmented = a.hconcat(IntMatrix(m, 1));
    for (std::size_t i = 0; i < m; ++i) {
      augmented(i, n) = b[i];
    }
    CHECK(q.has_value() == (rank(a) == rank(augmented)));
  }
}

TEST_CASE("kernels", "[intlinalg][property]") {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 5));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    IntMatrix   a = testing::random_matrix(rng, m, n, 5);
    auto        k = nullspace(a);
    CHECK(k.size() + rank(a) == n);
    for (auto const& v : k) {
      for (auto const& x : to_rational(a) * v) {
        CHECK(x == 0);
      }
    }
    auto ik = integer_kernel(a);
    CHECK(ik.size() == k.size());
    for (auto const& v : ik) {
      for (auto const& x : a * v) {
        CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("abelian groups from exponent matrices", "[intlinalg]") {
  CHECK(cokernel(IntMatrix{{3}}).to_string() == "Z/3");
  AbelianStructure c3 = cokernel(IntMatrix{{3}});
  CHECK(c3.rank == 0);
  CHECK(c3.torsion == std::vector<mpz_class>{3});

  for (std::size_t g = 1; g <= 3; ++g) {
    AbelianStructure s = h1(surface_group(g));
    CHECK(s.rank == 2 * g);
    CHECK(s.torsion.empty());
  }

  GroupDecl intro = parse_group(R"(
    gens: a1, a2, a3, a4, c;
    rels: [a1,a3][a2,a4] = c, [a1,c], [a2,c], [a3,c], [a4,c];)");
  IntMatrix a = intro.presentation.exponent_matrix();
  CHECK(a.row(0) == IntVector{0, 0, 0, 0, -1});
  AbelianStructure s = cokernel(a);
  CHECK(s.rank == 4);
  CHECK(s.torsion.empty());
  CHECK(s.to_string() == "Z^4");
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 4}}).to_string() == "Z/2 + Z/4");
  CHECK(cokernel(IntMatrix{{1}}).to_string() == "0");
}
