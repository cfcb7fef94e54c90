// Seeded generators and small oracles shared by the test programs.

#ifndef KAHLEROBS_TESTS_SUPPORT_HPP_
#define KAHLEROBS_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kahlerobs.hpp"

namespace testing {

  using namespace kahlerobs;

  /// mt19937_64 with a range helper that does not depend on the standard
  /// library's distribution implementations, so streams are portable.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    long range(long lo, long hi) {
      auto span = static_cast<std::uint64_t>(hi - lo) + 1;
      return lo + static_cast<long>(engine_() % span);
    }
    bool coin() {
      return engine_() & 1;
    }

   private:
    std::mt19937_64 engine_;
  };

  inline Letter random_letter(Rng& rng, std::uint32_t gens) {
    return Letter{static_cast<std::uint32_t>(rng.range(0, gens - 1)), rng.coin()};
  }

  /// Freely reduced word of at most max_len letters.
  inline Word random_word(Rng& rng, std::uint32_t gens, std::size_t max_len) {
    std::vector<Letter> letters;
    auto                n = rng.range(0, static_cast<long>(max_len));
    for (long i = 0; i < n; ++i) {
      letters.push_back(random_letter(rng, gens));
    }
    return free_reduce(letters);
  }

  inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                 long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rng.range(-bound, bound);
      }
    }
    return m;
  }

  inline int mobius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) {
          return 0;
        }
        mu = -mu;
      }
    }
    return n > 1 ? -mu : mu;
  }

  /// Rank of the degree-n part of the free Lie algebra on g generators.
  inline long witt(long g, long n) {
    mpz_class sum = 0;
    for (long e = 1; e <= n; ++e) {
      if (n % e == 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(g),
                      static_cast<unsigned long>(n / e));
        sum += mobius(e) * p;
      }
    }
    return mpz_class(sum / n).get_si();
  }

  inline bool is_identity(IntMatrix const& m) {
    return m == IntMatrix::identity(m.rows());
  }

}  // namespace testing

#endif  // KAHLEROBS_TESTS_SUPPORT_HPP_
