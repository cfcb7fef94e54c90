// Freely reduced words in a free group on generators 0, 1, 2, ...

#ifndef KAHLEROBS_WORD_HPP_
#define KAHLEROBS_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace kahlerobs {

  /// A generator or its inverse.
  struct Letter {
    std::uint32_t gen      = 0;
    bool          inverted = false;

    constexpr Letter inverse() const noexcept {
      return Letter{gen, !inverted};
    }
    constexpr int sign() const noexcept {
      return inverted ? -1 : 1;
    }
    constexpr auto operator<=>(Letter const&) const = default;
  };

  constexpr Letter gen(std::uint32_t i) noexcept {
    return Letter{i, false};
  }
  constexpr Letter inv(std::uint32_t i) noexcept {
    return Letter{i, true};
  }

  class Word;
  Word free_reduce(std::span<Letter const> letters);

  /// An element of a free group, always stored freely reduced.
  ///
  /// The empty word is the identity. Words are plain values: every operation
  /// returns a new reduced word.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters)
        : Word(free_reduce(std::span<Letter const>(letters.begin(),
                                                   letters.size()))) {}

    static Word generator(std::uint32_t i, int exponent = 1);

    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters_[i];
    }
    auto begin() const noexcept {
      return letters_.cbegin();
    }
    auto end() const noexcept {
      return letters_.cend();
    }
    std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    Word inverse() const;
    Word pow(int n) const;
    Word operator*(Word const& other) const;

    /// Conjugate-minimal representative: strips matching first/last letters.
    Word cyclically_reduced() const;

    /// Largest generator index occurring, plus one (0 for the identity).
    std::uint32_t generator_bound() const noexcept;

    /// Exponent sum of every generator 0..num_gens-1.
    std::vector<long> exponent_sums(std::size_t num_gens) const;

    /// Image under the homomorphism sending generator i to images[i].
    Word substitute(std::span<Word const> images) const;

    /// Deletes every occurrence of the given generators (their images become
    /// the identity); the remaining generators are renumbered through
    /// new_index.
    Word delete_generators(std::span<std::uint32_t const> new_index,
                           std::uint32_t deleted_marker) const;

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const  = default;

   private:
    friend Word free_reduce(std::span<Letter const> letters);
    std::vector<Letter> letters_;
  };

  inline Word free_reduce(std::span<Letter const> letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (Letter l : letters) {
      if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    return w;
  }

  inline Word free_reduce(std::vector<Letter> const& letters) {
    return free_reduce(std::span<Letter const>(letters));
  }

  inline Word Word::generator(std::uint32_t i, int exponent) {
    return Word{gen(i)}.pow(exponent);
  }

  inline Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  inline Word Word::pow(int n) const {
    Word base = n < 0 ? inverse() : *this;
    std::vector<Letter> out;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return free_reduce(out);
  }

  inline Word Word::operator*(Word const& other) const {
    std::vector<Letter> all(letters_);
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return free_reduce(all);
  }

  inline Word Word::cyclically_reduced() const {
    std::size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    Word w;
    w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
    return w;
  }

  inline std::uint32_t Word::generator_bound() const noexcept {
    std::uint32_t bound = 0;
    for (Letter l : letters_) {
      bound = std::max(bound, l.gen + 1);
    }
    return bound;
  }

  inline std::vector<long> Word::exponent_sums(std::size_t num_gens) const {
    std::vector<long> sums(num_gens, 0);
    for (Letter l : letters_) {
      if (l.gen >= num_gens) {
        throw InputError("generator index out of range in exponent_sums");
      }
      sums[l.gen] += l.sign();
    }
    return sums;
  }

  inline Word Word::substitute(std::span<Word const> images) const {
    std::vector<Letter> out;
    for (Letter l : letters_) {
      if (l.gen >= images.size()) {
        throw InputError("no image for generator index "
                         + std::to_string(l.gen));
      }
      Word const& img = images[l.gen];
      if (l.inverted) {
        Word i = img.inverse();
        out.insert(out.end(), i.begin(), i.end());
      } else {
        out.insert(out.end(), img.begin(), img.end());
      }
    }
    return free_reduce(out);
  }

  inline Word Word::delete_generators(std::span<std::uint32_t const> new_index,
                                      std::uint32_t deleted_marker) const {
    std::vector<Letter> out;
    for (Letter l : letters_) {
      std::uint32_t j = new_index[l.gen];
      if (j != deleted_marker) {
        out.push_back(Letter{j, l.inverted});
      }
    }
    return free_reduce(out);
  }

  /// [u, v] = u v u^-1 v^-1
  inline Word commutator(Word const& u, Word const& v) {
    return u * v * u.inverse() * v.inverse();
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_WORD_HPP_
