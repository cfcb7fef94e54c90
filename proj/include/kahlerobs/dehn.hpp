// Dehn's algorithm for small-cancellation presentations.

#ifndef KAHLEROBS_DEHN_HPP_
#define KAHLEROBS_DEHN_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace kahlerobs {

  namespace detail {

    /// All cyclic rotations of every relator and its inverse.
    inline std::vector<std::vector<Letter>> symmetrized(
        std::vector<Word> const& relators) {
      std::vector<std::vector<Letter>> out;
      for (auto const& r : relators) {
        for (Word const& w : {r, r.inverse()}) {
          std::vector<Letter> letters(w.begin(), w.end());
          for (std::size_t k = 0; k < letters.size(); ++k) {
            std::vector<Letter> rot(letters.begin() + k, letters.end());
            rot.insert(rot.end(), letters.begin(), letters.begin() + k);
            if (std::find(out.begin(), out.end(), rot) == out.end()) {
              out.push_back(std::move(rot));
            }
          }
        }
      }
      return out;
    }

  }  // namespace detail

  /// Length of the longest piece: a common prefix of two distinct elements
  /// of the symmetrized relator set.
  inline std::size_t max_piece_length(std::vector<Word> const& relators) {
    auto        rots  = detail::symmetrized(relators);
    std::size_t piece = 0;
    for (std::size_t i = 0; i < rots.size(); ++i) {
      for (std::size_t j = i + 1; j < rots.size(); ++j) {
        std::size_t k = 0;
        while (k < rots[i].size() && k < rots[j].size()
               && rots[i][k] == rots[j][k]) {
          ++k;
        }
        piece = std::max(piece, k);
      }
    }
    return piece;
  }

  /// True if every piece is shorter than a sixth of every relator it lies in.
  inline bool satisfies_c_sixth(Presentation const& p) {
    if (p.relators().empty()) {
      return false;
    }
    std::size_t shortest = p.relators().front().size();
    for (auto const& r : p.relators()) {
      if (r.empty()) {
        return false;
      }
      shortest = std::min(shortest, r.size());
    }
    return 6 * max_piece_length(p.relators()) < shortest;
  }

  /// Word problem solver for a C'(1/6) presentation.
  ///
  /// Each step takes the leftmost position at which some rotation of a
  /// relator (or its inverse) matches for more than half its length, using
  /// the longest such match, and replaces it by the inverse of the unmatched
  /// remainder.
  class DehnSolver {
   public:
    explicit DehnSolver(Presentation const& p)
        : rotations_(detail::symmetrized(p.relators())) {
      if (!satisfies_c_sixth(p)) {
        throw InputError("presentation '" + p.name()
                         + "' does not satisfy C'(1/6)");
      }
    }

    /// Shortest form reachable by Dehn replacements and cyclic reduction.
    Word reduce(Word const& w) const {
      Word current = w.cyclically_reduced();
      while (true) {
        auto step = find_replacement(current);
        if (!step) {
          return current;
        }
        current = step->cyclically_reduced();
      }
    }

    bool is_trivial(Word const& w) const {
      return reduce(w).empty();
    }

   private:
    std::optional<Word> find_replacement(Word const& w) const {
      std::vector<Letter> letters(w.begin(), w.end());
      for (std::size_t pos = 0; pos < letters.size(); ++pos) {
        std::size_t best_len = 0, best_rot = 0;
        for (std::size_t r = 0; r < rotations_.size(); ++r) {
          auto const& rot = rotations_[r];
          std::size_t k   = 0;
          while (k < rot.size() && pos + k < letters.size()
                 && letters[pos + k] == rot[k]) {
            ++k;
          }
          if (2 * k > rot.size() && k > best_len) {
            best_len = k;
            best_rot = r;
          }
        }
        if (best_len > 0) {
          auto const&         rot = rotations_[best_rot];
          std::vector<Letter> out(letters.begin(), letters.begin() + pos);
          // rot = u v with u matched, so u = v^-1.
          for (std::size_t k = rot.size(); k-- > best_len;) {
            out.push_back(rot[k].inverse());
          }
          out.insert(out.end(), letters.begin() + pos + best_len, letters.end());
          return free_reduce(out);
        }
      }
      return std::nullopt;
    }

    std::vector<std::vector<Letter>> rotations_;
  };

}  // namespace kahlerobs

#endif  // KAHLEROBS_DEHN_HPP_
