// Finitely presented groups.

#ifndef KAHLEROBS_PRESENTATION_HPP_
#define KAHLEROBS_PRESENTATION_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intlinalg.hpp"
#include "word.hpp"

namespace kahlerobs {

  inline bool is_identifier(std::string const& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))
                       || s[0] == '_')) {
      return false;
    }
    for (char c : s) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        return false;
      }
    }
    return true;
  }

  /// A group given by generators and relators.
  ///
  /// Generator names are distinct ASCII identifiers; a generator's index is
  /// its position in the list. Relators are stored freely and cyclically
  /// reduced. Presentations are immutable values.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::string              name,
                 std::vector<std::string> generators,
                 std::vector<Word>        relators)
        : name_(std::move(name)), generators_(std::move(generators)) {
      std::set<std::string> seen;
      for (auto const& g : generators_) {
        if (!is_identifier(g)) {
          throw InputError("invalid generator name '" + g + "'");
        }
        if (!seen.insert(g).second) {
          throw InputError("duplicate generator name '" + g + "'");
        }
      }
      relators_.reserve(relators.size());
      for (auto const& r : relators) {
        if (r.generator_bound() > generators_.size()) {
          throw InputError("relator uses a generator index out of range");
        }
        relators_.push_back(r.cyclically_reduced());
      }
    }

    std::string const& name() const noexcept {
      return name_;
    }
    std::size_t num_generators() const noexcept {
      return generators_.size();
    }
    std::vector<std::string> const& generators() const noexcept {
      return generators_;
    }
    std::string const& generator_name(std::size_t i) const {
      return generators_.at(i);
    }
    std::vector<Word> const& relators() const noexcept {
      return relators_;
    }

    std::optional<std::uint32_t> generator_index(std::string const& n) const {
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == n) {
          return static_cast<std::uint32_t>(i);
        }
      }
      return std::nullopt;
    }

    /// Relators x generators matrix of exponent sums.
    IntMatrix exponent_matrix() const {
      IntMatrix a(relators_.size(), generators_.size());
      for (std::size_t i = 0; i < relators_.size(); ++i) {
        auto sums = relators_[i].exponent_sums(generators_.size());
        for (std::size_t j = 0; j < sums.size(); ++j) {
          a(i, j) = sums[j];
        }
      }
      return a;
    }

    Presentation renamed(std::string name) const {
      Presentation p(*this);
      p.name_ = std::move(name);
      return p;
    }

    bool operator==(Presentation const&) const = default;

   private:
    std::string              name_;
    std::vector<std::string> generators_;
    std::vector<Word>        relators_;
  };

  namespace presentations {

    /// Free group on the given generator names.
    inline Presentation free_group(std::string              name,
                                   std::vector<std::string> gens) {
      return Presentation(std::move(name), std::move(gens), {});
    }

    /// Z^n = < x1..xn | [xi, xj], i < j >.
    inline Presentation free_abelian(std::size_t n,
                                     std::string prefix = "x",
                                     std::string name   = "") {
      std::vector<std::string> gens;
      for (std::size_t i = 1; i <= n; ++i) {
        gens.push_back(prefix + std::to_string(i));
      }
      std::vector<Word> rels;
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
          rels.push_back(commutator(Word::generator(i), Word::generator(j)));
        }
      }
      if (name.empty()) {
        name = "Z" + std::to_string(n);
      }
      return Presentation(std::move(name), std::move(gens), std::move(rels));
    }

    /// < x, y, c | [x,y] c^-1, [x,c], [y,c] >
    inline Presentation heisenberg() {
      Word x = Word::generator(0), y = Word::generator(1),
           c = Word::generator(2);
      return Presentation("Heisenberg",
                          {"x", "y", "c"},
                          {commutator(x, y) * c.inverse(),
                           commutator(x, c),
                           commutator(y, c)});
    }

    /// The 5-dimensional Heisenberg group: [x1,y1] = [x2,y2] = c central,
    /// all other pairs of generators commute.
    inline Presentation heisenberg5() {
      Word x1 = Word::generator(0), y1 = Word::generator(1),
           x2 = Word::generator(2), y2 = Word::generator(3),
           c = Word::generator(4);
      return Presentation("Heisenberg5",
                          {"x1", "y1", "x2", "y2", "c"},
                          {commutator(x1, y1) * c.inverse(),
                           commutator(x2, y2) * c.inverse(),
                           commutator(x1, x2),
                           commutator(x1, y2),
                           commutator(y1, x2),
                           commutator(y1, y2),
                           commutator(x1, c),
                           commutator(y1, c),
                           commutator(x2, c),
                           commutator(y2, c)});
    }

  }  // namespace presentations

}  // namespace kahlerobs

#endif  // KAHLEROBS_PRESENTATION_HPP_
