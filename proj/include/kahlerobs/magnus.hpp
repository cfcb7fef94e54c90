// Truncated free associative algebras and the Magnus expansion.

#ifndef KAHLEROBS_MAGNUS_HPP_
#define KAHLEROBS_MAGNUS_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sparse.hpp"
#include "word.hpp"

namespace kahlerobs {

  /// A noncommutative monomial: a sequence of generator indices.
  using Monomial = std::vector<std::uint32_t>;

  /// Bijection between monomials of length <= d in g letters and
  /// 0 .. (g^0 + ... + g^d) - 1, ordered by length and then
  /// lexicographically. Lower-degree monomials get smaller indices, which is
  /// what makes echelon pivots respect the degree filtration.
  class MonomialIndex {
   public:
    MonomialIndex(std::size_t num_gens, std::size_t degree)
        : num_gens_(num_gens), degree_(degree) {
      std::size_t block = 1, total = 0;
      for (std::size_t n = 0; n <= degree; ++n) {
        offsets_.push_back(total);
        total += block;
        block *= num_gens;
      }
      offsets_.push_back(total);
    }

    /// g^0 + g^1 + ... + g^d, without overflow surprises.
    static std::size_t dimension(std::size_t num_gens, std::size_t degree) {
      std::size_t total = 0, block = 1;
      for (std::size_t n = 0; n <= degree; ++n) {
        total += block;
        if (n < degree && num_gens > 0
            && block > (std::size_t(1) << 40) / num_gens) {
          return std::size_t(1) << 40;
        }
        block *= num_gens;
      }
      return total;
    }

    std::size_t num_gens() const noexcept {
      return num_gens_;
    }
    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t size() const noexcept {
      return offsets_.back();
    }
    /// First index of degree n.
    std::size_t begin(std::size_t n) const {
      return offsets_[n];
    }
    std::size_t end(std::size_t n) const {
      return offsets_[n + 1];
    }

    std::size_t index(Monomial const& m) const {
      std::size_t code = 0;
      for (auto x : m) {
        code = code * num_gens_ + x;
      }
      return offsets_[m.size()] + code;
    }

    std::size_t degree_of(std::size_t index) const {
      std::size_t n = 0;
      while (offsets_[n + 1] <= index) {
        ++n;
      }
      return n;
    }

    Monomial monomial(std::size_t index) const {
      std::size_t n    = degree_of(index);
      std::size_t code = index - offsets_[n];
      Monomial    m(n);
      for (std::size_t k = n; k-- > 0;) {
        m[k] = static_cast<std::uint32_t>(code % num_gens_);
        code /= num_gens_;
      }
      return m;
    }

   private:
    std::size_t              num_gens_;
    std::size_t              degree_;
    std::vector<std::size_t> offsets_;
  };

  /// Shortlex order on monomials.
  struct ShortLex {
    bool operator()(Monomial const& a, Monomial const& b) const {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }
  };

  /// An element of Q<x_1..x_g> / (monomials of length > d).
  class TruncatedSeries {
   public:
    using Terms = std::map<Monomial, mpq_class, ShortLex>;

    TruncatedSeries(std::size_t num_gens, std::size_t degree)
        : num_gens_(num_gens), degree_(degree) {}

    static TruncatedSeries one(std::size_t num_gens, std::size_t degree) {
      TruncatedSeries s(num_gens, degree);
      s.terms_[Monomial{}] = 1;
      return s;
    }

    static TruncatedSeries variable(std::size_t   num_gens,
                                    std::size_t   degree,
                                    std::uint32_t x) {
      TruncatedSeries s(num_gens, degree);
      if (degree >= 1) {
        s.terms_[Monomial{x}] = 1;
      }
      return s;
    }

    std::size_t num_gens() const noexcept {
      return num_gens_;
    }
    std::size_t degree() const noexcept {
      return degree_;
    }
    Terms const& terms() const noexcept {
      return terms_;
    }

    mpq_class coefficient(Monomial const& m) const {
      auto it = terms_.find(m);
      return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(Monomial const& m, mpq_class const& c) {
      if (m.size() > degree_ || c == 0) {
        return;
      }
      mpq_class& slot = terms_[m];
      slot += c;
      if (slot == 0) {
        terms_.erase(m);
      }
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    /// Smallest degree with a nonzero coefficient (degree + 1 if zero).
    std::size_t lowest_degree() const {
      return terms_.empty() ? degree_ + 1 : terms_.begin()->first.size();
    }

    /// Homogeneous component of degree n.
    TruncatedSeries component(std::size_t n) const {
      TruncatedSeries s(num_gens_, degree_);
      for (auto const& [m, c] : terms_) {
        if (m.size() == n) {
          s.terms_.emplace(m, c);
        }
      }
      return s;
    }

    TruncatedSeries operator+(TruncatedSeries const& o) const {
      TruncatedSeries s(*this);
      for (auto const& [m, c] : o.terms_) {
        s.add_term(m, c);
      }
      return s;
    }

    TruncatedSeries operator-(TruncatedSeries const& o) const {
      TruncatedSeries s(*this);
      for (auto const& [m, c] : o.terms_) {
        mpq_class neg = -c;
        s.add_term(m, neg);
      }
      return s;
    }

    TruncatedSeries operator*(mpq_class const& k) const {
      TruncatedSeries s(num_gens_, degree_);
      if (k == 0) {
        return s;
      }
      for (auto const& [m, c] : terms_) {
        mpq_class v = c * k;
        s.terms_.emplace(m, std::move(v));
      }
      return s;
    }

    /// Product, truncated at degree d.
    TruncatedSeries operator*(TruncatedSeries const& o) const {
      TruncatedSeries s(num_gens_, degree_);
      for (auto const& [a, ca] : terms_) {
        for (auto const& [b, cb] : o.terms_) {
          if (a.size() + b.size() > degree_) {
            break;  // o's terms are in shortlex, so all later b are longer
          }
          Monomial m(a);
          m.insert(m.end(), b.begin(), b.end());
          mpq_class v = ca * cb;
          s.add_term(m, v);
        }
      }
      return s;
    }

    /// m * this * m', truncated.
    TruncatedSeries sandwich(Monomial const& left, Monomial const& right) const {
      TruncatedSeries s(num_gens_, degree_);
      for (auto const& [a, c] : terms_) {
        if (left.size() + a.size() + right.size() > degree_) {
          continue;
        }
        Monomial m(left);
        m.insert(m.end(), a.begin(), a.end());
        m.insert(m.end(), right.begin(), right.end());
        s.terms_.emplace(std::move(m), c);
      }
      return s;
    }

    bool operator==(TruncatedSeries const& o) const {
      return num_gens_ == o.num_gens_ && degree_ == o.degree_
             && terms_ == o.terms_;
    }

    SparseVec to_sparse(MonomialIndex const& idx) const {
      std::map<std::size_t, mpq_class> m;
      for (auto const& [mono, c] : terms_) {
        m.emplace(idx.index(mono), c);
      }
      return sparse::from_map(m);
    }

    static TruncatedSeries from_sparse(SparseVec const&     v,
                                       MonomialIndex const& idx) {
      TruncatedSeries s(idx.num_gens(), idx.degree());
      for (auto const& [i, c] : v) {
        s.add_term(idx.monomial(i), c);
      }
      return s;
    }

    std::string to_string(std::vector<std::string> const& names = {}) const {
      if (terms_.empty()) {
        return "0";
      }
      std::ostringstream os;
      bool               first = true;
      for (auto const& [m, c] : terms_) {
        if (!first) {
          os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
          os << "-";
        }
        mpq_class a = abs(c);
        if (a != 1 || m.empty()) {
          os << a;
        }
        for (std::size_t k = 0; k < m.size(); ++k) {
          os << ((a != 1 || k > 0) ? "*" : "")
             << (m[k] < names.size() ? names[m[k]]
                                     : "x" + std::to_string(m[k]));
        }
        first = false;
      }
      return os.str();
    }

   private:
    std::size_t num_gens_;
    std::size_t degree_;
    Terms       terms_;
  };

  /// [a, b] = ab - ba
  inline TruncatedSeries bracket(TruncatedSeries const& a,
                                 TruncatedSeries const& b) {
    return a * b - b * a;
  }

  /// Substitutes x -> 1 + x and x^-1 -> 1 - x + x^2 - ... and multiplies
  /// out, truncating at degree d.
  inline TruncatedSeries magnus_expansion(Word const& w,
                                          std::size_t num_gens,
                                          std::size_t degree) {
    if (degree < 1) {
      throw InputError("magnus_expansion needs degree >= 1");
    }
    if (w.generator_bound() > num_gens) {
      throw InputError("magnus_expansion: word uses an unknown generator");
    }
    TruncatedSeries result = TruncatedSeries::one(num_gens, degree);
    for (Letter l : w) {
      TruncatedSeries factor = TruncatedSeries::one(num_gens, degree);
      if (!l.inverted) {
        factor.add_term(Monomial{l.gen}, mpq_class(1));
      } else {
        for (std::size_t k = 1; k <= degree; ++k) {
          factor.add_term(Monomial(k, l.gen), mpq_class(k % 2 ? -1 : 1));
        }
      }
      result = result * factor;
    }
    return result;
  }

  /// log(s) for s with constant term 1.
  inline TruncatedSeries series_log(TruncatedSeries const& s) {
    if (s.coefficient(Monomial{}) != 1) {
      throw InputError("series_log needs constant term 1");
    }
    TruncatedSeries u = s - TruncatedSeries::one(s.num_gens(), s.degree());
    TruncatedSeries out(s.num_gens(), s.degree());
    TruncatedSeries power = u;
    for (std::size_t k = 1; k <= s.degree() && !power.is_zero(); ++k) {
      mpq_class c(k % 2 ? 1 : -1, static_cast<unsigned long>(k));
      c.canonicalize();
      out   = out + power * c;
      power = power * u;
    }
    return out;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_MAGNUS_HPP_
