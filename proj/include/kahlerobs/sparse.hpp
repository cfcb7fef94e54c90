// Sparse rational vectors and an incremental echelon basis.
//
// The truncated tensor algebras used for Malcev computations have thousands
// of coordinates but the vectors spanning ideals in them are short, so the
// subspace machinery works on sorted (index, value) lists.

#ifndef KAHLEROBS_SPARSE_HPP_
#define KAHLEROBS_SPARSE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kahlerobs {

  /// Sorted by index, no explicit zeros.
  using SparseVec = std::vector<std::pair<std::size_t, mpq_class>>;

  namespace sparse {

    /// a + k * b
    inline SparseVec axpy(SparseVec const& a,
                          mpq_class const& k,
                          SparseVec const& b) {
      SparseVec out;
      out.reserve(a.size() + b.size());
      auto i = a.begin(), j = b.begin();
      while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
          mpq_class v = k * j->second;
          out.emplace_back(j->first, std::move(v));
          ++j;
        } else {
          mpq_class v = i->second + k * j->second;
          if (v != 0) {
            out.emplace_back(i->first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    inline SparseVec scaled(SparseVec v, mpq_class const& k) {
      if (k == 0) {
        return {};
      }
      for (auto& e : v) {
        e.second *= k;
      }
      return v;
    }

    inline SparseVec from_map(std::map<std::size_t, mpq_class> const& m) {
      SparseVec v;
      for (auto const& [i, x] : m) {
        if (x != 0) {
          v.emplace_back(i, x);
        }
      }
      return v;
    }

    inline SparseVec unit(std::size_t i) {
      return SparseVec{{i, mpq_class(1)}};
    }

    /// Entries with index in [lo, hi).
    inline SparseVec restrict(SparseVec const& v, std::size_t lo, std::size_t hi) {
      SparseVec out;
      for (auto const& e : v) {
        if (e.first >= lo && e.first < hi) {
          out.push_back(e);
        }
      }
      return out;
    }

  }  // namespace sparse

  /// Row echelon basis of a subspace of Q^N, built one vector at a time.
  ///
  /// Each stored row has a distinct pivot (its smallest index) normalised
  /// to 1. Rows may carry a tag vector recording which tagged inputs they
  /// are combinations of, modulo the untagged inputs; this is what lets
  /// coordinates() express a vector in a chosen basis modulo an ideal.
  class SparseEchelon {
   public:
    struct Row {
      SparseVec vec;
      SparseVec tag;
    };

    struct Reduction {
      SparseVec residual;  // zero on every pivot index
      SparseVec combination;  // sum of factor * row.tag
    };

    std::size_t rank() const noexcept {
      return rows_.size();
    }
    std::map<std::size_t, Row> const& rows() const noexcept {
      return rows_;
    }

    Reduction reduce(SparseVec v) const {
      SparseVec   combination;
      std::size_t start = 0;
      while (true) {
        // First entry at or after `start` whose index is a pivot.
        auto it = v.begin();
        while (it != v.end()
               && (it->first < start || rows_.find(it->first) == rows_.end())) {
          ++it;
        }
        if (it == v.end()) {
          break;
        }
        std::size_t p   = it->first;
        mpq_class   f   = it->second;
        Row const&  row = rows_.at(p);
        mpq_class   neg = -f;
        v               = sparse::axpy(v, neg, row.vec);
        if (!row.tag.empty()) {
          combination = sparse::axpy(combination, f, row.tag);
        }
        start = p + 1;
      }
      return {std::move(v), std::move(combination)};
    }

    /// Adds v to the span; returns true if the rank grew.
    bool insert(SparseVec v, SparseVec tag = {}) {
      Reduction r   = reduce(std::move(v));
      SparseVec tg  = sparse::axpy(tag, mpq_class(-1), r.combination);
      if (r.residual.empty()) {
        return false;
      }
      std::size_t p   = r.residual.front().first;
      mpq_class   inv = 1 / r.residual.front().second;
      rows_.emplace(p, Row{sparse::scaled(std::move(r.residual), inv),
                           sparse::scaled(std::move(tg), inv)});
      return true;
    }

    bool contains(SparseVec const& v) const {
      return reduce(v).residual.empty();
    }

    /// Tag coordinates c with v = sum c_t (tagged input t) modulo the
    /// untagged inputs, if v lies in the span.
    std::optional<SparseVec> coordinates(SparseVec const& v) const {
      Reduction r = reduce(v);
      if (!r.residual.empty()) {
        return std::nullopt;
      }
      return r.combination;
    }

   private:
    std::map<std::size_t, Row> rows_;
  };

}  // namespace kahlerobs

#endif  // KAHLEROBS_SPARSE_HPP_
