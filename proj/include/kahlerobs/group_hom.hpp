// Homomorphisms between finitely presented groups.

#ifndef KAHLEROBS_GROUP_HOM_HPP_
#define KAHLEROBS_GROUP_HOM_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace kahlerobs {

  enum class VerificationLevel {
    unverified,
    abelianization,  // relator images vanish in the target's H_1
    nilpotent,       // ... and in the target's rational class-c quotient
    exact            // ... and are trivial in the target itself
  };

  /// The strongest check that every source relator maps to the identity.
  struct Verification {
    VerificationLevel level = VerificationLevel::unverified;
    // Only meaningful for VerificationLevel::nilpotent.
    std::size_t nilpotency_class = 0;

    /// True if this verification implies `required`.
    bool implies(Verification const& required) const noexcept {
      if (level == VerificationLevel::exact
          || required.level == VerificationLevel::unverified) {
        return true;
      }
      switch (required.level) {
        case VerificationLevel::abelianization:
          return level == VerificationLevel::abelianization
                 || level == VerificationLevel::nilpotent;
        case VerificationLevel::nilpotent:
          return level == VerificationLevel::nilpotent
                 && nilpotency_class >= required.nilpotency_class;
        default:
          return false;
      }
    }

    std::string to_string() const {
      switch (level) {
        case VerificationLevel::unverified:
          return "unverified";
        case VerificationLevel::abelianization:
          return "verified-in-abelianization";
        case VerificationLevel::nilpotent:
          return "verified-in-nilpotent-quotient(class "
                 + std::to_string(nilpotency_class) + ")";
        case VerificationLevel::exact:
          return "verified-exactly";
      }
      return "unverified";
    }

    bool operator==(Verification const&) const = default;

    static Verification unverified() {
      return {};
    }
    static Verification abelianization() {
      return {VerificationLevel::abelianization, 0};
    }
    static Verification nilpotent(std::size_t c) {
      return {VerificationLevel::nilpotent, c};
    }
    static Verification exact() {
      return {VerificationLevel::exact, 0};
    }
  };

  /// A map of presentations given by one target word per source generator.
  ///
  /// Whether the map is actually a homomorphism is recorded, not assumed:
  /// see verify_hom().
  class GroupHom {
   public:
    GroupHom(std::string       name,
             Presentation      source,
             Presentation      target,
             std::vector<Word> images)
        : name_(std::move(name)),
          source_(std::move(source)),
          target_(std::move(target)),
          images_(std::move(images)) {
      if (images_.size() != source_.num_generators()) {
        throw InputError("homomorphism '" + name_ + "' has "
                         + std::to_string(images_.size())
                         + " images for "
                         + std::to_string(source_.num_generators())
                         + " source generators");
      }
      for (auto const& w : images_) {
        if (w.generator_bound() > target_.num_generators()) {
          throw InputError("image word uses a generator outside the target");
        }
      }
    }

    std::string const& name() const noexcept {
      return name_;
    }
    Presentation const& source() const noexcept {
      return source_;
    }
    Presentation const& target() const noexcept {
      return target_;
    }
    std::vector<Word> const& images() const noexcept {
      return images_;
    }
    Verification const& verification() const noexcept {
      return verification_;
    }

    /// Image of a source word.
    Word apply(Word const& w) const {
      return w.substitute(images_);
    }

    GroupHom with_verification(Verification v) const {
      GroupHom h(*this);
      h.verification_ = v;
      return h;
    }

    GroupHom renamed(std::string name) const {
      GroupHom h(*this);
      h.name_ = std::move(name);
      return h;
    }

    /// Target x source matrix of generator-image exponent sums.
    IntMatrix abelianized_matrix() const {
      IntMatrix m(target_.num_generators(), source_.num_generators());
      for (std::size_t j = 0; j < images_.size(); ++j) {
        auto sums = images_[j].exponent_sums(target_.num_generators());
        for (std::size_t i = 0; i < sums.size(); ++i) {
          m(i, j) = sums[i];
        }
      }
      return m;
    }

   private:
    std::string       name_;
    Presentation      source_;
    Presentation      target_;
    std::vector<Word> images_;
    Verification      verification_;
  };

  /// outer o inner (inner is applied first). The result is unverified.
  inline GroupHom compose(GroupHom const& outer, GroupHom const& inner) {
    if (!(inner.target() == outer.source())) {
      throw InputError("cannot compose '" + outer.name() + "' after '"
                       + inner.name() + "': presentations differ");
    }
    std::vector<Word> images;
    images.reserve(inner.images().size());
    for (auto const& w : inner.images()) {
      images.push_back(outer.apply(w));
    }
    return GroupHom(outer.name() + "*" + inner.name(),
                    inner.source(),
                    outer.target(),
                    std::move(images));
  }

  inline GroupHom identity_hom(Presentation const& p) {
    std::vector<Word> images;
    for (std::uint32_t i = 0; i < p.num_generators(); ++i) {
      images.push_back(Word::generator(i));
    }
    return GroupHom("id", p, p, std::move(images));
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_GROUP_HOM_HPP_
