#pragma once

#include <vector>

#include "contspec/errors.hpp"

namespace contspec {

// Finite multiset of integer generators. Zeros and duplicates are allowed
// and ignored: 0 is a member of every submonoid by definition.
using GeneratorSet = std::vector<long long>;

enum class SubmonoidKind { Zero, Group, Positive, Negative };

// Canonical form of a finitely generated additive submonoid of Z.
//
//   Zero            {0}
//   Group(d)        dZ
//   Positive(d, gaps, conductor)
//                   {0} u { d*k : k >= 1, k not a gap }; every gap lies
//                   below the conductor, every k >= conductor is a member
//   Negative(...)   mirror image of Positive
//
// Membership is O(1) after canonicalization.
class CanonicalSubmonoid {
  public:
    static CanonicalSubmonoid zero();
    static CanonicalSubmonoid group(long long d);
    static CanonicalSubmonoid positive(long long d, std::vector<long long> gaps, long long conductor);
    static CanonicalSubmonoid negative(long long d, std::vector<long long> gaps, long long conductor);

    SubmonoidKind kind() const { return kind_; }
    long long d() const { return d_; }
    const std::vector<long long>& gaps() const { return gaps_; }
    long long conductor() const { return conductor_; }

    bool contains(long long n) const;
    // Members in [-N, N], sorted.
    std::vector<long long> window(long long n) const;
    // S == -S, i.e. the Zero and Group variants.
    bool negation_closed() const { return kind_ == SubmonoidKind::Zero || kind_ == SubmonoidKind::Group; }

    bool operator==(const CanonicalSubmonoid& o) const {
        return kind_ == o.kind_ && d_ == o.d_ && gaps_ == o.gaps_ && conductor_ == o.conductor_;
    }

  private:
    CanonicalSubmonoid() = default;

    SubmonoidKind kind_ = SubmonoidKind::Zero;
    long long d_ = 0;
    std::vector<long long> gaps_;
    long long conductor_ = 0;
    std::vector<char> gap_mask_; // index k < conductor_, derived from gaps_
};

// Brute-force closure: members of the generated submonoid inside
// [-bound, bound], found by saturating addition of generators from 0
// inside the working range [-(bound+G), bound+G], G = sum of |generators|.
// Every member within the bound is reachable through that range.
std::vector<long long> closure_oracle(const GeneratorSet& gens, long long bound);

CanonicalSubmonoid canonicalize(const GeneratorSet& gens);

} // namespace contspec
