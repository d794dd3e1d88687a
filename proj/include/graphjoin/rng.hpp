#pragma once

#include <cstdint>
#include <vector>

#include "graphjoin/rational.hpp"

namespace graphjoin {

// splitmix64 (Steele, Lea, Vigna): tiny, fast, well distributed, and easy to
// reproduce across languages from the published constants.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Independent child stream: nested sampling without long-range overlap
    // concerns at the scales used here.
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

  private:
    std::uint64_t state_;
};

// Exact categorical draw: interprets a u64 as the rational u/2^64 and walks
// the cumulative masses with integer cross-multiplication, so sampling is
// bias-free for any rational weights summing to 1.
int sample_categorical(const std::vector<Rational>& masses, SplitMix64& rng);

// Uniform nonzero rational in (0, 1] of the form k/2^64, for random weights.
Rational sample_unit_rational(SplitMix64& rng);

}  // namespace graphjoin
