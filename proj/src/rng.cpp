#include "graphjoin/rng.hpp"

#include "graphjoin/errors.hpp"

namespace graphjoin {

namespace {

Rational u64_to_unit(std::uint64_t u) {
    const auto high = static_cast<unsigned long>(u >> 32);
    const auto low = static_cast<unsigned long>(u & 0xffffffffu);
    const mpz_class numerator = mpz_class(mpz_class(high) << 32) + mpz_class(low);
    const mpz_class denominator = mpz_class(1) << 64;
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

}  // namespace

int sample_categorical(const std::vector<Rational>& masses, SplitMix64& rng) {
    if (masses.empty()) throw Error(ErrorCode::InvalidSize, "empty categorical distribution");
    const Rational u = u64_to_unit(rng.next());
    Rational cumulative(0);
    for (std::size_t i = 0; i < masses.size(); ++i) {
        cumulative += masses[i];
        if (u < cumulative) return static_cast<int>(i);
    }
    return static_cast<int>(masses.size()) - 1;
}

Rational sample_unit_rational(SplitMix64& rng) {
    std::uint64_t u = rng.next();
    while (u == 0) u = rng.next();
    return u64_to_unit(u);
}

}  // namespace graphjoin
