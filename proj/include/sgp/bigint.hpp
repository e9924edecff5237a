#ifndef SGP_BIGINT_HPP
#define SGP_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sgp {

// Unsigned arbitrary-precision integer, just big enough for geodesic
// counting: addition, comparison, decimal printing. Corner-to-corner counts
// in grids are central binomial coefficients and overflow 64 bits well
// within benchmark range.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT: implicit by design
        if (v != 0) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o);
    friend BigUint operator+(BigUint a, const BigUint& b) {
        a += b;
        return a;
    }

    // three-way compare: -1, 0, 1
    int compare(const BigUint& o) const;
    bool operator==(const BigUint& o) const { return compare(o) == 0; }
    bool operator!=(const BigUint& o) const { return compare(o) != 0; }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

    // Fits in uint64? If so, value().
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    std::string to_string() const;

private:
    // little-endian base 2^64 limbs, no trailing zeros
    std::vector<std::uint64_t> limbs_;
};

}  // namespace sgp

#endif  // SGP_BIGINT_HPP
