#include "sgp/bigint.hpp"

#include <algorithm>

namespace sgp {

BigUint& BigUint::operator+=(const BigUint& o) {
    const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    // repeated long division by 10^19 (largest power of ten in a u64 limb)
    constexpr std::uint64_t kChunk = 10000000000000000000ull;
    std::vector<std::uint64_t> work(limbs_.rbegin(), limbs_.rend());  // big-endian
    std::string out;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        std::vector<std::uint64_t> quot;
        quot.reserve(work.size());
        for (std::uint64_t limb : work) {
            unsigned __int128 cur = (rem << 64) | limb;
            quot.push_back(static_cast<std::uint64_t>(cur / kChunk));
            rem = cur % kChunk;
        }
        while (!quot.empty() && quot.front() == 0) quot.erase(quot.begin());
        std::string digits = std::to_string(static_cast<std::uint64_t>(rem));
        if (!quot.empty()) digits.insert(0, 19 - digits.size(), '0');
        out.insert(0, digits);
        work = std::move(quot);
    }
    return out;
}

}  // namespace sgp
