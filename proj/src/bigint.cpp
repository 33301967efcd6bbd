#include "pushgame/bigint.hpp"

#include <algorithm>

namespace pushgame {

Nat::Nat(unsigned long long value) {
    limbs_.clear();
    do {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    } while (value != 0);
}

Nat Nat::power(unsigned long long base, unsigned long long exponent) {
    Nat result(1);
    Nat acc(base);
    while (exponent != 0) {
        if (exponent & 1) result *= acc;
        acc *= acc;
        exponent >>= 1;
    }
    return result;
}

Nat& Nat::mul_small(unsigned long long factor) {
    if (factor == 0 || is_zero()) {
        limbs_.assign(1, 0);
        return *this;
    }
    // Keep the per-limb product inside 64 bits: split large factors.
    if (factor >= kBase) {
        Nat other(factor);
        return *this *= other;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

Nat& Nat::add_small(unsigned long long addend) {
    std::uint64_t carry = addend;
    for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
        std::uint64_t cur = limbs_[i] + carry % kBase;
        carry /= kBase;
        if (cur >= kBase) {
            cur -= kBase;
            ++carry;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

Nat& Nat::operator*=(const Nat& other) {
    if (is_zero() || other.is_zero()) {
        limbs_.assign(1, 0);
        return *this;
    }
    std::vector<std::uint64_t> acc(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur =
                acc[i + j] + static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
            ++k;
        }
    }
    limbs_.assign(acc.begin(), acc.end());
    trim();
    return *this;
}

int Nat::compare(const Nat& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string Nat::str() const {
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

void Nat::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace pushgame
