#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pushgame {

// Arbitrary-precision unsigned integer. Counts like m^{r-n}+1 outgrow 64
// bits on small boards already, and every reported count must be exact.
// Little-endian limbs in base 10^9 so decimal printing is direct.
class Nat {
public:
    Nat() : limbs_{0} {}
    explicit Nat(unsigned long long value);

    static Nat power(unsigned long long base, unsigned long long exponent);

    Nat& mul_small(unsigned long long factor);
    Nat& add_small(unsigned long long addend);
    Nat& operator*=(const Nat& other);

    friend Nat operator*(Nat a, const Nat& b) {
        a *= b;
        return a;
    }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    // -1, 0, +1 as *this compares to other.
    int compare(const Nat& other) const;

    friend bool operator==(const Nat& a, const Nat& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Nat& a, const Nat& b) { return a.compare(b) != 0; }
    friend bool operator<(const Nat& a, const Nat& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Nat& a, const Nat& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Nat& a, const Nat& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Nat& a, const Nat& b) { return a.compare(b) >= 0; }

    // Full decimal expansion, no separators.
    std::string str() const;

private:
    static constexpr std::uint64_t kBase = 1000000000ull;

    void trim();

    std::vector<std::uint32_t> limbs_;
};

}  // namespace pushgame
