#pragma once

#include <cstdint>

namespace koszulkit {

bool is_prime(uint32_t n);

// Arithmetic in the prime field F_l. Elements are canonical residues in [0, l).
class Fp {
public:
    explicit Fp(uint32_t l);

    uint32_t modulus() const { return l_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= l_ ? s - l_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + l_ - b; }
    uint32_t neg(uint32_t a) const { return a ? l_ - a : 0; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % l_);
    }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, int64_t e) const;
    uint32_t from_int(int64_t v) const;

    friend bool operator==(const Fp& a, const Fp& b) { return a.l_ == b.l_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.l_ != b.l_; }

private:
    uint32_t l_;
};

}  // namespace koszulkit
