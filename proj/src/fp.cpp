#include "koszulkit/fp.hpp"

#include <stdexcept>
#include <string>

namespace koszulkit {

bool is_prime(uint32_t n) {
    if (n < 2)
        return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Fp::Fp(uint32_t l) : l_(l) {
    if (!is_prime(l))
        throw std::invalid_argument("field modulus " + std::to_string(l) + " is not prime");
}

uint32_t Fp::inv(uint32_t a) const {
    if (a == 0)
        throw std::invalid_argument("inverse of zero in F_" + std::to_string(l_));
    return pow(a, static_cast<int64_t>(l_) - 2);
}

uint32_t Fp::pow(uint32_t a, int64_t e) const {
    if (e < 0) {
        a = inv(a % l_);
        e = -e;
    }
    uint64_t base = a % l_, acc = 1;
    while (e > 0) {
        if (e & 1)
            acc = acc * base % l_;
        base = base * base % l_;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

uint32_t Fp::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(l_);
    if (r < 0)
        r += l_;
    return static_cast<uint32_t>(r);
}

}  // namespace koszulkit
