#include "charcat/ff/fp.hpp"

#include <string>

#include "charcat/core/errors.hpp"

namespace charcat::ff {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime_modulus(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 31)) throw Unsupported("modulus too large for exact 64-bit products");
}

Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t p) {
    Residue r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

Residue inv_mod(Residue a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw InvalidInput("zero has no inverse in F_" + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

Residue reduce(std::int64_t a, std::uint64_t p) {
    const auto m = static_cast<std::int64_t>(p);
    auto r = a % m;
    if (r < 0) r += m;
    return static_cast<Residue>(r);
}

std::uint64_t mult_order(Residue a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw InvalidInput("zero has no multiplicative order");
    std::uint64_t k = 1;
    Residue x = a;
    while (x != 1) {
        x = mul_mod(x, a, p);
        ++k;
    }
    return k;
}

Fp::Fp(std::uint64_t p, std::int64_t value) : p_(p), v_(0) {
    require_prime_modulus(p);
    v_ = reduce(value, p);
}

void Fp::same_field(const Fp& o) const {
    if (o.p_ != p_) throw InvalidInput("modulus mismatch between field elements");
}

Fp Fp::operator+(const Fp& o) const {
    same_field(o);
    Fp r = *this;
    r.v_ = add_mod(v_, o.v_, p_);
    return r;
}

Fp Fp::operator-(const Fp& o) const {
    same_field(o);
    Fp r = *this;
    r.v_ = sub_mod(v_, o.v_, p_);
    return r;
}

Fp Fp::operator*(const Fp& o) const {
    same_field(o);
    Fp r = *this;
    r.v_ = mul_mod(v_, o.v_, p_);
    return r;
}

Fp Fp::operator-() const {
    Fp r = *this;
    r.v_ = neg_mod(v_, p_);
    return r;
}

Fp Fp::inverse() const {
    Fp r = *this;
    r.v_ = inv_mod(v_, p_);
    return r;
}

Fp Fp::pow(std::uint64_t e) const {
    Fp r = *this;
    r.v_ = pow_mod(v_, e, p_);
    return r;
}

} // namespace charcat::ff
