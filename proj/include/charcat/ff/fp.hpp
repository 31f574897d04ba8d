#pragma once

#include <cstdint>
#include <vector>

namespace charcat::ff {

using Residue = std::uint64_t;
using Vec = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// Checks p is a prime small enough that products of residues fit in 64 bits.
void require_prime_modulus(std::uint64_t p);

inline Residue add_mod(Residue a, Residue b, std::uint64_t p) { return (a + b) % p; }
inline Residue sub_mod(Residue a, Residue b, std::uint64_t p) { return (a + p - b) % p; }
inline Residue mul_mod(Residue a, Residue b, std::uint64_t p) { return (a * b) % p; }
inline Residue neg_mod(Residue a, std::uint64_t p) { return (p - a % p) % p; }
Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue; throws InvalidInput on zero.
Residue inv_mod(Residue a, std::uint64_t p);
/// Reduces a signed integer into [0, p).
Residue reduce(std::int64_t a, std::uint64_t p);

/// Multiplicative order of a nonzero residue.
std::uint64_t mult_order(Residue a, std::uint64_t p);

/// An element of the prime field F_p.
class Fp {
public:
    Fp(std::uint64_t p, std::int64_t value);

    std::uint64_t modulus() const { return p_; }
    Residue value() const { return v_; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    bool operator==(const Fp& o) const = default;

private:
    void same_field(const Fp& o) const;
    std::uint64_t p_;
    Residue v_;
};

} // namespace charcat::ff
