#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charcat/ff/matrix.hpp"
#include "charcat/groups/group.hpp"

namespace charcat::groups {

FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n, generated by a rotation a and a reflection b.
FiniteGroup dihedral(std::size_t n);
/// <a, b | a^m = 1, b^n = a^s, b a b^-1 = a^r>, elements a^i b^j. Validated by the table check.
FiniteGroup metacyclic(std::string id, std::size_t m, std::size_t n, std::size_t r, std::size_t s);
FiniteGroup quaternion8();
/// Dicyclic group of order 4n (n = 2 gives Q8, n = 4 gives Q16).
FiniteGroup dicyclic(std::size_t n);
/// Symmetric group on n <= 5 points in cycle notation, points numbered from 1.
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup elementary_abelian(std::uint64_t p, std::size_t m);
/// Direct product of cyclic groups of the given orders.
FiniteGroup abelian(const std::vector<std::size_t>& cyclic_orders);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string id = {});
/// Unitriangular 3x3 matrices over F_p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroup heisenberg(std::uint64_t p);
/// C_p acting on F_q^m through theta (theta^p = I): (i,v)(j,w) = (i+j, theta^-j v + w).
/// Element index is i*q^m + sum_k v_k q^k.
FiniteGroup cyclic_on_vectors(std::string id, std::uint64_t p, const ff::Mat& theta);
/// Central product of C4 and D4 on 16 elements: (k,a,b)(k',c,d) = (k+k'+2bc mod 4, a+c, b+d).
FiniteGroup pauli();
/// (C2 x C2) semidirect C4 with the generator of C4 swapping the two factors.
FiniteGroup c2sq_rtimes_c4();

/// Every group of order at most max_order (max_order <= 16), one per isomorphism type,
/// in order of increasing size.
std::vector<GroupRef> small_groups(std::size_t max_order = 16);

/// Decodes/encodes a vector in F_q^m as the base-q integer sum v_k q^k.
ff::Vec decode_vector(std::uint64_t value, std::uint64_t q, std::size_t m);
std::uint64_t encode_vector(const ff::Vec& v, std::uint64_t q);

} // namespace charcat::groups
