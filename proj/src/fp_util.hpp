#pragma once

// Internal helpers: integers mod p, dense polynomials over F_p, and small
// F_p linear algebra. Used by field construction and the tower build; not
// part of the public headers.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyhull::fp {

using Poly = std::vector<uint32_t>;  // coefficients low-to-high, no trailing zeros

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);
uint32_t mod_inv(uint32_t a, uint32_t p);
bool is_prime(uint64_t v);
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t v);
std::vector<uint64_t> divisors(uint64_t v);

void trim(Poly& f);
int deg(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b, uint32_t p);
Poly sub(const Poly& a, const Poly& b, uint32_t p);
Poly mul(const Poly& a, const Poly& b, uint32_t p);
Poly rem(Poly a, const Poly& b, uint32_t p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, uint32_t p);
Poly make_monic(Poly f, uint32_t p);
Poly gcd(Poly a, Poly b, uint32_t p);
Poly pow_mod(Poly base, uint64_t exp, const Poly& mod, uint32_t p);

// Monic f of degree >= 1: gcd test against x^(p^i) - x for i <= deg/2.
bool is_irreducible(const Poly& f, uint32_t p);

// Row-reducing rank of a dense matrix over F_p (rows of equal length).
size_t rank(std::vector<std::vector<uint32_t>> rows, uint32_t p);

// Solves A x = b over F_p (A given as rows). Empty optional when inconsistent.
std::optional<std::vector<uint32_t>> solve(std::vector<std::vector<uint32_t>> a,
                                           std::vector<uint32_t> b, uint32_t p);

}  // namespace cyhull::fp
