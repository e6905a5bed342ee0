#include "cyhull/field.hpp"

#include <ostream>

#include "fp_util.hpp"

namespace cyhull {

Field::Field(uint32_t p, uint32_t deg, std::vector<uint32_t> modulus)
    : p_(p), deg_(deg), modulus_(std::move(modulus)) {
    size_ = 1;
    for (uint32_t i = 0; i < deg_; ++i) size_ *= p_;
    if (deg_ > 1) {
        // reduction_rows_[k] = coefficients of x^(deg+k) mod modulus
        fp::Poly x_deg(deg_ + 1, 0);
        x_deg[deg_] = 1;
        fp::Poly cur = fp::rem(x_deg, modulus_, p_);
        for (uint32_t k = 0; k + 1 < deg_; ++k) {
            fp::Poly row = cur;
            row.resize(deg_, 0);
            reduction_rows_.push_back(std::move(row));
            cur = fp::rem(fp::mul(cur, {0, 1}, p_), modulus_, p_);
        }
    }
}

std::shared_ptr<const Field> Field::prime_field(uint32_t p) {
    if (!fp::is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    return std::shared_ptr<const Field>(new Field(p, 1, {}));
}

std::shared_ptr<const Field> Field::extension_field(uint32_t p, std::vector<uint32_t> modulus) {
    if (!fp::is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    fp::trim(modulus);
    const int d = fp::deg(modulus);
    if (d < 2 || modulus.back() != 1)
        throw Error("extension modulus must be monic of degree >= 2");
    for (uint32_t c : modulus)
        if (c >= p) throw Error("modulus coefficient out of range");
    if (!fp::is_irreducible(modulus, p))
        throw Error("modulus is not irreducible over F_" + std::to_string(p));
    return std::shared_ptr<const Field>(new Field(p, static_cast<uint32_t>(d), std::move(modulus)));
}

FieldElement Field::zero() const { return {shared_from_this(), 0}; }
FieldElement Field::one() const { return {shared_from_this(), 1}; }

FieldElement Field::element(uint64_t code) const {
    if (code >= size_) throw Error("element code out of range");
    return {shared_from_this(), code};
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    return {shared_from_this(), encode(coeffs)};
}

std::vector<uint32_t> Field::decode(uint64_t code) const {
    std::vector<uint32_t> c(deg_);
    for (uint32_t i = 0; i < deg_; ++i) {
        c[i] = static_cast<uint32_t>(code % p_);
        code /= p_;
    }
    return c;
}

uint64_t Field::encode(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() > deg_) throw Error("coefficient sequence too long");
    uint64_t code = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw Error("coefficient out of range");
        code = code * p_ + coeffs[i];
    }
    return code;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    if (deg_ == 1) return (a + b) % p_;
    uint64_t r = 0, mult = 1;
    for (uint32_t i = 0; i < deg_; ++i) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint64_t Field::neg(uint64_t a) const {
    if (deg_ == 1) return a == 0 ? 0 : p_ - a;
    uint64_t r = 0, mult = 1;
    for (uint32_t i = 0; i < deg_; ++i) {
        const uint64_t c = a % p_;
        r += mult * (c == 0 ? 0 : p_ - c);
        a /= p_;
        mult *= p_;
    }
    return r;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (deg_ == 1) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    const std::vector<uint32_t> ca = decode(a), cb = decode(b);
    std::vector<uint64_t> prod(2 * deg_ - 1, 0);
    for (uint32_t i = 0; i < deg_; ++i) {
        if (ca[i] == 0) continue;
        for (uint32_t j = 0; j < deg_; ++j) prod[i + j] += uint64_t(ca[i]) * cb[j];
    }
    // fold x^(deg+k) terms back using the precomputed reduction rows
    for (uint32_t k = deg_ - 1; k-- > 0;) {
        const uint64_t hi = prod[deg_ + k] % p_;
        if (hi == 0) continue;
        const auto& row = reduction_rows_[k];
        for (uint32_t j = 0; j < deg_; ++j) prod[j] += hi * row[j];
    }
    uint64_t code = 0;
    for (uint32_t i = deg_; i-- > 0;) code = code * p_ + prod[i] % p_;
    return code;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (deg_ == 1) return fp::mod_inv(static_cast<uint32_t>(a), p_);
    fp::Poly pa = decode(a);
    fp::trim(pa);
    // extended Euclid: find u with u * pa = 1 (mod modulus)
    fp::Poly r0 = modulus_, r1 = pa;
    fp::Poly u0 = {}, u1 = {1};
    while (fp::deg(r1) > 0) {
        auto [quo, rem] = fp::divmod(r0, r1, p_);
        fp::Poly u2 = fp::sub(u0, fp::mul(quo, u1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r1 is a nonzero constant: modulus is irreducible and pa has lower degree
    const uint32_t scale = fp::mod_inv(r1[0], p_);
    fp::Poly res(deg_, 0);
    for (size_t i = 0; i < u1.size(); ++i)
        res[i] = static_cast<uint32_t>((uint64_t(u1[i]) * scale) % p_);
    return encode(res);
}

uint64_t Field::div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

uint64_t Field::pow(uint64_t base, int64_t exp) const {
    if (base == 0) {
        if (exp > 0) return 0;
        if (exp == 0) return 1;
        throw DivisionByZero("zero raised to a negative power");
    }
    const uint64_t group = size_ - 1;
    uint64_t e = static_cast<uint64_t>(((exp % int64_t(group)) + int64_t(group)) % int64_t(group));
    uint64_t r = 1, b = base;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.code(); }

}  // namespace cyhull
