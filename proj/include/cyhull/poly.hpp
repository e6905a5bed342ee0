#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyhull/field.hpp"

namespace cyhull {

/// Dense univariate polynomial over one Field. Coefficients are stored as
/// element codes, low degree first, with no trailing zeros; the zero
/// polynomial has an empty coefficient sequence and degree -1.
class Polynomial {
  public:
    explicit Polynomial(std::shared_ptr<const Field> field) : field_(std::move(field)) {}
    Polynomial(std::shared_ptr<const Field> field, std::vector<uint64_t> codes);

    static Polynomial constant(const FieldElement& c);
    static Polynomial x_pow(std::shared_ptr<const Field> field, size_t k);
    static Polynomial from_elements(const std::vector<FieldElement>& coeffs);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    const std::vector<uint64_t>& codes() const { return codes_; }

    int degree() const { return static_cast<int>(codes_.size()) - 1; }
    bool is_zero() const { return codes_.empty(); }
    bool is_one() const { return codes_.size() == 1 && codes_[0] == 1; }
    bool is_monic() const { return !codes_.empty() && codes_.back() == 1; }

    FieldElement coeff(size_t i) const;  // zero beyond the degree
    uint64_t coeff_code(size_t i) const { return i < codes_.size() ? codes_[i] : 0; }
    FieldElement leading() const;
    FieldElement constant_term() const { return coeff(0); }

    Polynomial make_monic() const;
    Polynomial shifted(size_t k) const;  // multiply by x^k

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const FieldElement& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    std::shared_ptr<const Field> field_;
    std::vector<uint64_t> codes_;

    void trim();
};

/// Returns (quotient, remainder) with a = quot * b + rem, deg rem < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; inputs must not both be zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic least common multiple; both inputs must be nonzero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// f*(x) = (1/f(0)) x^deg(f) f(1/x); requires f(0) != 0. Always monic.
Polynomial reciprocal(const Polynomial& f);
bool is_self_reciprocal(const Polynomial& f);

/// Horner evaluation; the point must live in the polynomial's field.
FieldElement eval(const Polynomial& f, const FieldElement& a);

/// Text format: comma-separated integer element codes, low degree first.
/// The zero polynomial serializes as "0".
std::string to_codes_string(const Polynomial& f);
Polynomial poly_from_codes_string(std::shared_ptr<const Field> field, const std::string& text);

/// Human-readable form such as "x^3 + 2*x + 1" (coefficients as codes).
std::string to_pretty_string(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace cyhull
