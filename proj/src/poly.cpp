#include "cyhull/poly.hpp"

#include <ostream>
#include <sstream>

namespace cyhull {

namespace {
void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (&a.field() != &b.field())
        throw FieldMismatch("polynomials belong to different fields");
}
}  // namespace

Polynomial::Polynomial(std::shared_ptr<const Field> field, std::vector<uint64_t> codes)
    : field_(std::move(field)), codes_(std::move(codes)) {
    for (uint64_t c : codes_)
        if (c >= field_->size()) throw Error("coefficient code out of range");
    trim();
}

void Polynomial::trim() {
    while (!codes_.empty() && codes_.back() == 0) codes_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return {c.field_ptr(), {c.code()}};
}

Polynomial Polynomial::x_pow(std::shared_ptr<const Field> field, size_t k) {
    std::vector<uint64_t> codes(k + 1, 0);
    codes[k] = 1;
    return {std::move(field), std::move(codes)};
}

Polynomial Polynomial::from_elements(const std::vector<FieldElement>& coeffs) {
    if (coeffs.empty()) throw Error("from_elements needs at least one coefficient");
    std::vector<uint64_t> codes;
    codes.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (&c.field() != &coeffs.front().field())
            throw FieldMismatch("coefficients belong to different fields");
        codes.push_back(c.code());
    }
    return {coeffs.front().field_ptr(), std::move(codes)};
}

FieldElement Polynomial::coeff(size_t i) const {
    return FieldElement(field_, coeff_code(i));
}

FieldElement Polynomial::leading() const {
    if (is_zero()) throw Error("zero polynomial has no leading coefficient");
    return FieldElement(field_, codes_.back());
}

Polynomial Polynomial::make_monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    const uint64_t inv = field_->inv(codes_.back());
    std::vector<uint64_t> codes(codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) codes[i] = field_->mul(codes_[i], inv);
    return {field_, std::move(codes)};
}

Polynomial Polynomial::shifted(size_t k) const {
    if (is_zero()) return *this;
    std::vector<uint64_t> codes(codes_.size() + k, 0);
    for (size_t i = 0; i < codes_.size(); ++i) codes[i + k] = codes_[i];
    return {field_, std::move(codes)};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<uint64_t> codes(std::max(a.codes_.size(), b.codes_.size()), 0);
    for (size_t i = 0; i < codes.size(); ++i)
        codes[i] = f.add(a.coeff_code(i), b.coeff_code(i));
    return {a.field_, std::move(codes)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<uint64_t> codes(std::max(a.codes_.size(), b.codes_.size()), 0);
    for (size_t i = 0; i < codes.size(); ++i)
        codes[i] = f.sub(a.coeff_code(i), b.coeff_code(i));
    return {a.field_, std::move(codes)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& f = a.field();
    std::vector<uint64_t> codes(a.codes_.size() + b.codes_.size() - 1, 0);
    for (size_t i = 0; i < a.codes_.size(); ++i) {
        if (a.codes_[i] == 0) continue;
        for (size_t j = 0; j < b.codes_.size(); ++j) {
            if (b.codes_[j] == 0) continue;
            codes[i + j] = f.add(codes[i + j], f.mul(a.codes_[i], b.codes_[j]));
        }
    }
    return {a.field_, std::move(codes)};
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    if (&s.field() != field_.get()) throw FieldMismatch("scalar from a different field");
    std::vector<uint64_t> codes(codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) codes[i] = field_->mul(codes_[i], s.code());
    return {field_, std::move(codes)};
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return &a.field() == &b.field() && a.codes_ == b.codes_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& f = a.field();
    std::vector<uint64_t> r(a.codes().begin(), a.codes().end());
    const auto bdeg = static_cast<size_t>(b.degree());
    const uint64_t lead_inv = f.inv(b.codes().back());
    std::vector<uint64_t> quo;
    while (r.size() >= bdeg + 1 && !r.empty()) {
        const uint64_t c = f.mul(r.back(), lead_inv);
        const size_t shift = r.size() - (bdeg + 1);
        if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
        quo[shift] = c;
        for (size_t i = 0; i <= bdeg; ++i)
            r[shift + i] = f.sub(r[shift + i], f.mul(c, b.codes()[i]));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {Polynomial(a.field_ptr(), std::move(quo)), Polynomial(a.field_ptr(), std::move(r))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.make_monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) throw BothZero("lcm requires nonzero operands");
    return ((a * b) / gcd(a, b)).make_monic();
}

Polynomial reciprocal(const Polynomial& f) {
    if (f.is_zero() || f.coeff_code(0) == 0)
        throw ZeroConstantTerm("reciprocal requires a nonzero constant term");
    const Field& fld = f.field();
    const uint64_t scale = fld.inv(f.coeff_code(0));
    const auto d = static_cast<size_t>(f.degree());
    std::vector<uint64_t> codes(d + 1);
    for (size_t i = 0; i <= d; ++i) codes[i] = fld.mul(f.coeff_code(d - i), scale);
    return {f.field_ptr(), std::move(codes)};
}

bool is_self_reciprocal(const Polynomial& f) { return f == reciprocal(f); }

FieldElement eval(const Polynomial& f, const FieldElement& a) {
    if (&a.field() != &f.field()) throw FieldMismatch("evaluation point from a different field");
    const Field& fld = f.field();
    uint64_t acc = 0;
    for (size_t i = f.codes().size(); i-- > 0;)
        acc = fld.add(fld.mul(acc, a.code()), f.codes()[i]);
    return FieldElement(f.field_ptr(), acc);
}

std::string to_codes_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.codes().size(); ++i) {
        if (i) os << ',';
        os << f.codes()[i];
    }
    return os.str();
}

Polynomial poly_from_codes_string(std::shared_ptr<const Field> field, const std::string& text) {
    std::vector<uint64_t> codes;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            throw Error("bad coefficient token '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw Error("bad coefficient token '" + tok + "'");
        if (v >= field->size()) throw Error("coefficient code " + tok + " out of field range");
        codes.push_back(v);
    }
    if (codes.empty()) throw Error("empty polynomial text");
    return {std::move(field), std::move(codes)};
}

std::string to_pretty_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.codes().size(); i-- > 0;) {
        const uint64_t c = f.codes()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << to_pretty_string(f);
}

}  // namespace cyhull
