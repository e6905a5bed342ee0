#include "cyhull/tower.hpp"

#include <numeric>
#include <string>

#include "fp_util.hpp"

namespace cyhull {

namespace {

constexpr uint64_t kMaxBigField = 1ull << 24;
constexpr uint64_t kAlphaCacheLimit = 1ull << 16;

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Multiplicative order of q modulo n (n >= 1, gcd(n, q) = 1).
uint32_t order_mod(uint64_t q, uint64_t n) {
    if (n == 1) return 1;
    uint64_t acc = q % n;
    for (uint32_t m = 1;; ++m) {
        if (acc == 1) return m;
        acc = (acc * (q % n)) % n;
        if (m > n) throw InternalSearchExhausted("order search exceeded modulus");
    }
}

// First monic irreducible polynomial of the given degree over F_p in
// integer-code scan order of the non-leading coefficients.
fp::Poly scan_modulus(uint32_t p, uint32_t degree) {
    const uint64_t limit = ipow(p, degree);
    for (uint64_t code = 0; code < limit; ++code) {
        fp::Poly f(degree + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < degree; ++i) {
            f[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        f[degree] = 1;
        if (fp::is_irreducible(f, p)) return f;
    }
    throw InternalSearchExhausted("no irreducible modulus found");
}

}  // namespace

FieldTower::FieldTower(uint32_t p, uint32_t e, uint64_t n) : p_(p), e_(e), n_(n) {
    if (!fp::is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("extension degree must be positive");
    if (n < 1) throw Error("n must be positive");
    q_ = ipow(p, e);
    if (std::gcd(n, q_) != 1)
        throw NotCoprime("gcd(n, q) != 1 for n = " + std::to_string(n) +
                         ", q = " + std::to_string(q_));
    m_ = order_mod(q_, n);

    const uint32_t big_deg = e_ * m_;
    uint64_t big_size = 1;
    for (uint32_t i = 0; i < big_deg; ++i) {
        big_size *= p;
        if (big_size > kMaxBigField)
            throw TowerTooLarge("q^m = " + std::to_string(q_) + "^" + std::to_string(m_) +
                                " exceeds the 2^24 desk-scale bound");
    }

    big_ = big_deg == 1 ? Field::prime_field(p) : Field::extension_field(p, scan_modulus(p, big_deg));

    // order-n alpha: factor the group order, find a generator, take the
    // (size-1)/n power
    const uint64_t group = big_->size() - 1;
    uint64_t gen_code = 1;
    if (group > 1) {
        const auto factors = fp::factorize(group);
        gen_code = 0;
        for (uint64_t cand = 2; cand < big_->size(); ++cand) {
            bool ok = true;
            for (const auto& [prime, mult] : factors) {
                (void)mult;
                if (big_->pow(cand, static_cast<int64_t>(group / prime)) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_code = cand;
                break;
            }
        }
        if (gen_code == 0) throw InternalSearchExhausted("no multiplicative generator found");
    }
    alpha_code_ = big_->pow(gen_code, static_cast<int64_t>(group / n_));
    // verify the order is exactly n
    if (big_->pow(alpha_code_, static_cast<int64_t>(n_)) != 1)
        throw InternalSearchExhausted("alpha order verification failed");
    for (uint64_t d : fp::divisors(n_))
        if (d < n_ && big_->pow(alpha_code_, static_cast<int64_t>(d)) == 1)
            throw InternalSearchExhausted("alpha has a proper-divisor order");

    // subfield generator gamma: first code with gamma^q = gamma whose powers
    // 1, gamma, ..., gamma^(e-1) are F_p-independent
    if (e_ == 1) {
        gamma_code_ = 1;
    } else {
        gamma_code_ = 0;
        for (uint64_t cand = 0; cand < big_->size(); ++cand) {
            if (big_->pow(cand, static_cast<int64_t>(q_)) != cand) continue;
            std::vector<std::vector<uint32_t>> rows;
            uint64_t pw = 1;
            for (uint32_t i = 0; i < e_; ++i) {
                rows.push_back(big_->decode(pw));
                pw = big_->mul(pw, cand);
            }
            if (fp::rank(rows, p_) == e_) {
                gamma_code_ = cand;
                break;
            }
        }
        if (gamma_code_ == 0) throw InternalSearchExhausted("no subfield generator found");
    }

    // base field F_q: prime field for e = 1, else F_p[y]/(minpoly of gamma)
    if (e_ == 1) {
        base_ = big_deg == 1 ? big_ : Field::prime_field(p_);
    } else {
        // minimal polynomial of gamma over F_p from its p-power Frobenius orbit
        std::vector<uint64_t> minpoly{big_->neg(gamma_code_), 1};  // x - gamma
        uint64_t orbit = big_->pow(gamma_code_, p_);
        while (orbit != gamma_code_) {
            // multiply by (x - orbit)
            std::vector<uint64_t> next(minpoly.size() + 1, 0);
            const uint64_t neg_orbit = big_->neg(orbit);
            for (size_t i = 0; i < minpoly.size(); ++i) {
                next[i + 1] = big_->add(next[i + 1], minpoly[i]);
                next[i] = big_->add(next[i], big_->mul(minpoly[i], neg_orbit));
            }
            minpoly = std::move(next);
            orbit = big_->pow(orbit, p_);
        }
        if (minpoly.size() != e_ + 1)
            throw InternalSearchExhausted("gamma minimal polynomial has unexpected degree");
        fp::Poly mod(e_ + 1);
        for (size_t i = 0; i <= e_; ++i) {
            const auto coords = big_->decode(minpoly[i]);
            for (size_t j = 1; j < coords.size(); ++j)
                if (coords[j] != 0)
                    throw InternalSearchExhausted("gamma minimal polynomial not over F_p");
            mod[i] = coords.empty() ? 0 : coords[0];
        }
        base_ = Field::extension_field(p_, std::move(mod));
    }

    // coordinates of gamma^i (the embedding matrix for coercion)
    uint64_t pw = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        auto coords = big_->decode(pw);
        coords.resize(big_->degree(), 0);
        gamma_pow_coords_.push_back(std::move(coords));
        pw = big_->mul(pw, gamma_code_);
    }

    if (n_ <= kAlphaCacheLimit) {
        alpha_pow_cache_.reserve(n_);
        uint64_t a = 1;
        for (uint64_t i = 0; i < n_; ++i) {
            alpha_pow_cache_.push_back(a);
            a = big_->mul(a, alpha_code_);
        }
    }
}

FieldElement FieldTower::alpha_pow(uint64_t i) const {
    i %= n_;
    if (!alpha_pow_cache_.empty()) return big_->element(alpha_pow_cache_[i]);
    return big_->element(big_->pow(alpha_code_, static_cast<int64_t>(i)));
}

void FieldTower::check_element(const FieldElement& a) const {
    if (&a.field() != big_.get())
        throw FieldMismatch("element does not belong to the tower's big field");
}

FieldElement FieldTower::frobenius(const FieldElement& a, uint64_t k) const {
    check_element(a);
    if (a.is_zero()) return a;
    k %= m_;
    uint64_t exp = 1;
    for (uint64_t i = 0; i < k; ++i) exp = (exp * q_) % (big_->size() - 1);
    return big_->element(big_->pow(a.code(), static_cast<int64_t>(exp)));
}

FieldElement FieldTower::relative_trace(const FieldElement& a, uint32_t k) const {
    check_element(a);
    if (k == 0 || m_ % k != 0)
        throw NotADivisor("trace level k = " + std::to_string(k) + " does not divide m = " +
                          std::to_string(m_));
    FieldElement acc = a;
    FieldElement t = a;
    for (uint32_t i = 1; i < m_ / k; ++i) {
        t = frobenius(t, k);
        acc = acc + t;
    }
    return acc;
}

FieldElement FieldTower::trace_to_base(const FieldElement& a) const {
    return coerce_to_subfield(relative_trace(a, 1));
}

bool FieldTower::is_in_subfield(const FieldElement& a, uint32_t k) const {
    check_element(a);
    if (k == 0 || m_ % k != 0)
        throw NotADivisor("subfield level k = " + std::to_string(k) + " does not divide m = " +
                          std::to_string(m_));
    return frobenius(a, k) == a;
}

FieldElement FieldTower::coerce_to_subfield(const FieldElement& a) const {
    check_element(a);
    // solve  sum_i c_i gamma^i = a  over F_p
    const uint32_t big_deg = big_->degree();
    std::vector<std::vector<uint32_t>> system(big_deg, std::vector<uint32_t>(e_, 0));
    for (uint32_t i = 0; i < e_; ++i)
        for (uint32_t r = 0; r < big_deg; ++r) system[r][i] = gamma_pow_coords_[i][r];
    auto target = big_->decode(a.code());
    target.resize(big_deg, 0);
    const auto sol = fp::solve(std::move(system), std::move(target), p_);
    if (!sol) throw NotInSubfield("element does not lie in the F_q copy");
    return base_->from_coeffs(*sol);
}

FieldElement FieldTower::embed(const FieldElement& a) const {
    if (&a.field() != base_.get())
        throw FieldMismatch("embed expects a base-field element");
    const auto coords = base_->decode(a.code());
    uint64_t acc = 0;
    uint64_t pw = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        acc = big_->add(acc, big_->mul(coords[i], pw));
        pw = big_->mul(pw, gamma_code_);
    }
    return big_->element(acc);
}

Polynomial FieldTower::embed_poly(const Polynomial& f) const {
    if (&f.field() == big_.get()) return f;
    if (&f.field() != base_.get())
        throw FieldMismatch("polynomial does not belong to the tower");
    std::vector<uint64_t> codes;
    codes.reserve(f.codes().size());
    for (uint64_t c : f.codes()) codes.push_back(embed(base_->element(c)).code());
    return {big_, std::move(codes)};
}

FieldElement FieldTower::eval_at(const Polynomial& f, const FieldElement& point) const {
    check_element(point);
    return eval(embed_poly(f), point);
}

bool FieldTower::is_normal(const FieldElement& a) const {
    check_element(a);
    if (a.is_zero()) return false;
    // F_q-span of the orbit is full iff the F_p-span of gamma^j * a^(q^i) is
    const uint32_t big_deg = big_->degree();
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(static_cast<size_t>(e_) * m_);
    uint64_t orbit = a.code();
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t scaled = orbit;
        for (uint32_t j = 0; j < e_; ++j) {
            auto coords = big_->decode(scaled);
            coords.resize(big_deg, 0);
            rows.push_back(std::move(coords));
            scaled = big_->mul(scaled, gamma_code_);
        }
        orbit = big_->pow(orbit, static_cast<int64_t>(q_));
    }
    return fp::rank(std::move(rows), p_) == big_deg;
}

FieldElement FieldTower::find_normal_element() const {
    for (uint64_t code = 1; code < big_->size(); ++code) {
        const FieldElement cand = big_->element(code);
        if (!is_normal(cand)) continue;
        if (relative_trace(cand, 1).is_zero())
            throw InternalSearchExhausted("normal element with zero trace");
        return cand;
    }
    throw InternalSearchExhausted("no normal element found");
}

FieldTower build_tower(uint32_t p, uint32_t e, uint64_t n) { return FieldTower(p, e, n); }

}  // namespace cyhull
