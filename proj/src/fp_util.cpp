#include "fp_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyhull::fp {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
    base %= mod;
    uint64_t r = 1 % mod;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    // extended Euclid on (a, p), p prime
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const int64_t qt = r / new_r;
        const int64_t next_t = t - qt * new_t;
        const int64_t next_r = r - qt * new_r;
        t = new_t;
        new_t = next_t;
        r = new_r;
        new_r = next_r;
    }
    if (r != 1) throw std::logic_error("mod_inv: not invertible");
    return static_cast<uint32_t>(t < 0 ? t + p : t);
}

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t v) {
    std::vector<std::pair<uint64_t, uint32_t>> out;
    for (uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (v % d != 0) continue;
        uint32_t e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::vector<uint64_t> divisors(uint64_t v) {
    std::vector<uint64_t> out{1};
    for (const auto& [prime, mult] : factorize(v)) {
        const size_t sz = out.size();
        uint64_t pw = 1;
        for (uint32_t i = 1; i <= mult; ++i) {
            pw *= prime;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t v = (i < a.size() ? a[i] : 0u) + (i < b.size() ? b[i] : 0u);
        r[i] = static_cast<uint32_t>(v % p);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t v = (i < a.size() ? a[i] : 0u) + p - (i < b.size() ? b[i] : 0u);
        r[i] = static_cast<uint32_t>(v % p);
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
        }
    }
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& b, uint32_t p) { return divmod(a, b, p).second; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, uint32_t p) {
    if (b.empty()) throw std::logic_error("fp::divmod: division by zero polynomial");
    Poly quo, r = a;
    const uint32_t lead_inv = mod_inv(b.back(), p);
    while (deg(r) >= deg(b)) {
        const size_t shift = r.size() - b.size();
        const uint32_t c = static_cast<uint32_t>((uint64_t(r.back()) * lead_inv) % p);
        if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
        quo[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t v = r[shift + i] + uint64_t(p) * p - (uint64_t(c) * b[i]) % p;
            r[shift + i] = static_cast<uint32_t>(v % p);
        }
        trim(r);
    }
    trim(quo);
    return {std::move(quo), std::move(r)};
}

Poly make_monic(Poly f, uint32_t p) {
    if (f.empty()) return f;
    const uint32_t inv = mod_inv(f.back(), p);
    for (auto& c : f) c = static_cast<uint32_t>((uint64_t(c) * inv) % p);
    return f;
}

Poly gcd(Poly a, Poly b, uint32_t p) {
    while (!b.empty()) {
        a = rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return make_monic(std::move(a), p);
}

Poly pow_mod(Poly base, uint64_t exp, const Poly& mod, uint32_t p) {
    base = rem(std::move(base), mod, p);
    Poly r{1};
    while (exp > 0) {
        if (exp & 1) r = rem(mul(r, base, p), mod, p);
        base = rem(mul(base, base, p), mod, p);
        exp >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f, uint32_t p) {
    const int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    for (int i = 1; i <= d / 2; ++i) {
        // x^(p^i) mod f, built by powering to p repeatedly
        Poly t = x;
        for (int j = 0; j < i; ++j) t = pow_mod(std::move(t), p, f, p);
        const Poly g = gcd(sub(t, x, p), f, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

size_t rank(std::vector<std::vector<uint32_t>> rows, uint32_t p) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const uint32_t inv = mod_inv(rows[r][c], p);
        for (size_t j = c; j < cols; ++j)
            rows[r][j] = static_cast<uint32_t>((uint64_t(rows[r][j]) * inv) % p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const uint64_t factor = rows[i][c];
            for (size_t j = c; j < cols; ++j) {
                uint64_t v = rows[i][j] + uint64_t(p) * p - (factor * rows[r][j]) % p;
                rows[i][j] = static_cast<uint32_t>(v % p);
            }
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<uint32_t>> solve(std::vector<std::vector<uint32_t>> a,
                                           std::vector<uint32_t> b, uint32_t p) {
    const size_t n_rows = a.size();
    const size_t n_cols = n_rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n_cols && r < n_rows; ++c) {
        size_t piv = r;
        while (piv < n_rows && a[piv][c] == 0) ++piv;
        if (piv == n_rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        const uint32_t inv = mod_inv(a[r][c], p);
        for (size_t j = c; j < n_cols; ++j)
            a[r][j] = static_cast<uint32_t>((uint64_t(a[r][j]) * inv) % p);
        b[r] = static_cast<uint32_t>((uint64_t(b[r]) * inv) % p);
        for (size_t i = 0; i < n_rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const uint64_t factor = a[i][c];
            for (size_t j = c; j < n_cols; ++j) {
                uint64_t v = a[i][j] + uint64_t(p) * p - (factor * a[r][j]) % p;
                a[i][j] = static_cast<uint32_t>(v % p);
            }
            uint64_t v = b[i] + uint64_t(p) * p - (factor * b[r]) % p;
            b[i] = static_cast<uint32_t>(v % p);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < n_rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<uint32_t> x(n_cols, 0);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace cyhull::fp
