#include "cyhull/cyclic.hpp"

#include <string>

#include "fp_util.hpp"

namespace cyhull {

namespace {

// x^n - 1 over the given field
Polynomial make_xn_minus_1(const std::shared_ptr<const Field>& f, uint64_t n) {
    std::vector<uint64_t> codes(n + 1, 0);
    codes[0] = f->neg(1);
    codes[n] = 1;
    return {f, std::move(codes)};
}

}  // namespace

CyclicSystem::CyclicSystem(uint32_t p, uint32_t e, uint64_t n)
    : tower_(p, e, n), table_(tower_.q(), n), xn1_(make_xn_minus_1(tower_.base_field(), n)) {
    // minimal polynomial of alpha^leader: product over the coset of (x - alpha^s),
    // computed in the big field, coefficients certified and coerced into F_q
    const auto& big = tower_.big_field();
    for (uint64_t leader : table_.leaders()) {
        const auto& coset = table_.coset(leader);
        std::vector<uint64_t> prod{1};  // big-field codes, low-to-high
        for (uint64_t s : coset.elements) {
            const uint64_t root = tower_.alpha_pow(s).code();
            const uint64_t neg_root = big->neg(root);
            std::vector<uint64_t> next(prod.size() + 1, 0);
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = big->add(next[i + 1], prod[i]);
                next[i] = big->add(next[i], big->mul(prod[i], neg_root));
            }
            prod = std::move(next);
        }
        std::vector<uint64_t> base_codes;
        base_codes.reserve(prod.size());
        for (uint64_t c : prod) {
            const FieldElement elem = big->element(c);
            if (!tower_.is_in_subfield(elem, 1))
                throw CoefficientNotInSubfield("minimal polynomial coefficient escaped F_q");
            base_codes.push_back(tower_.coerce_to_subfield(elem).code());
        }
        factors_.emplace(leader, Polynomial(tower_.base_field(), std::move(base_codes)));
    }
}

CyclicSystem CyclicSystem::from_q(uint64_t q, uint64_t n) {
    const auto factors = fp::factorize(q);
    if (factors.size() != 1 || q < 2)
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<uint32_t>(factors[0].first), factors[0].second, n};
}

const Polynomial& CyclicSystem::minpoly(uint64_t leader) const {
    const auto it = factors_.find(leader);
    if (it == factors_.end())
        throw Error(std::to_string(leader) + " is not a coset leader mod " + std::to_string(n()));
    return it->second;
}

CyclicCode CyclicSystem::code_from_generator(Polynomial gen) const {
    if (&gen.field() != fq().get())
        throw FieldMismatch("generator polynomial is not over F_q");
    if (gen.is_zero()) throw NotADivisor("zero polynomial cannot generate a cyclic code");
    gen = gen.make_monic();
    const auto [quo, rem] = divmod(xn1_, gen);
    (void)quo;
    if (!rem.is_zero())
        throw NotADivisor("generator does not divide x^n - 1 (remainder " +
                          to_codes_string(rem) + ")");
    return {std::move(gen), n()};
}

CyclicCode CyclicSystem::code_from_generator_leaders(const std::set<uint64_t>& leaders) const {
    Polynomial gen(fq(), {1});
    for (uint64_t leader : leaders) gen = gen * minpoly(leader);
    return {std::move(gen), n()};
}

CyclicCode CyclicSystem::code_from_bz_dual(const BasicDualZero& bz) const {
    Polynomial h_star(fq(), {1});
    for (uint64_t leader : bz.leaders) h_star = h_star * minpoly(leader);
    const Polynomial h = reciprocal(h_star);
    return {(xn1_ / h).make_monic(), n()};
}

void CyclicSystem::check_code(const CyclicCode& c) const {
    if (c.length() != n()) throw LengthMismatch("code length does not match the system");
    if (&c.generator().field() != fq().get())
        throw FieldMismatch("code is over a different field");
}

void CyclicSystem::check_pair(const CyclicCode& c, const CyclicCode& d) const {
    check_code(c);
    check_code(d);
}

CyclicCode CyclicSystem::dual_code(const CyclicCode& c) const {
    check_code(c);
    const auto [h, rem] = divmod(xn1_, c.generator());
    if (!rem.is_zero())
        throw NotADivisor("code generator does not divide x^n - 1");
    return {reciprocal(h.make_monic()), n()};
}

BasicDualZero CyclicSystem::basic_dual_zero(const CyclicCode& c) const {
    check_code(c);
    const Polynomial h_star = dual_code(c).generator();
    BasicDualZero bz;
    for (uint64_t leader : table_.leaders())
        if ((h_star % minpoly(leader)).is_zero()) bz.leaders.insert(leader);
    return bz;
}

Polynomial CyclicSystem::hull_generator(const CyclicCode& c) const {
    check_code(c);
    return lcm(c.generator(), dual_code(c).generator());
}

uint64_t CyclicSystem::hull_dimension(const CyclicCode& c) const {
    const BasicDualZero bz = basic_dual_zero(c);
    uint64_t dim = 0;
    for (uint64_t j : bz.leaders) {
        const uint64_t partner = table_.neg_pair(j);
        if (partner != j && bz.leaders.count(partner) == 0) dim += table_.coset_size(j);
    }
    return dim;
}

bool CyclicSystem::is_lcd(const CyclicCode& c) const {
    const BasicDualZero bz = basic_dual_zero(c);
    for (uint64_t j : bz.leaders) {
        const uint64_t partner = table_.neg_pair(j);
        if (partner != j && bz.leaders.count(partner) == 0) return false;
    }
    return true;
}

std::optional<uint64_t> CyclicSystem::one_dim_hull_witness(const CyclicCode& c) const {
    // the hull is one-dimensional exactly when the unpaired part of
    // BZ(C-perp) is a single singleton coset
    const BasicDualZero bz = basic_dual_zero(c);
    std::optional<uint64_t> witness;
    uint64_t dim = 0;
    for (uint64_t j : bz.leaders) {
        const uint64_t partner = table_.neg_pair(j);
        if (partner != j && bz.leaders.count(partner) == 0) {
            dim += table_.coset_size(j);
            if (dim > 1) return std::nullopt;
            witness = j;
        }
    }
    if (dim != 1) return std::nullopt;
    return witness;
}

bool CyclicSystem::is_lcp(const CyclicCode& c, const CyclicCode& d) const {
    check_pair(c, d);
    const BasicDualZero bz_c = basic_dual_zero(c);
    const BasicDualZero bz_d = basic_dual_zero(d);
    if (bz_c.leaders.size() + bz_d.leaders.size() != table_.leaders().size()) return false;
    for (uint64_t j : bz_c.leaders)
        if (bz_d.leaders.count(j)) return false;
    return true;
}

uint64_t CyclicSystem::intersection_dimension(const CyclicCode& c, const CyclicCode& d) const {
    check_pair(c, d);
    const BasicDualZero bz_c = basic_dual_zero(c);
    const BasicDualZero bz_d = basic_dual_zero(d);
    uint64_t dim = 0;
    for (uint64_t j : bz_c.leaders)
        if (bz_d.leaders.count(j)) dim += table_.coset_size(j);
    return dim;
}

CyclicCode CyclicSystem::intersection_code(const CyclicCode& c, const CyclicCode& d) const {
    check_pair(c, d);
    return {lcm(c.generator(), d.generator()), n()};
}

}  // namespace cyhull
