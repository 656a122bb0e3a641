#include "twistchar/chromatic.hpp"

#include <stdexcept>
#include <string>

#include "twistchar/errors.hpp"

namespace twistchar::chromatic {

namespace {

void check_element(const StemGroup& group, const StemElement& alpha) {
    if (alpha.size() != group.orders.size())
        throw type_error("stem element has " + std::to_string(alpha.size()) +
                         " coordinates, group has " + std::to_string(group.orders.size()));
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] < 0 || alpha[i] >= group.orders[i])
            throw type_error("stem element coordinate out of range");
}

Int power_of_two(int exp) { return pow2(static_cast<unsigned long>(exp)); }

}  // namespace

StemGroup::StemGroup(unsigned long p_, std::vector<Int> orders_)
    : p(p_), orders(std::move(orders_)) {
    for (const auto& d : orders) {
        if (d < 1) throw type_error("cyclic orders must be at least 1");
        Int rest = d;
        while (rest % static_cast<long>(p) == 0) rest /= static_cast<long>(p);
        if (rest != 1)
            throw type_error("stem group orders must be powers of " + std::to_string(p));
    }
}

bool two_divisible(const StemGroup& group, const StemElement& alpha) {
    check_element(group, alpha);
    if (group.p != 2) return true;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (group.orders[i] % 2 == 0 && alpha[i] % 2 != 0) return false;
    return true;
}

std::set<int> truncated_units(unsigned long p, int n) {
    if (n < 0) throw type_error("height must be non-negative");
    if (p == 2 && n <= 3) return {1, -1};
    return {1};
}

ChromaticDecision chromatic_decision(unsigned long p, int n, const StemGroup& group,
                                     const StemElement& alpha) {
    if (n < 0) throw type_error("height must be non-negative");
    if (p != group.p) throw type_error("prime differs from the stem group's prime");
    check_element(group, alpha);
    if (p == 2 && n <= 2 && !two_divisible(group, alpha)) return {-1, "ΣE_n"};
    return {1, "E_n"};
}

braidchar::CharacterTable<Int> chromatic_character(unsigned long p, int n,
                                                   const StemGroup& group,
                                                   const StemElement& alpha,
                                                   unsigned long m, unsigned long cap) {
    const ChromaticDecision decision = chromatic_decision(p, n, group, alpha);
    return braidchar::braiding_character(graded::Twist<Int>::unit(decision.omega), Int(1),
                                         m, cap);
}

Int bz2_cardinality(int n) {
    if (n < 1) throw std::domain_error("bz2_cardinality is defined for heights >= 1");
    return power_of_two(n - 1);
}

Int integral_bz2_sq(int n, int omega) {
    if (n < 1) throw std::domain_error("integral_bz2_sq is defined for heights >= 1");
    if (omega != 1 && omega != -1) throw type_error("omega must be +1 or -1");
    if (omega == 1) return bz2_cardinality(n);  // integral of the constant 1
    return 1 - power_of_two(n - 1);
}

bool no_truncated_unit_check(int n) { return integral_bz2_sq(n, -1) != bz2_cardinality(n); }

Int loop_bz2_integral(int n) { return integral_bz2_sq(n, -1) - bz2_cardinality(n); }

namespace {

// Character value on a component of (Z/2^k)^j, computed inductively on k:
// at k = 0 it is omega_t; a component that is not 2-divisible carries
// omega_t; a component 2x carries the square of the value at x one level
// down.
int component_value(unsigned long k, const std::vector<unsigned long>& coords, int omega_t) {
    if (k == 0) return omega_t;
    bool divisible = true;
    for (unsigned long c : coords)
        if (c % 2 != 0) divisible = false;
    if (!divisible) return omega_t;
    std::vector<unsigned long> halved(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) halved[i] = coords[i] / 2;
    const int inner = component_value(k - 1, halved, omega_t);
    return inner * inner;
}

}  // namespace

std::vector<TranschromaticRow> transchromatic_table(unsigned long k, unsigned long j,
                                                    int omega_t, unsigned long cap) {
    if (omega_t != 1 && omega_t != -1) throw type_error("omega_t must be +1 or -1");
    std::vector<TranschromaticRow> rows;
    for (auto& component : symgroup::cyclic_loop_components(2, k, j, cap)) {
        const int value = component_value(k, component.coords, omega_t);
        const ComponentAction action = component.valuation == 0 ? ComponentAction::Trivial
                                                                : ComponentAction::Induced;
        rows.push_back({std::move(component), value, action});
    }
    return rows;
}

std::vector<Int> stable_stem(int stem) {
    switch (stem) {
        case 1: return {2};
        case 2: return {2};
        case 3: return {24};
        case 4: return {};
        case 5: return {};
        case 6: return {2};
        case 7: return {240};
        default:
            throw std::domain_error("stable_stem: shipped table covers stems 1..7");
    }
}

StemGroup dual_stem_group(unsigned long p, int n) {
    if (n < 0) throw type_error("height must be non-negative");
    std::vector<Int> orders;
    for (const auto& d : stable_stem(n + 1)) {
        Int p_part = 1;
        Int rest = d;
        while (rest % static_cast<long>(p) == 0) {
            rest /= static_cast<long>(p);
            p_part *= static_cast<long>(p);
        }
        if (p_part > 1) orders.push_back(p_part);
    }
    return StemGroup(p, std::move(orders));
}

}  // namespace twistchar::chromatic
