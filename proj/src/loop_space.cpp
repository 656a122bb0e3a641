#include "twistchar/loop_space.hpp"

#include <string>

#include "twistchar/errors.hpp"

namespace twistchar::symgroup {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned long vector_valuation(const std::vector<unsigned long>& coords,
                               unsigned long p, unsigned long k) {
    unsigned long v = k;  // the zero vector has the maximal (capped) valuation
    for (unsigned long c : coords) {
        unsigned long vc = 0;
        while (vc < k && c != 0 && c % p == 0) {
            c /= p;
            ++vc;
        }
        if (c != 0) v = std::min(v, vc);
    }
    return v;
}

}  // namespace

std::vector<LoopComponentCyclic> cyclic_loop_components(unsigned long p, unsigned long k,
                                                        unsigned long j, unsigned long cap) {
    if (!is_prime(p)) throw type_error("cyclic_loop_components: p must be prime");
    if (j < 1) throw type_error("cyclic_loop_components: depth must be at least 1");

    unsigned long modulus = 1;
    Int count = 1;
    for (unsigned long i = 0; i < k; ++i) modulus *= p;
    for (unsigned long i = 0; i < k * j; ++i) count *= p;
    if (count > Int(cap))
        throw enumeration_limit_error("cyclic_loop_components: " + count.get_str() +
                                      " components exceeds cap " + std::to_string(cap));

    std::vector<LoopComponentCyclic> out;
    out.reserve(count.get_ui());
    std::vector<unsigned long> coords(j, 0);
    while (true) {
        out.push_back({p, k, coords, vector_valuation(coords, p, k)});
        // odometer increment, last coordinate fastest
        std::size_t pos = j;
        while (pos > 0) {
            --pos;
            if (++coords[pos] < modulus) break;
            coords[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

}  // namespace twistchar::symgroup
