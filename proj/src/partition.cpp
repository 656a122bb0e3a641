#include "twistchar/partition.hpp"

#include <algorithm>
#include <string>

#include "twistchar/errors.hpp"

namespace twistchar::symgroup {

Partition::Partition(std::vector<unsigned long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw type_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw type_error("partition parts must be non-increasing");
        total_ += parts_[i];
    }
}

bool Partition::operator<(const Partition& other) const {
    if (total_ != other.total_) return total_ < other.total_;
    // Reverse-lexicographic on the part lists.
    return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(),
                                        parts_.begin(), parts_.end());
}

std::vector<Partition> partitions(unsigned long m, unsigned long cap) {
    if (m > cap)
        throw enumeration_limit_error("partitions(" + std::to_string(m) +
                                      ") exceeds enumeration cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<unsigned long> current;
    // Descend through parts no larger than `limit`; the first branch taken
    // is always the largest part, so the output is reverse-lexicographic.
    auto descend = [&](auto&& self, unsigned long remaining, unsigned long limit) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (unsigned long part = std::min(remaining, limit); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    descend(descend, m, m == 0 ? 1 : m);
    return out;
}

std::map<unsigned long, unsigned long> cycle_counts(const Partition& p) {
    std::map<unsigned long, unsigned long> counts;
    for (unsigned long part : p.parts()) ++counts[part];
    return counts;
}

unsigned long num_cycles(const Partition& p) { return p.num_cycles(); }

Int centralizer_order(const Partition& p) {
    Int order = 1;
    for (const auto& [k, count] : cycle_counts(p))
        order *= pow_int(Int(k), count) * factorial(count);
    return order;
}

Int class_size(const Partition& p) {
    auto size = divide_exactly(factorial(p.total()), centralizer_order(p));
    // Orbit-stabilizer: the centralizer order always divides m!.
    return *size;
}

}  // namespace twistchar::symgroup
