#pragma once

#include <map>
#include <vector>

#include "twistchar/numeric.hpp"

namespace twistchar::symgroup {

// Cycle type of a permutation: a non-increasing list of positive parts.
// Indexes conjugacy classes of the symmetric group on `total()` letters
// and the corresponding components of the free loop space of its
// classifying space. The empty partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    // Throws type_error unless parts are non-increasing and all >= 1.
    explicit Partition(std::vector<unsigned long> parts);

    const std::vector<unsigned long>& parts() const { return parts_; }
    unsigned long total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    // Number of cycles of a permutation with this cycle type.
    unsigned long num_cycles() const { return parts_.size(); }

    bool operator==(const Partition&) const = default;
    // Reverse-lexicographic: [m] first, [1,...,1] last.
    bool operator<(const Partition& other) const;

private:
    std::vector<unsigned long> parts_;
    unsigned long total_ = 0;
};

inline constexpr unsigned long kDefaultPartitionCap = 30;

// All partitions of m in reverse-lexicographic order.
// Throws enumeration_limit_error when m exceeds the cap.
std::vector<Partition> partitions(unsigned long m,
                                  unsigned long cap = kDefaultPartitionCap);

// Part-size multiplicities: k -> number of parts equal to k.
std::map<unsigned long, unsigned long> cycle_counts(const Partition& p);

unsigned long num_cycles(const Partition& p);

// Order of the centralizer of a permutation of this cycle type:
// the product over part sizes k of k^{N_k} * N_k!.
Int centralizer_order(const Partition& p);

// Size of the conjugacy class: total()! / centralizer_order.
Int class_size(const Partition& p);

}  // namespace twistchar::symgroup
