#include "twistchar/tensor_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twistchar/errors.hpp"

namespace twistchar::oracle {

namespace {

// The sign rule is driven entirely by the twist unit: -1 switches the
// Koszul signs on, +1 leaves plain permutation matrices. Integer twists
// carry no other units.
bool koszul_signs_active(const graded::Twist<Int>& twist) {
    return twist.epsilon() == -1;
}

}  // namespace

Perm identity_perm(std::size_t m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

Perm compose(const Perm& sigma, const Perm& tau) {
    Perm r(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) r[i] = sigma[tau[i]];
    return r;
}

Perm inverse(const Perm& sigma) {
    Perm r(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) r[sigma[i]] = i;
    return r;
}

Perm canonical_representative(const symgroup::Partition& lambda) {
    Perm p;
    p.reserve(lambda.total());
    std::size_t start = 0;
    for (unsigned long part : lambda.parts()) {
        for (unsigned long i = 0; i < part; ++i)
            p.push_back(start + (i + 1) % part);
        start += part;
    }
    return p;
}

symgroup::Partition cycle_type(const Perm& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    std::vector<unsigned long> parts;
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start]) continue;
        unsigned long length = 0;
        for (std::size_t i = start; !seen[i]; i = sigma[i]) {
            seen[i] = true;
            ++length;
        }
        parts.push_back(length);
    }
    std::sort(parts.rbegin(), parts.rend());
    return symgroup::Partition(parts);
}

std::vector<Perm> all_permutations(std::size_t m, std::size_t cap) {
    if (m > cap)
        throw enumeration_limit_error("all_permutations(" + std::to_string(m) +
                                      ") exceeds cap " + std::to_string(cap));
    std::vector<Perm> out;
    Perm p = identity_perm(m);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int koszul_sign(const Perm& sigma, const std::vector<long>& degrees) {
    if (sigma.size() != degrees.size())
        throw type_error("koszul_sign: permutation and degree tuple sizes differ");
    int odd_inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j] && (degrees[i] & 1l) && (degrees[j] & 1l))
                ++odd_inversions;
    return odd_inversions % 2 == 0 ? 1 : -1;
}

std::vector<long> permute_degrees(const Perm& sigma, const std::vector<long>& degrees) {
    std::vector<long> out(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) out[sigma[i]] = degrees[i];
    return out;
}

SignedPermMatrix SignedPermMatrix::multiply(const SignedPermMatrix& other) const {
    if (dim != other.dim) throw type_error("matrix dimensions differ");
    SignedPermMatrix r{dim, std::vector<std::size_t>(dim), std::vector<int>(dim), total_degree};
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t mid = other.row[col];
        r.row[col] = row[mid];
        r.sign[col] = sign[mid] * other.sign[col];
    }
    return r;
}

SignedPermMatrix perm_action(const Perm& sigma, const GradedVectorSpace& space,
                             unsigned long m, const graded::Twist<Int>& twist,
                             std::size_t cap) {
    if (sigma.size() != m) throw type_error("perm_action: permutation degree != m");
    const bool signs = koszul_signs_active(twist);
    const std::size_t d = space.dim();

    std::size_t dim = 1;
    for (unsigned long i = 0; i < m; ++i) {
        if (d != 0 && dim > cap / d)
            throw enumeration_limit_error("perm_action: tensor dimension exceeds cap " +
                                          std::to_string(cap));
        dim *= d;
    }

    SignedPermMatrix matrix{dim, std::vector<std::size_t>(dim), std::vector<int>(dim),
                            std::vector<long>(dim)};
    std::vector<std::size_t> index(m, 0);   // (i_1..i_m), last slot fastest
    std::vector<long> degrees(m, 0);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (std::size_t slot = m; slot-- > 0;) {
            index[slot] = rest % d;
            rest /= d;
        }
        long total = 0;
        for (std::size_t slot = 0; slot < m; ++slot) {
            degrees[slot] = space.degrees[index[slot]];
            total += degrees[slot];
        }
        // image tuple j with j_{sigma(a)} = i_a
        std::vector<std::size_t> image(m, 0);
        for (std::size_t a = 0; a < m; ++a) image[sigma[a]] = index[a];
        std::size_t target = 0;
        for (std::size_t slot = 0; slot < m; ++slot) target = target * d + image[slot];

        matrix.row[col] = target;
        matrix.sign[col] = signs ? koszul_sign(sigma, degrees) : 1;
        matrix.total_degree[col] = total;
    }
    return matrix;
}

Int naive_trace(const SignedPermMatrix& matrix) {
    Int trace = 0;
    for (std::size_t col = 0; col < matrix.dim; ++col)
        if (matrix.row[col] == col) trace += matrix.sign[col];
    return trace;
}

Int categorical_trace(const SignedPermMatrix& matrix, long total_degree,
                      const graded::Twist<Int>& twist) {
    const bool negate = koszul_signs_active(twist) && (total_degree & 1l);
    const Int trace = naive_trace(matrix);
    return negate ? Int(-trace) : trace;
}

Int categorical_trace(const SignedPermMatrix& matrix, const graded::Twist<Int>& twist) {
    const bool signs = koszul_signs_active(twist);
    Int trace = 0;
    for (std::size_t col = 0; col < matrix.dim; ++col) {
        if (matrix.row[col] != col) continue;
        if (signs && (matrix.total_degree[col] & 1l))
            trace -= matrix.sign[col];
        else
            trace += matrix.sign[col];
    }
    return trace;
}

Rat projector_dim(const GradedVectorSpace& space, unsigned long m,
                  const graded::Twist<Int>& twist, std::size_t cap) {
    Int sum = 0;
    for (const auto& sigma : all_permutations(m))
        sum += categorical_trace(perm_action(sigma, space, m, twist, cap), twist);
    Rat average(sum, factorial(m));
    average.canonicalize();
    return average;
}

}  // namespace twistchar::oracle
