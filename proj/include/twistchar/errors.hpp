#pragma once

#include <stdexcept>
#include <string>

namespace twistchar {

// A requested enumeration would exceed the configured size cap.
class enumeration_limit_error : public std::runtime_error {
public:
    explicit enumeration_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Operands live in incompatible rings / have incompatible shapes.
class type_error : public std::invalid_argument {
public:
    explicit type_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Series inversion requested for a non-unit constant term.
class inversion_error : public std::domain_error {
public:
    explicit inversion_error(const std::string& what)
        : std::domain_error(what) {}
};

// A group average failed to cancel to an integer. This indicates a bug,
// not bad input: every averaging formula in this library is a character
// sum whose value is an integer.
class non_integral_error : public std::logic_error {
public:
    explicit non_integral_error(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace twistchar
