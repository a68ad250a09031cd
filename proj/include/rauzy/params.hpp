#pragma once

#include <stdexcept>
#include <string>

namespace rauzy {

/// Thrown for invalid user input (bad parameters, malformed walks).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computed object fails a consistency check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The four shapes the contact graph takes.
enum class Case { AGtB, BEq1, AEqB, A1B1 };

/// Parameter pair (a, b) of the substitution 1 -> 1^a 2, 2 -> 1^b 3, 3 -> 1.
struct Params {
    int a = 1;
    int b = 1;

    Params() = default;
    Params(int a_, int b_) : a(a_), b(b_)
    {
        if (b < 1 || a < b)
            throw UsageError("parameters must satisfy a >= b >= 1, got (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
    }

    /// a > b with b >= 2; a >= 2 with b = 1; a = b >= 2; a = b = 1.
    Case contact_case() const
    {
        if (a == 1 && b == 1) return Case::A1B1;
        if (a == b) return Case::AEqB;
        if (b == 1) return Case::BEq1;
        return Case::AGtB;
    }

    bool operator==(const Params&) const = default;
};

} // namespace rauzy
