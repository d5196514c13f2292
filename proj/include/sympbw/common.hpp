#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sympbw {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an input violates an operation's contract (bad root, tableau
/// outside the polytope, reverse-admissible minor passed to a relation, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant fails. Seeing one is a bug.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Letters are 1..2n; the bar of i is 2n+1-i.
constexpr int bar(int n, int i) { return 2 * n + 1 - i; }
constexpr bool is_barred(int n, int v) { return v > n; }

/// Human-readable letter: "3" or "3'" (ascii) / "3̄" (combining overline).
inline std::string letter(int n, int v, bool ascii = true) {
    if (!is_barred(n, v)) return std::to_string(v);
    return std::to_string(bar(n, v)) + (ascii ? "'" : "̄");
}

inline std::string letters(int n, const std::vector<int>& seq, bool ascii = true) {
    std::string out;
    for (size_t r = 0; r < seq.size(); ++r) {
        if (r) out += ',';
        out += letter(n, seq[r], ascii);
    }
    return out;
}

}  // namespace sympbw
