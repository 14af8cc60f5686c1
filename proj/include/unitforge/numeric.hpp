#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace unitforge {

/// Arbitrary-precision integer used for all ring coefficients and matrices.
using Int = mpz_class;

/// Dense integer matrix, row major. Small sizes only (at most ~64x64).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Int>> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Int>(c)) {}

    static IntMatrix identity(int n);

    Int& at(int i, int j) { return a[i][j]; }
    const Int& at(int i, int j) const { return a[i][j]; }

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);

/// Determinant over Z by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMatrix m);

/// Solve A x = b exactly over Q; returns the solution only when it is unique
/// and integral, std::nullopt otherwise.
std::optional<std::vector<Int>> solve_linear_integral(const IntMatrix& A,
                                                      const std::vector<Int>& b);

// Small modular helpers on machine integers (moduli here never exceed 64).
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);
long mod_pow(long base, long exp, long mod);
long mod_inverse(long a, long n);
long multiplicative_order(long a, long n);
bool is_prime(long n);

}  // namespace unitforge
