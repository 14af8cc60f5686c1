#include "unitforge/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace unitforge {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.a[i][k] == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return r;
}

Int det_bareiss(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    const int n = m.rows;
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m.a[i][k] != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m.a[pivot], m.a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m.a[i][j] * m.a[k][k] - m.a[i][k] * m.a[k][j];
                mpz_divexact(m.a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.a[i][k] = 0;
        }
        prev = m.a[k][k];
    }
    return sign > 0 ? m.a[n - 1][n - 1] : Int(-m.a[n - 1][n - 1]);
}

std::optional<std::vector<Int>> solve_linear_integral(const IntMatrix& A,
                                                      const std::vector<Int>& b) {
    if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve: shape mismatch");
    const int n = A.rows;
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = A.a[i][j];
        m[i][n] = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;  // singular
        std::swap(m[pivot], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (int j = col; j <= n; ++j) m[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            mpq_class f = m[i][col];
            for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i) {
        mpq_class v = m[i][n];
        v.canonicalize();
        if (v.get_den() != 1) return std::nullopt;  // rational but not integral
        x[i] = v.get_num();
    }
    return x;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long mod_pow(long base, long exp, long mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    if (mod == 1) return 0;
    long r = 1;
    long b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return r;
}

long mod_inverse(long a, long n) {
    if (n <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (n == 1) return 0;
    long t = 0, newt = 1;
    long r = n, newr = ((a % n) + n) % n;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((t % n) + n) % n;
}

long multiplicative_order(long a, long n) {
    if (n == 1) return 1;
    long x = ((a % n) + n) % n;
    if (gcd_long(x, n) != 1)
        throw std::invalid_argument("multiplicative_order: not a unit mod n");
    long ord = 1;
    long v = x;
    while (v != 1) {
        v = v * x % n;
        ++ord;
    }
    return ord;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace unitforge
