#include "unitforge/cyclo.hpp"

#include <sstream>
#include <stdexcept>

namespace unitforge {

namespace {

void require_same_ring(const RealCycloElement& a, const RealCycloElement& b) {
    if (a.ring != b.ring)
        throw std::invalid_argument("cyclotomic elements live over different rings");
}

}  // namespace

bool RealCycloElement::is_zero() const {
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

RealCycloElement RealCycloElement::operator+(const RealCycloElement& o) const {
    require_same_ring(*this, o);
    RealCycloElement r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

RealCycloElement RealCycloElement::operator-(const RealCycloElement& o) const {
    require_same_ring(*this, o);
    RealCycloElement r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

RealCycloElement RealCycloElement::operator-() const {
    RealCycloElement r = *this;
    for (Int& x : r.c) x = -x;
    return r;
}

RealCycloElement RealCycloElement::operator*(const RealCycloElement& o) const {
    require_same_ring(*this, o);
    const size_t d = c.size();
    std::vector<Int> prod(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += c[i] * o.c[j];
    }
    return ring->from_coeffs(std::move(prod));
}

bool RealCycloElement::operator==(const RealCycloElement& o) const {
    require_same_ring(*this, o);
    return c == o.c;
}

std::string RealCycloElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int v = c[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0)
            os << v.get_str();
        else if (v == 1)
            os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
        else
            os << v.get_str() << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return first ? "0" : os.str();
}

RealCycloRing::RealCycloRing(int p) : p_(p) {
    if (p < 3 || p > 31 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("RealCycloRing: p must be an odd prime at most 31");
    degree_ = (p - 1) / 2;

    // V_k(x) = zeta^k + zeta^-k as a polynomial in x = z.
    std::vector<std::vector<Int>> v(degree_ + 1);
    v[0] = {2};
    if (degree_ >= 1) v[1] = {0, 1};
    for (int k = 2; k <= degree_; ++k) {
        std::vector<Int> next(k + 1);
        for (size_t i = 0; i < v[k - 1].size(); ++i) next[i + 1] = v[k - 1][i];
        for (size_t i = 0; i < v[k - 2].size(); ++i) next[i] -= v[k - 2][i];
        v[k] = std::move(next);
    }
    psi_.assign(degree_ + 1, 0);
    psi_[0] = 1;
    for (int k = 1; k <= degree_; ++k)
        for (size_t i = 0; i < v[k].size(); ++i) psi_[i] += v[k][i];
    if (psi_[degree_] != 1) throw std::logic_error("psi is not monic");

    // Residue-map consistency: z = 2 mod Q forces psi(2) = 0 mod p.
    Int at2 = 0, pow = 1;
    for (int i = 0; i <= degree_; ++i) {
        at2 += psi_[i] * pow;
        pow *= 2;
    }
    if (at2 % p_ != 0) throw std::logic_error("psi(2) is not divisible by p");
}

std::vector<Int> RealCycloRing::reduce(std::vector<Int> poly) const {
    for (int i = static_cast<int>(poly.size()) - 1; i >= degree_; --i) {
        Int coef = poly[i];
        if (coef == 0) continue;
        poly[i] = 0;
        for (int j = 0; j < degree_; ++j) poly[i - degree_ + j] -= coef * psi_[j];
    }
    poly.resize(degree_);
    return poly;
}

RealCycloElement RealCycloRing::zero() const {
    return RealCycloElement{this, std::vector<Int>(degree_)};
}

RealCycloElement RealCycloRing::one() const { return from_int(1); }

RealCycloElement RealCycloRing::z() const { return from_coeffs({0, 1}); }

RealCycloElement RealCycloRing::from_int(const Int& v) const {
    std::vector<Int> c(degree_);
    c[0] = v;
    return RealCycloElement{this, std::move(c)};
}

RealCycloElement RealCycloRing::from_coeffs(std::vector<Int> coeffs) const {
    std::vector<Int> c = reduce(std::move(coeffs));
    c.resize(degree_);
    return RealCycloElement{this, std::move(c)};
}

int RealCycloRing::residue(const RealCycloElement& x) const {
    if (x.ring != this) throw std::invalid_argument("residue: wrong ring");
    Int acc = 0, pow = 1;
    for (int i = 0; i < degree_; ++i) {
        acc += x.c[i] * pow;
        pow *= 2;
    }
    Int r = acc % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r.get_si());
}

IntMatrix RealCycloRing::multiplication_matrix(const RealCycloElement& x) const {
    IntMatrix m(degree_, degree_);
    RealCycloElement col = x;
    for (int j = 0; j < degree_; ++j) {
        for (int i = 0; i < degree_; ++i) m.a[i][j] = col.c[i];
        if (j + 1 < degree_) {
            // multiply by z: shift and reduce
            std::vector<Int> shifted(degree_ + 1);
            for (int i = 0; i < degree_; ++i) shifted[i + 1] = col.c[i];
            col = from_coeffs(std::move(shifted));
        }
    }
    return m;
}

Int RealCycloRing::norm(const RealCycloElement& x) const {
    if (x.ring != this) throw std::invalid_argument("norm: wrong ring");
    return det_bareiss(multiplication_matrix(x));
}

bool RealCycloRing::is_unit(const RealCycloElement& x) const {
    Int n = norm(x);
    return n == 1 || n == -1;
}

RealCycloElement RealCycloRing::inverse(const RealCycloElement& x) const {
    if (x.ring != this) throw std::invalid_argument("inverse: wrong ring");
    IntMatrix m = multiplication_matrix(x);
    std::vector<Int> e0(degree_);
    e0[0] = 1;
    auto sol = solve_linear_integral(m, e0);
    if (!sol) throw std::domain_error("inverse: not a unit of Z[z]");
    RealCycloElement y{this, std::move(*sol)};
    if (!(x * y - one()).is_zero())
        throw std::logic_error("cyclotomic inverse failed verification");
    return y;
}

}  // namespace unitforge
