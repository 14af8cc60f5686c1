#include "unitforge/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace unitforge {

long SnfResult::rank() const {
    long r = 0;
    for (const Int& d : diagonal)
        if (d != 0) ++r;
    return r;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> f;
    for (const Int& d : diagonal)
        if (d > 1) f.push_back(d);
    return f;
}

namespace {

struct Worker {
    IntMatrix a, u, v;

    explicit Worker(const IntMatrix& m)
        : a(m), u(IntMatrix::identity(m.rows)), v(IntMatrix::identity(m.cols)) {}

    // Row operations mirror into u (left factor), column operations into v.
    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a.a[i], a.a[j]);
        std::swap(u.a[i], u.a[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : a.a) std::swap(row[i], row[j]);
        for (auto& row : v.a) std::swap(row[i], row[j]);
    }
    void add_row(int dst, int src, const Int& f) {  // row_dst += f * row_src
        for (int j = 0; j < a.cols; ++j) a.a[dst][j] += f * a.a[src][j];
        for (int j = 0; j < u.cols; ++j) u.a[dst][j] += f * u.a[src][j];
    }
    void add_col(int dst, int src, const Int& f) {
        for (int i = 0; i < a.rows; ++i) a.a[i][dst] += f * a.a[i][src];
        for (int i = 0; i < v.rows; ++i) v.a[i][dst] += f * v.a[i][src];
    }
    void negate_row(int i) {
        for (auto& x : a.a[i]) x = -x;
        for (auto& x : u.a[i]) x = -x;
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < a.rows; ++i)
            for (int j = t; j < a.cols; ++j) {
                if (a.a[i][j] == 0) continue;
                Int mag = abs(a.a[i][j]);
                if (!found || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void run() {
        const int steps = std::min(a.rows, a.cols);
        for (int t = 0; t < steps; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                // Clear column t below the pivot, then row t right of it.
                bool disturbed = false;
                for (int i = t + 1; i < a.rows; ++i) {
                    if (a.a[i][t] == 0) continue;
                    Int q = a.a[i][t] / a.a[t][t];  // truncated: |rem| < |pivot|
                    if (q != 0) add_row(i, t, -q);
                    if (a.a[i][t] != 0) {
                        swap_rows(t, i);  // strictly smaller pivot
                        disturbed = true;
                    }
                }
                if (disturbed) continue;
                for (int j = t + 1; j < a.cols; ++j) {
                    if (a.a[t][j] == 0) continue;
                    Int q = a.a[t][j] / a.a[t][t];
                    if (q != 0) add_col(j, t, -q);
                    if (a.a[t][j] != 0) {
                        swap_cols(t, j);
                        disturbed = true;
                    }
                }
                if (disturbed) continue;
                // Pivot must divide the rest of the block to keep the chain.
                int bi = -1;
                for (int i = t + 1; i < a.rows && bi < 0; ++i)
                    for (int j = t + 1; j < a.cols; ++j)
                        if (a.a[i][j] % a.a[t][t] != 0) {
                            bi = i;
                            break;
                        }
                if (bi < 0) break;
                add_row(t, bi, 1);
            }
            if (a.a[t][t] < 0) negate_row(t);
        }
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    w.run();

    SnfResult res;
    const int steps = std::min(m.rows, m.cols);
    res.diagonal.resize(steps);
    for (int t = 0; t < steps; ++t) res.diagonal[t] = w.a.a[t][t];
    res.u = std::move(w.u);
    res.v = std::move(w.v);

    // Certificates: U*M*V is the diagonal and both transforms are unimodular.
    IntMatrix check = matmul(matmul(res.u, m), res.v);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Int expect = (i == j && i < steps) ? res.diagonal[i] : Int(0);
            if (check.a[i][j] != expect)
                throw std::logic_error("smith_normal_form: U*M*V certificate failed");
        }
    Int du = det_bareiss(res.u);
    Int dv = det_bareiss(res.v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        throw std::logic_error("smith_normal_form: transform is not unimodular");
    for (int t = 0; t + 1 < steps; ++t) {
        if (res.diagonal[t] == 0 && res.diagonal[t + 1] != 0)
            throw std::logic_error("smith_normal_form: zero before nonzero entry");
        if (res.diagonal[t] != 0 && res.diagonal[t + 1] % res.diagonal[t] != 0)
            throw std::logic_error("smith_normal_form: divisibility chain broken");
    }
    return res;
}

IntMatrix relator_matrix(const Presentation& p) {
    IntMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.generators.size()));
    for (size_t r = 0; r < p.relators.size(); ++r) {
        std::vector<long> sums = p.exponent_sums(p.relators[r]);
        for (size_t g = 0; g < sums.size(); ++g) m.a[r][g] = sums[g];
    }
    return m;
}

AbelianGroupType abelianization(const Presentation& p) {
    if (p.generators.empty()) return AbelianGroupType(0, {});
    if (p.relators.empty())
        return AbelianGroupType(static_cast<long>(p.generators.size()), {});
    SnfResult snf = smith_normal_form(relator_matrix(p));
    long free_rank = static_cast<long>(p.generators.size()) - snf.rank();
    return AbelianGroupType(free_rank, snf.invariant_factors());
}

}  // namespace unitforge
