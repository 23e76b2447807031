#include "rtk/snf.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rtk {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (long long t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[i] += k * row[j]
void add_row(IntMat& m, int i, int j, long long k) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) += k * m.at(j, c);
}

void add_col(IntMat& m, int i, int j, long long k) {
    for (int r = 0; r < m.rows; ++r) m.at(r, i) += k * m.at(r, j);
}

}  // namespace

std::vector<long long> smith_diagonal(IntMat m) {
    std::vector<long long> diag;
    int t = 0;
    while (t < m.rows && t < m.cols) {
        // find pivot: nonzero entry of minimal |value| in the remaining block
        int pr = -1, pc = -1;
        long long best = 0;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                long long v = std::llabs(m.at(r, c));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // block is zero
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        bool clean = true;
        for (int r = t + 1; r < m.rows; ++r) {
            long long q = m.at(r, t) / m.at(t, t);
            if (q != 0) add_row(m, r, t, -q);
            if (m.at(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < m.cols; ++c) {
            long long q = m.at(t, c) / m.at(t, t);
            if (q != 0) add_col(m, c, t, -q);
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick pivot

        // divisibility: pivot must divide everything below-right
        long long p = std::llabs(m.at(t, t));
        bool divides = true;
        for (int r = t + 1; r < m.rows && divides; ++r)
            for (int c = t + 1; c < m.cols && divides; ++c)
                if (m.at(r, c) % p != 0) {
                    add_row(m, t, r, 1);
                    divides = false;
                }
        if (!divides) continue;

        diag.push_back(p);
        ++t;
    }
    return diag;
}

AbelianGroup cokernel(const IntMat& m) {
    std::vector<long long> d = smith_diagonal(m);
    AbelianGroup g;
    g.rank = m.cols - static_cast<int>(d.size());
    for (long long v : d)
        if (v > 1) g.torsion.push_back(v);
    return g;
}

int rank_of(IntMat m) { return static_cast<int>(smith_diagonal(std::move(m)).size()); }

std::vector<long long> solve_left(const IntMat& m, const std::vector<long long>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("solve_left: size mismatch");
    // Track row operations: work on [m | I], column ops on m must also hit v.
    IntMat w = m;
    IntMat u(m.rows, m.rows);  // u * m_original = w (row ops)
    for (int i = 0; i < m.rows; ++i) u.at(i, i) = 1;
    std::vector<long long> rhs = v;

    int t = 0;
    while (t < w.rows && t < w.cols) {
        int pr = -1, pc = -1;
        long long best = 0;
        for (int r = t; r < w.rows; ++r)
            for (int c = t; c < w.cols; ++c) {
                long long x = std::llabs(w.at(r, c));
                if (x != 0 && (best == 0 || x < best)) {
                    best = x;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        swap_rows(w, t, pr);
        swap_rows(u, t, pr);
        swap_cols(w, t, pc);
        std::swap(rhs[t], rhs[pc]);

        bool clean = true;
        for (int r = t + 1; r < w.rows; ++r) {
            long long q = w.at(r, t) / w.at(t, t);
            if (q != 0) {
                add_row(w, r, t, -q);
                add_row(u, r, t, -q);
            }
            if (w.at(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < w.cols; ++c) {
            long long q = w.at(t, c) / w.at(t, t);
            if (q != 0) {
                add_col(w, c, t, -q);
                rhs[c] -= q * rhs[t];
            }
            if (w.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;
        ++t;
    }
    // w is diagonal on the first t rows/cols (up to zero rows); solve x * w = rhs.
    std::vector<long long> x(w.rows, 0);
    for (int i = 0; i < t; ++i) {
        long long d = w.at(i, i);
        if (rhs[i] % d != 0) return {};
        x[i] = rhs[i] / d;
    }
    for (int c = t; c < w.cols; ++c)
        if (rhs[c] != 0) return {};
    // translate back through row ops: solution to y * m = v is y = x * u.
    std::vector<long long> y(m.rows, 0);
    for (int j = 0; j < m.rows; ++j)
        for (int i = 0; i < w.rows; ++i) y[j] += x[i] * u.at(i, j);
    return y;
}

}  // namespace rtk
