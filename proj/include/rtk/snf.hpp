#pragma once

#include <string>
#include <vector>

namespace rtk {

// Dense integer matrix, row-major.  Small sizes only.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Finitely generated abelian group in invariant-factor form.
// torsion entries are > 1 and each divides the next.
struct AbelianGroup {
    int rank = 0;
    std::vector<long long> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const = default;
    std::string str() const;
};

// Diagonal of the Smith normal form of m (nonzero entries, each dividing the next).
std::vector<long long> smith_diagonal(IntMat m);

// Cokernel Z^cols / (row lattice of m), i.e. the abelian group presented by m
// with one generator per column and one relation per row.
AbelianGroup cokernel(const IntMat& m);

// Rank of m over Q.
int rank_of(IntMat m);

// Solve x * m = v over Z (x: 1 x rows).  Returns empty if no integer solution.
std::vector<long long> solve_left(const IntMat& m, const std::vector<long long>& v);

}  // namespace rtk
