#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cobcalc {

// Entry type of exact matrices. Unimodular SNF transforms of small integer
// matrices routinely exceed 64 bits, so everything runs in 128.
using mint = __int128;

// Checked narrowing for values leaving the matrix layer.
long long to_ll(mint x);

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mint& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    mint at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Certifies |det| == 1 exactly: modular determinants over enough primes
    // to cover the Hadamard bound. Requires a square matrix.
    bool is_unimodular() const;

    long long max_abs_entry_bits() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mint> a_;
};

struct SmithResult {
    IntMatrix u;       // rows x rows, unimodular
    IntMatrix d;       // diagonal, d1 | d2 | ..., all >= 0
    IntMatrix v;       // cols x cols, unimodular
    IntMatrix v_inv;   // inverse of v, maintained alongside
    int rank = 0;      // number of nonzero diagonal entries
};

// U * m * V = D with U, V unimodular and the divisibility chain on D.
SmithResult smith_normal_form(const IntMatrix& m);

// Exact equality of a matrix product with rhs. Products of SNF transforms
// can overflow even 128 bits before their terms cancel, so the identity is
// evaluated modulo enough primes to cover the entry bound.
bool product_chain_equals(std::initializer_list<const IntMatrix*> factors, const IntMatrix& rhs);

}  // namespace cobcalc
