#include "cobcalc/snf.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cobcalc {

long long to_ll(mint x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("matrix entry does not fit in 64 bits");
    return static_cast<long long>(x);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            mint s = at(i, k);
            if (s == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                mint prod, sum;
                if (__builtin_mul_overflow(s, o.at(k, j), &prod) ||
                    __builtin_add_overflow(r.at(i, j), prod, &sum))
                    throw std::overflow_error("IntMatrix: product exceeds 128 bits; compare modularly");
                r.at(i, j) = sum;
            }
        }
    return r;
}

long long IntMatrix::max_abs_entry_bits() const {
    long double m = 1;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            long double e = static_cast<long double>(at(i, j));
            if (e < 0) e = -e;
            if (e > m) m = e;
        }
    return static_cast<long long>(std::log2(m)) + 1;
}

namespace {

const long long kPrimes[] = {
    1073741789, 1073741783, 1073741741, 1073741723, 1073741719, 1073741717,
    1073741689, 1073741671, 1073741663, 1073741651, 1073741621, 1073741567,
    1073741527, 1073741477, 1073741467, 1073741441, 1073741419, 1073741399,
    1073741387, 1073741381, 1073741371, 1073741329, 1073741311, 1073741309,
};

std::vector<long long> reduce_mod(const IntMatrix& m, long long p) {
    std::vector<long long> w(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            w[static_cast<size_t>(i) * m.cols() + j] = static_cast<long long>(((m.at(i, j) % p) + p) % p);
    return w;
}

}  // namespace

bool product_chain_equals(std::initializer_list<const IntMatrix*> factors, const IntMatrix& rhs) {
    if (factors.size() == 0) throw std::invalid_argument("product_chain_equals: empty chain");
    // Entry bound of the exact product, in bits.
    long double bits = 1;
    int inner = 0;
    for (const IntMatrix* f : factors) {
        bits += f->max_abs_entry_bits();
        bits += std::log2(static_cast<long double>(std::max(1, inner)));
        inner = f->cols();
    }
    bits = std::max(bits, static_cast<long double>(rhs.max_abs_entry_bits()));

    long double covered = 0;
    for (long long p : kPrimes) {
        // Fold the chain left to right mod p.
        auto it = factors.begin();
        const IntMatrix* first = *it;
        std::vector<long long> acc = reduce_mod(*first, p);
        int rows = first->rows(), cols = first->cols();
        for (++it; it != factors.end(); ++it) {
            const IntMatrix* f = *it;
            if (f->rows() != cols) throw std::invalid_argument("product_chain_equals: shape mismatch");
            std::vector<long long> b = reduce_mod(*f, p);
            std::vector<long long> next(static_cast<size_t>(rows) * f->cols(), 0);
            for (int i = 0; i < rows; ++i)
                for (int k = 0; k < cols; ++k) {
                    long long a = acc[static_cast<size_t>(i) * cols + k];
                    if (a == 0) continue;
                    for (int j = 0; j < f->cols(); ++j) {
                        long long& cell = next[static_cast<size_t>(i) * f->cols() + j];
                        cell = static_cast<long long>(
                            (cell + __int128(a) * b[static_cast<size_t>(k) * f->cols() + j]) % p);
                    }
                }
            acc = std::move(next);
            cols = f->cols();
        }
        if (rows != rhs.rows() || cols != rhs.cols()) return false;
        std::vector<long long> want = reduce_mod(rhs, p);
        if (acc != want) return false;
        covered += std::log2(static_cast<long double>(p));
        if (covered > bits + 2) return true;
    }
    throw std::logic_error("product_chain_equals: entry bound beyond prime coverage");
}

namespace {

long long det_mod(const IntMatrix& m, long long p) {
    const int n = m.rows();
    std::vector<long long> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[static_cast<size_t>(i) * n + j] = static_cast<long long>(((m.at(i, j) % p) + p) % p);
    auto e = [&](int i, int j) -> long long& { return w[static_cast<size_t>(i) * n + j]; };
    auto mulmod = [&](long long a, long long b) { return static_cast<long long>(__int128(a) * b % p); };
    auto powmod = [&](long long a, long long k) {
        long long r = 1;
        while (k) {
            if (k & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            k >>= 1;
        }
        return r;
    };
    long long det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (e(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            det = p - det;
        }
        det = mulmod(det, e(k, k));
        long long inv = powmod(e(k, k), p - 2);
        for (int i = k + 1; i < n; ++i) {
            long long f = mulmod(e(i, k), inv);
            if (f == 0) continue;
            for (int j = k; j < n; ++j) e(i, j) = ((e(i, j) - mulmod(f, e(k, j))) % p + p) % p;
        }
    }
    return det % p;
}

}  // namespace

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix: unimodularity of non-square matrix");
    const int n = rows_;
    if (n == 0) return true;
    // Hadamard bound in bits.
    long double bits = 0;
    for (int i = 0; i < n; ++i) {
        long double s = 0;
        for (int j = 0; j < n; ++j) {
            long double e = static_cast<long double>(at(i, j));
            s += e * e;
        }
        if (s < 1) s = 1;
        bits += 0.5L * std::log2(s);
    }
    long double covered = 0;
    int sign = 0;  // +1 or -1 once fixed
    for (long long p : kPrimes) {
        long long d = det_mod(*this, p);
        int s;
        if (d == 1)
            s = 1;
        else if (d == p - 1)
            s = -1;
        else
            return false;
        if (sign == 0) sign = s;
        if (sign != s) return false;
        covered += std::log2(static_cast<long double>(p));
        if (covered > bits + 1) return true;  // product of moduli exceeds |det|
    }
    throw std::logic_error("is_unimodular: Hadamard bound beyond prime coverage");
}

namespace {

// Division with symmetric remainder |a - q*b| <= |b|/2; keeps the transform
// entries from compounding during elimination.
mint rounded_div(mint a, mint b) {
    mint q = a / b, r = a % b;
    mint ar = r < 0 ? -r : r;
    mint ab = b < 0 ? -b : b;
    if (2 * ar > ab) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

// Row ops on `a` are mirrored on `u`; column ops on `a` are mirrored on `v`
// (and inverted on `v_inv`), so u * input * v == a holds at all times.
struct Worker {
    IntMatrix a, u, v, v_inv;

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
        for (int j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(c1, j), v_inv.at(c2, j));
    }
    void add_row(int dst, int src, mint f) {  // row dst += f * row src
        if (f == 0) return;
        for (int j = 0; j < a.cols(); ++j) a.at(dst, j) += f * a.at(src, j);
        for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += f * u.at(src, j);
    }
    void add_col(int dst, int src, mint f) {  // col dst += f * col src
        if (f == 0) return;
        for (int i = 0; i < a.rows(); ++i) a.at(i, dst) += f * a.at(i, src);
        for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += f * v.at(i, src);
        // (V * E)^-1 = E^-1 * V^-1; E^-1 subtracts, acting on rows of v_inv.
        for (int j = 0; j < v_inv.cols(); ++j) v_inv.at(src, j) -= f * v_inv.at(dst, j);
    }
    void negate_row(int r) {
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
        for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
    // Unimodular 2x2 block ops: rows (r1, r2) <- (p*r1 + q*r2, r*r1 + s*r2).
    void row_combine(int r1, int r2, mint p, mint q, mint r, mint s) {
        for (int j = 0; j < a.cols(); ++j) {
            mint x = a.at(r1, j), y = a.at(r2, j);
            a.at(r1, j) = p * x + q * y;
            a.at(r2, j) = r * x + s * y;
        }
        for (int j = 0; j < u.cols(); ++j) {
            mint x = u.at(r1, j), y = u.at(r2, j);
            u.at(r1, j) = p * x + q * y;
            u.at(r2, j) = r * x + s * y;
        }
    }
    // Columns (c1, c2) <- (p*c1 + q*c2, r*c1 + s*c2) with ps - qr = 1.
    void col_combine(int c1, int c2, mint p, mint q, mint r, mint s) {
        for (int i = 0; i < a.rows(); ++i) {
            mint x = a.at(i, c1), y = a.at(i, c2);
            a.at(i, c1) = p * x + q * y;
            a.at(i, c2) = r * x + s * y;
        }
        for (int i = 0; i < v.rows(); ++i) {
            mint x = v.at(i, c1), y = v.at(i, c2);
            v.at(i, c1) = p * x + q * y;
            v.at(i, c2) = r * x + s * y;
        }
        // Inverse acts on the rows of v_inv: F^-1 = [[s, -r], [-q, p]].
        for (int j = 0; j < v_inv.cols(); ++j) {
            mint x = v_inv.at(c1, j), y = v_inv.at(c2, j);
            v_inv.at(c1, j) = s * x - r * y;
            v_inv.at(c2, j) = -q * x + p * y;
        }
    }

    // Diagonalize the trailing block starting at `from`; returns the index of
    // the first zero diagonal entry (the rank).
    int diagonalize(int from) {
        const int n = std::min(a.rows(), a.cols());
        int t = from;
        for (; t < n; ++t) {
            for (;;) {
                // Pivot the smallest nonzero entry of the block to (t, t).
                int pr = -1, pc = -1;
                mint best = 0;
                for (int i = t; i < a.rows(); ++i)
                    for (int j = t; j < a.cols(); ++j) {
                        mint x = a.at(i, j);
                        if (x == 0) continue;
                        mint ax = x < 0 ? -x : x;
                        if (pr < 0 || ax < best) { best = ax; pr = i; pc = j; }
                    }
                if (pr < 0) return t;
                swap_rows(t, pr);
                swap_cols(t, pc);
                mint p = a.at(t, t);
                bool clean = true;
                for (int i = t + 1; i < a.rows(); ++i) {
                    mint q = rounded_div(a.at(i, t), p);
                    if (q != 0) add_row(i, t, -q);
                    if (a.at(i, t) != 0) clean = false;
                }
                for (int j = t + 1; j < a.cols(); ++j) {
                    mint q = rounded_div(a.at(t, j), p);
                    if (q != 0) add_col(j, t, -q);
                    if (a.at(t, j) != 0) clean = false;
                }
                if (clean) break;
            }
        }
        return t;
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    Worker w;
    w.a = m;
    w.u = IntMatrix::identity(m.rows());
    w.v = IntMatrix::identity(m.cols());
    w.v_inv = IntMatrix::identity(m.cols());

    int rank = w.diagonalize(0);

    for (int i = 0; i < rank; ++i)
        if (w.a.at(i, i) < 0) w.negate_row(i);

    // Enforce d_i | d_{i+1} by the 2x2 identity
    //   [[x, y], [-dj/g, di/g]] diag(di, dj) [[1, -y*dj/g], [1, x*di/g]]
    //     = diag(g, lcm)
    // with x*di + y*dj = g; multipliers stay below the entries involved.
    for (;;) {
        int bad = -1;
        for (int i = 0; i + 1 < rank; ++i)
            if (w.a.at(i + 1, i + 1) % w.a.at(i, i) != 0) { bad = i; break; }
        if (bad < 0) break;
        mint di = w.a.at(bad, bad), dj = w.a.at(bad + 1, bad + 1);
        mint x = 0, y = 0;
        mint g = [&]() {  // extended gcd
            mint r0 = di, r1 = dj, x0 = 1, x1 = 0;
            while (r1 != 0) {
                mint q = r0 / r1;
                std::swap(r0 -= q * r1, r1);
                std::swap(x0 -= q * x1, x1);
            }
            x = x0;
            return r0;
        }();
        y = (g - x * di) / dj;
        w.row_combine(bad, bad + 1, x, y, -dj / g, di / g);
        w.col_combine(bad, bad + 1, 1, 1, -y * dj / g, x * di / g);
    }

    SmithResult res;
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.v_inv = std::move(w.v_inv);
    res.d = std::move(w.a);
    res.rank = rank;
    return res;
}

}  // namespace cobcalc
