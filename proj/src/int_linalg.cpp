#include "tilingforge/int_linalg.hpp"

#include <utility>

namespace tilingforge {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

namespace {

// Columns (p, q) of m <- (s*p + t*q, u*p + v*q).
void mix_cols(IntMatrix& m, std::size_t p, std::size_t q, const mpz_class& s, const mpz_class& t,
              const mpz_class& u, const mpz_class& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class a = m(r, p), b = m(r, q);
        m(r, p) = s * a + t * b;
        m(r, q) = u * a + v * b;
    }
}

// Rows (p, q) of m <- (s*p + t*q, u*p + v*q).
void mix_rows(IntMatrix& m, std::size_t p, std::size_t q, const mpz_class& s, const mpz_class& t,
              const mpz_class& u, const mpz_class& v) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_class a = m(p, c), b = m(q, c);
        m(p, c) = s * a + t * b;
        m(q, c) = u * a + v * b;
    }
}

struct Bezout {
    mpz_class g, s, t;  // g = s*x + t*y
};

Bezout bezout(const mpz_class& x, const mpz_class& y) {
    Bezout b;
    mpz_gcdext(b.g.get_mpz_t(), b.s.get_mpz_t(), b.t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return b;
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a) {
    ColumnEchelon out{a, IntMatrix::identity(a.cols()), IntMatrix::identity(a.cols()), 0};
    IntMatrix& m = out.reduced;
    std::size_t pc = 0;
    for (std::size_t i = 0; i < m.rows() && pc < m.cols(); ++i) {
        for (std::size_t j = pc + 1; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            const mpz_class x = m(i, pc), y = m(i, j);
            const Bezout b = bezout(x, y);
            const mpz_class xg = x / b.g, yg = y / b.g;
            // M = [[s, -y/g], [t, x/g]] on columns (pc, j); det M = 1.
            mix_cols(m, pc, j, b.s, b.t, -yg, xg);
            mix_cols(out.transform, pc, j, b.s, b.t, -yg, xg);
            mix_rows(out.inverse_transform, pc, j, xg, yg, -b.t, b.s);
        }
        if (m(i, pc) != 0) ++pc;
    }
    out.rank = pc;
    return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const ColumnEchelon ce = column_echelon(a);
    IntMatrix k(a.cols(), a.cols() - ce.rank);
    for (std::size_t r = 0; r < a.cols(); ++r)
        for (std::size_t c = ce.rank; c < a.cols(); ++c) k(r, c - ce.rank) = ce.transform(r, c);
    return k;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), 0};
    IntMatrix& d = out.diagonal;
    const std::size_t nr = d.rows(), nc = d.cols();

    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        out.left.swap_rows(i, j);
        out.left_inverse.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        out.right.swap_cols(i, j);
    };
    // row_i += q * row_t
    auto row_add = [&](std::size_t i, std::size_t t, const mpz_class& q) {
        for (std::size_t c = 0; c < nc; ++c) d(i, c) += q * d(t, c);
        for (std::size_t c = 0; c < nr; ++c) out.left(i, c) += q * out.left(t, c);
        for (std::size_t r = 0; r < nr; ++r) out.left_inverse(r, t) -= q * out.left_inverse(r, i);
    };
    // col_j += q * col_t
    auto col_add = [&](std::size_t j, std::size_t t, const mpz_class& q) {
        for (std::size_t r = 0; r < nr; ++r) d(r, j) += q * d(r, t);
        for (std::size_t r = 0; r < nc; ++r) out.right(r, j) += q * out.right(r, t);
    };

    std::size_t t = 0;
    for (; t < nr && t < nc; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool any = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (d(i, j) != 0 && (!any || abs(d(i, j)) < abs(d(pr, pc)))) {
                    any = true;
                    pr = i;
                    pc = j;
                }
        if (!any) break;
        row_swap(t, pr);
        col_swap(t, pc);

        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (d(i, t) != 0) {
                    row_swap(t, i);
                    changed = true;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (d(t, j) != 0) {
                    col_swap(t, j);
                    changed = true;
                }
            }
            if (changed) continue;
            // Pivot must divide the whole trailing block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < nr && !fixed; ++i)
                for (std::size_t j = t + 1; j < nc && !fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_add(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < nc; ++c) d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < nr; ++c) out.left(t, c) = -out.left(t, c);
            for (std::size_t r = 0; r < nr; ++r) out.left_inverse(r, t) = -out.left_inverse(r, t);
        }
    }
    out.rank = t;
    return out;
}

IntMatrix hermite_rows(const IntMatrix& a) {
    IntMatrix m = a;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        for (std::size_t i = pr + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const mpz_class x = m(pr, c), y = m(i, c);
            const Bezout b = bezout(x, y);
            mix_rows(m, pr, i, b.s, b.t, -y / b.g, x / b.g);
        }
        if (m(pr, c) == 0) continue;
        if (m(pr, c) < 0)
            for (std::size_t j = 0; j < m.cols(); ++j) m(pr, j) = -m(pr, j);
        for (std::size_t i = 0; i < pr; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(pr, c).get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(pr, j);
        }
        ++pr;
    }
    IntMatrix out(pr, m.cols());
    for (std::size_t i = 0; i < pr; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace tilingforge
