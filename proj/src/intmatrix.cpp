#include "plumbcalc/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace plumbcalc {

bool IntMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

namespace {

void add_row(IntMatrix& m, int dst, int src, const Int& f) {
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
}
void add_col(IntMatrix& m, int dst, int src, const Int& f) {
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}
void swap_rows(IntMatrix& m, int i1, int i2) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(i1, j), m.at(i2, j));
}
void swap_cols(IntMatrix& m, int j1, int j2) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j1), m.at(i, j2));
}
void negate_row(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r;
    r.d = m;
    r.u = IntMatrix::identity(m.rows);
    r.v = IntMatrix::identity(m.cols);
    IntMatrix& d = r.d;
    const int lim = std::min(m.rows, m.cols);

    for (int t = 0; t < lim; ++t) {
        while (true) {
            // pivot: smallest nonzero magnitude in the trailing block
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j) {
                    const Int& x = d.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = lim;  // trailing block vanished
                break;
            }
            if (pi != t) {
                swap_rows(d, t, pi);
                swap_rows(r.u, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(r.v, t, pj);
            }
            bool clean = true;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);  // truncated; remainder shrinks
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(r.u, i, t, -q);
                }
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(r.v, j, t, -q);
                }
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: d_t must divide the trailing block
            bool divides = true;
            for (int i = t + 1; i < d.rows && divides; ++i)
                for (int j = t + 1; j < d.cols && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(r.u, t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= lim) break;
    }
    for (int t = 0; t < lim; ++t) {
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(r.u, t);
        }
    }
    return r;
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    const int lim = std::min(d.rows, d.cols);
    for (int t = 0; t < lim; ++t) out.push_back(d.at(t, t));
    return out;
}

std::vector<Int> cokernel_invariants(const IntMatrix& m) {
    std::vector<Int> diag = smith_normal_form(m).diagonal();
    while (static_cast<int>(diag.size()) < m.cols) diag.push_back(0);
    return diag;
}

std::vector<Int> nontrivial_cokernel_invariants(const IntMatrix& m) {
    std::vector<Int> out;
    for (const Int& x : cokernel_invariants(m))
        if (x != 1) out.push_back(x);
    return out;
}

Inertia signature_exact(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature_exact: matrix not symmetric");
    const int n = m.rows;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));

    Inertia s;
    for (int k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            int dj = -1, oj = -1;
            for (int j = k + 1; j < n; ++j) {
                if (dj < 0 && !a[j][j].is_zero()) dj = j;
                if (oj < 0 && !a[k][j].is_zero()) oj = j;
            }
            if (dj >= 0) {
                std::swap(a[k], a[dj]);
                for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][dj]);
            } else if (oj >= 0) {
                // both diagonals vanish here: e_k += e_oj makes the pivot 2*a[k][oj]
                for (int j = 0; j < n; ++j) a[k][j] = a[k][j] + a[oj][j];
                for (int i = 0; i < n; ++i) a[i][k] = a[i][k] + a[i][oj];
            } else {
                ++s.zero;
                continue;
            }
        }
        const Rational pivot = a[k][k];
        if (pivot.sign() > 0)
            ++s.positive;
        else
            ++s.negative;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / pivot;
            for (int j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            for (int j = 0; j < n; ++j) a[j][i] = a[j][i] - f * a[j][k];
        }
    }
    return s;
}

Int det_bareiss(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det_bareiss: matrix not square");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            swap_rows(w, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

}  // namespace plumbcalc
