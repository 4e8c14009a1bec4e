#include "ctk/zmodn.hpp"

#include <algorithm>
#include <cstddef>

namespace ctk {

namespace {

Int pos_mod(const Int& a, const Int& n)
{
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

void swap_rows(Mat& m, int i, int j)
{
    std::swap(m[i], m[j]);
}

void swap_cols(Mat& m, int i, int j)
{
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row[i] += c * row[j]
void add_row(Mat& m, int i, int j, const Int& c)
{
    for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] += c * m[j][k];
}

void add_col(Mat& m, int i, int j, const Int& c)
{
    for (auto& row : m) row[i] += c * row[j];
}

void negate_row(Mat& m, int i)
{
    for (auto& x : m[i]) x = -x;
}

} // namespace

Mat identity_mat(int n)
{
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b)
{
    const int r = (int)a.size();
    const int inner = (int)b.size();
    const int c = inner ? (int)b[0].size() : 0;
    Mat out(r, Vec(c, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Vec mat_apply(const Mat& a, const Vec& x)
{
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

Vec mat_apply_mod(const Mat& a, const Vec& x, const Int& n)
{
    Vec out = mat_apply(a, x);
    for (auto& v : out) v = pos_mod(v, n);
    return out;
}

Int det_exact(Mat a)
{
    const int n = (int)a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            swap_rows(a, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev; // exact by Bareiss
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<Int> SmithForm::diagonal() const
{
    std::vector<Int> out;
    const std::size_t r = d.size();
    const std::size_t c = r ? d[0].size() : 0;
    for (std::size_t i = 0; i < std::min(r, c); ++i) out.push_back(d[i][i]);
    return out;
}

SmithForm smith_normal_form(const Mat& a)
{
    SmithForm s;
    s.d = a;
    const int r = (int)a.size();
    const int c = r ? (int)a[0].size() : 0;
    s.u = identity_mat(r);
    s.v = identity_mat(c);
    Mat& d = s.d;

    auto row_op = [&](int i, int j, const Int& k) { add_row(d, i, j, k); add_row(s.u, i, j, k); };
    auto col_op = [&](int i, int j, const Int& k) { add_col(d, i, j, k); add_col(s.v, i, j, k); };

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        // find a nonzero pivot of smallest absolute value
        for (;;) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (d[i][j] == 0) continue;
                    Int v = abs(d[i][j]);
                    if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) goto done_block; // remaining block is zero
            if (pi != t) { swap_rows(d, t, pi); swap_rows(s.u, t, pi); }
            if (pj != t) { swap_cols(d, t, pj); swap_cols(s.v, t, pj); }

            bool reduced = true;
            for (int i = t + 1; i < r; ++i)
                if (d[i][t] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                    row_op(i, t, -q);
                    if (d[i][t] != 0) reduced = false;
                }
            for (int j = t + 1; j < c; ++j)
                if (d[t][j] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                    col_op(j, t, -q);
                    if (d[t][j] != 0) reduced = false;
                }
            if (!reduced) continue;

            // pivot divides the rest of its row and column; enforce the
            // divisibility condition on the trailing block
            bool divides_all = true;
            for (int i = t + 1; i < r && divides_all; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_op(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (d[t][t] < 0) { negate_row(d, t); negate_row(s.u, t); }
    }
done_block:;
    return s;
}

KernelModN kernel_mod(const Mat& a, const Int& n)
{
    if (n < 1) throw PreconditionError("kernel_mod: modulus must be positive");
    KernelModN out;
    const int r = (int)a.size();
    const int c = r ? (int)a[0].size() : 0;
    if (c == 0) return out;
    SmithForm s = smith_normal_form(a);
    std::vector<Int> diag = s.diagonal();
    diag.resize(c, 0); // columns beyond the diagonal are free
    // a*x = 0 mod n  <=>  x = v*y with d[i]*y[i] = 0 mod n
    for (int i = 0; i < c; ++i) {
        Int g = gcd(diag[i], n);
        if (g == 1) continue; // coordinate forced to zero
        Int step = n / g;
        Vec gen(c, 0);
        for (int k = 0; k < c; ++k) {
            Int val = (s.v[k][i] * step) % n;
            if (val < 0) val += n;
            gen[k] = val;
        }
        out.generators.push_back(std::move(gen));
        out.annihilators.push_back(g);
    }
    return out;
}

Int KernelModN::order() const
{
    Int o = 1;
    for (const auto& a : annihilators) o *= a;
    return o;
}

std::vector<Vec> left_kernel_mod(const Mat& a, const Int& n)
{
    // transpose and reuse the column-kernel routine
    const int r = (int)a.size();
    const int c = r ? (int)a[0].size() : 0;
    Mat at(c, Vec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) at[j][i] = a[i][j];
    return kernel_mod(at, n).generators;
}

Int unit_for(const Int& a, const Int& n)
{
    Int am = a % n;
    if (am < 0) am += n;
    if (am == 0) return 1;
    Int g = gcd(am, n);
    Int b = am / g, n1 = n / g;
    Int u;
    if (n1 == 1) {
        u = 1;
    } else {
        if (mpz_invert(u.get_mpz_t(), b.get_mpz_t(), n1.get_mpz_t()) == 0)
            throw PreconditionError("unit_for: internal inversion failure");
    }
    // lift u to a unit modulo n (u is only coprime to n/g so far)
    while (gcd(u, n) != 1) u += n1;
    return u % n;
}

namespace {

int leading_col(const Vec& v)
{
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return (int)j;
    return -1;
}

Vec combine(const Vec& x, const Int& cx, const Vec& y, const Int& cy, const Int& n)
{
    Vec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        Int v = (cx * x[k] + cy * y[k]) % n;
        if (v < 0) v += n;
        out[k] = v;
    }
    return out;
}

} // namespace

namespace {

// Echelon form mod n: one row per pivot column, sorted by pivot.
std::vector<Vec> echelonize(std::vector<Vec> pending, const Int& n)
{
    std::vector<Vec> result;
    while (!pending.empty()) {
        Vec row = std::move(pending.back());
        pending.pop_back();
        for (;;) {
            int j = leading_col(row);
            if (j < 0) break;
            auto it = std::find_if(result.begin(), result.end(),
                                   [&](const Vec& r) { return leading_col(r) == j; });
            if (it == result.end()) {
                result.push_back(std::move(row));
                break;
            }
            Vec& r = *it;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       r[j].get_mpz_t(), row[j].get_mpz_t());
            Vec merged = combine(r, s, row, t, n); // pivot value g at column j
            Vec reduced = combine(row, r[j] / g, r, -(row[j] / g), n); // column j killed
            r = std::move(merged);
            row = std::move(reduced);
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Vec& a, const Vec& b) { return leading_col(a) < leading_col(b); });
    return result;
}

void normalize_echelon(std::vector<Vec>& result, const Int& n, int dim)
{
    // pivot = gcd(pivot, n); entries above a pivot reduced mod it
    for (auto& r : result) {
        int j = leading_col(r);
        Int u = unit_for(r[j], n);
        if (u != 1)
            for (auto& x : r) x = (x * u) % n;
    }
    for (std::size_t i = result.size(); i-- > 0;) {
        int j = leading_col(result[i]);
        Int p = result[i][j];
        for (std::size_t k = 0; k < i; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), result[k][j].get_mpz_t(), p.get_mpz_t());
            if (q != 0)
                for (int col = 0; col < dim; ++col) {
                    Int v = (result[k][col] - q * result[i][col]) % n;
                    if (v < 0) v += n;
                    result[k][col] = v;
                }
        }
    }
}

} // namespace

std::vector<Vec> howell_form(std::vector<Vec> rows, const Int& n, int dim)
{
    for (auto& row : rows) {
        if ((int)row.size() != dim)
            throw PreconditionError("howell_form: row dimension mismatch");
        for (auto& x : row) {
            x %= n;
            if (x < 0) x += n;
        }
    }

    // Closure loop: echelonize, append the annihilator multiple of every
    // row, and repeat until the normalized form stops changing. At the
    // fixpoint all annihilator multiples reduce to zero inside the echelon
    // set, which is exactly the Howell condition.
    std::vector<Vec> result = echelonize(std::move(rows), n);
    normalize_echelon(result, n, dim);
    for (;;) {
        std::vector<Vec> next = result;
        for (const auto& r : result) {
            int j = leading_col(r);
            Int ann = n / gcd(r[j], n);
            if (ann == 1) continue;
            Vec extra(dim);
            bool nonzero = false;
            for (int k = 0; k < dim; ++k) {
                extra[k] = (r[k] * ann) % n;
                if (extra[k] != 0) nonzero = true;
            }
            if (nonzero) next.push_back(std::move(extra));
        }
        next = echelonize(std::move(next), n);
        normalize_echelon(next, n, dim);
        if (next == result) break;
        result = std::move(next);
    }
    return result;
}

Int howell_span_order(const std::vector<Vec>& howell, const Int& n)
{
    Int o = 1;
    for (const auto& r : howell) {
        int j = leading_col(r);
        if (j < 0) continue;
        o *= n / r[j]; // pivot divides n after normalization
    }
    return o;
}

bool howell_contains(const std::vector<Vec>& howell, const Int& n, Vec v)
{
    for (auto& x : v) {
        x %= n;
        if (x < 0) x += n;
    }
    for (const auto& r : howell) {
        int j = leading_col(r);
        if (j < 0) continue;
        if (v[j] == 0) continue;
        if (v[j] % r[j] != 0) return false;
        Int coef = v[j] / r[j];
        for (std::size_t k = 0; k < v.size(); ++k) {
            Int x = (v[k] - coef * r[k]) % n;
            if (x < 0) x += n;
            v[k] = x;
        }
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace ctk
