#include "ctk/oracle.hpp"

#include <algorithm>

namespace ctk {

namespace {

using Poly = std::vector<int>; // coefficients low-to-high, over Z/p

Poly poly_trim(Poly a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p)
{
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (int)((c[i + j] + (long)a[i] * b[j]) % p);
    return poly_trim(c);
}

// remainder of a by monic b
Poly poly_mod(Poly a, const Poly& b, long p)
{
    a = poly_trim(a);
    while (a.size() >= b.size()) {
        long lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            long v = (a[i + shift] - lead * b[i]) % p;
            a[i + shift] = (int)(v < 0 ? v + p : v);
        }
        a = poly_trim(a);
    }
    return a;
}

bool poly_irreducible(const Poly& f, long p)
{
    int m = (int)f.size() - 1;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (int deg = 1; deg <= m / 2; ++deg) {
        long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            Poly g(deg + 1, 0);
            g[deg] = 1;
            long cc = c;
            for (int i = 0; i < deg; ++i) { g[i] = (int)(cc % p); cc /= p; }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Fq::Fq(const FieldSpec& f) : field_(f)
{
    long p = f.p;
    int m = f.m;
    // smallest monic irreducible of degree m, ordered by the base-p value of
    // its lower coefficients
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
        Poly cand(m + 1, 0);
        cand[m] = 1;
        long cc = c;
        for (int i = 0; i < m; ++i) { cand[i] = (int)(cc % p); cc /= p; }
        if (m == 1 && cand[0] == 0) {
            // x itself gives F_p directly; fine
        }
        if (poly_irreducible(cand, p)) {
            modpoly_ = cand;
            break;
        }
    }
    if (modpoly_.empty()) throw PreconditionError("no irreducible polynomial found");

    // multiplicative generator and discrete-log tables
    dlog_.assign(field_.q, -1);
    for (long g = 2; g < field_.q; ++g) {
        std::vector<long> powers{1};
        long x = g;
        while (x != 1) {
            powers.push_back(x);
            x = mul(x, g);
        }
        if ((long)powers.size() == field_.q - 1) {
            gen_ = g;
            pow_ = powers;
            for (long e = 0; e < (long)powers.size(); ++e) dlog_[powers[e]] = e;
            break;
        }
    }
    if (gen_ == 0) throw PreconditionError("no multiplicative generator found");
}

long Fq::add(long a, long b) const
{
    long p = field_.p, r = 0, mult = 1;
    while (a || b) {
        r += mult * ((a % p + b % p) % p);
        a /= p;
        b /= p;
        mult *= p;
    }
    return r;
}

long Fq::neg(long a) const
{
    long p = field_.p, r = 0, mult = 1;
    while (a) {
        r += mult * ((p - a % p) % p);
        a /= p;
        mult *= p;
    }
    return r;
}

long Fq::sub(long a, long b) const { return add(a, neg(b)); }

long Fq::mul(long a, long b) const
{
    long p = field_.p;
    Poly pa, pb;
    for (long x = a; x; x /= p) pa.push_back((int)(x % p));
    for (long x = b; x; x /= p) pb.push_back((int)(x % p));
    Poly pc = poly_mod(poly_mul(pa, pb, p), modpoly_, p);
    long r = 0, mult = 1;
    for (int c : pc) {
        r += mult * c;
        mult *= p;
    }
    return r;
}

long Fq::dlog(long a) const
{
    if (a == 0 || dlog_[a] < 0) throw PreconditionError("dlog of zero");
    return dlog_[a];
}

long Fq::from_dlog(long e) const
{
    long n = field_.q - 1;
    e %= n;
    if (e < 0) e += n;
    return pow_[e];
}

long Fq::inv(long a) const { return from_dlog(-dlog(a)); }

long Fq::pow(long a, long e) const
{
    if (a == 0) {
        if (e <= 0) throw PreconditionError("0 to a non-positive power");
        return 0;
    }
    return from_dlog(dlog(a) * e);
}

long Fq::frobenius(long a, int times) const
{
    long r = a;
    for (int t = 0; t < times; ++t) r = pow(r, field_.p);
    return r;
}

MatFq MatFq::identity(const Fq& f, int n)
{
    MatFq m;
    m.f = &f;
    m.a.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

MatFq MatFq::mul(const MatFq& other) const
{
    MatFq r = identity(*f, n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) {
            long s = 0;
            for (int k = 0; k < n(); ++k) s = f->add(s, f->mul(a[i][k], other.a[k][j]));
            r.a[i][j] = s;
        }
    return r;
}

long MatFq::det() const
{
    auto w = a;
    int sz = n();
    long d = 1;
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int r = col; r < sz; ++r)
            if (w[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(w[piv], w[col]);
            d = f->neg(d);
        }
        d = f->mul(d, w[col][col]);
        long ipiv = f->inv(w[col][col]);
        for (int r = col + 1; r < sz; ++r) {
            long factor = f->mul(w[r][col], ipiv);
            for (int c = col; c < sz; ++c)
                w[r][c] = f->sub(w[r][c], f->mul(factor, w[col][c]));
        }
    }
    return d;
}

MatFq MatFq::inverse() const
{
    int sz = n();
    auto w = a;
    MatFq inv = identity(*f, sz);
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int r = col; r < sz; ++r)
            if (w[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw PreconditionError("singular matrix");
        std::swap(w[piv], w[col]);
        std::swap(inv.a[piv], inv.a[col]);
        long ip = f->inv(w[col][col]);
        for (int c = 0; c < sz; ++c) {
            w[col][c] = f->mul(w[col][c], ip);
            inv.a[col][c] = f->mul(inv.a[col][c], ip);
        }
        for (int r = 0; r < sz; ++r) {
            if (r == col || w[r][col] == 0) continue;
            long factor = w[r][col];
            for (int c = 0; c < sz; ++c) {
                w[r][c] = f->sub(w[r][c], f->mul(factor, w[col][c]));
                inv.a[r][c] = f->sub(inv.a[r][c], f->mul(factor, inv.a[col][c]));
            }
        }
    }
    return inv;
}

MatFq MatFq::transpose() const
{
    MatFq r = *this;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) r.a[i][j] = a[j][i];
    return r;
}

MatFq upper_unipotent(const Fq& f, long t)
{
    MatFq m = MatFq::identity(f, 2);
    m.a[0][1] = t;
    return m;
}

MatFq lower_unipotent(const Fq& f, long t)
{
    MatFq m = MatFq::identity(f, 2);
    m.a[1][0] = t;
    return m;
}

MatFq diag2(const Fq& f, long x)
{
    MatFq m = MatFq::identity(f, 2);
    m.a[0][0] = x;
    m.a[1][1] = f.inv(x);
    return m;
}

MatFq twisted(const MatFq& m, const Twist& tw)
{
    MatFq r = m;
    for (auto& row : r.a)
        for (auto& x : row) x = r.f->frobenius(x, tw.frob);
    if (tw.sign < 0) r = r.transpose().inverse();
    return r;
}

MatFq embed_edge(const MatFq& m, EmbedSide side, const Twist& tw)
{
    if (m.n() != 2 || m.det() != 1) throw PreconditionError("embed_edge requires det-1 2x2 input");
    MatFq t = twisted(m, tw);
    MatFq r = MatFq::identity(*m.f, 3);
    int off = side == EmbedSide::first ? 0 : 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.a[off + i][off + j] = t.a[i][j];
    return r;
}

MatFq embed_node(const MatFq& m, int i, int n)
{
    if (m.n() != 2 || i < 1 || i > n) throw PreconditionError("embed_node out of range");
    MatFq r = MatFq::identity(*m.f, n + 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r.a[i - 1 + a][i - 1 + b] = m.a[a][b];
    return r;
}

MatFq torus_element(const Fq& f, const std::vector<long>& a, int n)
{
    MatFq r = MatFq::identity(f, n + 1);
    for (int i = 1; i <= n; ++i) r = r.mul(embed_node(diag2(f, a[i - 1]), i, n));
    return r;
}

namespace {

Diagram a_path_diagram(int n)
{
    std::vector<Vertex> vs;
    std::vector<EdgePair> es;
    for (int i = 1; i <= n; ++i) {
        vs.push_back(i);
        if (i > 1) es.push_back({i - 1, i});
    }
    return Diagram(vs, es);
}

void require_a_path(const Diagram& d)
{
    if (d != a_path_diagram(d.size()))
        throw PreconditionError("oracle supports spherical A_n paths with vertices 1..n only");
}

CartanOperator a_cartan(int n, const Int& modulus)
{
    return build_cartan_generic(a_path_diagram(n), modulus,
                                [](Vertex, Vertex) { return Int(1); });
}

} // namespace

bool torus_conjugation_check(const Diagram& d, const Fq& f, int i,
                             const std::vector<long>& a, const MatFq& g)
{
    require_a_path(d);
    int n = d.size();
    if ((int)a.size() != n || i < 1 || i > n)
        throw PreconditionError("torus_conjugation_check: bad arguments");
    for (long x : a)
        if (x == 0) throw PreconditionError("torus entries must be units");
    if (g.n() != 2 || g.det() != 1)
        throw PreconditionError("torus_conjugation_check: g must be in SL_2");

    MatFq dmat = torus_element(f, a, n);
    MatFq conj = dmat.inverse().mul(embed_node(g, i, n)).mul(dmat);

    Vec dlogs(n);
    for (int j = 0; j < n; ++j) dlogs[j] = f.dlog(a[j]);
    Vec image = mat_apply_mod(a_cartan(n, f.q() - 1).entries, dlogs, f.q() - 1);
    long k = f.from_dlog(image[i - 1].get_si());

    MatFq expect = embed_node(g, i, n);
    expect.a[i - 1][i] = f.mul(expect.a[i - 1][i], k);
    expect.a[i][i - 1] = f.mul(expect.a[i][i - 1], f.inv(k));
    return conj == expect;
}

std::set<std::vector<long>> brute_force_central_torus(int n, const Fq& f)
{
    double bound = 1;
    for (int i = 0; i < n; ++i) bound *= (double)(f.q() - 1);
    if (bound > 1e6) throw PreconditionError("enumeration bound (q-1)^n <= 10^6 exceeded");

    std::vector<MatFq> gens;
    for (int j = 1; j <= n; ++j) {
        gens.push_back(embed_node(upper_unipotent(f, 1), j, n));
        gens.push_back(embed_node(lower_unipotent(f, 1), j, n));
    }

    std::set<std::vector<long>> central;
    std::vector<long> e(n, 0);
    while (true) {
        std::vector<long> a(n);
        for (int j = 0; j < n; ++j) a[j] = f.from_dlog(e[j]);
        MatFq t = torus_element(f, a, n);
        bool ok = true;
        for (const auto& u : gens)
            if (!(t.mul(u) == u.mul(t))) { ok = false; break; }
        if (ok) central.insert(e);
        int j = 0;
        while (j < n && ++e[j] == f.q() - 1) e[j++] = 0;
        if (j == n) break;
    }
    return central;
}

bool oracle_vs_symbolic(int n, const Fq& f)
{
    auto brute = brute_force_central_torus(n, f);

    Int modulus = f.q() - 1;
    KernelModN km = kernel_mod(a_cartan(n, modulus).entries, modulus);
    std::set<std::vector<long>> symbolic;
    std::vector<Int> coeff(km.generators.size(), 0);
    while (true) {
        Vec v(n, 0);
        for (std::size_t g = 0; g < km.generators.size(); ++g)
            for (int j = 0; j < n; ++j)
                v[j] = (v[j] + coeff[g] * km.generators[g][j]) % modulus;
        std::vector<long> key(n);
        for (int j = 0; j < n; ++j) key[j] = v[j].get_si();
        symbolic.insert(key);
        std::size_t g = 0;
        while (g < km.generators.size() && ++coeff[g] == km.annihilators[g]) coeff[g++] = 0;
        if (g == km.generators.size()) break;
    }
    return brute == symbolic;
}

} // namespace ctk
