#pragma once

#include <gmpxx.h>
#include <vector>

#include "ctk/errors.hpp"

namespace ctk {

// Exact integer / Z-mod-N linear algebra. Moduli are composite in general
// (N = q-1), so everything here avoids field-only shortcuts: kernels go
// through the Smith normal form over Z and canonical subgroup bases use the
// Howell form.

using Int = mpz_class;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>; // row-major

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x); // a * x (column vector)
Vec mat_apply_mod(const Mat& a, const Vec& x, const Int& n);

// Determinant by fraction-free (Bareiss) elimination.
Int det_exact(Mat a);

// u * a * v = d with u, v unimodular and d diagonal, d[i] | d[i+1].
struct SmithForm {
    Mat d, u, v;
    std::vector<Int> diagonal() const;
};
SmithForm smith_normal_form(const Mat& a);

// Solutions of a*x = 0 over Z/n, presented as a finite abelian group.
// generators[i] has additive order annihilator[i]; annihilators form a
// divisor chain, so they double as invariant factors.
struct KernelModN {
    std::vector<Vec> generators;
    std::vector<Int> annihilators;
    Int order() const;
};
KernelModN kernel_mod(const Mat& a, const Int& n);

// Row vectors x with x*a = 0 over Z/n.
std::vector<Vec> left_kernel_mod(const Mat& a, const Int& n);

// Unit u (gcd(u,n)=1) with u*a = gcd(a,n) mod n.
Int unit_for(const Int& a, const Int& n);

// Canonical Howell basis of the row span of `rows` in (Z/n)^dim.
// Two generating sets span the same submodule iff their Howell forms are
// identical.
std::vector<Vec> howell_form(std::vector<Vec> rows, const Int& n, int dim);

// Order of the submodule given by a Howell basis.
Int howell_span_order(const std::vector<Vec>& howell, const Int& n);

// Membership test against a Howell basis.
bool howell_contains(const std::vector<Vec>& howell, const Int& n, Vec v);

} // namespace ctk
