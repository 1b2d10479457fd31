#ifndef WEYLWIT_ISO_MODELS_HPP
#define WEYLWIT_ISO_MODELS_HPP

#include <vector>

#include "weylwit/matrix.hpp"

namespace weylwit {

/* Explicit model configuration on a based vector space: an epsilon-symmetric
 * Gram matrix, an isometry g, the distinguished line generators, and any
 * auxiliary distinguished vectors used to define them. */
struct IsoModel {
    int dim = 0;
    int epsilon = 1;
    Matrix gram;             /* gram(i,j) = (w_i, w_j) */
    Matrix g;                /* column-action matrix of g on the w-basis */
    std::vector<Vec> lines;  /* line generators, in sequence order */
    std::vector<Vec> tilde;  /* auxiliary vectors (solved, then frozen signs) */
};

/* Coefficients of (1-T)^a (1+T)^b, length a+b+1. */
std::vector<BigInt> n_coeffs(int a, int b);

/* x-sequence from the convolution recurrence sum_j n_j x_{e-j} = 0 (e >= 1),
 * seeded with x_0; requires n[0] = +-1. */
std::vector<BigInt> x_coeffs(const std::vector<BigInt>& n, const BigInt& x0, int len);

/* x-sequence of the odd-block tables: series (1+T)(1-T)^(-2p-1), with the
 * convention x_0 = 2 when p = 0. */
std::vector<BigInt> odd_x_coeffs(int p, int len);

/* f_p(u) = 2 (2p)!^{-1} prod_{k in [0,p-1]} (u^2 - k^2); f_0 = 2. */
BigInt f_value(int p, long u);

/* Mixed block of size a+b = 2p > 0: cyclic basis w_0..w_{2p-1}, Gram zero
 * within distance < p, x-values beyond; one line (span w_0). */
IsoModel model_mixed_block(int a, int b);

/* Odd orthogonal block of size 2p+1 with its distinguished vector:
 * Gram (w_i, w_j) = (-1)^p f_p(i-j); lines (span w_0 [p>=1], span of the
 * distinguished vector). */
IsoModel model_odd_block(int p);

/* Two odd blocks of sizes 2p1+1 and 2p2-1 (p1 >= p2 >= 1) glued by the
 * mixing vector built from both distinguished vectors; lines
 * (span z_0, span of the mixing vector).  tilde = {ztilde, vtilde, xi}. */
IsoModel model_paired_odd_blocks(int p1, int p2);

/* Table of (z^t_i, z^{t'}_j) as a function of u = i - j over [lo, hi];
 * t, t' are 1-based line indices.  Throws if the lines are missing. */
std::vector<GaussRational> pairing_profile(const IsoModel& m, int t, int tp, int lo, int hi);

}  // namespace weylwit

#endif
