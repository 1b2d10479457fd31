#ifndef WEYLWIT_TWISTED_MODELS_HPP
#define WEYLWIT_TWISTED_MODELS_HPP

#include <vector>

#include "weylwit/iso_models.hpp"
#include "weylwit/matrix.hpp"

namespace weylwit {

/* Building blocks for the twisted configurations: a space V together with an
 * isomorphism V -> V*, stored as the matrix of the induced bilinear form.
 * Basis vectors of V carry even labels 0, 2, 4, ...; the odd labels walk
 * through V*.  The square of the twisted map acts on V as form^{-T} * form. */

/* Coefficients x_{2k} (k = 0..len-1) of the series (1-S)(1+S)^{-2p}. */
std::vector<BigInt> even_dual_x(int p, int len);

/* The two-sided profile: 0 for |h| <= 2p-3, x_{2u} at |h| = 2p-1+2u (h odd). */
BigInt phi_value(int p, long h);

/* x'-profile of a mixed twisted block: 0 for |h| < 2p-1, else the recurrence
 * solution for (1-S)^a (1+S)^b at index (|h|-2p+1)/2, where 2p-1 = a+b. */
BigInt dual_x_value(int a, int b, long h);

struct TwistedModel {
    int dim = 0;
    Matrix form;             /* matrix of the map V -> V* */
    std::vector<Vec> lines;  /* distinguished generators */
    std::vector<Vec> tilde;  /* auxiliary vectors used in the construction */
};

/* The action of the squared twisted map on V. */
Matrix star_square(const Matrix& form);

/* Pairing (z_i, z'_j) at odd offset d = i - j (i even, j odd). */
GaussRational twisted_pair(const Matrix& form, const Vec& z, const Vec& zp, long d);

/* One block of odd dimension a+b = 2p-1 (a odd, b even), generator spanning
 * the single distinguished line. */
TwistedModel model_single_twisted(int a, int b);

/* One block of even dimension 2p on which the squared map is minus a single
 * unipotent Jordan block; carries the distinguished orthogonal vector. */
TwistedModel model_even_twisted(int p);

/* Two even blocks of sizes 2p1 >= 2p2 - 2 with the pair of lines spanned by
 * the first basis vector and the mixing vector xi. */
TwistedModel model_paired_even(int p1, int p2);

}  // namespace weylwit

#endif
