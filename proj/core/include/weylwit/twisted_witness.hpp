#ifndef WEYLWIT_TWISTED_WITNESS_HPP
#define WEYLWIT_TWISTED_WITNESS_HPP

#include <vector>

#include "weylwit/block_seq.hpp"
#include "weylwit/iso_witness.hpp"
#include "weylwit/matrix.hpp"
#include "weylwit/twisted_models.hpp"

namespace weylwit {

/* A full twisted configuration: a map g: V -> V* stored as the matrix of the
 * induced bilinear form, whose squared twisted power has the prescribed
 * Jordan structure, together with the distinguished lines L^1..L^sigma. */
struct TwistedWitness {
    TwistedBlockSeq seq;
    Matrix form;
    std::vector<Vec> lines;
    std::vector<Vec> normalized;  /* z^t with canonical pairing tables */

    bool is_normalized() const { return normalized.size() == lines.size(); }
};

/* Matrix of the i-th twisted power of g.  Even i: an automorphism of V;
 * odd i: a map V -> V* in dual coordinates. */
Matrix star_power(const Matrix& form, int i);

/* Inductive construction: one configuration per admissible sequence. */
TwistedWitness build_twisted(const TwistedBlockSeq& seq);

/* Check every defining condition exactly; failures become report entries. */
ValidationReport validate_twisted(const TwistedWitness& w);

/* Rescale the line generators so that all pairing tables take their
 * canonical values.  Throws if the witness is invalid or a required square
 * root does not exist over the Gaussian rationals. */
TwistedWitness normalize_twisted(const TwistedWitness& w);

/* Expected canonical value of (z^t_i, z^r_j) at odd offset d = i - j. */
GaussRational expected_twisted_pairing(const TwistedBlockSeq& seq, int t, int r, long d);

/* Basis of V given by the even-shifted line vectors, grouped per line
 * (2p_t - 1 columns for line t). */
Matrix twisted_chain_basis(const TwistedWitness& w);

/* Automorphism carrying the configuration of w1 to the configuration of w2
 * under twisted conjugation (same sequence; both normalized). */
Matrix transport_twisted(const TwistedWitness& w1, const TwistedWitness& w2);

/* The full group of automorphisms fixing (g, L^1, ..) under twisted
 * conjugation: one matrix per sign vector respecting the linked pairs. */
IsotropyGroup isotropy_twisted(const TwistedWitness& w);

/* Matrix acting by omega_t on every even-shifted vector of line t. */
Matrix twisted_sign_element_matrix(const TwistedWitness& w, const std::vector<int>& omegas);

struct SlRefinement {
    int class_count = 1;  /* 1 when a_1 > 0, else 2 */
    bool has_flip = false;
    Matrix flip;        /* determinant -1 element fixing g (a_1 > 0 only) */
    bool det_ok = false; /* det(star_square) == 1 */
};

/* Special-linear refinement of the twisted class: how many SL-conjugacy
 * classes it splits into, the determinant -1 fixing element when one
 * exists, and the determinant identity for the squared twisted power. */
SlRefinement sl_refinement(const TwistedWitness& w);

/* Rescale g by a scalar c with c^n * det(form) = 1, so the induced map on
 * the top exterior power sends the coordinate volume form to its dual.
 * Throws std::domain_error when no such c exists in the Gaussian rationals. */
TwistedWitness special_rescale(const TwistedWitness& w);

/* For a witness whose form has the same determinant as the canonical
 * build's: 0 if the transport from the canonical build has determinant 1,
 * else 1.  Labels the two SL-classes when a_1 = 0 (where the label is
 * independent of the transport chosen); always 0 when a_1 > 0. */
int sl_class_label(const TwistedWitness& w);

}  // namespace weylwit

#endif
