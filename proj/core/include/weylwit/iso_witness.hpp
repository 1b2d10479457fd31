#ifndef WEYLWIT_ISO_WITNESS_HPP
#define WEYLWIT_ISO_WITNESS_HPP

#include <string>
#include <vector>

#include "weylwit/block_seq.hpp"
#include "weylwit/iso_models.hpp"
#include "weylwit/matrix.hpp"

namespace weylwit {

/* A full configuration: epsilon-symmetric space, isometry g with the
 * prescribed unipotent structure on the +-1 generalized eigenspaces, and
 * the distinguished lines L^1..L^(sigma+kappa). */
struct IsoWitness {
    IsoBlockSeq seq;
    Matrix gram;
    Matrix g;
    std::vector<Vec> lines;
    std::vector<Vec> normalized;  /* z^t with canonical pairing tables */

    bool is_normalized() const { return normalized.size() == lines.size(); }
};

struct ValidationIssue {
    std::string condition;
    int t = 0, r = 0, u = 0; /* line indices and offset, when applicable */
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/* Inductive construction: one configuration per admissible sequence. */
IsoWitness build_iso(const IsoBlockSeq& seq);

/* Check every defining condition exactly; failures become report entries. */
ValidationReport validate(const IsoWitness& w);

/* Rescale the line generators so that all pairing tables take their
 * canonical values.  Throws if the witness is invalid or a required square
 * root does not exist over the Gaussian rationals. */
IsoWitness normalize(const IsoWitness& w);

/* Sign of g on line t under the canonical tables: +1 on the a-side, -1 on
 * the b-side of the sequence. */
int line_delta(const IsoBlockSeq& seq, int t);

/* Expected canonical value of (z^t_i, z^r_j) at offset u = i - j. */
GaussRational expected_pairing(const IsoBlockSeq& seq, int t, int r, int u);

/* Basis of V given by the shifted line vectors, grouped per line. */
Matrix chain_basis(const IsoWitness& w);

/* Isometry carrying the configuration of w1 to the configuration of w2
 * (same sequence; both normalized). */
Matrix transport(const IsoWitness& w1, const IsoWitness& w2);

struct IsotropyGroup {
    SignGroupShape shape;
    std::vector<std::vector<int>> elements;  /* all sign vectors, +-1 entries */
    std::vector<Matrix> matrices;            /* same order as elements */
};

/* The full group of isometries fixing (g, L^1, ..): one matrix per sign
 * vector respecting the linked pairs. */
IsotropyGroup isotropy(const IsoWitness& w);

/* Matrix acting by omega_t on every shifted vector of line t. */
Matrix sign_element_matrix(const IsoWitness& w, const std::vector<int>& omegas);

/* The canonical half-dimensional isotropic subspace attached to a witness
 * (even dimension, symmetric form), as a column basis. */
Matrix isotropic_subspace(const IsoWitness& w);

/* Two witnesses on the same space: true if their isotropic subspaces lie in
 * the same orientation class (intersection parity criterion). */
bool same_isotropic_component(const IsoWitness& w1, const IsoWitness& w2);

/* Component label relative to the canonical build of the same sequence.
 * Requires w to live on the canonical build's Gram matrix. */
int isotropic_component(const IsoWitness& w);

/* The isotropy element with omega_1 = -1 (requires a_1 > 0 and b_1 > 0);
 * its restriction to each generalized eigenspace of g has determinant -1. */
Matrix negative_det_element(const IsoWitness& w);

/* Restriction determinant of gamma on the generalized eigenspace of g at
 * the given eigenvalue. */
GaussRational restricted_det(const Matrix& g, const Matrix& gamma, const GaussRational& eigenvalue,
                             int multiplicity);

/* Odd dimension: the sign vectors whose matrix has determinant 1 (an
 * index-2 subgroup, cut out by the last coordinate). */
std::vector<std::vector<int>> special_isotropy(const IsoWitness& w);

}  // namespace weylwit

#endif
