#ifndef WEYLWIT_BLOCK_SEQ_HPP
#define WEYLWIT_BLOCK_SEQ_HPP

#include <utility>
#include <vector>

namespace weylwit {

/* Shape of the sign group attached to a block sequence: a product of {+1,-1}
 * factors, one per line, with some adjacent factors forced equal.  The group
 * order is 2^(free components). */
struct SignGroupShape {
    int size = 0;                                   /* number of factors */
    std::vector<std::pair<int, int>> linked_pairs;  /* 1-based (t, t+1) */

    int free_rank() const { return size - static_cast<int>(linked_pairs.size()); }
};

/* Block datum for the symmetric (non-twisted) case.  The a-entries are the
 * unipotent Jordan block sizes at +1, the b-entries at -1; positive entries
 * are strictly decreasing and share the parity determined by epsilon. */
struct IsoBlockSeq {
    std::vector<int> a, b;  /* trailing zeros dropped */
    int epsilon = 1;        /* +1: positive entries odd; -1: even */
    int dim = 0;            /* total size */
    int kappa = 0;          /* dim mod 2 */
    int k = 0;              /* count of indices with a_i and b_i both positive */
    std::vector<int> c;     /* c_i = a_i + b_i, up to the last positive entry */
    std::vector<int> p;     /* block half-sizes p_1 >= ... >= p_sigma > 0 */
    std::vector<int> two_p_prime;  /* 2*p'_t; length sigma + kappa */
    int sigma = 0;

    int a_at(int i) const { return i >= 1 && i <= static_cast<int>(a.size()) ? a[i - 1] : 0; }
    int b_at(int i) const { return i >= 1 && i <= static_cast<int>(b.size()) ? b[i - 1] : 0; }
    int c_at(int i) const { return i >= 1 && i <= static_cast<int>(c.size()) ? c[i - 1] : 0; }
    int p_at(int i) const { return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0; }
};

/* Block datum for the twisted case: positive a-entries odd, positive
 * b-entries even; each line t carries 2p_t - 1 basis vectors. */
struct TwistedBlockSeq {
    std::vector<int> a, b;
    int n = 0;
    int k = 0;
    std::vector<int> p;
    int sigma = 0;

    int a_at(int i) const { return i >= 1 && i <= static_cast<int>(a.size()) ? a[i - 1] : 0; }
    int b_at(int i) const { return i >= 1 && i <= static_cast<int>(b.size()) ? b[i - 1] : 0; }
    int p_at(int i) const { return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0; }
};

/* Validate (a, b) and fill in all derived quantities.  Throws
 * std::invalid_argument on parity violations, repeated positive entries,
 * non-descending input, or inconsistent parity between a and b. */
IsoBlockSeq derive_iso(std::vector<int> a, std::vector<int> b);
TwistedBlockSeq derive_twisted(std::vector<int> a, std::vector<int> b);

SignGroupShape sign_group(const IsoBlockSeq& seq);
SignGroupShape sign_group(const TwistedBlockSeq& seq);

/* All admissible (a, b) pairs with total size <= max_dim, deduplicated.
 * Used by test sweeps; order is deterministic. */
std::vector<std::pair<std::vector<int>, std::vector<int>>> admissible_iso(int max_dim);
std::vector<std::pair<std::vector<int>, std::vector<int>>> admissible_twisted(int max_dim);

}  // namespace weylwit

#endif
