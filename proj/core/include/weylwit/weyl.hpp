#ifndef WEYLWIT_WEYL_HPP
#define WEYLWIT_WEYL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylwit/poly.hpp"

namespace weylwit {

/* Group element as an integer matrix in the root basis (row-major, rank x
 * rank, unused entries zero).  Entries of any element matrix are bounded by
 * the largest highest-root coefficient, so int8 storage is exact. */
struct WeylMat {
    std::array<int8_t, 64> m{};
    bool operator==(const WeylMat& o) const { return m == o.m; }
};

/* Packed key for hashing/sorting group elements (4 bits per entry). */
using WeylKey = std::array<std::uint64_t, 4>;

struct WeylKeyHash {
    std::size_t operator()(const WeylKey& k) const;
};

/* A finite crystallographic root system with its Weyl group data: simple
 * reflection matrices in the root basis and the full list of roots. */
struct RootSystem {
    std::string type;  /* e.g. "G2", "F4", "E8", "A3", "B4", "D5" */
    char family = 0;   /* 'A'..'G' */
    int rank = 0;
    std::array<std::array<int, 8>, 8> cartan{};  /* cartan[i][j] = <a_i, a_j^v> */
    std::vector<WeylMat> simple_refl;
    std::vector<std::array<int8_t, 8>> positive_roots;
    unsigned long long group_order = 0;
};

/* Build the root system for a type string: family letter + rank (rank <= 8).
 * Throws std::invalid_argument for unsupported types. */
RootSystem build_weyl(const std::string& type);

WeylMat weyl_identity(const RootSystem& rs);
WeylMat weyl_mul(const RootSystem& rs, const WeylMat& x, const WeylMat& y);
WeylMat weyl_inverse(const RootSystem& rs, const WeylMat& x);
WeylKey weyl_key(const RootSystem& rs, const WeylMat& x);

/* Product of the simple reflections named by the word (empty -> identity). */
WeylMat word_to_element(const RootSystem& rs, const std::vector<int>& word);

/* Number of positive roots mapped to negative roots. */
int weyl_length(const RootSystem& rs, const WeylMat& x);

/* A reduced word for x (length == weyl_length(x)), by greedy descent. */
std::vector<int> reduced_word(const RootSystem& rs, const WeylMat& x);

/* Monic characteristic polynomial in the reflection representation,
 * coefficients ascending, exact 64-bit integers. */
std::vector<long long> weyl_char_poly(const RootSystem& rs, const WeylMat& x);

/* True iff 1 is not an eigenvalue in the reflection representation. */
bool weyl_is_elliptic(const RootSystem& rs, const WeylMat& x);

/* Cyclotomic factor multiset {d -> multiplicity} of the characteristic
 * polynomial; complete for every finite-order integer matrix. */
std::map<int, int> weyl_cyclotomic_factors(const RootSystem& rs, const WeylMat& x);

/* Coefficients (ascending) of the product of Phi_d^mult over the multiset. */
std::vector<long long> cyclotomic_product(const std::map<int, int>& factors);

struct MinimizeResult {
    WeylMat element;
    int length = 0;
    bool plateau_exhausted = true;  /* false when the state bound was hit */
};

/* Conjugation descent: replace w by s*w*s whenever that lowers the length,
 * exploring equal-length conjugates (bounded breadth-first, deterministic
 * seeded order) to escape plateaus.  For elliptic classes this reaches the
 * class minimum. */
MinimizeResult cyclic_shift_minimize(const RootSystem& rs, const WeylMat& w,
                                     unsigned long long seed = 0,
                                     std::size_t plateau_bound = 100000);

struct WeylClassInfo {
    unsigned long long size = 0;
    int min_length = 0;
    std::vector<long long> char_poly;         /* ascending coefficients */
    std::map<int, int> factors;               /* cyclotomic multiset */
    bool elliptic = false;
    std::vector<long long> power_traces;      /* tr(w^k), k = 1..rank */
    WeylMat representative;                   /* a minimal-length member */
};

/* Complete conjugacy-class partition with exact per-class minimal lengths.
 * Requires group_order <= 3.1e6; throws std::invalid_argument otherwise.
 * Deterministic output order (min_length, size, coefficients). */
std::vector<WeylClassInfo> enumerate_classes(const RootSystem& rs);

struct SearchResult {
    bool found = false;
    WeylMat element;            /* minimized representative when found */
    int min_length = 0;
    unsigned long long steps = 0;
};

/* Seeded random-walk search for an element whose characteristic polynomial
 * is the given cyclotomic product, followed by length minimization.  When
 * expected_length >= 0, keeps searching until the minimized length matches
 * (distinct classes can share a characteristic polynomial).  Not finding a
 * representative within the budget is not a disproof. */
SearchResult find_elliptic_rep(const RootSystem& rs, const std::map<int, int>& target,
                               unsigned long long budget, unsigned long long seed,
                               int expected_length = -1);

/* One row of the embedded minimal-length tables: the class labels are
 * carried as opaque strings and never interpreted. */
struct EllipticRow {
    std::string type;
    int min_length = 0;
    std::map<int, int> factors;
    std::vector<std::string> labels;
};

/* The embedded rows for the five exceptional types. */
std::vector<EllipticRow> builtin_table(const std::string& type);

struct RowReport {
    EllipticRow row;
    bool degree_ok = false;        /* factor degrees sum to the rank */
    bool no_fixed_vector = false;  /* Phi_1 absent from the factors */
    bool found = false;            /* representative with that char poly */
    bool length_ok = false;        /* minimized length == row value */
    bool exhaustive = false;       /* checked against the full partition */
    bool inconclusive = false;     /* search budget ran out; no verdict */
    int found_length = -1;
    std::vector<int> representative_word;
    std::vector<long long> fingerprint;  /* power traces of the match */
};

/* Verify every embedded row for the type.  G2/F4/E6 (and E7 when
 * exhaustive is requested) are checked against the complete class
 * partition; otherwise rows are checked by seeded search. */
std::vector<RowReport> verify_table(const std::string& type, unsigned long long budget = 2000000,
                                    unsigned long long seed = 0, bool exhaustive_e7 = false);

/* Search-based verification of a single embedded row (independent of the
 * other rows, so callers may shard rows across workers). */
std::vector<RowReport> verify_table_row(const std::string& type, std::size_t row_index,
                                        unsigned long long budget, unsigned long long seed);

}  // namespace weylwit

#endif
