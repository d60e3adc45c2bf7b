#pragma once

// The (u,v)-Calkin-Wilf tree of 2x2 matrices.
//
// Rooted at M, the left child of a vertex X is L_u X and the right child is
// R_v X. Rooted at I2, row n holds every monoid element of depth n exactly
// once. Cells are numbered 1..2^n from the left; cells 2j-1 and 2j of row
// n+1 are the children of cell j of row n.

#include "matmonoid/limits.hpp"
#include "matmonoid/matrix.hpp"
#include "matmonoid/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace matmonoid {

struct TreeRow {
    std::size_t depth = 0;
    std::vector<Mat2> cells;
};

enum class DominanceClass { ULowerDominant, VUpperDominant, Both, Neither };

char const* to_string(DominanceClass c);

/// (L_u m, R_v m).
std::pair<Mat2, Mat2> children(Mat2 const& m, MonoidParams const& p);

/// All 2^n depth-n descendants of root, left to right.
/// Throws LimitExceeded when 2^n exceeds limits.tree_cells.
TreeRow row(Mat2 const& root, MonoidParams const& p, std::size_t n,
            EnumerationLimits const& limits = {});

/// c(n, i) of the tree rooted at I2, 1 <= i <= 2^n, by walking the bits of
/// i-1 from the top (0 = left). Throws IndexOutOfRange. n must be < 64.
Mat2 cell(std::size_t n, std::uint64_t i, MonoidParams const& p);

/// Generator word of cell(n, i): the path read from the leaf back to the root.
Word cell_word(std::size_t n, std::uint64_t i);

/// u-lower-dominant: c >= ua and d >= ub; v-upper-dominant: a >= vc and b >= vd.
DominanceClass classify(Mat2 const& m, MonoidParams const& p);

/// Exact maximum entry over the whole depth-n row of the I2 tree, by
/// depth-first enumeration. This is the oracle for the extremal formulas.
Natural mu_row_bruteforce(MonoidParams const& p, std::size_t n,
                          EnumerationLimits const& limits = {});

/// Brute-force argmax of the depth-n row: the first cell (leftmost) attaining
/// the row maximum, as (index, matrix).
std::pair<std::uint64_t, Mat2> argmax_row_bruteforce(MonoidParams const& p, std::size_t n,
                                                     EnumerationLimits const& limits = {});

/// [[a,b],[c,d]] -> [[d,c],[b,a]]
Mat2 antitranspose(Mat2 const& m);

/// Entries of word_to_matrix(w) as polynomials in (X, Y) = (u, v).
BiMat2 entry_polys(Word const& w);

/// The antitransposed, variable-swapped symbolic matrix:
/// [f1 f2; f3 f4] -> [f4(Y,X) f3(Y,X); f2(Y,X) f1(Y,X)].
BiMat2 flip(BiMat2 const& f);

Mat2 evaluate(BiMat2 const& f, MonoidParams const& p);

} // namespace matmonoid
