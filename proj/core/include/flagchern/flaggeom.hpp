#pragma once

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "flagchern/decomposition.hpp"
#include "flagchern/dims.hpp"

namespace flagchern {

// Floating-point model of the flag manifold used to cross-check the exact
// combinatorics: points are matrices, the torus action scales rows, and the
// isotropy weights at a fixed point are recovered numerically from how chart
// coordinates transform.

using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// An N x M matrix of full column rank, M = m_1 + ... + m_r (the final block
/// m_{r+1} contributes no columns: the top space C^N is not represented).
/// Column blocks of widths m_1, ..., m_r present the flag: V_i is the span of
/// the first m_1 + ... + m_i columns.
struct FlagMatrix {
    Dims dims;
    ComplexMatrix mat;
};

/// Chart coordinates around the fixed point p_I: for each pair i < j one
/// m_j x m_i block whose (b, a) entry sits in matrix row I_j[b] and belongs to
/// column a of column block i. flatten() walks pairs (i, j) lexicographically
/// and each block in column-major order (alpha ascending, then beta), which is
/// exactly the slot order of weight_multiset(); slot s of the flattened vector
/// transforms with weight s of the multiset.
struct ChartCoords {
    Dims dims;
    std::vector<ComplexMatrix> blocks;  // lex order over pairs (i, j), i < j

    /// All pairs (i, j) with 0 <= i < j < num_blocks, lexicographic.
    static std::vector<std::pair<int, int>> pair_order(const Dims& dims);

    const ComplexMatrix& block(int i, int j) const;
    std::vector<Complex> flatten() const;  // size = dims.dimension()
};

/// The coordinate flag p_I as a 0/1 matrix: column block i (i <= r) has
/// identity rows at the indices in I_i and zeros elsewhere, so the columns are
/// the standard basis vectors indexed by I_1, then I_2, ..., then I_r.
FlagMatrix fixed_point_matrix(const Dims& dims, const Decomposition& decomp);

/// Builds the flag matrix in normalized chart form: column block i carries the
/// identity on rows I_i, the coordinate blocks on rows I_j for j > i, and
/// zeros on rows I_j for j < i. Throws ShapeMismatch if the blocks do not
/// match dims.
FlagMatrix assemble_chart(const Decomposition& decomp, const ChartCoords& coords);

/// Random coordinates with moduli in [0.5, 1.5] and uniform phases — bounded
/// away from 0 so ratios of transformed to original entries are well defined.
ChartCoords random_chart_coords(const Dims& dims, std::mt19937_64& rng);

/// Random invertible block-upper-triangular gauge G (unit diagonal blocks
/// perturbed, entries O(1)); A and A*G present the same flag, so
/// normalize_chart must agree on both.
ComplexMatrix random_block_gauge(const Dims& dims, std::mt19937_64& rng);

/// True when the flag lies in the chart of p_I: every leading block system is
/// solvable (smallest singular value > 1e-12 relative to the largest).
bool chart_membership(const FlagMatrix& flag, const Decomposition& decomp);

/// Recovers the chart coordinates of a flag around p_I. For each column block
/// i it solves the leading system (rows I_1, ..., I_i of the first
/// m_1 + ... + m_i columns) for the unique column operations producing
/// [0; ...; 0; E_{m_i}] on those rows; the remaining rows are the coordinates.
/// Throws NotInChart when a leading block is singular and IllConditioned when
/// its condition number exceeds 1e8.
ChartCoords normalize_chart(const FlagMatrix& flag, const Decomposition& decomp);

/// The circle action with exponent vector k: scales row alpha by t^{k_alpha}.
/// Throws ShapeMismatch when k has the wrong length and ZeroScalar for t = 0.
FlagMatrix circle_act(const FlagMatrix& flag, const std::vector<long>& exponents, Complex t);

/// Extracts the d isotropy weights of the action at p_I numerically: starts
/// from random chart coordinates, acts with t = 2, re-normalizes, and reads
/// each weight as round(log2 |new/old|) per slot, requiring the residual
/// |log2|new/old| - w| to stay below 1e-6. Retries up to 3 times with fresh
/// coordinates before throwing WeightExtractionFailed. The result is in
/// canonical slot order, so it must equal the exact multiset
/// weight_multiset(decomp, k) entry by entry.
std::vector<long> numeric_weights(const Dims& dims, const Decomposition& decomp,
                                  const std::vector<long>& exponents, std::mt19937_64& rng);

}  // namespace flagchern
