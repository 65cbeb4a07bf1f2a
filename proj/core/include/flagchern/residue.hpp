#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagchern/decomposition.hpp"
#include "flagchern/dims.hpp"
#include "flagchern/partition.hpp"
#include "flagchern/sympoly.hpp"
#include "flagchern/weights.hpp"

namespace flagchern {

/// Knobs shared by the residue-sum operations.
///   trials   number of random assignments checked (>= 1)
///   seed     seeds the assignment generator; runs are reproducible
///   workers  decomposition-level parallelism; <= 0 means one per logical CPU
///   ceiling  refuse dims whose decomposition count exceeds this
struct ResidueOptions {
    int trials = 5;
    std::uint64_t seed = 0;
    int workers = 1;
    unsigned long ceiling = kDefaultDecompositionCeiling;
};

/// The residue sum R_f(x) = sum over decompositions I of f(W_I) / e(W_I),
/// where e(W_I) is the product of the weight entries. Exact; the result is
/// independent of how the decomposition set is split across workers.
///
/// R_f vanishes identically for homogeneous deg(f) < d and is an
/// assignment-independent constant for deg(f) = d (the Chern number of F when
/// f = c_lambda); this function computes the raw sum for any f.
Rational residue_sum(const Dims& dims, const SymPolyExpr& f, const Assignment& x,
                     int workers = 1, unsigned long ceiling = kDefaultDecompositionCeiling);

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

enum class Verdict {
    AllZero,      // every trial value is 0
    Constant,     // all trial values equal (nonzero)
    NonConstant,  // at least two trial values differ
};

/// Evidence object for the vanishing / constancy checks: every assignment
/// tried, every exact value obtained, and the classification.
struct ResidueReport {
    std::vector<Assignment> assignments;
    std::vector<Rational> values;  // values[i] = R_f(assignments[i])
    Verdict verdict = Verdict::AllZero;
    Rational constant_value;              // meaningful for AllZero / Constant
    std::pair<int, int> witness{-1, -1};  // differing trial indices for NonConstant

    bool all_zero() const { return verdict == Verdict::AllZero; }
    bool is_constant() const { return verdict != Verdict::NonConstant; }
};

/// Classifies a value list; exposed separately so the classification logic is
/// testable on synthetic data.
ResidueReport classify_values(std::vector<Assignment> assignments, std::vector<Rational> values);

// ---------------------------------------------------------------------------
// Chern numbers
// ---------------------------------------------------------------------------

struct ChernComputation {
    Integer value;
    ResidueReport report;
};

/// The Chern number of F(dims) for a partition of weight d: evaluates
/// R_{c_lambda} at the default assignment x_i = i and at `trials` further
/// random distinct-integer assignments, checks all values agree and are
/// integral, and returns the common value.
///
/// Throws PartitionWeightMismatch when weight(lambda) != d, and
/// NonConstantResidue / NonIntegerChernNumber on internal-consistency
/// failures (the constancy is a theorem; a violation means a bug).
ChernComputation compute_chern(const Dims& dims, const Partition& lambda,
                               const ResidueOptions& opts = {});

Integer chern_number(const Dims& dims, const Partition& lambda, const ResidueOptions& opts = {});

// ---------------------------------------------------------------------------
// Identity verification
// ---------------------------------------------------------------------------

/// Checks R_f = 0 for homogeneous deg(f) < d at `trials` random assignments.
/// Throws DegreeMismatch for inhomogeneous f and DegreeNotBelowD when
/// deg(f) >= d.
ResidueReport verify_vanishing(const Dims& dims, const SymPolyExpr& f,
                               const ResidueOptions& opts = {});

/// Checks R_f is assignment-independent for homogeneous deg(f) = d.
/// Throws DegreeMismatch unless deg(f) = d exactly.
ResidueReport verify_constant(const Dims& dims, const SymPolyExpr& f,
                              const ResidueOptions& opts = {});

/// The two degree-(d+1) polynomials whose residue sums vanish anyway:
///   FutakiC1     f = e_1^{d+1} (the Futaki-invariant residue; vanishes
///                because the flag manifold is Kaehler-Einstein)
///   TopTimesC1   f = e_d * e_1 (each summand reduces to c_1(W_I), and the
///                weights cancel in total)
enum class SpecialKind { FutakiC1, TopTimesC1 };

/// Builds the special polynomial for the given dims.
SymPolyExpr special_polynomial(const Dims& dims, SpecialKind which);

/// Checks R_f = 0 for the chosen special polynomial at `trials` random
/// assignments; expected verdict AllZero.
ResidueReport verify_special(const Dims& dims, SpecialKind which,
                             const ResidueOptions& opts = {});

}  // namespace flagchern
