#pragma once

#include <random>
#include <span>
#include <vector>

#include "flagchern/decomposition.hpp"
#include "flagchern/rational.hpp"

namespace flagchern {

/// The N values x_1, ..., x_N substituted into the residue sum.
/// Values must be pairwise distinct so that every e(W_I) is nonzero.
class Assignment {
public:
    /// Throws DuplicateAssignmentValue if two values coincide.
    explicit Assignment(std::vector<Rational> values);

    /// The default assignment x_i = i.
    static Assignment standard(unsigned n);

    /// n distinct integers drawn uniformly from [lo, hi] (rejection on
    /// collision). Deterministic for a given generator state.
    static Assignment random_distinct_integers(unsigned n, std::mt19937_64& rng, long lo = -1000,
                                               long hi = 1000);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

    /// "(1, 2, 3, 4)" style rendering.
    std::string to_string() const;

private:
    std::vector<Rational> values_;
};

/// The d tangent weights at the fixed point P_I: one entry -x_a + x_b for
/// every a in I_i, b in I_j with i < j. Duplicates are kept; the multiset
/// cardinality is always exactly d.
///
/// Entries are listed in the canonical slot order: pairs (i,j) in
/// lexicographic order, then (a, b) lexicographic within the pair. This is
/// the same order in which chart coordinates are flattened, so slot s of the
/// multiset is the scaling exponent of chart coordinate slot s.
using WeightMultiset = std::vector<Rational>;

WeightMultiset weight_multiset(const Decomposition& dec, const Assignment& x);

/// Product of the weight entries, e(W_I); nonzero for distinct assignments.
Rational weight_product(const WeightMultiset& w);

}  // namespace flagchern
