#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flagchern/dims.hpp"

namespace flagchern {

/// An ordered tuple (I_1, ..., I_{r+1}) of disjoint index sets partitioning
/// {1, ..., N} with |I_i| = m_i. Blocks are kept sorted ascending, 1-based.
/// Decompositions index the fixed points of the circle action.
class Decomposition {
public:
    /// Validating constructor for user-supplied blocks.
    /// Throws InvalidDecomposition unless blocks partition {1..N} with the
    /// correct sizes.
    Decomposition(const Dims& dims, std::vector<std::vector<unsigned>> blocks);

    const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }

    /// Reversed block order; a decomposition for dims.reversed().
    Decomposition reversed(const Dims& reversed_dims) const;

    /// "({1},{2},{3,4})" style rendering.
    std::string to_string() const;

    bool operator==(const Decomposition& other) const { return blocks_ == other.blocks_; }

private:
    struct Unchecked {};
    Decomposition(Unchecked, std::vector<std::vector<unsigned>> blocks)
        : blocks_(std::move(blocks)) {}

    friend void for_each_decomposition(const Dims&,
                                       const std::function<void(const Decomposition&)>&);
    friend Decomposition unrank_decomposition(const Dims&, const Integer&);

    std::vector<std::vector<unsigned>> blocks_;
};

/// Guard for runaway enumerations; enumerate_decompositions refuses counts
/// beyond the ceiling.
inline constexpr unsigned long kDefaultDecompositionCeiling = 10'000'000;

/// Visits every decomposition exactly once, in lexicographic order on
/// (I_1, ..., I_{r+1}) with each block read as its ascending element list.
/// The order is deterministic: two runs yield identical sequences.
void for_each_decomposition(const Dims& dims,
                            const std::function<void(const Decomposition&)>& visit);

/// Materializes the full enumeration in the same order.
/// Throws TooManyDecompositions when dims.count() exceeds the ceiling.
std::vector<Decomposition> enumerate_decompositions(
    const Dims& dims, unsigned long ceiling = kDefaultDecompositionCeiling);

/// The rank-th decomposition (0-based) in enumeration order, computed
/// directly by combinadic unranking; O(N * r) with exact arithmetic.
Decomposition unrank_decomposition(const Dims& dims, const Integer& rank);

/// Inverse of unrank_decomposition.
Integer rank_of_decomposition(const Dims& dims, const Decomposition& dec);

}  // namespace flagchern
