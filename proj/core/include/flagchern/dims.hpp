#pragma once

#include <string>
#include <vector>

#include "flagchern/rational.hpp"

namespace flagchern {

/// The dimension vector (m_1, ..., m_{r+1}) of a complex flag manifold
/// F(m_1, ..., m_{r+1}), with its derived quantities:
///   total()     N = sum m_i, the ambient dimension
///   dimension() d = sum_{i<j} m_i m_j, the complex dimension of F
///   count()     N! / prod m_i!, the number of decompositions of {1..N}
///               (= the Euler characteristic of F)
class Dims {
public:
    /// Throws EmptyOrShortVector if fewer than two parts are given and
    /// NonPositivePart if any part is < 1.
    explicit Dims(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned num_blocks() const { return static_cast<unsigned>(parts_.size()); }  // r+1
    unsigned total() const { return total_; }                                     // N
    unsigned dimension() const { return dimension_; }                             // d
    const Integer& count() const { return count_; }

    /// Same flag dimensions listed in the opposite order. The underlying
    /// smooth manifold is unchanged, but the induced complex structure (and
    /// so the Chern numbers) may differ.
    Dims reversed() const;

    /// "F(1,1,2)" style rendering.
    std::string to_string() const;

    bool operator==(const Dims& other) const { return parts_ == other.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
    unsigned dimension_ = 0;
    Integer count_;
};

/// N! / prod m_i! by exact factorial arithmetic; equals the number of
/// decompositions, the number of circle-action fixed points, and the Euler
/// characteristic of the flag manifold.
Integer euler_characteristic(const Dims& dims);

}  // namespace flagchern
