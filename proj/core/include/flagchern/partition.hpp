#pragma once

#include <string>
#include <vector>

namespace flagchern {

/// An integer partition: positive parts in non-increasing order.
/// Indexes a Chern number c_lambda when its weight equals the manifold
/// dimension d.
class Partition {
public:
    Partition() = default;

    /// Parts are sorted into canonical non-increasing order.
    /// Throws NonPositivePart if any part is < 1.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }

    /// "(1,1,2)" style rendering, largest part first.
    std::string to_string() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// All partitions of weight w, in descending lexicographic order:
/// (w), (w-1,1), ..., (1,...,1). partitions_of(0) is the single empty partition.
std::vector<Partition> partitions_of(unsigned w);

}  // namespace flagchern
