#include "flagchern/partition.hpp"

#include <algorithm>
#include <functional>

#include "flagchern/errors.hpp"

namespace flagchern {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) {
        if (p < 1) throw NonPositivePart("partition parts must be >= 1");
        weight_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::vector<Partition> partitions_of(unsigned w) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    // Descending-lex generation: place parts left to right, each no larger
    // than its predecessor, largest choices first.
    std::function<void(unsigned, unsigned)> place = [&](unsigned remaining, unsigned cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            place(remaining - part, part);
            current.pop_back();
        }
    };
    place(w, w == 0 ? 1 : w);
    return out;
}

}  // namespace flagchern
