#include "flagchern/weights.hpp"

#include <set>
#include <string>

#include "flagchern/errors.hpp"

namespace flagchern {

Assignment::Assignment(std::vector<Rational> values) : values_(std::move(values)) {
    std::set<Rational> distinct(values_.begin(), values_.end());
    if (distinct.size() != values_.size()) {
        throw DuplicateAssignmentValue("assignment values must be pairwise distinct");
    }
}

Assignment Assignment::standard(unsigned n) {
    std::vector<Rational> values;
    values.reserve(n);
    for (unsigned i = 1; i <= n; ++i) values.emplace_back(i);
    return Assignment(std::move(values));
}

Assignment Assignment::random_distinct_integers(unsigned n, std::mt19937_64& rng, long lo,
                                                long hi) {
    if (hi < lo || static_cast<unsigned long>(hi - lo) + 1 < n) {
        throw std::invalid_argument("range too small for distinct values");
    }
    std::uniform_int_distribution<long> pick(lo, hi);
    std::set<long> seen;
    std::vector<Rational> values;
    values.reserve(n);
    while (values.size() < n) {
        const long v = pick(rng);
        if (seen.insert(v).second) values.emplace_back(v);
    }
    return Assignment(std::move(values));
}

std::string Assignment::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ", ";
        out += flagchern::to_string(values_[i]);
    }
    out += ')';
    return out;
}

WeightMultiset weight_multiset(const Decomposition& dec, const Assignment& x) {
    const auto& blocks = dec.blocks();
    std::size_t n = 0;
    for (const auto& block : blocks) n += block.size();
    if (x.size() != n) {
        throw ShapeMismatch("assignment has " + std::to_string(x.size()) + " values; expected " +
                            std::to_string(n));
    }
    WeightMultiset w;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            for (unsigned a : blocks[i]) {
                for (unsigned b : blocks[j]) {
                    w.push_back(x[b - 1] - x[a - 1]);  // -x_a + x_b
                }
            }
        }
    }
    return w;
}

Rational weight_product(const WeightMultiset& w) {
    Rational product(1);
    for (const Rational& entry : w) product *= entry;
    return product;
}

}  // namespace flagchern
