#include "flagchern/dims.hpp"

#include <algorithm>

#include "flagchern/errors.hpp"

namespace flagchern {

Dims::Dims(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) {
        throw EmptyOrShortVector("a flag manifold needs at least two dimension parts");
    }
    for (unsigned m : parts_) {
        if (m < 1) throw NonPositivePart("dimension parts must be >= 1");
        total_ += m;
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (std::size_t j = i + 1; j < parts_.size(); ++j) {
            dimension_ += parts_[i] * parts_[j];
        }
    }
    mpz_fac_ui(count_.get_mpz_t(), total_);
    Integer fac;
    for (unsigned m : parts_) {
        mpz_fac_ui(fac.get_mpz_t(), m);
        count_ /= fac;  // exact: binomial products divide N!
    }
}

Dims Dims::reversed() const {
    std::vector<unsigned> rev(parts_.rbegin(), parts_.rend());
    return Dims(std::move(rev));
}

std::string Dims::to_string() const {
    std::string out = "F(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

Integer euler_characteristic(const Dims& dims) { return dims.count(); }

}  // namespace flagchern
