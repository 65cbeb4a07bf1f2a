#include "flagchern/flaggeom.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "flagchern/errors.hpp"

namespace flagchern {

namespace {

constexpr double kRankTolerance = 1e-12;  // relative sigma_min cutoff
constexpr double kConditionCeiling = 1e8;
constexpr double kWeightResidual = 1e-6;

std::vector<unsigned> prefix_sums(const Dims& dims) {
    std::vector<unsigned> s(dims.num_blocks() + 1, 0);
    for (unsigned i = 0; i < dims.num_blocks(); ++i) s[i + 1] = s[i] + dims.parts()[i];
    return s;
}

// Column count M = N - m_{r+1}: the last block owns no columns.
unsigned column_count(const Dims& dims) { return dims.total() - dims.parts().back(); }

void check_shape(const FlagMatrix& flag) {
    const auto n = static_cast<Eigen::Index>(flag.dims.total());
    const auto m = static_cast<Eigen::Index>(column_count(flag.dims));
    if (flag.mat.rows() != n || flag.mat.cols() != m) {
        throw ShapeMismatch("flag matrix must be " + std::to_string(n) + "x" + std::to_string(m));
    }
}

void check_blocks(const Dims& dims, const Decomposition& decomp) {
    if (decomp.blocks().size() != dims.num_blocks()) {
        throw ShapeMismatch("decomposition has " + std::to_string(decomp.blocks().size()) +
                            " blocks; " + dims.to_string() + " needs " +
                            std::to_string(dims.num_blocks()));
    }
    for (unsigned i = 0; i < dims.num_blocks(); ++i) {
        if (decomp.blocks()[i].size() != dims.parts()[i]) {
            throw ShapeMismatch("decomposition block sizes do not match " + dims.to_string());
        }
    }
}

// Rows I_1, ..., I_i (in block order, ascending within a block) of the first
// s_i columns: the square system whose solvability defines chart membership.
ComplexMatrix leading_block(const FlagMatrix& flag, const Decomposition& decomp, unsigned upto) {
    const auto& blocks = decomp.blocks();
    std::vector<unsigned> rows;
    for (unsigned k = 0; k <= upto; ++k) rows.insert(rows.end(), blocks[k].begin(), blocks[k].end());
    ComplexMatrix lead(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        lead.row(static_cast<Eigen::Index>(r)) =
            flag.mat.row(rows[r] - 1).head(static_cast<Eigen::Index>(rows.size()));
    }
    return lead;
}

}  // namespace

std::vector<std::pair<int, int>> ChartCoords::pair_order(const Dims& dims) {
    std::vector<std::pair<int, int>> pairs;
    const int nblocks = static_cast<int>(dims.num_blocks());
    for (int i = 0; i < nblocks; ++i) {
        for (int j = i + 1; j < nblocks; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

const ComplexMatrix& ChartCoords::block(int i, int j) const {
    const int nblocks = static_cast<int>(dims.num_blocks());
    if (i < 0 || j <= i || j >= nblocks) {
        throw ShapeMismatch("no coordinate block (" + std::to_string(i) + "," + std::to_string(j) +
                            ")");
    }
    // Lexicographic pair index: all pairs starting below i, then the offset.
    int idx = 0;
    for (int k = 0; k < i; ++k) idx += nblocks - 1 - k;
    idx += j - i - 1;
    return blocks[static_cast<std::size_t>(idx)];
}

std::vector<Complex> ChartCoords::flatten() const {
    std::vector<Complex> out;
    out.reserve(dims.dimension());
    for (const ComplexMatrix& b : blocks) {
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            for (Eigen::Index r = 0; r < b.rows(); ++r) out.push_back(b(r, c));
        }
    }
    return out;
}

FlagMatrix fixed_point_matrix(const Dims& dims, const Decomposition& decomp) {
    check_blocks(dims, decomp);
    const unsigned n = dims.total();
    const std::vector<unsigned> start = prefix_sums(dims);
    ComplexMatrix mat = ComplexMatrix::Zero(n, column_count(dims));
    for (unsigned i = 0; i + 1 < dims.num_blocks(); ++i) {
        const auto& block = decomp.blocks()[i];
        for (unsigned p = 0; p < block.size(); ++p) {
            mat(block[p] - 1, start[i] + p) = 1.0;
        }
    }
    return FlagMatrix{dims, std::move(mat)};
}

FlagMatrix assemble_chart(const Decomposition& decomp, const ChartCoords& coords) {
    const Dims& dims = coords.dims;
    check_blocks(dims, decomp);
    const auto pairs = ChartCoords::pair_order(dims);
    if (coords.blocks.size() != pairs.size()) {
        throw ShapeMismatch("expected " + std::to_string(pairs.size()) + " coordinate blocks");
    }
    FlagMatrix flag = fixed_point_matrix(dims, decomp);
    const std::vector<unsigned> start = prefix_sums(dims);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const ComplexMatrix& b = coords.blocks[p];
        const auto& rows = decomp.blocks()[static_cast<std::size_t>(j)];
        const auto& cols = decomp.blocks()[static_cast<std::size_t>(i)];
        if (b.rows() != static_cast<Eigen::Index>(rows.size()) ||
            b.cols() != static_cast<Eigen::Index>(cols.size())) {
            throw ShapeMismatch("coordinate block (" + std::to_string(i) + "," +
                                std::to_string(j) + ") has the wrong shape");
        }
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            for (Eigen::Index r = 0; r < b.rows(); ++r) {
                flag.mat(rows[static_cast<std::size_t>(r)] - 1,
                         start[static_cast<unsigned>(i)] + static_cast<unsigned>(c)) = b(r, c);
            }
        }
    }
    return flag;
}

ChartCoords random_chart_coords(const Dims& dims, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> modulus(0.5, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    ChartCoords coords{dims, {}};
    for (const auto& [i, j] : ChartCoords::pair_order(dims)) {
        ComplexMatrix b(dims.parts()[static_cast<unsigned>(j)],
                        dims.parts()[static_cast<unsigned>(i)]);
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            for (Eigen::Index r = 0; r < b.rows(); ++r) {
                b(r, c) = std::polar(modulus(rng), phase(rng));
            }
        }
        coords.blocks.push_back(std::move(b));
    }
    return coords;
}

ComplexMatrix random_block_gauge(const Dims& dims, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    const unsigned m = column_count(dims);
    const std::vector<unsigned> start = prefix_sums(dims);
    ComplexMatrix g = ComplexMatrix::Identity(m, m);
    // Block-upper-triangular in the column blocks: G_ij nonzero only for
    // i <= j, so right-multiplication preserves every partial column span.
    for (unsigned i = 0; i + 1 < dims.num_blocks(); ++i) {
        for (unsigned j = i; j + 1 < dims.num_blocks(); ++j) {
            for (unsigned r = start[i]; r < start[i + 1]; ++r) {
                for (unsigned c = start[j]; c < start[j + 1]; ++c) {
                    const double scale = (i == j) ? 0.3 : 1.0;  // keep diagonal blocks invertible
                    g(r, c) += scale * Complex(entry(rng), entry(rng));
                }
            }
        }
    }
    return g;
}

bool chart_membership(const FlagMatrix& flag, const Decomposition& decomp) {
    check_shape(flag);
    check_blocks(flag.dims, decomp);
    for (unsigned i = 0; i + 1 < flag.dims.num_blocks(); ++i) {
        const ComplexMatrix lead = leading_block(flag, decomp, i);
        Eigen::JacobiSVD<ComplexMatrix> svd(lead);
        const auto& sigma = svd.singularValues();
        const double smax = sigma(0);
        const double smin = sigma(sigma.size() - 1);
        if (!(smax > 0) || smin <= kRankTolerance * smax) return false;
    }
    return true;
}

ChartCoords normalize_chart(const FlagMatrix& flag, const Decomposition& decomp) {
    check_shape(flag);
    const Dims& dims = flag.dims;
    check_blocks(dims, decomp);
    const std::vector<unsigned> start = prefix_sums(dims);
    const auto& blocks = decomp.blocks();

    // One normalized column block per i: solve the leading system so rows
    // I_1..I_{i-1} vanish and rows I_i become the identity, then read the
    // coordinates off rows I_j, j > i.
    std::vector<ComplexMatrix> normalized;
    normalized.reserve(dims.num_blocks() - 1);
    for (unsigned i = 0; i + 1 < dims.num_blocks(); ++i) {
        const unsigned si = start[i + 1];
        const unsigned mi = dims.parts()[i];
        const ComplexMatrix lead = leading_block(flag, decomp, i);
        Eigen::JacobiSVD<ComplexMatrix> svd(lead, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sigma = svd.singularValues();
        const double smax = sigma(0);
        const double smin = sigma(sigma.size() - 1);
        if (!(smax > 0) || smin <= kRankTolerance * smax) {
            throw NotInChart("flag is outside the chart of " + decomp.to_string() +
                             ": leading block " + std::to_string(i + 1) + " is singular");
        }
        if (smax / smin > kConditionCeiling) {
            throw IllConditioned("leading block " + std::to_string(i + 1) +
                                 " has condition number " + std::to_string(smax / smin));
        }
        ComplexMatrix rhs = ComplexMatrix::Zero(si, mi);
        rhs.bottomRows(mi) = ComplexMatrix::Identity(mi, mi);
        const ComplexMatrix q = svd.solve(rhs);
        normalized.push_back(flag.mat.leftCols(si) * q);  // N x m_i
    }

    ChartCoords coords{dims, {}};
    for (const auto& [i, j] : ChartCoords::pair_order(dims)) {
        const auto& rows = blocks[static_cast<std::size_t>(j)];
        const unsigned mi = dims.parts()[static_cast<unsigned>(i)];
        ComplexMatrix b(rows.size(), mi);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            b.row(static_cast<Eigen::Index>(r)) =
                normalized[static_cast<std::size_t>(i)].row(rows[r] - 1);
        }
        coords.blocks.push_back(std::move(b));
    }
    return coords;
}

FlagMatrix circle_act(const FlagMatrix& flag, const std::vector<long>& exponents, Complex t) {
    check_shape(flag);
    if (exponents.size() != flag.dims.total()) {
        throw ShapeMismatch("exponent vector has " + std::to_string(exponents.size()) +
                            " entries; expected " + std::to_string(flag.dims.total()));
    }
    if (t == Complex(0.0, 0.0)) throw ZeroScalar("the acting scalar must be nonzero");
    auto ipow = [](Complex base, long k) {
        Complex out(1.0, 0.0);
        const bool invert = k < 0;
        for (unsigned long e = invert ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
             e > 0; --e) {
            out *= base;
        }
        return invert ? Complex(1.0, 0.0) / out : out;
    };
    FlagMatrix acted = flag;
    for (unsigned row = 0; row < flag.dims.total(); ++row) {
        acted.mat.row(row) *= ipow(t, exponents[row]);
    }
    return acted;
}

std::vector<long> numeric_weights(const Dims& dims, const Decomposition& decomp,
                                  const std::vector<long>& exponents, std::mt19937_64& rng) {
    constexpr int kAttempts = 3;
    const Complex t(2.0, 0.0);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const ChartCoords coords = random_chart_coords(dims, rng);
        const FlagMatrix flag = assemble_chart(decomp, coords);
        const FlagMatrix acted = circle_act(flag, exponents, t);
        const ChartCoords after = normalize_chart(acted, decomp);

        const std::vector<Complex> before_flat = coords.flatten();
        const std::vector<Complex> after_flat = after.flatten();
        std::vector<long> weights(before_flat.size(), 0);
        bool clean = true;
        for (std::size_t s = 0; s < before_flat.size(); ++s) {
            const Complex ratio = after_flat[s] / before_flat[s];
            const double magnitude = std::abs(ratio);
            if (!(magnitude > 0) || !std::isfinite(magnitude)) {
                clean = false;
                break;
            }
            const double exponent = std::log2(magnitude);
            const long w = std::lround(exponent);
            // ratio must be t^w on the nose, up to roundoff
            const double residual = std::abs(ratio - Complex(std::exp2(static_cast<double>(w)), 0.0)) /
                                    std::exp2(static_cast<double>(w));
            if (std::abs(exponent - static_cast<double>(w)) >= kWeightResidual ||
                residual >= kWeightResidual) {
                clean = false;
                break;
            }
            weights[s] = w;
        }
        if (clean) return weights;
    }
    throw WeightExtractionFailed("weight recovery at " + decomp.to_string() +
                                 " did not converge after " + std::to_string(kAttempts) +
                                 " attempts");
}

}  // namespace flagchern
