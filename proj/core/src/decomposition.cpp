#include "flagchern/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "flagchern/errors.hpp"

namespace flagchern {

Decomposition::Decomposition(const Dims& dims, std::vector<std::vector<unsigned>> blocks)
    : blocks_(std::move(blocks)) {
    const unsigned n = dims.total();
    if (blocks_.size() != dims.num_blocks()) {
        throw InvalidDecomposition("expected " + std::to_string(dims.num_blocks()) + " blocks");
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        auto& block = blocks_[i];
        if (block.size() != dims.parts()[i]) {
            throw InvalidDecomposition("block " + std::to_string(i + 1) + " must have " +
                                       std::to_string(dims.parts()[i]) + " elements");
        }
        std::sort(block.begin(), block.end());
        for (unsigned v : block) {
            if (v < 1 || v > n) {
                throw InvalidDecomposition("element " + std::to_string(v) + " outside 1.." +
                                           std::to_string(n));
            }
            if (seen[v]) {
                throw InvalidDecomposition("element " + std::to_string(v) + " appears twice");
            }
            seen[v] = true;
        }
    }
}

Decomposition Decomposition::reversed(const Dims& reversed_dims) const {
    std::vector<std::vector<unsigned>> rev(blocks_.rbegin(), blocks_.rend());
    return Decomposition(reversed_dims, std::move(rev));
}

std::string Decomposition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ',';
        out += '{';
        for (std::size_t k = 0; k < blocks_[i].size(); ++k) {
            if (k) out += ',';
            out += std::to_string(blocks_[i][k]);
        }
        out += '}';
    }
    out += ')';
    return out;
}

void for_each_decomposition(const Dims& dims,
                            const std::function<void(const Decomposition&)>& visit) {
    const unsigned n = dims.total();
    const unsigned nblocks = dims.num_blocks();
    std::vector<bool> used(n + 1, false);
    std::vector<std::vector<unsigned>> blocks(nblocks);

    // Fill block b with an ascending m_b-subset of the unused values, smallest
    // candidates first; recursing over blocks in order yields the sequences in
    // lexicographic order on the block tuple.
    auto fill = [&](auto&& self, unsigned b) -> void {
        if (b == nblocks) {
            visit(Decomposition(Decomposition::Unchecked{}, blocks));
            return;
        }
        const unsigned need = dims.parts()[b];
        auto pick = [&](auto&& pick_self, unsigned have, unsigned min_value) -> void {
            if (have == need) {
                self(self, b + 1);
                return;
            }
            for (unsigned v = min_value; v <= n; ++v) {
                if (used[v]) continue;
                used[v] = true;
                blocks[b].push_back(v);
                pick_self(pick_self, have + 1, v + 1);
                blocks[b].pop_back();
                used[v] = false;
            }
        };
        pick(pick, 0, 1);
    };
    fill(fill, 0);
}

std::vector<Decomposition> enumerate_decompositions(const Dims& dims, unsigned long ceiling) {
    if (dims.count() > ceiling) {
        throw TooManyDecompositions(dims.to_string() + " has " + dims.count().get_str() +
                                    " decompositions; ceiling is " + std::to_string(ceiling));
    }
    std::vector<Decomposition> out;
    out.reserve(dims.count().get_ui());
    for_each_decomposition(dims, [&](const Decomposition& dec) { out.push_back(dec); });
    return out;
}

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Number of ways to finish the enumeration once blocks 0..b have been chosen:
// decompositions of the remaining n values into parts m_{b+1}, ..., m_r.
Integer tail_count(const Dims& dims, unsigned after_block, unsigned remaining) {
    Integer count;
    mpz_fac_ui(count.get_mpz_t(), remaining);
    Integer fac;
    for (unsigned b = after_block + 1; b < dims.num_blocks(); ++b) {
        mpz_fac_ui(fac.get_mpz_t(), dims.parts()[b]);
        count /= fac;
    }
    return count;
}

}  // namespace

Decomposition unrank_decomposition(const Dims& dims, const Integer& rank) {
    if (rank < 0 || rank >= dims.count()) {
        throw InvalidDecomposition("rank " + rank.get_str() + " outside 0.." +
                                   Integer(dims.count() - 1).get_str());
    }
    const unsigned n = dims.total();
    std::vector<unsigned> pool(n);
    std::iota(pool.begin(), pool.end(), 1u);

    Integer rest = rank;
    std::vector<std::vector<unsigned>> blocks(dims.num_blocks());
    for (unsigned b = 0; b + 1 < dims.num_blocks(); ++b) {
        const unsigned m = dims.parts()[b];
        const Integer tail = tail_count(dims, b, static_cast<unsigned>(pool.size()) - m);
        Integer subset_rank = rest / tail;
        rest %= tail;

        // Combinadic unranking of the subset_rank-th m-subset of the pool in
        // lexicographic order.
        std::vector<unsigned> chosen;
        unsigned idx = 0;
        unsigned need = m;
        while (need > 0) {
            const Integer with_this =
                binomial(static_cast<unsigned>(pool.size()) - idx - 1, need - 1);
            if (subset_rank < with_this) {
                chosen.push_back(pool[idx]);
                --need;
                ++idx;
            } else {
                subset_rank -= with_this;
                ++idx;
            }
        }
        blocks[b] = chosen;
        std::vector<unsigned> next_pool;
        next_pool.reserve(pool.size() - m);
        std::set_difference(pool.begin(), pool.end(), chosen.begin(), chosen.end(),
                            std::back_inserter(next_pool));
        pool = std::move(next_pool);
    }
    blocks.back() = pool;
    return Decomposition(Decomposition::Unchecked{}, std::move(blocks));
}

Integer rank_of_decomposition(const Dims& dims, const Decomposition& dec) {
    if (dec.blocks().size() != dims.num_blocks()) {
        throw InvalidDecomposition("decomposition does not match the dimension vector");
    }
    const unsigned n = dims.total();
    std::vector<unsigned> pool(n);
    std::iota(pool.begin(), pool.end(), 1u);

    Integer rank(0);
    for (unsigned b = 0; b + 1 < dims.num_blocks(); ++b) {
        const auto& block = dec.blocks()[b];
        if (block.size() != dims.parts()[b]) {
            throw InvalidDecomposition("decomposition does not match the dimension vector");
        }
        // Lexicographic rank of the block as a subset of the current pool.
        Integer subset_rank(0);
        unsigned idx = 0;
        for (unsigned c = 0; c < block.size(); ++c) {
            const unsigned need = static_cast<unsigned>(block.size()) - c;
            while (idx < pool.size() && pool[idx] != block[c]) {
                subset_rank += binomial(static_cast<unsigned>(pool.size()) - idx - 1, need - 1);
                ++idx;
            }
            if (idx == pool.size()) {
                throw InvalidDecomposition("block element missing from the remaining pool");
            }
            ++idx;
        }
        const unsigned m = dims.parts()[b];
        rank += subset_rank * tail_count(dims, b, static_cast<unsigned>(pool.size()) - m);

        std::vector<unsigned> next_pool;
        next_pool.reserve(pool.size() - m);
        std::set_difference(pool.begin(), pool.end(), block.begin(), block.end(),
                            std::back_inserter(next_pool));
        pool = std::move(next_pool);
    }
    return rank;
}

}  // namespace flagchern
