#pragma once

#include <vector>

namespace flagchern::cli {

// Reference dataset for F(1,1,2) at x_i = i: the 12 decompositions in
// enumeration order with their weight multisets (canonical slot order),
// weight products e, and first elementary symmetric values c1, plus the two
// residue sums sum c1^5/e and sum c1^6/e. The `appendix` command recomputes
// everything from scratch and diffs against this table.
struct AppendixRow {
    std::vector<std::vector<unsigned>> blocks;
    std::vector<long> weights;
    long e;
    long c1;
};

struct AppendixGolden {
    std::vector<AppendixRow> rows;
    long c1_d_sum;   // sum over rows of c1^d / e, d = 5
    long c1_d1_sum;  // sum over rows of c1^(d+1) / e
};

inline const AppendixGolden& appendix_golden() {
    static const AppendixGolden golden{
        {
            {{{1}, {2}, {3, 4}}, {1, 2, 3, 1, 2}, 12, 9},
            {{{1}, {3}, {2, 4}}, {2, 1, 3, -1, 1}, -6, 6},
            {{{1}, {4}, {2, 3}}, {3, 1, 2, -2, -1}, 12, 3},
            {{{2}, {1}, {3, 4}}, {-1, 1, 2, 2, 3}, -12, 7},
            {{{2}, {3}, {1, 4}}, {1, -1, 2, -2, 1}, 4, 1},
            {{{2}, {4}, {1, 3}}, {2, -1, 1, -3, -1}, -6, -2},
            {{{3}, {1}, {2, 4}}, {-2, -1, 1, 1, 3}, 6, 2},
            {{{3}, {2}, {1, 4}}, {-1, -2, 1, -1, 2}, -4, -1},
            {{{3}, {4}, {1, 2}}, {1, -2, -1, -3, -2}, 12, -7},
            {{{4}, {1}, {2, 3}}, {-3, -2, -1, 1, 2}, -12, -3},
            {{{4}, {2}, {1, 3}}, {-2, -3, -1, -1, 1}, 6, -6},
            {{{4}, {3}, {1, 2}}, {-1, -3, -2, -2, -1}, -12, -9},
        },
        4500,
        0,
    };
    return golden;
}

}  // namespace flagchern::cli
