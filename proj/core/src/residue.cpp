#include "flagchern/residue.hpp"

#include <atomic>
#include <string>
#include <thread>

#include "flagchern/errors.hpp"

namespace flagchern {

namespace {

Rational residue_term(const SymPolyExpr& f, const Assignment& x, const Decomposition& dec) {
    const WeightMultiset w = weight_multiset(dec, x);
    return f.evaluate(w) / weight_product(w);
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

Rational residue_sum(const Dims& dims, const SymPolyExpr& f, const Assignment& x, int workers,
                     unsigned long ceiling) {
    if (x.size() != dims.total()) {
        throw ShapeMismatch("assignment has " + std::to_string(x.size()) + " values; " +
                            dims.to_string() + " needs " + std::to_string(dims.total()));
    }
    if (dims.count() > ceiling) {
        throw TooManyDecompositions(dims.to_string() + " has " + dims.count().get_str() +
                                    " decompositions; ceiling is " + std::to_string(ceiling));
    }
    const unsigned long total = dims.count().get_ui();
    unsigned long nworkers = static_cast<unsigned long>(resolve_workers(workers));
    if (nworkers > total) nworkers = total ? total : 1;

    if (nworkers <= 1) {
        Rational sum(0);
        for_each_decomposition(
            dims, [&](const Decomposition& dec) { sum += residue_term(f, x, dec); });
        return sum;
    }

    // Contiguous chunks handed out by an atomic cursor; every worker sums its
    // own exact partial, so the final value is identical for any worker count.
    const unsigned long chunk = std::max(1ul, total / (4 * nworkers));
    std::atomic<unsigned long> cursor{0};
    std::vector<Rational> partial(nworkers, Rational(0));
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (unsigned long t = 0; t < nworkers; ++t) {
        pool.emplace_back([&, t] {
            for (;;) {
                const unsigned long begin = cursor.fetch_add(chunk);
                if (begin >= total) return;
                const unsigned long end = std::min(total, begin + chunk);
                for (unsigned long i = begin; i < end; ++i) {
                    const Decomposition dec = unrank_decomposition(dims, Integer(i));
                    partial[t] += residue_term(f, x, dec);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    Rational sum(0);
    for (const Rational& p : partial) sum += p;
    return sum;
}

ResidueReport classify_values(std::vector<Assignment> assignments, std::vector<Rational> values) {
    ResidueReport report;
    report.assignments = std::move(assignments);
    report.values = std::move(values);
    report.constant_value = 0;
    if (report.values.empty()) {
        report.verdict = Verdict::AllZero;
        return report;
    }
    for (std::size_t i = 1; i < report.values.size(); ++i) {
        if (report.values[i] != report.values[0]) {
            report.verdict = Verdict::NonConstant;
            report.witness = {0, static_cast<int>(i)};
            return report;
        }
    }
    report.constant_value = report.values[0];
    report.verdict = (report.constant_value == 0) ? Verdict::AllZero : Verdict::Constant;
    return report;
}

namespace {

std::vector<Assignment> make_assignments(const Dims& dims, const ResidueOptions& opts,
                                         bool include_standard) {
    std::mt19937_64 rng(opts.seed);
    std::vector<Assignment> out;
    if (include_standard) out.push_back(Assignment::standard(dims.total()));
    for (int t = 0; t < opts.trials; ++t) {
        out.push_back(Assignment::random_distinct_integers(dims.total(), rng));
    }
    return out;
}

ResidueReport run_trials(const Dims& dims, const SymPolyExpr& f, const ResidueOptions& opts,
                         bool include_standard) {
    std::vector<Assignment> assignments = make_assignments(dims, opts, include_standard);
    std::vector<Rational> values;
    values.reserve(assignments.size());
    for (const Assignment& x : assignments) {
        values.push_back(residue_sum(dims, f, x, opts.workers, opts.ceiling));
    }
    return classify_values(std::move(assignments), std::move(values));
}

}  // namespace

ChernComputation compute_chern(const Dims& dims, const Partition& lambda,
                               const ResidueOptions& opts) {
    if (lambda.weight() != dims.dimension()) {
        throw PartitionWeightMismatch("partition weight " + std::to_string(lambda.weight()) +
                                      " != dim " + dims.to_string() + " = " +
                                      std::to_string(dims.dimension()));
    }
    ChernComputation out{Integer(0),
                         run_trials(dims, SymPolyExpr::c_lambda(lambda), opts, true)};
    if (!out.report.is_constant()) {
        const auto [i, j] = out.report.witness;
        throw NonConstantResidue("residue of c_" + lambda.to_string() + " on " + dims.to_string() +
                                 " differs between " + out.report.assignments[i].to_string() +
                                 " and " + out.report.assignments[j].to_string());
    }
    if (!is_integer(out.report.constant_value)) {
        throw NonIntegerChernNumber("residue of c_" + lambda.to_string() + " on " +
                                    dims.to_string() + " is " +
                                    to_string(out.report.constant_value));
    }
    out.value = out.report.constant_value.get_num();
    return out;
}

Integer chern_number(const Dims& dims, const Partition& lambda, const ResidueOptions& opts) {
    return compute_chern(dims, lambda, opts).value;
}

ResidueReport verify_vanishing(const Dims& dims, const SymPolyExpr& f,
                               const ResidueOptions& opts) {
    const auto deg = f.homogeneous_degree();
    if (!deg) throw DegreeMismatch("polynomial is not homogeneous: " + f.to_string());
    if (*deg >= dims.dimension()) {
        throw DegreeNotBelowD("degree " + std::to_string(*deg) + " is not below dim " +
                              dims.to_string() + " = " + std::to_string(dims.dimension()));
    }
    return run_trials(dims, f, opts, false);
}

ResidueReport verify_constant(const Dims& dims, const SymPolyExpr& f, const ResidueOptions& opts) {
    const auto deg = f.homogeneous_degree();
    if (!deg) throw DegreeMismatch("polynomial is not homogeneous: " + f.to_string());
    if (*deg != dims.dimension()) {
        throw DegreeMismatch("degree " + std::to_string(*deg) + " != dim " + dims.to_string() +
                             " = " + std::to_string(dims.dimension()));
    }
    return run_trials(dims, f, opts, true);
}

SymPolyExpr special_polynomial(const Dims& dims, SpecialKind which) {
    const unsigned d = dims.dimension();
    const SymPolyExpr e1 = SymPolyExpr::generator(GenKind::Elementary, 1);
    switch (which) {
        case SpecialKind::FutakiC1:
            return e1.pow(d + 1);
        case SpecialKind::TopTimesC1:
            return SymPolyExpr::generator(GenKind::Elementary, d) * e1;
    }
    throw Error("unknown special kind");
}

ResidueReport verify_special(const Dims& dims, SpecialKind which, const ResidueOptions& opts) {
    return run_trials(dims, special_polynomial(dims, which), opts, false);
}

}  // namespace flagchern
