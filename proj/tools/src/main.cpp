#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagchern/errors.hpp"
#include "flagchern/flaggeom.hpp"
#include "flagchern/parser.hpp"
#include "flagchern/residue.hpp"

#include "appendix_golden.hpp"

namespace flagchern::cli {
namespace {

using nlohmann::json;

// Exit codes: 0 = success / verdict as predicted, 1 = verification mismatch,
// 2 = usage or precondition error.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::vector<unsigned> dims_parts;
    std::uint64_t seed = 0;
    int trials = 5;
    int workers = 0;  // 0 = one per logical CPU
    unsigned long ceiling = kDefaultDecompositionCeiling;
    std::string format = "table";
};

ResidueOptions residue_options(const Common& c) {
    return ResidueOptions{c.trials, c.seed, c.workers, c.ceiling};
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string blocks_human(const Decomposition& dec) { return dec.to_string(); }

// "1;2;3 4": blocks semicolon-joined, elements space-joined.
std::string blocks_csv(const std::vector<std::vector<unsigned>>& blocks) {
    std::vector<std::string> rendered;
    for (const auto& block : blocks) {
        std::vector<std::string> elems;
        for (unsigned v : block) elems.push_back(std::to_string(v));
        rendered.push_back(join(elems, " "));
    }
    return join(rendered, ";");
}

std::string weights_spaced(const WeightMultiset& w) {
    std::vector<std::string> parts;
    for (const Rational& v : w) parts.push_back(to_string(v));
    return join(parts, " ");
}

// Multisets in JSON are sorted ascending with multiplicity preserved.
json multiset_json(WeightMultiset w) {
    std::sort(w.begin(), w.end());
    json arr = json::array();
    for (const Rational& v : w) arr.push_back(to_string(v));
    return arr;
}

json assignment_json(const Assignment& a) {
    json arr = json::array();
    for (const Rational& v : a.values()) arr.push_back(to_string(v));
    return arr;
}

json envelope(const char* command, const Dims& dims, std::uint64_t seed) {
    json j;
    j["command"] = command;
    j["dims"] = dims.parts();
    j["N"] = dims.total();
    j["d"] = dims.dimension();
    j["count"] = dims.count().get_str();
    j["seed"] = std::to_string(seed);
    return j;
}

json trail_json(const ResidueReport& rep) {
    json arr = json::array();
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        json row;
        row["assignment"] = assignment_json(rep.assignments[i]);
        row["value"] = to_string(rep.values[i]);
        arr.push_back(row);
    }
    return arr;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AllZero: return "AllZero";
        case Verdict::Constant: return "Constant";
        case Verdict::NonConstant: return "NonConstant";
    }
    return "?";
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Column-aligned table with a header row.
void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

void print_trail(const ResidueReport& rep) {
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        std::cout << "  x = " << rep.assignments[i].to_string()
                  << "   R = " << to_string(rep.values[i]) << "\n";
    }
}

std::string dims_headline(const Dims& dims) {
    return dims.to_string() + "  N=" + std::to_string(dims.total()) +
           "  d=" + std::to_string(dims.dimension()) + "  decompositions=" +
           dims.count().get_str();
}

// ---------------------------------------------------------------------------
// chern
// ---------------------------------------------------------------------------

int run_chern(const Common& c, const std::vector<unsigned>& partition_parts) {
    const Dims dims(c.dims_parts);
    const Partition lambda(partition_parts);
    if (lambda.weight() != dims.dimension()) {
        std::cerr << "error: partition weight " << lambda.weight() << " must equal d = "
                  << dims.dimension() << " for " << dims.to_string() << "\n";
        return kExitUsage;
    }
    const ChernComputation res = compute_chern(dims, lambda, residue_options(c));

    if (c.format == "json") {
        json j = envelope("chern", dims, c.seed);
        json r;
        r["partition"] = lambda.parts();
        r["value"] = res.value.get_str();
        r["trail"] = trail_json(res.report);
        j["results"] = json::array({r});
        emit_json(j);
    } else if (c.format == "csv") {
        std::cout << "assignment,value\n";
        for (std::size_t i = 0; i < res.report.values.size(); ++i) {
            std::vector<std::string> vals;
            for (const Rational& v : res.report.assignments[i].values()) {
                vals.push_back(to_string(v));
            }
            std::cout << join(vals, " ") << "," << to_string(res.report.values[i]) << "\n";
        }
    } else {
        std::cout << dims_headline(dims) << "\n";
        std::cout << "c_" << lambda.to_string() << " = " << res.value.get_str() << "\n";
        std::cout << "verification trail (" << res.report.values.size() << " assignments):\n";
        print_trail(res.report);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

// Raw residue evaluation for degrees where the theory predicts nothing:
// default assignment plus `trials` random ones, no pass/fail semantics.
ResidueReport raw_trials(const Dims& dims, const SymPolyExpr& f, const ResidueOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::vector<Assignment> assignments;
    assignments.push_back(Assignment::standard(dims.total()));
    for (int t = 0; t < opts.trials; ++t) {
        assignments.push_back(Assignment::random_distinct_integers(dims.total(), rng));
    }
    std::vector<Rational> values;
    values.reserve(assignments.size());
    for (const Assignment& x : assignments) {
        values.push_back(residue_sum(dims, f, x, opts.workers, opts.ceiling));
    }
    return classify_values(std::move(assignments), std::move(values));
}

int run_verify(const Common& c, const std::string& poly_text, const std::string& mode,
               bool allow_high_degree) {
    const Dims dims(c.dims_parts);
    const ResidueOptions opts = residue_options(c);
    const bool special = (mode == "futaki" || mode == "top-c1");

    SymPolyExpr f;
    if (special) {
        if (!poly_text.empty()) {
            std::cerr << "error: --poly is not used with mode " << mode
                      << " (the polynomial is fixed)\n";
            return kExitUsage;
        }
        f = special_polynomial(dims,
                               mode == "futaki" ? SpecialKind::FutakiC1 : SpecialKind::TopTimesC1);
    } else {
        if (poly_text.empty()) {
            std::cerr << "error: mode " << mode << " requires --poly\n";
            return kExitUsage;
        }
        f = parse_expr(poly_text);
    }

    const auto hdeg = f.homogeneous_degree();
    const unsigned d = dims.dimension();
    bool raw = false;
    if (allow_high_degree && !special) {
        raw = !hdeg || (mode == "vanishing" && *hdeg >= d) || (mode == "constant" && *hdeg != d);
    }

    ResidueReport rep;
    std::string predicted;
    if (raw) {
        rep = raw_trials(dims, f, opts);
    } else if (mode == "vanishing") {
        rep = verify_vanishing(dims, f, opts);
        predicted = "AllZero";
    } else if (mode == "constant") {
        rep = verify_constant(dims, f, opts);
        predicted = "Constant";
    } else {
        rep = verify_special(
            dims, mode == "futaki" ? SpecialKind::FutakiC1 : SpecialKind::TopTimesC1, opts);
        predicted = "AllZero";
    }

    const bool match =
        raw || (predicted == "AllZero" ? rep.verdict == Verdict::AllZero : rep.is_constant());

    if (c.format == "json") {
        json j = envelope("verify", dims, c.seed);
        json r;
        r["poly"] = f.to_string();
        r["mode"] = mode;
        if (hdeg) {
            r["degree"] = *hdeg;
        } else {
            r["degree"] = nullptr;
        }
        r["verdict"] = verdict_name(rep.verdict);
        if (rep.verdict != Verdict::NonConstant) {
            r["constant_value"] = to_string(rep.constant_value);
        } else {
            r["witness"] = json::array({rep.witness.first, rep.witness.second});
        }
        if (raw) {
            r["note"] = "assignment-dependent, no geometric meaning";
        } else {
            r["predicted"] = predicted;
            r["match"] = match;
        }
        r["trail"] = trail_json(rep);
        j["results"] = json::array({r});
        emit_json(j);
    } else if (c.format == "csv") {
        std::cout << "assignment,value\n";
        for (std::size_t i = 0; i < rep.values.size(); ++i) {
            std::vector<std::string> vals;
            for (const Rational& v : rep.assignments[i].values()) vals.push_back(to_string(v));
            std::cout << join(vals, " ") << "," << to_string(rep.values[i]) << "\n";
        }
    } else {
        std::cout << dims_headline(dims) << "\n";
        std::cout << "f = " << f.to_string() << "   (degree "
                  << (hdeg ? std::to_string(*hdeg) : std::string("mixed")) << ", mode " << mode
                  << ")\n";
        print_trail(rep);
        if (raw) {
            std::cout << "note: assignment-dependent, no geometric meaning\n";
            std::cout << "observed: " << verdict_name(rep.verdict) << "\n";
        } else if (match) {
            std::cout << "verdict: " << verdict_name(rep.verdict);
            if (rep.verdict == Verdict::Constant) {
                std::cout << "(" << to_string(rep.constant_value) << ")";
            }
            std::cout << " — as predicted\n";
        } else {
            std::cout << "verdict: " << verdict_name(rep.verdict) << " — MISMATCH (expected "
                      << predicted << ")";
            if (rep.verdict == Verdict::NonConstant) {
                std::cout << "; witness trials " << rep.witness.first << " and "
                          << rep.witness.second;
            }
            std::cout << "\n";
        }
    }
    return match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// weights
// ---------------------------------------------------------------------------

Assignment parse_assignment(const std::string& text, unsigned n) {
    std::vector<Rational> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        if (token.empty()) throw Error("empty value in --assign");
        try {
            Rational q(token);
            q.canonicalize();
            values.push_back(q);
        } catch (const std::invalid_argument&) {
            throw Error("cannot parse assignment value '" + token + "'");
        }
        pos = comma + 1;
    }
    if (values.size() != n) {
        throw Error("--assign needs exactly " + std::to_string(n) + " values, got " +
                    std::to_string(values.size()));
    }
    return Assignment(std::move(values));
}

std::vector<long> integer_exponents(const Assignment& x) {
    std::vector<long> k;
    k.reserve(x.size());
    for (const Rational& v : x.values()) {
        if (!is_integer(v) || !v.get_num().fits_slong_p()) {
            throw Error("--numeric-oracle needs integer assignment values; got " + to_string(v));
        }
        k.push_back(v.get_num().get_si());
    }
    return k;
}

bool same_multiset(const WeightMultiset& exact, const std::vector<long>& numeric) {
    if (exact.size() != numeric.size()) return false;
    WeightMultiset a = exact;
    WeightMultiset b;
    b.reserve(numeric.size());
    for (long v : numeric) b.emplace_back(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

int run_weights(const Common& c, const std::string& assign_text, bool numeric_oracle) {
    const Dims dims(c.dims_parts);
    const Assignment x = assign_text.empty() ? Assignment::standard(dims.total())
                                             : parse_assignment(assign_text, dims.total());
    std::vector<long> k;
    if (numeric_oracle) k = integer_exponents(x);
    std::mt19937_64 oracle_rng(c.seed);

    const std::vector<Decomposition> decs = enumerate_decompositions(dims, c.ceiling);

    struct Row {
        const Decomposition* dec;
        WeightMultiset w;
        Rational e;
        Rational c1;
        bool oracle_ok = true;
    };
    std::vector<Row> rows;
    rows.reserve(decs.size());
    for (const Decomposition& dec : decs) {
        Row row{&dec, weight_multiset(dec, x), Rational(0), Rational(0)};
        row.e = weight_product(row.w);
        for (const Rational& v : row.w) row.c1 += v;
        if (numeric_oracle) {
            row.oracle_ok = same_multiset(row.w, numeric_weights(dims, dec, k, oracle_rng));
        }
        rows.push_back(std::move(row));
    }

    if (c.format == "json") {
        json j = envelope("weights", dims, c.seed);
        j["assignment"] = assignment_json(x);
        json arr = json::array();
        for (const Row& row : rows) {
            json r;
            r["I"] = row.dec->blocks();
            r["W"] = multiset_json(row.w);
            r["e"] = to_string(row.e);
            r["c1"] = to_string(row.c1);
            if (numeric_oracle) r["oracle"] = row.oracle_ok ? "match" : "mismatch";
            arr.push_back(r);
        }
        j["results"] = arr;
        emit_json(j);
    } else if (c.format == "csv") {
        std::cout << "I,W,e,c1" << (numeric_oracle ? ",oracle" : "") << "\n";
        for (const Row& row : rows) {
            std::cout << blocks_csv(row.dec->blocks()) << "," << weights_spaced(row.w) << ","
                      << to_string(row.e) << "," << to_string(row.c1);
            if (numeric_oracle) std::cout << "," << (row.oracle_ok ? "match" : "mismatch");
            std::cout << "\n";
        }
    } else {
        std::cout << dims_headline(dims) << "\n";
        std::cout << "x = " << x.to_string() << "\n";
        std::vector<std::vector<std::string>> table;
        std::vector<std::string> header{"#", "I", "W", "e", "c1"};
        if (numeric_oracle) header.push_back("oracle");
        table.push_back(header);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<std::string> line{std::to_string(i + 1), blocks_human(*rows[i].dec),
                                          weights_spaced(rows[i].w), to_string(rows[i].e),
                                          to_string(rows[i].c1)};
            if (numeric_oracle) line.push_back(rows[i].oracle_ok ? "match" : "mismatch");
            table.push_back(line);
        }
        print_table(table);
    }

    const bool all_ok =
        std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.oracle_ok; });
    return all_ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// appendix
// ---------------------------------------------------------------------------

// Golden entries may be JSON numbers or decimal strings (the tool's own JSON
// output uses strings so arbitrary-precision values survive the round trip).
long golden_long(const json& v) {
    if (v.is_string()) return std::stol(v.get<std::string>());
    return v.get<long>();
}

AppendixGolden load_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open golden file " + path);
    json j = json::parse(in);
    const json& root = j.contains("results") ? j.at("results").at(0) : j;
    AppendixGolden golden;
    for (const json& row : root.at("rows")) {
        AppendixRow r;
        r.blocks = row.at("I").get<std::vector<std::vector<unsigned>>>();
        for (const json& w : row.at("W")) r.weights.push_back(golden_long(w));
        r.e = golden_long(row.at("e"));
        r.c1 = golden_long(row.at("c1"));
        golden.rows.push_back(std::move(r));
    }
    golden.c1_d_sum = golden_long(root.at("c1_5_sum"));
    golden.c1_d1_sum = golden_long(root.at("c1_6_sum"));
    return golden;
}

int run_appendix(const std::string& format, const std::string& golden_path) {
    const Dims dims({1, 1, 2});
    const unsigned d = dims.dimension();
    const Assignment x = Assignment::standard(dims.total());
    const AppendixGolden golden =
        golden_path.empty() ? appendix_golden() : load_golden_file(golden_path);

    struct Row {
        Decomposition dec;
        WeightMultiset w;
        Rational e;
        Rational c1;
    };
    std::vector<Row> rows;
    Rational sum_d(0), sum_d1(0);
    for_each_decomposition(dims, [&](const Decomposition& dec) {
        Row row{dec, weight_multiset(dec, x), Rational(0), Rational(0)};
        row.e = weight_product(row.w);
        for (const Rational& v : row.w) row.c1 += v;
        sum_d += rational_pow(row.c1, d) / row.e;
        sum_d1 += rational_pow(row.c1, d + 1) / row.e;
        rows.push_back(std::move(row));
    });

    // Diff against the golden table, unified-diff style.
    std::vector<std::string> diff;
    auto describe_row = [&](std::size_t i) {
        return "@@ row " + std::to_string(i + 1) + " I=" + rows[i].dec.to_string() + " @@";
    };
    if (golden.rows.size() != rows.size()) {
        diff.push_back("@@ table @@");
        diff.push_back("-rows = " + std::to_string(golden.rows.size()));
        diff.push_back("+rows = " + std::to_string(rows.size()));
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const AppendixRow& g = golden.rows[i];
            std::vector<std::string> local;
            if (g.blocks != rows[i].dec.blocks()) {
                local.push_back("-I = " + blocks_csv(g.blocks));
                local.push_back("+I = " + blocks_csv(rows[i].dec.blocks()));
            }
            // Weight order is presentation; compare as multisets.
            WeightMultiset gw;
            for (long v : g.weights) gw.emplace_back(v);
            std::sort(gw.begin(), gw.end());
            WeightMultiset cw = rows[i].w;
            std::sort(cw.begin(), cw.end());
            if (gw != cw) {
                local.push_back("-W = " + weights_spaced(gw));
                local.push_back("+W = " + weights_spaced(cw));
            }
            if (Rational(g.e) != rows[i].e) {
                local.push_back("-e = " + std::to_string(g.e));
                local.push_back("+e = " + to_string(rows[i].e));
            }
            if (Rational(g.c1) != rows[i].c1) {
                local.push_back("-c1 = " + std::to_string(g.c1));
                local.push_back("+c1 = " + to_string(rows[i].c1));
            }
            if (!local.empty()) {
                diff.push_back(describe_row(i));
                diff.insert(diff.end(), local.begin(), local.end());
            }
        }
    }
    if (Rational(golden.c1_d_sum) != sum_d) {
        diff.push_back("@@ sum c1^5/e @@");
        diff.push_back("-" + std::to_string(golden.c1_d_sum));
        diff.push_back("+" + to_string(sum_d));
    }
    if (Rational(golden.c1_d1_sum) != sum_d1) {
        diff.push_back("@@ sum c1^6/e @@");
        diff.push_back("-" + std::to_string(golden.c1_d1_sum));
        diff.push_back("+" + to_string(sum_d1));
    }
    const bool match = diff.empty();

    if (format == "json") {
        json j = envelope("appendix", dims, 0);
        json r;
        json arr = json::array();
        for (const Row& row : rows) {
            json entry;
            entry["I"] = row.dec.blocks();
            entry["W"] = multiset_json(row.w);
            entry["e"] = to_string(row.e);
            entry["c1"] = to_string(row.c1);
            arr.push_back(entry);
        }
        r["rows"] = arr;
        r["c1_5_sum"] = to_string(sum_d);
        r["c1_6_sum"] = to_string(sum_d1);
        r["match"] = match;
        j["results"] = json::array({r});
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "I,W,e,c1\n";
        for (const Row& row : rows) {
            std::cout << blocks_csv(row.dec.blocks()) << "," << weights_spaced(row.w) << ","
                      << to_string(row.e) << "," << to_string(row.c1) << "\n";
        }
    } else {
        std::cout << "reference table for " << dims.to_string() << ", x_i = i\n";
        std::vector<std::vector<std::string>> table{{"#", "I", "W", "e", "c1"}};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            table.push_back({std::to_string(i + 1), rows[i].dec.to_string(),
                             weights_spaced(rows[i].w), to_string(rows[i].e),
                             to_string(rows[i].c1)});
        }
        print_table(table);
        std::cout << "sum of c1^5/e = " << to_string(sum_d) << "\n";
        std::cout << "sum of c1^6/e = " << to_string(sum_d1) << "\n";
        if (match) {
            std::cout << rows.size() << "/" << golden.rows.size() << " rows match, c1^5="
                      << to_string(sum_d) << ", c1^6 sum=" << to_string(sum_d1) << "\n";
        }
    }
    if (!match) {
        std::cerr << "--- golden\n+++ computed\n";
        for (const std::string& line : diff) std::cerr << line << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// euler
// ---------------------------------------------------------------------------

int run_euler(const Common& c) {
    const Dims dims(c.dims_parts);
    const Integer chi = euler_characteristic(dims);
    if (c.format == "json") {
        json j = envelope("euler", dims, c.seed);
        json r;
        r["value"] = chi.get_str();
        j["results"] = json::array({r});
        emit_json(j);
    } else if (c.format == "csv") {
        std::vector<std::string> parts;
        for (unsigned m : dims.parts()) parts.push_back(std::to_string(m));
        std::cout << "dims,euler\n" << join(parts, " ") << "," << chi.get_str() << "\n";
    } else {
        std::cout << "euler(" << dims.to_string() << ") = " << chi.get_str() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// wiring
// ---------------------------------------------------------------------------

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_dims(CLI::App* cmd, Common& c) {
    cmd->add_option("--dims", c.dims_parts, "dimension vector m1,m2,... (at least two parts)")
        ->required()
        ->delimiter(',');
}

void add_run_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--trials", c.trials, "number of random assignments (default 5)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "seed for the assignment generator")
        ->envname("FLAGCHERN_SEED");
    cmd->add_option("--workers", c.workers,
                    "parallel workers for the residue sum (0 = one per logical CPU)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-decompositions", c.ceiling,
                    "refuse dimension vectors with more decompositions than this")
        ->check(CLI::PositiveNumber);
}

}  // namespace
}  // namespace flagchern::cli

int main(int argc, char** argv) {
    using namespace flagchern;
    using namespace flagchern::cli;

    CLI::App app{"exact Chern numbers of complex flag manifolds via fixed-point residue sums"};
    app.require_subcommand(1);
    std::function<int()> action;

    // chern
    auto chern_common = std::make_shared<Common>();
    auto chern_partition = std::make_shared<std::vector<unsigned>>();
    CLI::App* chern_cmd =
        app.add_subcommand("chern", "compute the Chern number c_lambda of F(m1,...)");
    add_dims(chern_cmd, *chern_common);
    chern_cmd->add_option("--partition", *chern_partition, "partition of weight d, e.g. 1,1,1,1,1")
        ->required()
        ->delimiter(',');
    add_run_options(chern_cmd, *chern_common);
    add_format(chern_cmd, *chern_common);
    chern_cmd->callback(
        [&action, chern_common, chern_partition] {
            action = [chern_common, chern_partition] {
                return run_chern(*chern_common, *chern_partition);
            };
        });

    // verify
    auto verify_common = std::make_shared<Common>();
    auto verify_poly = std::make_shared<std::string>();
    auto verify_mode = std::make_shared<std::string>();
    auto verify_allow = std::make_shared<bool>(false);
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check a residue-sum identity for a polynomial");
    add_dims(verify_cmd, *verify_common);
    verify_cmd->add_option("--poly", *verify_poly, "polynomial over e/p generators, e.g. \"e1^4\"");
    verify_cmd
        ->add_option("--mode", *verify_mode,
                     "vanishing (deg < d), constant (deg = d), futaki (e1^(d+1)), top-c1 (ed*e1)")
        ->required()
        ->check(CLI::IsMember({"vanishing", "constant", "futaki", "top-c1"}));
    verify_cmd->add_flag("--allow-high-degree", *verify_allow,
                         "compute residues outside the mode's degree range (informational only)");
    add_run_options(verify_cmd, *verify_common);
    add_format(verify_cmd, *verify_common);
    verify_cmd->callback([&action, verify_common, verify_poly, verify_mode, verify_allow] {
        action = [verify_common, verify_poly, verify_mode, verify_allow] {
            return run_verify(*verify_common, *verify_poly, *verify_mode, *verify_allow);
        };
    });

    // weights
    auto weights_common = std::make_shared<Common>();
    auto weights_assign = std::make_shared<std::string>();
    auto weights_oracle = std::make_shared<bool>(false);
    CLI::App* weights_cmd = app.add_subcommand(
        "weights", "list every decomposition with its weight multiset, e, and c1");
    add_dims(weights_cmd, *weights_common);
    weights_cmd->add_option("--assign", *weights_assign,
                            "comma-separated x values (default 1,2,...,N); rationals allowed");
    weights_cmd->add_flag("--numeric-oracle", *weights_oracle,
                          "recover each row's weights from the matrix-chart circle action too");
    weights_cmd
        ->add_option("--seed", weights_common->seed, "seed for the oracle's random coordinates")
        ->envname("FLAGCHERN_SEED");
    weights_cmd->add_option("--max-decompositions", weights_common->ceiling,
                            "refuse dimension vectors with more decompositions than this");
    add_format(weights_cmd, *weights_common);
    weights_cmd->callback([&action, weights_common, weights_assign, weights_oracle] {
        action = [weights_common, weights_assign, weights_oracle] {
            return run_weights(*weights_common, *weights_assign, *weights_oracle);
        };
    });

    // appendix
    auto appendix_format = std::make_shared<std::string>("table");
    auto appendix_golden_path = std::make_shared<std::string>();
    CLI::App* appendix_cmd = app.add_subcommand(
        "appendix", "recompute the F(1,1,2) reference table and diff against golden values");
    appendix_cmd->add_option("--format", *appendix_format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    appendix_cmd
        ->add_option("--golden", *appendix_golden_path,
                     "JSON file with replacement golden values (default: built-in table)")
        ->check(CLI::ExistingFile);
    appendix_cmd->callback([&action, appendix_format, appendix_golden_path] {
        action = [appendix_format, appendix_golden_path] {
            return run_appendix(*appendix_format, *appendix_golden_path);
        };
    });

    // euler
    auto euler_common = std::make_shared<Common>();
    CLI::App* euler_cmd =
        app.add_subcommand("euler", "Euler characteristic N!/(m1!...mk!) = fixed-point count");
    add_dims(euler_cmd, *euler_common);
    add_format(euler_cmd, *euler_common);
    euler_cmd->callback([&action, euler_common] {
        action = [euler_common] { return run_euler(*euler_common); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const NonConstantResidue& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const NonIntegerChernNumber& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const NotInChart& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const IllConditioned& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const WeightExtractionFailed& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const flagchern::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
