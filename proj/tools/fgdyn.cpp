// Command-line front end: verify, sweep, lambda, discover, fold, boundary, catalog check.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <thread>

#include "fgdyn/boundary.hpp"
#include "fgdyn/catalog.hpp"
#include "fgdyn/error.hpp"
#include "fgdyn/report.hpp"
#include "fgdyn/semigroup.hpp"
#include "fgdyn/stallings.hpp"

namespace {

using namespace fgdyn;

struct Common {
    int m = 0;
    int n = 0;
    std::optional<int> k_override;
    double tol = 1e-10;
    std::string json_path;
    std::string catalog_dir;
    int parallel = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool no_timing = false;
};

CatalogSet load_catalogs(const Common& c) {
    return c.catalog_dir.empty() ? CatalogSet::load_default() : CatalogSet::load_directory(c.catalog_dir);
}

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

void require_covered(int m, int n) {
    if (!in_family_range(m, n)) {
        throw RangeError("(1," + std::to_string(m) + "," + std::to_string(n) + ") lies outside every family");
    }
}

int cmd_verify(const Common& c, bool images) {
    require_covered(c.m, c.n);
    RunOptions opts;
    opts.k_override = c.k_override;
    opts.tol = c.tol;
    opts.timing = !c.no_timing;
    const RunReport r = run_verify(c.m, c.n, load_catalogs(c), opts);
    std::cout << format_report(r, images);
    write_json(c.json_path, nlohmann::json(r));
    return r.passed ? 0 : 1;
}

int cmd_sweep(const Common& c, int lo, int hi, const std::string& family) {
    std::vector<std::pair<int, int>> cells = sweep_cells(lo, hi);
    if (!family.empty()) {
        const FamilyKind f = family_from_name(family);
        std::erase_if(cells, [&](const auto& p) { return family_of(p.first, p.second) != f; });
    }
    RunOptions opts;
    opts.tol = c.tol;
    opts.timing = !c.no_timing;
    const SweepSummary s = run_sweep(cells, load_catalogs(c), opts, c.parallel);
    std::cout << std::left << std::setw(10) << "cell" << std::setw(13) << "family" << std::setw(5) << "|S|" << std::setw(10)
              << "status" << std::setw(6) << "prim" << std::setw(12) << "|diff|" << std::setw(7) << "whole" << std::setw(7)
              << "minor" << std::setw(10) << "boundary" << "result\n";
    for (const RunReport& r : s.reports) {
        std::ostringstream cell, diff;
        cell << "(" << r.m << "," << r.n << ")";
        if (r.difference) diff << std::scientific << std::setprecision(1) << *r.difference;
        std::cout << std::setw(10) << cell.str() << std::setw(13) << r.family << std::setw(5) << r.semigroup_size << std::setw(10)
                  << r.status << std::setw(6) << (r.matrix.primitive ? "yes" : "no") << std::setw(12) << diff.str() << std::setw(7)
                  << (r.fold.whole_group ? "yes" : "no") << std::setw(7) << (r.minor.found ? "yes" : "no") << std::setw(10)
                  << (r.boundary.found ? r.boundary.form : "none") << (r.passed ? "PASS" : "FAIL") << "\n";
        for (const std::string& e : r.errors) std::cout << "    ! " << e << "\n";
    }
    std::cout << s.reports.size() << " cells, " << s.passed << " passed, " << s.failed << " failed\n";
    write_json(c.json_path, sweep_to_json(s));
    return s.ok() ? 0 : 1;
}

int cmd_lambda(const Common& c) {
    require_covered(c.m, c.n);
    const LambdaComparison lc = compare_lambda(c.m, c.n, load_catalogs(c), c.tol);
    std::cout << std::setprecision(15) << "k = " << lc.k << "\nlambda = " << lc.lambda << "\nlambda^(1/k) = " << lc.lambda_root
              << "\nchi root = " << lc.chi_root << "\n|difference| = " << std::scientific << std::setprecision(3) << lc.difference
              << "\n";
    write_json(c.json_path, {{"schema", kReportSchema},
                             {"m", c.m},
                             {"n", c.n},
                             {"k", lc.k},
                             {"lambda", lc.lambda},
                             {"lambda_root", lc.lambda_root},
                             {"chi_root", lc.chi_root},
                             {"difference", lc.difference}});
    return lc.lambda > 1 && lc.difference < kSpectralAgreement ? 0 : 1;
}

int cmd_discover(const Common& c, const std::string& seed_text) {
    require_covered(c.m, c.n);
    // A catalog entry is only needed for defaults and the comparison, so an explicit seed and k
    // work for pairs the catalogs do not list.
    std::optional<CatalogInstance> inst;
    try {
        inst = load_catalogs(c).instantiate(c.m, c.n);
    } catch (const CatalogError&) {
        if (seed_text.empty() || !c.k_override) throw;
    }
    const Word seed = seed_text.empty() ? inst->seed : parse(seed_text, RankContext{c.m, c.n});
    const int k = c.k_override ? *c.k_override : inst->period;
    const Semigroup s = discover_generators(c.m, c.n, seed, k);
    nlohmann::json words = nlohmann::json::array();
    for (const NamedWord& g : s.generators()) {
        std::cout << g.name << " = " << format(g.word) << "\n";
        words.push_back({{"name", g.name}, {"word", format(g.word)}});
    }
    std::optional<bool> agree;
    if (inst) {
        std::set<Word> found, cat;
        for (const Word& w : s.words()) found.insert(w);
        for (const NamedWord& g : inst->generators) cat.insert(g.word);
        agree = found == cat;
        std::cout << s.size() << " generators; catalog lists " << inst->generators.size() << " ("
                  << (*agree ? "same set" : "different set") << ")\n";
    } else {
        std::cout << s.size() << " generators; no catalog entry\n";
    }
    write_json(c.json_path, {{"schema", kReportSchema}, {"m", c.m}, {"n", c.n}, {"k", k}, {"seed", format(seed)},
                             {"generators", words}, {"agrees_with_catalog", agree ? nlohmann::json(*agree) : nlohmann::json()}});
    return agree.value_or(true) || !seed_text.empty() ? 0 : 1;
}

int cmd_fold(const Common& c, const std::string& words_path) {
    std::vector<Word> gens;
    RankContext ctx{c.m, c.n};
    if (!words_path.empty()) {
        std::ifstream in(words_path);
        if (!in) throw Error("cannot read " + words_path);
        gens = read_words(in);
        for (const Word& w : gens) {
            if (!std::all_of(w.begin(), w.end(), [&](const Letter& l) { return ctx.contains(l); })) {
                throw RangeError("word " + format(w) + " uses letters outside rank " + std::to_string(ctx.rank()));
            }
        }
    } else {
        require_covered(c.m, c.n);
        gens = build_semigroup(load_catalogs(c).instantiate(c.m, c.n)).words();
    }
    const FoldResult fr = fold(gens, ctx);
    std::cout << "rank " << fr.rank << ", index " << (fr.index ? std::to_string(*fr.index) : std::string("infinite"))
              << ", vertices " << fr.vertices << ", edges " << fr.edges << "\n";
    write_json(c.json_path, {{"schema", kReportSchema},
                             {"m", c.m},
                             {"n", c.n},
                             {"rank", fr.rank},
                             {"index", fr.index ? nlohmann::json(*fr.index) : nlohmann::json(nullptr)},
                             {"whole_group", fr.whole_group(ctx)}});
    return fr.whole_group(ctx) ? 0 : 1;
}

int cmd_boundary(const Common& c, std::uint64_t budget) {
    require_covered(c.m, c.n);
    try {
        const BoundaryWord bw = boundary_word(c.m, c.n, budget);
        std::cout << "omega = " << format(bw.omega_word) << "\nform = " << boundary_form_name(bw.form)
                  << " (parity rule predicts " << boundary_form_name(predicted_form(c.m, c.n)) << ")\n"
                  << "fixed letter for letter: " << (bw.on_the_nose ? "yes" : "no") << "\nnodes = " << bw.nodes << "\n";
        write_json(c.json_path, {{"schema", kReportSchema}, {"m", c.m}, {"n", c.n}, {"omega", format(bw.omega_word)},
                                 {"form", boundary_form_name(bw.form)},
                                 {"matches_predicted_parity", bw.matches_predicted_parity}, {"nodes", bw.nodes}});
        return 0;
    } catch (const NotAvailable& e) {
        std::cout << "no boundary word: " << e.what() << "\n";
        return 1;
    }
}

int cmd_catalog_check(const Common& c, int lo, int hi) {
    const CatalogSet catalogs = load_catalogs(c);
    int bad = 0;
    int total = 0;
    for (const auto& [m, n] : sweep_cells(lo, hi)) {
        ++total;
        std::string problem;
        try {
            const CatalogInstance inst = catalogs.instantiate(m, n);
            const Semigroup s = build_semigroup(inst);
            for (const NamedWord& kw : inst.known) {
                if (!s.index_of(kw.word)) problem += " known word " + kw.name + " missing;";
            }
            const Semigroup d = discover_generators(m, n, inst.seed, inst.period);
            const std::vector<Word> sw = s.words(), dw = d.words();
            if (std::set<Word>(sw.begin(), sw.end()) != std::set<Word>(dw.begin(), dw.end())) {
                problem += " catalog has " + std::to_string(s.size()) + " words, discovery " + std::to_string(d.size()) + ";";
            }
        } catch (const Error& e) {
            problem = std::string(" ") + e.what();
        }
        if (!problem.empty()) {
            ++bad;
            std::cout << "(" << m << "," << n << ")" << problem << "\n";
        }
    }
    std::cout << total << " cells checked, " << bad << " with problems\n";
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semigroup, spectral and folding checks for the (1,m,n) birational map families"};
    app.require_subcommand(1);
    Common common;
    if (const char* env = std::getenv("FGDYN_CATALOG_DIR")) common.catalog_dir = env;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--m", common.m, "parameter m")->required();
        sub->add_option("--n", common.n, "parameter n")->required();
    };
    auto add_shared = [&](CLI::App* sub) {
        sub->add_option("--catalog-dir", common.catalog_dir, "catalog directory (default $FGDYN_CATALOG_DIR)");
        sub->add_option("--json", common.json_path, "write the machine-readable report here");
    };

    bool images = false;
    CLI::App* verify = app.add_subcommand("verify", "full pipeline for one (m,n)");
    add_pair(verify);
    add_shared(verify);
    verify->add_option("--k-override", common.k_override, "iterate f^k with this k");
    verify->add_option("--tol", common.tol, "power iteration tolerance")->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", common.no_timing, "omit timing for byte-identical output");
    verify->add_flag("--images", images, "print the factorization table");

    int lo = 10, hi = 30;
    std::string family;
    CLI::App* sweep = app.add_subcommand("sweep", "run verify over every cell with lo <= 1+m+n <= hi");
    add_shared(sweep);
    sweep->add_option("--lo", lo, "smallest 1+m+n");
    sweep->add_option("--hi", hi, "largest 1+m+n");
    sweep->add_option("--family", family, "restrict to one family (F11n, F12n, F1n2, F1nNp1, F1Np1n, F1mnGapUp, F1mnGapDown)");
    sweep->add_option("--tol", common.tol, "power iteration tolerance")->check(CLI::PositiveNumber);
    sweep->add_option("--parallel", common.parallel, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--no-timing", common.no_timing, "omit timing for byte-identical output");

    CLI::App* lambda = app.add_subcommand("lambda", "compare lambda^(1/k) with the characteristic polynomial root");
    add_pair(lambda);
    add_shared(lambda);
    lambda->add_option("--tol", common.tol, "power iteration tolerance")->check(CLI::PositiveNumber);

    std::string seed;
    CLI::App* discover = app.add_subcommand("discover", "close a seed under the iterated action");
    add_pair(discover);
    add_shared(discover);
    discover->add_option("--seed", seed, "seed word (default: catalog seed)");
    discover->add_option("--k-override", common.k_override, "iterate f^k with this k");

    std::string words_path;
    CLI::App* fold_cmd = app.add_subcommand("fold", "Stallings folding of the semigroup generators or of a word file");
    add_pair(fold_cmd);
    add_shared(fold_cmd);
    fold_cmd->add_option("--words", words_path, "file with one word per line");

    std::uint64_t budget = kBoundaryNodeBudget;
    CLI::App* boundary = app.add_subcommand("boundary", "bounded search for a fixed boundary word");
    add_pair(boundary);
    add_shared(boundary);
    boundary->add_option("--budget", budget, "search node budget per form");

    int check_lo = 10, check_hi = 30;
    CLI::App* catalog = app.add_subcommand("catalog", "catalog maintenance");
    catalog->require_subcommand(1);
    CLI::App* check = catalog->add_subcommand("check", "compare every catalog instance with discovery");
    check->add_option("--catalog-dir", common.catalog_dir, "catalog directory (default $FGDYN_CATALOG_DIR)");
    check->add_option("--lo", check_lo, "smallest 1+m+n");
    check->add_option("--hi", check_hi, "largest 1+m+n");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(common, images);
        if (*sweep) return cmd_sweep(common, lo, hi, family);
        if (*lambda) return cmd_lambda(common);
        if (*discover) return cmd_discover(common, seed);
        if (*fold_cmd) return cmd_fold(common, words_path);
        if (*boundary) return cmd_boundary(common, budget);
        if (*check) return cmd_catalog_check(common, check_lo, check_hi);
    } catch (const fgdyn::RangeError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const fgdyn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
