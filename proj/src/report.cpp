#include "fgdyn/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "fgdyn/boundary.hpp"
#include "fgdyn/entropy.hpp"
#include "fgdyn/error.hpp"
#include "fgdyn/semigroup.hpp"
#include "fgdyn/spectral.hpp"
#include "fgdyn/stallings.hpp"

namespace fgdyn {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const RunReport& r) {
    json gens = json::array();
    for (const GeneratorRecord& g : r.generators) {
        gens.push_back({{"name", g.name}, {"word", g.word}, {"image", g.image}, {"linear", g.linear}});
    }
    j = json{
        {"schema", r.schema},
        {"m", r.m},
        {"n", r.n},
        {"k", r.k},
        {"family", r.family},
        {"semigroup_size", r.semigroup_size},
        {"status", r.status},
        {"detail", r.detail},
        {"cyclic_positive", r.cyclic_positive},
        {"conjugator", r.conjugator},
        {"generators", gens},
        {"matrix",
         {{"dim", r.matrix.dim},
          {"irreducible", r.matrix.irreducible},
          {"components", r.matrix.components},
          {"primitive", r.matrix.primitive},
          {"primitivity_reason", r.matrix.primitivity_reason},
          {"lambda", opt(r.matrix.lambda)},
          {"cw_lower", opt(r.matrix.cw_lower)},
          {"cw_upper", opt(r.matrix.cw_upper)},
          {"iterations", r.matrix.iterations}}},
        {"chi_root", opt(r.chi_root)},
        {"lambda_root", opt(r.lambda_root)},
        {"difference", opt(r.difference)},
        {"fold",
         {{"rank", r.fold.rank}, {"index", opt(r.fold.index)}, {"complete", r.fold.complete}, {"whole_group", r.fold.whole_group}}},
        {"minor",
         {{"found", r.minor.found}, {"g_star", r.minor.g_star}, {"columns", r.minor.columns}, {"determinant", r.minor.determinant}}},
        {"boundary",
         {{"attempted", r.boundary.attempted},
          {"found", r.boundary.found},
          {"form", r.boundary.form},
          {"predicted_form", r.boundary.predicted_form},
          {"matches_predicted_parity", r.boundary.matches_predicted_parity},
          {"on_the_nose", r.boundary.on_the_nose},
          {"omega", r.boundary.omega},
          {"nodes", r.boundary.nodes}}},
        {"errors", r.errors},
        {"passed", r.passed},
    };
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
}

void from_json(const json& j, RunReport& r) {
    r = RunReport{};
    j.at("schema").get_to(r.schema);
    if (r.schema != kReportSchema) throw ParseError("unsupported report schema " + std::to_string(r.schema));
    j.at("m").get_to(r.m);
    j.at("n").get_to(r.n);
    j.at("k").get_to(r.k);
    j.at("family").get_to(r.family);
    j.at("semigroup_size").get_to(r.semigroup_size);
    j.at("status").get_to(r.status);
    j.at("detail").get_to(r.detail);
    j.at("cyclic_positive").get_to(r.cyclic_positive);
    j.at("conjugator").get_to(r.conjugator);
    for (const json& g : j.at("generators")) {
        GeneratorRecord rec;
        g.at("name").get_to(rec.name);
        g.at("word").get_to(rec.word);
        g.at("image").get_to(rec.image);
        g.at("linear").get_to(rec.linear);
        r.generators.push_back(std::move(rec));
    }
    const json& mx = j.at("matrix");
    mx.at("dim").get_to(r.matrix.dim);
    mx.at("irreducible").get_to(r.matrix.irreducible);
    mx.at("components").get_to(r.matrix.components);
    mx.at("primitive").get_to(r.matrix.primitive);
    mx.at("primitivity_reason").get_to(r.matrix.primitivity_reason);
    r.matrix.lambda = get_opt<double>(mx, "lambda");
    r.matrix.cw_lower = get_opt<double>(mx, "cw_lower");
    r.matrix.cw_upper = get_opt<double>(mx, "cw_upper");
    mx.at("iterations").get_to(r.matrix.iterations);
    r.chi_root = get_opt<double>(j, "chi_root");
    r.lambda_root = get_opt<double>(j, "lambda_root");
    r.difference = get_opt<double>(j, "difference");
    const json& fd = j.at("fold");
    fd.at("rank").get_to(r.fold.rank);
    r.fold.index = get_opt<long long>(fd, "index");
    fd.at("complete").get_to(r.fold.complete);
    fd.at("whole_group").get_to(r.fold.whole_group);
    const json& mn = j.at("minor");
    mn.at("found").get_to(r.minor.found);
    mn.at("g_star").get_to(r.minor.g_star);
    mn.at("columns").get_to(r.minor.columns);
    mn.at("determinant").get_to(r.minor.determinant);
    const json& bd = j.at("boundary");
    bd.at("attempted").get_to(r.boundary.attempted);
    bd.at("found").get_to(r.boundary.found);
    bd.at("form").get_to(r.boundary.form);
    bd.at("predicted_form").get_to(r.boundary.predicted_form);
    bd.at("matches_predicted_parity").get_to(r.boundary.matches_predicted_parity);
    bd.at("on_the_nose").get_to(r.boundary.on_the_nose);
    bd.at("omega").get_to(r.boundary.omega);
    bd.at("nodes").get_to(r.boundary.nodes);
    j.at("errors").get_to(r.errors);
    j.at("passed").get_to(r.passed);
    r.timing_ms = get_opt<double>(j, "timing_ms");
}

RunReport run_verify(int m, int n, const CatalogSet& catalogs, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const FamilyKind fam = family_of(m, n);
    RunReport r;
    r.m = m;
    r.n = n;
    r.family = family_name(fam);
    r.k = opts.k_override.value_or(period_k(m, n));
    r.status = "Failed";

    std::optional<CatalogInstance> inst;
    std::optional<Semigroup> s;
    std::optional<TransitionMatrix> M;
    try {
        inst = catalogs.instantiate(m, n);
        s = build_semigroup(*inst);
        r.semigroup_size = static_cast<int>(s->size());
        r.conjugator = format(inst->conjugator);
    } catch (const Error& e) {
        r.errors.push_back(std::string("build: ") + e.what());
    }

    if (s) {
        try {
            const VerificationReport vr = verify_invariance(*s, build_action(m, n), r.k, inst->conjugator);
            r.status = vr.verified() ? "Verified" : "Failed";
            r.detail = vr.detail;
            r.cyclic_positive = vr.cyclic_positive;
            for (std::size_t j = 0; j < vr.generators.size(); ++j) {
                GeneratorRecord g;
                g.name = vr.names[j];
                g.word = format(vr.generators[j]);
                g.linear = vr.linear_ok[j];
                for (int f : vr.factors[j]) g.image.push_back(vr.names[static_cast<std::size_t>(f)]);
                r.generators.push_back(std::move(g));
            }
            if (!vr.verified()) r.errors.push_back("verify: " + vr.detail);
            M = transition_matrix(vr);
        } catch (const Error& e) {
            r.errors.push_back(std::string("verify: ") + e.what());
        }
    }

    if (M) {
        r.matrix.dim = M->dim();
        const IrreducibilityResult irr = is_irreducible(*M);
        r.matrix.irreducible = irr.irreducible;
        r.matrix.components = static_cast<int>(irr.components.size());
        const PrimitivityResult prim = is_primitive(*M);
        r.matrix.primitive = prim.primitive;
        r.matrix.primitivity_reason = prim.reason;
        try {
            const SpectralCertificate cert = perron_root(*M, opts.tol);
            r.matrix.lambda = cert.perron_root;
            r.matrix.cw_lower = cert.cw_lower;
            r.matrix.cw_upper = cert.cw_upper;
            r.matrix.iterations = cert.iterations;
            r.lambda_root = std::pow(cert.perron_root, 1.0 / r.k);
        } catch (const Error& e) {
            r.errors.push_back(std::string("spectral: ") + e.what());
        }
    }
    r.chi_root = largest_real_root(char_poly(OrbitData{1, m, n, Tau::Cyc123}), 1e-13);
    if (r.chi_root && r.lambda_root) {
        r.difference = std::fabs(*r.lambda_root - *r.chi_root);
        if (*r.difference >= kSpectralAgreement) {
            r.errors.push_back("spectral: |lambda^(1/k) - chi root| = " + std::to_string(*r.difference) + " exceeds 1e-6");
        }
    }

    if (s) {
        const FoldResult fr = fold(s->words(), s->ctx());
        r.fold.rank = fr.rank;
        r.fold.index = fr.index;
        r.fold.complete = fr.complete;
        r.fold.whole_group = fr.whole_group(s->ctx());
        if (!r.fold.whole_group) r.errors.push_back("fold: generators do not generate the whole group");

        try {
            const int star = distinguished_generator(*inst, *s);
            r.minor.g_star = (*s)[static_cast<std::size_t>(star)].name;
            const auto minor = unimodular_minor(abelianization_matrix(s->words(), s->ctx()), star);
            if (minor) {
                r.minor.found = true;
                r.minor.determinant = minor->determinant;
                for (int c : minor->columns) r.minor.columns.push_back((*s)[static_cast<std::size_t>(c)].name);
            } else {
                r.errors.push_back("minor: no unimodular minor containing " + r.minor.g_star);
            }
        } catch (const Error& e) {
            r.errors.push_back(std::string("minor: ") + e.what());
        }
    }

    if (opts.boundary) {
        r.boundary.attempted = true;
        r.boundary.predicted_form = boundary_form_name(predicted_form(m, n));
        try {
            const BoundaryWord bw = boundary_word(m, n, opts.boundary_budget);
            r.boundary.found = true;
            r.boundary.form = boundary_form_name(bw.form);
            r.boundary.matches_predicted_parity = bw.matches_predicted_parity;
            r.boundary.on_the_nose = bw.on_the_nose;
            r.boundary.omega = format(bw.omega_word);
            r.boundary.nodes = bw.nodes;
        } catch (const Error& e) {
            r.errors.push_back(std::string("boundary: ") + e.what());
        }
    }

    r.passed = r.errors.empty() && r.status == "Verified" && r.matrix.irreducible && r.matrix.primitive && r.difference &&
               *r.difference < kSpectralAgreement && r.fold.whole_group && r.minor.found && (!opts.boundary || r.boundary.found);
    if (opts.timing) {
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

std::vector<std::pair<int, int>> sweep_cells(int lo, int hi) {
    std::vector<std::pair<int, int>> out;
    for (int size = std::max(lo, 3); size <= hi; ++size) {
        for (int m = 1; m <= size - 2; ++m) {
            const int n = size - 1 - m;
            if (in_family_range(m, n)) out.emplace_back(m, n);
        }
    }
    return out;
}

SweepSummary run_sweep(const std::vector<std::pair<int, int>>& cells, const CatalogSet& catalogs, const RunOptions& opts,
                       int parallel) {
    SweepSummary summary;
    summary.reports.resize(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            summary.reports[i] = run_verify(cells[i].first, cells[i].second, catalogs, opts);
        }
    };
    const int threads = std::max(1, std::min<int>(parallel, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const RunReport& r : summary.reports) (r.passed ? summary.passed : summary.failed) += 1;
    return summary;
}

json sweep_to_json(const SweepSummary& s) {
    json cells = json::array();
    for (const RunReport& r : s.reports) cells.push_back(r);
    return json{{"schema", kReportSchema}, {"cells", cells}, {"passed", s.passed}, {"failed", s.failed}};
}

LambdaComparison compare_lambda(int m, int n, const CatalogSet& catalogs, double tol) {
    const CatalogInstance inst = catalogs.instantiate(m, n);
    const Semigroup s = build_semigroup(inst);
    const VerificationReport vr = verify_invariance(s, build_action(m, n), inst.period, inst.conjugator);
    const SpectralCertificate cert = perron_root(transition_matrix(vr), tol);
    LambdaComparison out;
    out.k = inst.period;
    out.lambda = cert.perron_root;
    out.lambda_root = std::pow(cert.perron_root, 1.0 / inst.period);
    const auto chi = largest_real_root(char_poly(OrbitData{1, m, n, Tau::Cyc123}), 1e-13);
    if (!chi) throw SpectralError("characteristic polynomial has no real root >= 1");
    out.chi_root = *chi;
    out.difference = std::fabs(out.lambda_root - out.chi_root);
    return out;
}

std::string format_report(const RunReport& r, bool with_images) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "(1," << r.m << "," << r.n << ") family " << r.family << ", k = " << r.k << "\n";
    os << "  semigroup: " << r.semigroup_size << " generators, status " << r.status;
    if (!r.cyclic_positive) os << " (cyclic positivity fails)";
    os << "\n  conjugator: " << r.conjugator << "\n";
    if (with_images) {
        for (const GeneratorRecord& g : r.generators) {
            os << "    " << g.name << " -> ";
            for (std::size_t i = 0; i < g.image.size(); ++i) os << (i ? " " : "") << g.image[i];
            if (!g.linear) os << "   [cyclic]";
            os << "\n";
        }
    }
    os << "  matrix: dim " << r.matrix.dim << ", irreducible " << (r.matrix.irreducible ? "yes" : "no") << ", primitive "
       << (r.matrix.primitive ? "yes" : "no") << " (" << r.matrix.primitivity_reason << ")\n";
    if (r.matrix.lambda) {
        os << "  lambda = " << *r.matrix.lambda << " in [" << *r.matrix.cw_lower << ", " << *r.matrix.cw_upper << "]\n";
    }
    if (r.lambda_root && r.chi_root) {
        os << "  lambda^(1/k) = " << *r.lambda_root << ", chi root = " << *r.chi_root << ", |diff| = " << *r.difference << "\n";
    }
    os << "  fold: rank " << r.fold.rank << ", index " << (r.fold.index ? std::to_string(*r.fold.index) : std::string("infinite")) << "\n";
    os << "  unimodular minor: " << (r.minor.found ? "found, det " + std::to_string(r.minor.determinant) : std::string("not found"))
       << ", g_star = " << r.minor.g_star << "\n";
    if (r.boundary.attempted) {
        os << "  boundary word: ";
        if (r.boundary.found) {
            os << r.boundary.form << " form (parity rule predicts " << r.boundary.predicted_form << ")"
               << (r.boundary.on_the_nose ? ", fixed letter for letter" : "") << ": " << r.boundary.omega << "\n";
        } else {
            os << "not found\n";
        }
    }
    for (const std::string& e : r.errors) os << "  ! " << e << "\n";
    if (r.timing_ms) os << "  time: " << std::fixed << std::setprecision(1) << *r.timing_ms << " ms\n";
    os << "  result: " << (r.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace fgdyn
