#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fgdyn/catalog.hpp"

namespace fgdyn {

inline constexpr int kReportSchema = 1;
inline constexpr double kSpectralAgreement = 1e-6;

struct GeneratorRecord {
    std::string name;
    std::string word;
    std::vector<std::string> image;  // factor names of the k-th image
    bool linear = false;             // factorization obtained after stripping the conjugator

    friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

struct MatrixStats {
    int dim = 0;
    bool irreducible = false;
    int components = 0;
    bool primitive = false;
    std::string primitivity_reason;
    std::optional<double> lambda;
    std::optional<double> cw_lower;
    std::optional<double> cw_upper;
    long long iterations = 0;

    friend bool operator==(const MatrixStats&, const MatrixStats&) = default;
};

struct FoldStats {
    int rank = 0;
    std::optional<long long> index;  // absent = infinite
    bool complete = false;
    bool whole_group = false;

    friend bool operator==(const FoldStats&, const FoldStats&) = default;
};

struct MinorStats {
    bool found = false;
    std::string g_star;
    std::vector<std::string> columns;
    long long determinant = 0;

    friend bool operator==(const MinorStats&, const MinorStats&) = default;
};

struct BoundaryStats {
    bool attempted = false;
    bool found = false;
    std::string form;            // "single" or "doubled"
    std::string predicted_form;  // from the parity rule
    bool matches_predicted_parity = false;
    bool on_the_nose = false;
    std::string omega;
    std::uint64_t nodes = 0;

    friend bool operator==(const BoundaryStats&, const BoundaryStats&) = default;
};

struct RunReport {
    int schema = kReportSchema;
    int m = 0;
    int n = 0;
    int k = 0;
    std::string family;
    int semigroup_size = 0;
    std::string status;  // "Verified" or "Failed"
    std::string detail;
    bool cyclic_positive = false;
    std::string conjugator;
    std::vector<GeneratorRecord> generators;
    MatrixStats matrix;
    std::optional<double> chi_root;
    std::optional<double> lambda_root;  // lambda^(1/k)
    std::optional<double> difference;
    FoldStats fold;
    MinorStats minor;
    BoundaryStats boundary;
    std::vector<std::string> errors;  // stage failures, "stage: message"
    std::optional<double> timing_ms;
    bool passed = false;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

struct RunOptions {
    std::optional<int> k_override;
    double tol = 1e-10;
    bool boundary = true;
    std::uint64_t boundary_budget = 1'000'000;
    bool timing = true;
};

// Pipeline for one pair: build, verify, matrix, spectral, fold, minor, boundary. Stage failures
// are recorded in `errors` and later independent stages still run. Throws RangeError for pairs
// outside every family.
RunReport run_verify(int m, int n, const CatalogSet& catalogs, const RunOptions& opts = {});

// Every admissible (m,n) with lo <= 1+m+n <= hi, ordered by 1+m+n and then m.
std::vector<std::pair<int, int>> sweep_cells(int lo, int hi);

struct SweepSummary {
    std::vector<RunReport> reports;  // in sweep_cells order
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

SweepSummary run_sweep(const std::vector<std::pair<int, int>>& cells, const CatalogSet& catalogs, const RunOptions& opts,
                       int parallel);

nlohmann::json sweep_to_json(const SweepSummary& s);

struct LambdaComparison {
    int k = 0;
    double lambda = 0;
    double lambda_root = 0;
    double chi_root = 0;
    double difference = 0;
};
LambdaComparison compare_lambda(int m, int n, const CatalogSet& catalogs, double tol = 1e-10);

// One-line-per-generator summary and a stage table.
std::string format_report(const RunReport& r, bool with_images);

}  // namespace fgdyn
