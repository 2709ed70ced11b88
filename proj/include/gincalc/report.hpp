#ifndef GINCALC_REPORT_HPP
#define GINCALC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gincalc/betti.hpp"
#include "gincalc/gin.hpp"
#include "gincalc/invariants.hpp"
#include "gincalc/reduction.hpp"

namespace gincalc {

struct ReportConfig {
    TermOrder order = TermOrder::degrevlex;
    int trials = 5;
    std::uint64_t seed = 42;
    long coeff_bound = 100;
    bool no_gin = false;
    int max_degree = 12;  // depth of the Hilbert function table in text output
};

/// The cross-checked invariant report: profiles of S/J computed by every
/// applicable route on the pipeline's monomial ideal J (a gin, or the input
/// itself under --no-gin), plus the Betti table and the reduction number of
/// S/J. Routes that need characteristic 0 and Borel-fixedness are absent
/// when not applicable.
struct InvariantReport {
    explicit InvariantReport(MonomialIdeal ideal) : gin(std::move(ideal)) {}

    RingPtr ring;
    TermOrder order = TermOrder::degrevlex;
    std::uint64_t seed = 0;
    int trials = 0;
    bool used_gin = true;
    bool gin_agreement = true;

    MonomialIdeal gin;
    int dimension = 0;
    std::vector<long> hilbert_function;  // dim (S/J)_m for m = 0..max_degree
    DeltaProfile deltas;
    InvariantProfile colon;
    std::optional<InvariantProfile> borel;
    std::optional<std::vector<ExtInt>> borel_reg_ideal;  // reg_t of the ideal
    std::optional<BettiTable> betti;                     // subject S/J
    std::optional<InvariantProfile> betti_profile;
    std::optional<std::vector<ExtremalBetti>> extremal;
    std::optional<ReductionResult> reduction;  // Bresinsky-Hoa on J

    std::optional<bool> colon_vs_borel;
    std::optional<bool> colon_vs_betti;
    std::optional<bool> borel_vs_betti;
    /// Conjunction when at least two routes ran; absent otherwise.
    std::optional<bool> routes_agree;

    double elapsed_ms = 0.0;
};

/// Full pipeline: gin under config.order, then every route on the result.
InvariantReport invariant_report(const std::vector<Polynomial>& I,
                                 const ReportConfig& config);
/// --no-gin entry point: all routes on the given monomial ideal directly.
InvariantReport invariant_report_monomial(const MonomialIdeal& J,
                                          const ReportConfig& config);

/// Reduction subcommand payload.
struct ReductionReport {
    RingPtr ring;
    std::uint64_t seed = 0;
    int trials = 0;
    ReductionResult result;
    double elapsed_ms = 0.0;
};

enum class ReportFormat { json, text };

/// Which sections of the invariant report to render.
enum class ReportView { full, invariants, betti };

/// Deterministic rendering. JSON has the stable fields ring, order, seed,
/// trials, gin, dimension, reg_profile, astar_profile, reg, astar, reg_ideal,
/// betti, extremal_betti, reduction_number, routes_agree; -inf renders as
/// null. Timing appears only in the text format.
std::string render_report(const InvariantReport& report, ReportFormat format,
                          ReportView view = ReportView::full);

std::string render_reduction(const ReductionReport& report, ReportFormat format);

/// {"error": {"code", "message"}} for exit-code-1 failures in json mode.
std::string render_error_json(const std::string& code, const std::string& message);

}  // namespace gincalc

#endif
