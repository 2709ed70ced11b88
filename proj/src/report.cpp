#include "gincalc/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "gincalc/errors.hpp"
#include "gincalc/hilbert.hpp"

namespace gincalc {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

InvariantReport assemble(MonomialIdeal J, const ReportConfig& config,
                         Clock::time_point t0) {
    InvariantReport rep(std::move(J));
    rep.ring = rep.gin.ring();
    rep.order = config.order;
    rep.seed = config.seed;
    rep.trials = config.trials;

    const MonomialIdeal& ideal = rep.gin;
    rep.dimension = krull_dimension(ideal);
    rep.hilbert_function = hilbert_numerator(ideal).hf_values(config.max_degree);
    rep.deltas = delta_profile(ideal);
    rep.colon = profiles_colon(rep.deltas);

    if (ideal.ring()->characteristic() == 0 && is_borel_fixed(ideal)) {
        rep.borel = profiles_borel(ideal);
        rep.borel_reg_ideal = borel_reg_ideal_profile(ideal);
        BettiTable quotient = ek_betti(ideal).quotient_table();
        rep.betti_profile = profiles_from_betti(quotient, ideal.ring()->nvars());
        rep.extremal = extremal_betti(quotient);
        rep.betti = std::move(quotient);
        rep.colon_vs_borel = (rep.colon == *rep.borel);
        rep.colon_vs_betti = (rep.colon == *rep.betti_profile);
        rep.borel_vs_betti = (*rep.borel == *rep.betti_profile);
        rep.routes_agree = *rep.colon_vs_borel && *rep.colon_vs_betti && *rep.borel_vs_betti;
    }
    try {
        rep.reduction = bh_reduction(ideal, rep.dimension);
    } catch (const NoPowerError&) {
        // Non-generic monomial input: the least-power criterion does not apply.
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

ordered_json ext_json(const ExtInt& v) {
    if (v.is_neg_inf()) return nullptr;
    if (v.is_pos_inf()) return "inf";
    return v.value();
}

ordered_json profile_json(const std::vector<ExtInt>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs) a.push_back(ext_json(v));
    return a;
}

ordered_json ring_json(const Ring& ring) {
    ordered_json j;
    j["characteristic"] = ring.characteristic();
    j["variables"] = ring.var_names();
    return j;
}

ordered_json gens_json(const MonomialIdeal& J) {
    ordered_json a = ordered_json::array();
    for (const auto& g : J.gens()) a.push_back(monomial_str(*J.ring(), g));
    return a;
}

ordered_json betti_json(const BettiTable& t) {
    ordered_json j;
    j["subject"] = t.subject == BettiTable::Subject::quotient ? "quotient" : "ideal";
    ordered_json entries = ordered_json::array();
    for (const auto& [ij, mult] : t.beta)
        entries.push_back(ordered_json::array({ij.first, ij.second, mult}));
    j["entries"] = entries;
    j["b"] = profile_json(t.b);
    j["projective_dimension"] = t.projective_dimension;
    return j;
}

ordered_json extremal_json(const std::vector<ExtremalBetti>& es) {
    ordered_json a = ordered_json::array();
    for (const auto& e : es) a.push_back(ordered_json::array({e.l, e.m, e.multiplicity}));
    return a;
}

ordered_json opt_bool_json(const std::optional<bool>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string profile_text(const std::vector<ExtInt>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += " ";
        out += v.str();
    }
    return out;
}

std::string route_name(ReductionResult::Route r) {
    switch (r) {
        case ReductionResult::Route::direct: return "direct";
        case ReductionResult::Route::bh: return "bh";
        case ReductionResult::Route::combined: return "combined";
    }
    return "?";
}

}  // namespace

InvariantReport invariant_report(const std::vector<Polynomial>& I,
                                 const ReportConfig& config) {
    auto t0 = Clock::now();
    GinResult g = gin(I, config.order, config.trials, config.seed, config.coeff_bound);
    InvariantReport rep = assemble(std::move(g.gin), config, t0);
    rep.used_gin = true;
    rep.gin_agreement = g.agreement;
    return rep;
}

InvariantReport invariant_report_monomial(const MonomialIdeal& J,
                                          const ReportConfig& config) {
    InvariantReport rep = assemble(J, config, Clock::now());
    rep.used_gin = false;
    return rep;
}

std::string render_report(const InvariantReport& report, ReportFormat format,
                          ReportView view) {
    const bool want_betti = view != ReportView::invariants;
    const bool want_reduction = view == ReportView::full;
    if (format == ReportFormat::json) {
        ordered_json j;
        j["ring"] = ring_json(*report.ring);
        j["order"] = term_order_name(report.order);
        j["seed"] = report.seed;
        j["trials"] = report.trials;
        j["gin"] = gens_json(report.gin);
        j["used_gin"] = report.used_gin;
        j["dimension"] = report.dimension;
        j["hilbert_function"] = report.hilbert_function;
        ordered_json deltas = ordered_json::array();
        for (int i = report.deltas.nvars(); i >= 1; --i)
            deltas.push_back(ext_json(report.deltas.delta(i)));
        j["delta_profile"] = deltas;  // i = n..1
        j["reg_profile"] = profile_json(report.colon.reg_q);
        j["astar_profile"] = profile_json(report.colon.astar_q);
        j["reg"] = ext_json(report.colon.reg_full());
        j["astar"] = ext_json(report.colon.astar_full());
        j["reg_ideal"] = ext_json(report.colon.reg_ideal());
        if (want_betti) {
            j["betti"] = report.betti ? betti_json(*report.betti) : ordered_json(nullptr);
            j["extremal_betti"] =
                report.extremal ? extremal_json(*report.extremal) : ordered_json(nullptr);
        }
        if (want_reduction)
            j["reduction_number"] =
                report.reduction ? ordered_json(report.reduction->r) : ordered_json(nullptr);
        ordered_json agree;
        agree["colon_borel"] = opt_bool_json(report.colon_vs_borel);
        agree["colon_betti"] = opt_bool_json(report.colon_vs_betti);
        agree["borel_betti"] = opt_bool_json(report.borel_vs_betti);
        agree["all"] = opt_bool_json(report.routes_agree);
        j["routes_agree"] = agree;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    const int n = report.ring->nvars();
    os << "ring            : char " << report.ring->characteristic() << ",";
    for (const auto& v : report.ring->var_names()) os << " " << v;
    os << "\n";
    os << "order           : " << term_order_name(report.order) << "\n";
    if (report.used_gin)
        os << "seed / trials   : " << report.seed << " / " << report.trials << "\n";
    os << (report.used_gin ? "gin             : " : "ideal           : ")
       << ideal_str(report.gin) << "\n";
    os << "dimension       : " << report.dimension << "\n";
    os << "hilbert fn      :";
    for (long v : report.hilbert_function) os << " " << v;
    os << "\n";
    os << "delta (i=n..1)  : ";
    for (int i = n; i >= 1; --i) os << report.deltas.delta(i).str() << (i > 1 ? " " : "");
    os << "\n";
    os << "t               :";
    for (int t = 0; t < report.colon.levels(); ++t) os << " " << t;
    os << "\n";
    os << "reg_t(S/J)      : " << profile_text(report.colon.reg_q) << "\n";
    os << "a*_t(S/J)       : " << profile_text(report.colon.astar_q) << "\n";
    os << "reg(S/J) = " << report.colon.reg_full().str()
       << "   a*(S/J) = " << report.colon.astar_full().str()
       << "   reg(ideal) = " << report.colon.reg_ideal().str() << "\n";
    if (report.borel) {
        os << "borel route     : reg " << profile_text(report.borel->reg_q) << " | a* "
           << profile_text(report.borel->astar_q) << "\n";
    }
    if (report.betti_profile) {
        os << "betti route     : reg " << profile_text(report.betti_profile->reg_q)
           << " | a* " << profile_text(report.betti_profile->astar_q) << "\n";
    }
    if (want_betti && report.betti) {
        os << "betti (S/J)     :";
        for (const auto& [ij, mult] : report.betti->beta)
            os << " b[" << ij.first << "," << ij.second << "]=" << mult;
        os << "\n";
        os << "extremal        :";
        for (const auto& e : *report.extremal)
            os << " (l=" << e.l << ",m=" << e.m << ")x" << e.multiplicity;
        os << "\n";
    }
    if (want_reduction) {
        os << "reduction r(S/J): ";
        if (report.reduction) {
            os << report.reduction->r;
            if (report.reduction->bh_witness)
                os << "  (witness " << monomial_str(*report.ring, *report.reduction->bh_witness)
                   << ")";
        } else {
            os << "n/a";
        }
        os << "\n";
    }
    os << "routes agree    : "
       << (report.routes_agree ? (*report.routes_agree ? "yes" : "NO") : "n/a (single route)")
       << "\n";
    os << "time            : " << report.elapsed_ms << " ms\n";
    return os.str();
}

std::string render_reduction(const ReductionReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["ring"] = ring_json(*report.ring);
        j["seed"] = report.seed;
        j["trials"] = report.trials;
        j["dimension"] = report.result.dimension;
        j["reduction_number"] = report.result.r;
        j["route"] = route_name(report.result.route);
        ordered_json witness;
        witness["bh_power"] = report.result.bh_witness
                                  ? ordered_json(monomial_str(*report.ring,
                                                              *report.result.bh_witness))
                                  : ordered_json(nullptr);
        witness["direct_top_degree"] = report.result.direct_top_degree
                                           ? ordered_json(*report.result.direct_top_degree)
                                           : ordered_json(nullptr);
        j["witness"] = witness;
        j["routes_agree"] = report.result.agreement;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "ring            : char " << report.ring->characteristic() << ",";
    for (const auto& v : report.ring->var_names()) os << " " << v;
    os << "\n";
    os << "dimension       : " << report.result.dimension << "\n";
    os << "reduction number: " << report.result.r << "  (route "
       << route_name(report.result.route) << ")\n";
    if (report.result.bh_witness)
        os << "bh witness      : " << monomial_str(*report.ring, *report.result.bh_witness)
           << "\n";
    if (report.result.direct_top_degree)
        os << "direct witness  : top standard-monomial degree "
           << *report.result.direct_top_degree << "\n";
    os << "time            : " << report.elapsed_ms << " ms\n";
    return os.str();
}

std::string render_error_json(const std::string& code, const std::string& message) {
    ordered_json j;
    j["error"] = {{"code", code}, {"message", message}};
    return j.dump(2) + "\n";
}

}  // namespace gincalc
