// gincalc: Groebner bases, generic initial ideals, regularity profiles,
// Eliahou-Kervaire Betti tables and reduction numbers from ideal files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gincalc/errors.hpp"
#include "gincalc/groebner.hpp"
#include "gincalc/ideal_io.hpp"
#include "gincalc/report.hpp"

namespace {

using namespace gincalc;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string input;  // empty or "-" means stdin
    std::string order = "degrevlex";
    long characteristic = -1;  // -1: take from file
    std::uint64_t seed = 42;
    int trials = 5;
    long coeff_bound = 100;
    bool no_gin = false;
    std::string format = "text";
    int max_degree = 12;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Rebuild the file over a ring with the requested characteristic.
IdealFile override_characteristic(const IdealFile& file, unsigned long p) {
    if (file.ring->characteristic() == p) return file;
    auto ring = make_ring(file.ring->var_names(), p);
    IdealFile out{ring, {}};
    out.polys.reserve(file.polys.size());
    for (const auto& poly : file.polys) {
        std::vector<Term> terms;
        terms.reserve(poly.terms().size());
        for (const auto& t : poly.terms()) {
            Coeff c = p == 0 ? Coeff::rational(t.coeff.value())
                             : Coeff::from_string(t.coeff.value().get_str(), p);
            terms.push_back({t.mono, std::move(c)});
        }
        out.polys.emplace_back(ring, std::move(terms));
    }
    return out;
}

IdealFile load(const Options& opt) {
    IdealFile file = parse_ideal(read_input(opt.input));
    if (opt.characteristic >= 0)
        file = override_characteristic(file, static_cast<unsigned long>(opt.characteristic));
    return file;
}

ReportConfig config_from(const Options& opt) {
    ReportConfig cfg;
    cfg.order = *term_order_from_name(opt.order);
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.coeff_bound = opt.coeff_bound;
    cfg.no_gin = opt.no_gin;
    cfg.max_degree = opt.max_degree;
    return cfg;
}

ReportFormat format_from(const Options& opt) {
    return opt.format == "json" ? ReportFormat::json : ReportFormat::text;
}

void print_basis_text(const GroebnerBasis& gb) {
    std::cout << "order  : " << term_order_name(gb.order) << "\n";
    for (const auto& g : gb.generators) std::cout << g.str() << "\n";
    std::cout << "in(I)  : " << ideal_str(gb.leading_ideal()) << "\n";
}

int run_gb(const Options& opt) {
    IdealFile file = load(opt);
    ReportConfig cfg = config_from(opt);
    GroebnerBasis gb = reduced_groebner_basis(file.polys, cfg.order);
    if (format_from(opt) == ReportFormat::json) {
        std::ostringstream os;
        os << "{\n  \"order\": \"" << term_order_name(gb.order) << "\",\n  \"basis\": [";
        for (size_t i = 0; i < gb.generators.size(); ++i)
            os << (i ? ", " : "") << "\"" << gb.generators[i].str() << "\"";
        os << "],\n  \"leading_ideal\": [";
        const auto lead = gb.leading_ideal();
        for (size_t i = 0; i < lead.gens().size(); ++i)
            os << (i ? ", " : "") << "\"" << monomial_str(*lead.ring(), lead.gens()[i]) << "\"";
        os << "]\n}\n";
        std::cout << os.str();
    } else {
        print_basis_text(gb);
    }
    return 0;
}

int run_in(const Options& opt) {
    IdealFile file = load(opt);
    ReportConfig cfg = config_from(opt);
    MonomialIdeal in_ideal = initial_ideal(file.polys, cfg.order);
    if (format_from(opt) == ReportFormat::json) {
        std::ostringstream os;
        os << "{\n  \"order\": \"" << term_order_name(cfg.order)
           << "\",\n  \"initial_ideal\": [";
        for (size_t i = 0; i < in_ideal.gens().size(); ++i)
            os << (i ? ", " : "") << "\""
               << monomial_str(*in_ideal.ring(), in_ideal.gens()[i]) << "\"";
        os << "]\n}\n";
        std::cout << os.str();
    } else {
        std::cout << "in(I) = " << ideal_str(in_ideal) << "\n";
    }
    return 0;
}

int run_gin(const Options& opt) {
    IdealFile file = load(opt);
    ReportConfig cfg = config_from(opt);
    GinResult g = gin(file.polys, cfg.order, cfg.trials, cfg.seed, cfg.coeff_bound);
    if (format_from(opt) == ReportFormat::json) {
        std::ostringstream os;
        os << "{\n  \"order\": \"" << term_order_name(cfg.order) << "\",\n  \"seed\": "
           << cfg.seed << ",\n  \"trials\": " << cfg.trials << ",\n  \"gin\": [";
        for (size_t i = 0; i < g.gin.gens().size(); ++i)
            os << (i ? ", " : "") << "\"" << monomial_str(*g.gin.ring(), g.gin.gens()[i])
               << "\"";
        os << "],\n  \"agreement\": " << (g.agreement ? "true" : "false") << "\n}\n";
        std::cout << os.str();
    } else {
        std::cout << "gin(I) = " << ideal_str(g.gin) << "  (agreement: "
                  << (g.agreement ? "yes" : "no") << ", trials: " << g.trials << ")\n";
    }
    return 0;
}

InvariantReport make_report(const IdealFile& file, const ReportConfig& cfg) {
    if (cfg.no_gin) return invariant_report_monomial(as_monomial_ideal(file), cfg);
    return invariant_report(file.polys, cfg);
}

int run_report(const Options& opt, ReportView view) {
    IdealFile file = load(opt);
    ReportConfig cfg = config_from(opt);
    std::cout << render_report(make_report(file, cfg), format_from(opt), view);
    return 0;
}

int run_reduction(const Options& opt) {
    IdealFile file = load(opt);
    ReportConfig cfg = config_from(opt);
    auto t0 = Clock::now();
    ReductionReport rep;
    rep.ring = file.ring;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    if (cfg.no_gin) {
        MonomialIdeal J = as_monomial_ideal(file);
        rep.result = bh_reduction(J, krull_dimension(J));
    } else {
        rep.result = reduction_number(file.polys, cfg.trials, cfg.seed, cfg.coeff_bound);
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    std::cout << render_reduction(rep, format_from(opt));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases, gins, regularity profiles and reduction numbers"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "ideal file ('-' or absent: stdin)");
        sub->add_option("--order", opt.order, "term order")
            ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}))
            ->capture_default_str();
        sub->add_option("--char", opt.characteristic,
                        "override coefficient characteristic (0 or a prime)");
        sub->add_option("--seed", opt.seed, "master random seed")->capture_default_str();
        sub->add_option("--trials", opt.trials, "independent sampling trials")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--coeff-bound", opt.coeff_bound,
                        "coordinate-change entry bound")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_flag("--no-gin", opt.no_gin,
                      "treat the input as a monomial ideal and skip sampling");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        sub->add_option("--max-degree", opt.max_degree, "degree bound for tabulated values")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
    auto* in_cmd = app.add_subcommand("in", "initial ideal in(I)");
    auto* gin_cmd = app.add_subcommand("gin", "generic initial ideal");
    auto* inv_cmd = app.add_subcommand("invariants", "reg_t / a*_t profiles by all routes");
    auto* betti_cmd = app.add_subcommand("betti", "Eliahou-Kervaire Betti table of the gin");
    auto* red_cmd = app.add_subcommand("reduction", "reduction number of S/I");
    auto* rep_cmd = app.add_subcommand("report", "full cross-checked pipeline");
    for (auto* sub : {gb_cmd, in_cmd, gin_cmd, inv_cmd, betti_cmd, red_cmd, rep_cmd})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool json_errors = opt.format == "json";
    try {
        if (gb_cmd->parsed()) return run_gb(opt);
        if (in_cmd->parsed()) return run_in(opt);
        if (gin_cmd->parsed()) return run_gin(opt);
        if (inv_cmd->parsed()) return run_report(opt, ReportView::invariants);
        if (betti_cmd->parsed()) return run_report(opt, ReportView::betti);
        if (red_cmd->parsed()) return run_reduction(opt);
        if (rep_cmd->parsed()) return run_report(opt, ReportView::full);
        return 2;
    } catch (const gincalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const gincalc::Error& e) {
        if (json_errors) {
            std::cout << render_error_json(e.code(), e.what());
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (json_errors) {
            std::cout << render_error_json("internal", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
}
