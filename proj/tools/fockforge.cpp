// fockforge: exact-arithmetic lattice Fock spaces, vertex operators, and
// Hilbert-scheme generating functions, with every algebraic identity
// runnable as a verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fockforge/checks.hpp"
#include "fockforge/io.hpp"

namespace ff = fockforge;
using ff::Json;

namespace {

/// Malformed or unreadable input files map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

ff::Lattice load_lattice(const std::string& path) {
    try {
        return ff::lattice_from_json(load_json(path));
    } catch (const ff::UsageError& e) {
        throw InputError(std::string("bad lattice file: ") + e.what());
    }
}

ff::HodgeDiamond load_surface(const std::string& path) {
    try {
        return ff::hodge_from_json(load_json(path));
    } catch (const ff::UsageError& e) {
        throw InputError(std::string("bad surface file: ") + e.what());
    }
}

int order_cap() {
    const char* cap = std::getenv("FOCKFORGE_MAX_ORDER");
    if (!cap) return -1;
    return std::atoi(cap);
}

void enforce_order_cap(int order) {
    int cap = order_cap();
    if (cap >= 0 && order > cap)
        throw ff::UsageError("order " + std::to_string(order) +
                             " exceeds FOCKFORGE_MAX_ORDER = " + std::to_string(cap));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

ff::PairingSpec make_pairing(const ff::Lattice& lattice, const std::string& kind, long long level) {
    if (kind == "classical") return ff::PairingSpec::classical(lattice);
    if (kind == "level") return ff::PairingSpec::with_level(lattice, level);
    if (kind == "q") return ff::PairingSpec::q_deformed(lattice, level);
    throw ff::UsageError("pairing must be classical, level, or q");
}

Json laurent_or_value(const ff::LaurentPolyQRat& p, const std::optional<std::string>& q_at) {
    if (q_at) return Json(ff::to_string(ff::evaluate_at(p, ff::parse_rational(*q_at))));
    return ff::to_json(p);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice Fock spaces, vertex operators, and Hilbert-scheme series"};
    app.require_subcommand(1);

    std::string lattice_path, surface_path, gram_path, state_path, x_path, y_path;
    std::string format = "json", pairing_kind = "classical";
    std::optional<std::string> q_at;
    int order = 6, color = 0, number = 6, h20 = 0, h11 = 1, max_corner = 25, multirank = 2;
    long mode = -1;
    long long level = 1, kk = 1;
    unsigned long long seed = 7;
    int vi = 0, vj = 1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    };

    // check-all
    CLI::App* check_all = app.add_subcommand("check-all", "run the full verification suite");
    check_all->add_option("--lattice", lattice_path, "lattice JSON file")->required();
    check_all->add_option("--order", order, "truncation order / degree bound");
    check_all->add_option("--level", level, "Heisenberg level c");
    check_all->add_option("--seed", seed, "seed for the property suites");

    // fock
    CLI::App* fock = app.add_subcommand("fock", "Fock space operations");
    fock->require_subcommand(1);
    CLI::App* fapply = fock->add_subcommand("apply", "apply an oscillator mode to a state");
    fapply->add_option("--lattice", lattice_path)->required();
    fapply->add_option("--color", color, "basis color index");
    fapply->add_option("--mode", mode, "mode: negative = creation, positive = annihilation")
        ->required();
    fapply->add_option("--state", state_path, "state JSON (default: vacuum)");
    fapply->add_option("--pairing", pairing_kind)->check(CLI::IsMember({"classical", "level", "q"}));
    fapply->add_option("--level", level);
    fapply->add_option("--q", q_at, "evaluate Laurent coefficients at a rational q");

    CLI::App* fpair = fock->add_subcommand("pair", "inner product of two states");
    fpair->add_option("--lattice", lattice_path)->required();
    fpair->add_option("--x", x_path, "left state JSON")->required();
    fpair->add_option("--y", y_path, "right state JSON")->required();
    fpair->add_option("--pairing", pairing_kind)->check(CLI::IsMember({"classical", "level", "q"}));
    fpair->add_option("--level", level);
    fpair->add_option("--q", q_at, "evaluate Laurent result at a rational q");

    CLI::App* fhh = fock->add_subcommand("hh-series", "pairing table of group-like elements");
    fhh->add_option("--k", kk, "pairing value (v, w)");
    fhh->add_option("--lattice", lattice_path, "derive k from a lattice entry");
    fhh->add_option("--vi", vi, "first color (with --lattice)");
    fhh->add_option("--vj", vj, "second color (with --lattice)");
    fhh->add_option("--order", order);
    fhh->add_option("--level", level);
    add_format(fhh);

    CLI::App* faxioms = fock->add_subcommand("check-axioms", "verify the Fock axioms");
    faxioms->add_option("--lattice", lattice_path)->required();
    faxioms->add_option("--order", order);
    faxioms->add_option("--level", level);
    faxioms->add_option("--seed", seed);

    // vertex
    CLI::App* vertex = app.add_subcommand("vertex", "vertex algebra layer");
    vertex->require_subcommand(1);
    CLI::App* vw1 = vertex->add_subcommand("weight-one", "bracket table of the weight-1 algebra");
    vw1->add_option("--lattice", lattice_path)->required();
    vw1->add_option("--order", order);
    CLI::App* vchar = vertex->add_subcommand("character", "graded character of F");
    vchar->add_option("--lattice", lattice_path)->required();
    vchar->add_option("--order", order);
    add_format(vchar);

    // hilb
    CLI::App* hilb = app.add_subcommand("hilb", "Hilbert-scheme generating functions");
    hilb->require_subcommand(1);
    CLI::App* hhodge = hilb->add_subcommand("hodge", "bigraded Hodge series from a surface diamond");
    hhodge->add_option("--surface", surface_path)->required();
    hhodge->add_option("--order", order);
    add_format(hhodge);
    CLI::App* hu0 = hilb->add_subcommand("u0", "u^0 diagonal series");
    hu0->add_option("--h20", h20)->required();
    hu0->add_option("--h11", h11)->required();
    hu0->add_option("--order", order);
    add_format(hu0);
    CLI::App* hcharge = hilb->add_subcommand("charge-check", "level-c Heisenberg relations");
    hcharge->add_option("--level", level)->required();
    hcharge->add_option("--gram", gram_path, "lattice JSON supplying the gram matrix")->required();
    hcharge->add_option("--order", order, "largest mode checked");
    CLI::App* hcorners = hilb->add_subcommand("corners", "corner excess verification");
    hcorners->add_option("--max", max_corner, "largest partition weight");
    hcorners->add_option("--rank", multirank, "multipartition rank for the additivity check");

    // partition
    CLI::App* part = app.add_subcommand("partition", "partition combinatorics");
    part->require_subcommand(1);
    CLI::App* penum = part->add_subcommand("enumerate", "all partitions of n");
    penum->add_option("--n", number)->required();
    add_format(penum);
    CLI::App* pstrata = part->add_subcommand("strata", "stratum dimensions for partitions of n");
    pstrata->add_option("--n", number)->required();
    add_format(pstrata);

    CLI11_PARSE(app, argc, argv);

    try {
        enforce_order_cap(order);

        if (*check_all) {
            ff::Lattice lattice = load_lattice(lattice_path);
            ff::CheckOptions opts;
            opts.order = order;
            opts.level = level;
            opts.seed = seed;
            auto results = ff::run_all_checks(lattice, opts);
            Json params{{"lattice", lattice_path}, {"order", order}, {"level", level},
                        {"seed", seed}};
            emit(ff::report_to_json("check-all", params, results));
            return ff::all_passed(results) ? 0 : 1;
        }

        if (*fapply) {
            ff::Lattice lattice = load_lattice(lattice_path);
            ff::PairingSpec pairing = make_pairing(lattice, pairing_kind, level);
            ff::FockState state = state_path.empty()
                                      ? ff::FockState::vacuum(lattice.odd_palette())
                                      : ff::fock_state_from_json(load_json(state_path), lattice);
            ff::OperatorSymbol op{color, mode};
            if (pairing.is_q_valued()) {
                ff::FockStateQ out = ff::apply_q(op, ff::to_q_state(state), pairing);
                Json terms = Json::array();
                for (const auto& [mono, c] : out.terms())
                    terms.push_back(Json{{"mono", ff::to_json(mono)},
                                         {"coeff", laurent_or_value(c, q_at)}});
                emit(Json{{"palette", ff::to_json(lattice)}, {"terms", terms}});
            } else {
                emit(ff::to_json(ff::apply(op, state, pairing), lattice));
            }
            return 0;
        }

        if (*fpair) {
            ff::Lattice lattice = load_lattice(lattice_path);
            ff::PairingSpec pairing = make_pairing(lattice, pairing_kind, level);
            ff::FockState x = ff::fock_state_from_json(load_json(x_path), lattice);
            ff::FockState y = ff::fock_state_from_json(load_json(y_path), lattice);
            if (pairing.is_q_valued()) {
                auto value = ff::inner_product_q(ff::to_q_state(x), ff::to_q_state(y), pairing);
                emit(Json{{"value", laurent_or_value(value, q_at)}});
            } else {
                emit(Json{{"value", ff::to_string(ff::inner_product(x, y, pairing))}});
            }
            return 0;
        }

        if (*fhh) {
            long long k = kk;
            if (!lattice_path.empty() && fhh->count("--k") == 0) {
                ff::Lattice lattice = load_lattice(lattice_path);
                if (vi < 0 || vj < 0 || vi >= lattice.rank() || vj >= lattice.rank())
                    throw ff::UsageError("hh-series: color outside palette");
                k = lattice.gram()[vi][vj];
            }
            ff::TruncatedSeries s =
                ff::hh_pairing_series(k, order,
                                      level == 1 ? ff::PairingKind::classical
                                                 : ff::PairingKind::level_c,
                                      level);
            if (format == "tsv")
                std::cout << ff::series_tsv(s);
            else
                emit(Json{{"k", k}, {"level", level}, {"series", ff::to_json(s)}});
            return 0;
        }

        if (*faxioms) {
            ff::Lattice lattice = load_lattice(lattice_path);
            ff::CheckOptions opts;
            opts.order = order;
            opts.level = level;
            opts.seed = seed;
            auto results = ff::run_fock_axiom_checks(lattice, opts);
            Json params{{"lattice", lattice_path}, {"order", order}, {"level", level},
                        {"seed", seed}};
            emit(ff::report_to_json("fock check-axioms", params, results));
            return ff::all_passed(results) ? 0 : 1;
        }

        if (*vw1) {
            ff::Lattice lattice = load_lattice(lattice_path);
            ff::WeightOneAlgebra alg = ff::weight_one_algebra(lattice, order);
            Json basis = Json::array();
            for (const auto& b : alg.basis) basis.push_back(b.label());
            Json brackets = Json::array();
            for (int i = 0; i < alg.dimension(); ++i)
                for (int j = 0; j < alg.dimension(); ++j) {
                    bool nonzero = false;
                    Json coords = Json::array();
                    for (const auto& c : alg.bracket[i][j]) {
                        if (!ff::is_zero(c)) nonzero = true;
                        coords.push_back(ff::to_string(c));
                    }
                    if (nonzero) brackets.push_back(Json::array({i, j, coords}));
                }
            Json form = Json::array();
            for (int i = 0; i < alg.dimension(); ++i) {
                Json row = Json::array();
                for (int j = 0; j < alg.dimension(); ++j)
                    row.push_back(ff::to_string(alg.invariant_form[i][j]));
                form.push_back(row);
            }
            emit(Json{{"basis", basis},
                      {"brackets", brackets},
                      {"invariant_form", form},
                      {"antisymmetry", alg.antisymmetry_holds()},
                      {"jacobi", alg.jacobi_holds()}});
            return 0;
        }

        if (*vchar) {
            ff::Lattice lattice = load_lattice(lattice_path);
            ff::TruncatedSeries ch = ff::character(lattice, order);
            if (format == "tsv")
                std::cout << ff::series_tsv(ch);
            else
                emit(ff::to_json(ch));
            return 0;
        }

        if (*hhodge) {
            ff::HodgeDiamond diamond = load_surface(surface_path);
            ff::BigradedSeries big = ff::hilb_hodge_series(diamond, order);
            if (format == "tsv")
                std::cout << ff::bigraded_tsv(big);
            else
                emit(ff::to_json(big));
            return 0;
        }

        if (*hu0) {
            ff::TruncatedSeries s = ff::u0_series(h20, h11, order);
            if (format == "tsv")
                std::cout << ff::series_tsv(s);
            else
                emit(Json{{"h20", h20}, {"h11", h11}, {"series", ff::to_json(s)}});
            return 0;
        }

        if (*hcharge) {
            ff::Lattice lattice = load_lattice(gram_path);
            auto results = ff::central_charge_check(level, lattice.gram(), std::min(order, 6));
            Json rows = Json::array();
            bool ok = true;
            for (const auto& r : results) {
                rows.push_back(Json{{"relation", r.relation},
                                    {"status", r.passed ? "pass" : "fail"},
                                    {"detail", r.detail}});
                ok = ok && r.passed;
            }
            emit(Json{{"command", "hilb charge-check"}, {"level", level}, {"relations", rows},
                      {"all_pass", ok}});
            return ok ? 0 : 1;
        }

        if (*hcorners) {
            auto results = ff::corner_excess_report(max_corner, multirank, 10);
            Json rows = Json::array();
            bool ok = true;
            for (const auto& r : results) {
                rows.push_back(Json{{"relation", r.relation},
                                    {"status", r.passed ? "pass" : "fail"},
                                    {"detail", r.detail}});
                ok = ok && r.passed;
            }
            emit(Json{{"command", "hilb corners"}, {"max", max_corner}, {"relations", rows},
                      {"all_pass", ok}});
            return ok ? 0 : 1;
        }

        if (*penum) {
            auto parts = ff::enumerate_partitions(number);
            if (format == "tsv") {
                for (const auto& p : parts) std::cout << p.to_text() << "\n";
            } else {
                Json rows = Json::array();
                for (const auto& p : parts) rows.push_back(ff::to_json(p));
                emit(Json{{"n", number}, {"count", parts.size()}, {"partitions", rows}});
            }
            return 0;
        }

        if (*pstrata) {
            auto parts = ff::enumerate_partitions(number);
            if (format == "tsv") {
                std::cout << "partition\tlength\tdim_sym\tdim_hilb\tfiber\n";
                for (const auto& p : parts)
                    std::cout << p.to_text() << "\t" << p.length() << "\t"
                              << ff::stratum_dim_sym(p) << "\t" << ff::stratum_dim_hilb(p) << "\t"
                              << (p.weight() - p.length()) << "\n";
            } else {
                Json rows = Json::array();
                for (const auto& p : parts)
                    rows.push_back(Json{{"partition", ff::to_json(p)},
                                        {"dim_sym", ff::stratum_dim_sym(p)},
                                        {"dim_hilb", ff::stratum_dim_hilb(p)},
                                        {"fiber", p.weight() - p.length()}});
                auto census = ff::component_census(number);
                emit(Json{{"n", number},
                          {"components", ff::to_string(census.count)},
                          {"component_dimension", census.dimension},
                          {"strata", rows}});
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ff::UnsupportedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ff::TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ff::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
