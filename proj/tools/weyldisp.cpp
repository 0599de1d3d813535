// Command-line front end: classification of bi-capped twisted involution
// classes, class analytics, chamber counting, and building experiments.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weyldisp/counting.hpp"
#include "weyldisp/errors.hpp"
#include "weyldisp/report_json.hpp"
#include "weyldisp/spectrum.hpp"

using namespace weyldisp;
using nlohmann::json;

namespace {

constexpr int kExitMathFailure = 2;

int default_threads() {
    if (const char* env = std::getenv("WEYLDISP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

DiagramAutomorphism sigma_by_name(const CoxeterSystem& sys, const std::string& name) {
    if (name.empty() || name == "id") return sys.identity_automorphism();
    if (name == "flip") {
        const int n = sys.rank();
        for (const auto& a : sys.diagram_automorphisms()) {
            if (a.order != 2) continue;
            if (sys.spec().family == Family::D &&
                !(a.node_perm[n - 2] == n - 1 && a.node_perm[n - 1] == n - 2))
                continue;
            return a;
        }
        throw InvalidType("type has no flip symmetry");
    }
    if (name == "triality" || name == "triality2") {
        if (!(sys.spec().family == Family::D && sys.rank() == 4))
            throw InvalidType("triality needs D4");
        return sys.automorphism_from_nodes(name == "triality" ? std::vector<int>{2, 1, 3, 0}
                                                              : std::vector<int>{3, 1, 0, 2});
    }
    throw InvalidType("sigma: " + name);
}

ParameterMap params_from_flags(const CoxeterSystem& sys, long q, const std::string& params) {
    if (params.empty()) return ParameterMap::uniform(sys, q);
    std::vector<long> v(sys.rank(), 0);
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidType("params entry: " + item);
        std::string key = item.substr(0, eq);
        long val = std::stol(item.substr(eq + 1));
        if (key == "l" || key == "s") {
            // long/short generator classes for the two-class types
            if (sys.generator_classes().size() != 2)
                throw InvalidType("type has no long/short distinction");
            const auto& cls = sys.generator_classes()[key == "l" ? 0 : 1];
            for (int s : cls) v[s] = val;
        } else {
            int s = std::stoi(key);
            if (s < 1 || s > sys.rank()) throw InvalidType("params generator: " + key);
            v[s - 1] = val;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == 0) throw InvalidType("params missing generator " + std::to_string(i + 1));
    return ParameterMap(sys, v);
}

GFMatrix matrix_from_file(const FlagBuilding& b, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidType("cannot open " + path);
    GFMatrix m = GFMatrix::zero(b.dim(), b.dim());
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            int v;
            if (!(in >> v))
                throw InvalidType("matrix file needs " + std::to_string(b.dim()) + "^2 entries");
            m.at(i, j) = static_cast<std::uint8_t>(((v % b.field().q()) + b.field().q()) %
                                                   b.field().q());
        }
    return m;
}

void print_pretty_classify(const CoxeterSystem& sys, const std::vector<BicappedClassRow>& rows,
                           std::ostream& os) {
    os << "bi-capped twisted involution classes of " << sys.spec().name() << "\n";
    os << "class | dual | rel. type | dual rel. type | FixRk+OppRk | size | lengths\n";
    for (const auto& r : rows) {
        os << r.symbol << " | " << r.dual_symbol << " | " << r.relative_type << " | "
           << r.dual_relative_type << " | " << r.fix_rank << "+" << r.opp_rank << " | " << r.size
           << " | [" << r.min_length << "," << r.max_length << "]\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"displacement spectra of spherical building automorphisms"};
    app.require_subcommand(1);

    std::string type, sigma_name = "id", word, params, format = "pretty";
    std::string model, auto_name = "identity";
    long q = 2;
    std::size_t max_class = 100000000;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    int threads = default_threads();
    bool enumerate_only = false, substructure = false, exhaustive = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "pretty|json|csv")->default_val("pretty");
        cmd->add_option("--threads", threads, "worker threads (default WEYLDISP_THREADS or 1)");
        cmd->add_option("--max-class-size", max_class, "enumeration element cap");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "bi-capped class table of a type");
    c_classify->add_option("--type", type)->required();
    add_common(c_classify);

    CLI::App* c_class = app.add_subcommand("class", "analyse one twisted conjugacy class");
    c_class->add_option("--type", type)->required();
    c_class->add_option("--sigma", sigma_name, "id|flip|triality|triality2");
    c_class->add_option("--word", word, "space-separated 1-based generator indices")->required();
    c_class->add_flag("--enumerate", enumerate_only, "also list the class elements");
    add_common(c_class);

    CLI::App* c_count = app.add_subcommand("count", "chamber displacement counts for a class");
    c_count->add_option("--type", type)->required();
    c_count->add_option("--sigma", sigma_name);
    c_count->add_option("--word", word)->required();
    c_count->add_option("--q", q, "uniform thickness parameter");
    c_count->add_option("--params", params,
                        "per-class parameters, e.g. \"l=2,s=4\" or \"1=2,2=2,3=4\"");
    c_count->add_flag("--substructure", substructure,
                      "count via the catalogued fixed Weyl substructure");
    add_common(c_count);

    CLI::App* c_building =
        app.add_subcommand("building", "displacement spectrum of a concrete building");
    c_building->add_option("--model", model, "A{n}:F{q}")->required();
    c_building->add_option(
        "--auto", auto_name,
        "identity|symplectic-polarity|spread|sl3:a|matrix:@file|correlation:@file");
    c_building->add_flag("--exhaustive", exhaustive);
    c_building->add_option("--samples", samples);
    c_building->add_option("--seed", seed);
    add_common(c_building);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_classify) {
            CoxeterSystem sys = CoxeterSystem::build(type);
            auto rows = classify_bicapped(sys, max_class);
            if (format == "json")
                std::cout << classify_rows_json(sys, rows).dump(2) << "\n";
            else
                print_pretty_classify(sys, rows, std::cout);
            return 0;
        }

        if (*c_class) {
            CoxeterSystem sys = CoxeterSystem::build(type);
            DiagramAutomorphism sigma = sigma_by_name(sys, sigma_name);
            TwistedClass c = enumerate_class(sys, sys.parse_word(word), sigma, max_class);
            json j = class_report_json(c);
            if (enumerate_only) {
                j["elements"] = json::array();
                for (const auto& e : c.elements())
                    j["elements"].push_back(sys.word_string(sys.element_of(e.key)));
            }
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "class of [" << word << "] in " << type << " (sigma = " << sigma_name
                          << ")\n";
                std::cout << "size " << c.size() << ", lengths [" << c.min_length() << ","
                          << c.max_length() << "]";
                if (j["bicapped"].is_boolean() && j["bicapped"].get<bool>())
                    std::cout << ", bi-capped, FixRk " << j["fix_rank"] << ", OppRk "
                              << j["opp_rank"];
                std::cout << "\n";
                if (enumerate_only)
                    for (const auto& w : j["elements"])
                        std::cout << "  [" << w.get<std::string>() << "]\n";
            }
            return 0;
        }

        if (*c_count) {
            CoxeterSystem sys = CoxeterSystem::build(type);
            DiagramAutomorphism sigma = sigma_by_name(sys, sigma_name);
            ParameterMap p = params_from_flags(sys, q, params);
            TwistedClass c = enumerate_class(sys, sys.parse_word(word), sigma, max_class);
            CountReport rep;
            if (substructure) {
                auto rows = finite_ws_rows(sys, p);
                if (rows.empty()) throw InvalidType("no finite Weyl substructure for this type");
                CapCertificate cert = cap_certificate(c);
                // rows of the right rank are tried in order; the class-sum
                // cross-check inside counts_substructure rejects wrong pairings
                bool matched = false;
                for (const auto& r : rows) {
                    CoxeterSystem sub = CoxeterSystem::build(r.relative_type);
                    if (sub.rank() != cert.fix_rank) continue;
                    try {
                        SubstructureCounts sc =
                            counts_substructure(c, p, sub, ParameterMap(sub, r.relative_params));
                        rep = sc.report;
                        rep.class_description = "Cl([" + word + "]) via " + r.relative_type +
                                                " (" + r.remark + ")";
                        matched = true;
                        break;
                    } catch (const InternalContradiction&) {
                        continue;
                    }
                }
                if (!matched) throw InvalidType("no catalogued substructure matches the class");
            } else {
                rep = counts_uniclass(c, p);
                rep.class_description = "Cl([" + word + "])";
            }
            auto rows = count_rows(c, p, rep);
            if (format == "json")
                std::cout << count_report_json(rep, &rows).dump(2) << "\n";
            else if (format == "csv")
                std::cout << count_report_csv(rows);
            else {
                std::cout << rep.class_description << ": |C| = " << c.size()
                          << ", W(q) = " << rep.total_chambers
                          << ", C(q^{1/2}) = " << rep.class_sum_value.str() << "\n";
                if (!rep.integral)
                    std::cout << "NOT integral: " << rep.witness << "\n";
                else
                    for (const auto& st : rep.strata)
                        std::cout << "  l = " << st.length << " (" << st.elements
                                  << " elements): |Delta_w| = " << st.count.str() << "\n";
            }
            return rep.integral ? 0 : kExitMathFailure;
        }

        if (*c_building) {
            auto colon = model.find(":F");
            if (model.size() < 4 || model[0] != 'A' || colon == std::string::npos)
                throw InvalidType("model: " + model);
            int n = std::stoi(model.substr(1, colon - 1));
            int fq = std::stoi(model.substr(colon + 2));
            FlagBuilding b(n, fq);

            BuildingAutomorphism theta = identity_automorphism(b);
            if (auto_name == "symplectic-polarity") theta = symplectic_polarity(b);
            else if (auto_name == "spread") theta = spread_collineation(b);
            else if (auto_name.rfind("sl3:", 0) == 0)
                theta = sl3_example(b, std::stoi(auto_name.substr(4)));
            else if (auto_name.rfind("matrix:@", 0) == 0)
                theta = collineation(b, matrix_from_file(b, auto_name.substr(8)));
            else if (auto_name.rfind("correlation:@", 0) == 0)
                theta = correlation(b, matrix_from_file(b, auto_name.substr(13)));
            else if (auto_name != "identity")
                throw InvalidType("auto: " + auto_name);

            SpectrumOptions opts;
            opts.threads = threads;
            if (samples > 0 && !exhaustive) {
                opts.exhaustive = false;
                opts.samples = samples;
                opts.seed = seed;
            }
            SpectrumReport rep = spectrum(b, theta, opts);
            if (format == "json") {
                std::cout << spectrum_report_json(rep).dump(2) << "\n";
            } else {
                std::cout << rep.model << " / " << rep.automorphism
                          << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
                for (const auto& e : rep.spectrum)
                    std::cout << "  [" << e.word << "] x " << e.count << "\n";
                std::cout << "uniclass: " << (rep.verdicts.uniclass ? "yes" : "no")
                          << ", union of classes: "
                          << (rep.verdicts.union_of_classes ? "yes" : "no") << "\n";
                if (rep.exhaustive)
                    std::cout << "Fix = " << rep.verdicts.fixed_diagram
                              << ", Opp = " << rep.verdicts.opposition_diagram << "\n";
            }
            return 0;
        }
    } catch (const NotDivisible& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
