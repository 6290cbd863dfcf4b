// rmx: construct and verify the universal R-matrices of finite Abelian
// group Hopf algebras from bicharacters, together with the dual
// coquasitriangular picture and the induced braidings on graded spaces.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
// error, 3 i/o error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rmx/braiding.hpp"
#include "rmx/errors.hpp"
#include "rmx/serialize.hpp"

using namespace rmx;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

long long max_order() {
    const char *env = std::getenv("RMX_MAX_ORDER");
    if (!env)
        return 64;
    return std::atoll(env);
}

GroupSpec parse_group_checked(const std::string &text) {
    GroupSpec spec = parse_group_spec(text);
    if (spec.order() > max_order())
        throw ParseError("group order " + std::to_string(spec.order()) +
                             " exceeds RMX_MAX_ORDER = " + std::to_string(max_order()),
                         0);
    return spec;
}

// "K=0,1;1,0" (the K= prefix is optional); rows split on ';', entries on ','.
Bicharacter parse_k_spec(const GroupSpec &spec, std::string text) {
    if (text.rfind("K=", 0) == 0 || text.rfind("k=", 0) == 0)
        text = text.substr(2);
    std::vector<std::vector<int>> rows;
    if (!text.empty()) {
        std::size_t pos = 0;
        std::vector<int> row;
        std::string cell;
        auto flush_cell = [&]() {
            if (cell.empty())
                throw ParseError("empty entry in K matrix", pos);
            row.push_back(std::stoi(cell));
            cell.clear();
        };
        for (pos = 0; pos < text.size(); ++pos) {
            char ch = text[pos];
            if (ch == ',') {
                flush_cell();
            } else if (ch == ';') {
                flush_cell();
                rows.push_back(std::move(row));
                row.clear();
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
                cell += ch;
            } else {
                throw ParseError("unexpected character in K matrix", pos);
            }
        }
        flush_cell();
        rows.push_back(std::move(row));
    }
    bool reduced = false;
    Bicharacter sigma = make_bicharacter(spec, std::move(rows), &reduced);
    if (reduced)
        std::cerr << "warning: K entries out of range, reduced to K=" << sigma.k_str()
                  << "\n";
    return sigma;
}

// "<degree>:<dim>,..." with degrees as dot-separated exponents ("1.0:2");
// for the cyclic rank-one case plain integers work ("3:1").
GradedSpace parse_dims(const GroupSpec &spec, const std::string &text) {
    std::map<GroupElement, int> dims;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected <degree>:<dim>", pos);
        GroupElement degree = degree_from_key(item.substr(0, colon), spec);
        int dim = std::stoi(item.substr(colon + 1));
        if (dim < 0)
            throw ParseError("negative dimension", pos);
        dims[degree] += dim;
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return GradedSpace::from_dims(spec, dims);
}

std::string cyc_display(const Cyc &value) {
    auto [re, im] = value.approx();
    char buf[64];
    std::snprintf(buf, sizeof(buf), " \xe2\x89\x88 %.6g%+.6gi", re, im);
    return value.str() + buf;
}

void print_tensor(const Tensor2 &t) {
    if (t.coeffs.empty()) {
        std::cout << "  0\n";
        return;
    }
    for (const auto &[key, c] : t.coeffs)
        std::cout << "  X" << key.first.str() << " (x) X" << key.second.str() << "  :  "
                  << cyc_display(c) << "\n";
}

void print_report(const AxiomReport &report) {
    for (const CheckItem &item : report.items) {
        std::cout << "  [" << (item.pass ? "pass" : "FAIL") << "] " << item.name;
        if (!item.pass && !item.witness.empty())
            std::cout << "  (witness: " << item.witness << ")";
        std::cout << "\n";
    }
}

bool write_json_file(const std::string &path, const Json &payload) {
    std::ofstream out(path);
    if (!out)
        return false;
    out << payload.dump(2) << "\n";
    return out.good();
}

// deterministic low-dimensional spaces for the aggregated verifier
std::array<GradedSpace, 3> default_spaces(const GroupSpec &spec) {
    std::vector<GroupElement> all = spec.elements();
    GroupElement gen = all.size() > 1 ? all[1] : all[0];
    GroupElement top = all.back();
    std::map<GroupElement, int> dv{{spec.identity(), 1}, {top, 1}};
    std::map<GroupElement, int> dw{{spec.identity(), 1}, {gen, 1}};
    std::map<GroupElement, int> du{{gen, 2}};
    return {GradedSpace::from_dims(spec, dv), GradedSpace::from_dims(spec, dw),
            GradedSpace::from_dims(spec, du)};
}

// Full axiom suite for one bicharacter: R-matrix axioms, the dual
// coquasitriangular axioms, the category checks on small graded spaces, the
// triple agreement of the braiding routes, and the triangularity
// classification against skew-symmetry.
AxiomReport verify_structure(const Bicharacter &sigma) {
    AxiomReport report = verify_urm(r_from_bicharacter(sigma));
    AxiomReport dual = verify_coquasi(table_of(sigma));
    report.items.insert(report.items.end(), dual.items.begin(), dual.items.end());

    auto [v, w, u] = default_spaces(sigma.spec);
    AxiomReport cat = verify_category_axioms(sigma, v, w, u);
    for (CheckItem &item : cat.items)
        if (item.name != "symmetry iff commutation factor") // needs full support
            report.items.push_back(std::move(item));

    GradedMap direct = braid_graded(sigma, v, w);
    bool agree = direct == braid_from_r(r_from_bicharacter(sigma), v, w) &&
                 direct == braid_from_coquasi(table_of(sigma), v, w);
    report.add("braiding routes agree", agree);

    bool tri = is_triangular(r_from_bicharacter(sigma));
    bool skew = is_commutation_factor(sigma);
    report.add("triangular iff commutation factor", tri == skew);
    return report;
}

Json structure_json(const Bicharacter &sigma, const AxiomReport &report) {
    Json j = to_json(report);
    j["K"] = sigma.K;
    j["commutation_factor"] = is_commutation_factor(sigma);
    return j;
}

Json metadata_json(const GroupSpec &spec, const Bicharacter &sigma, const Tensor2 &r) {
    PairingData pairing = induced_pairing(sigma);
    Json kernels_json;
    auto subgroup_json = [](const Subgroup &s) {
        Json arr = Json::array();
        for (const GroupElement &g : s.elements)
            arr.push_back(to_json(g));
        return arr;
    };
    kernels_json["N1"] = subgroup_json(pairing.N1);
    kernels_json["N2"] = subgroup_json(pairing.N2);
    return Json{{"group", spec.str()},
                {"K", sigma.K},
                {"m", pairing.m},
                {"kernels", kernels_json},
                {"delta1", subgroup_json(pairing.Delta1)},
                {"delta2", subgroup_json(pairing.Delta2)},
                {"triangular", is_triangular(r)},
                {"tensor", to_json(r)}};
}

struct CommonArgs {
    std::string group;
    std::string bichar;
    long long k = -1;
    std::string json_path;
};

Bicharacter bicharacter_from_args(const GroupSpec &spec, const CommonArgs &args,
                                  bool k_given) {
    if (k_given) {
        if (spec.rank() != 1)
            throw ParseError("--k applies to cyclic groups; use --bichar for " + spec.str(),
                             0);
        return cyclic_bicharacter(spec.orders[0], args.k);
    }
    return parse_k_spec(spec, args.bichar);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact universal R-matrices for finite Abelian groups"};
    app.require_subcommand(1);

    CommonArgs args;
    bool flag_all = false, flag_commfac_only = false, flag_verify = false;
    bool flag_cotriangular = false, flag_check_ybe = false;
    std::string dims_text, out_path;

    CLI::App *cmd_enumerate =
        app.add_subcommand("enumerate", "list all bicharacters of a group");
    cmd_enumerate->add_option("--group", args.group, "group, e.g. Z4xZ2")->required();
    cmd_enumerate->add_flag("--commutation-factors-only", flag_commfac_only,
                            "only list commutation factors");
    cmd_enumerate->add_option("--json", args.json_path, "write a machine report");

    CLI::App *cmd_verify =
        app.add_subcommand("verify", "run the full axiom suite for R-matrices");
    cmd_verify->add_option("--group", args.group)->required();
    cmd_verify->add_flag("--all", flag_all, "verify every bicharacter of the group");
    CLI::Option *verify_bichar = cmd_verify->add_option("--bichar", args.bichar, "K matrix");
    CLI::Option *verify_k = cmd_verify->add_option("--k", args.k, "cyclic bicharacter index");
    cmd_verify->add_option("--json", args.json_path);

    CLI::App *cmd_rmatrix = app.add_subcommand("rmatrix", "construct a universal R-matrix");
    cmd_rmatrix->add_option("--group", args.group)->required();
    CLI::Option *rmatrix_bichar = cmd_rmatrix->add_option("--bichar", args.bichar);
    CLI::Option *rmatrix_k = cmd_rmatrix->add_option("--k", args.k);
    cmd_rmatrix->add_flag("--verify", flag_verify, "also run the axiom suite");
    cmd_rmatrix->add_option("--json", args.json_path);

    CLI::App *cmd_dump = app.add_subcommand("dump", "write an R-matrix with metadata");
    cmd_dump->add_option("--group", args.group)->required();
    CLI::Option *dump_bichar = cmd_dump->add_option("--bichar", args.bichar);
    CLI::Option *dump_k = cmd_dump->add_option("--k", args.k);
    cmd_dump->add_option("--out", out_path, "output path")->required();

    CLI::App *cmd_coquasi =
        app.add_subcommand("coquasi", "verify a coquasitriangular structure");
    cmd_coquasi->add_option("--group", args.group)->required();
    cmd_coquasi->add_option("--bichar", args.bichar)->required();
    cmd_coquasi->add_flag("--cotriangular", flag_cotriangular,
                          "also classify cotriangularity and check antipode relations");
    cmd_coquasi->add_option("--json", args.json_path);

    CLI::App *cmd_braid = app.add_subcommand("braid", "braiding matrix on a graded space");
    cmd_braid->add_option("--group", args.group)->required();
    cmd_braid->add_option("--bichar", args.bichar)->required();
    cmd_braid->add_option("--dims", dims_text, "graded dimensions, e.g. 0:1,1:2")->required();
    cmd_braid->add_flag("--check-ybe", flag_check_ybe,
                        "check hexagons and the braid relation");
    cmd_braid->add_option("--json", args.json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&started]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    try {
        GroupSpec spec = parse_group_checked(args.group);

        if (cmd_enumerate->parsed()) {
            std::vector<Bicharacter> all = enumerate_all(spec);
            long long commfac = 0;
            Json list = Json::array();
            for (const Bicharacter &sigma : all) {
                bool skew = is_commutation_factor(sigma);
                commfac += skew;
                if (flag_commfac_only && !skew)
                    continue;
                std::cout << "K=" << sigma.k_str() << (skew ? "  [commutation factor]" : "")
                          << "\n";
                list.push_back(Json{{"K", sigma.K}, {"commutation_factor", skew}});
            }
            std::cout << "bicharacters: " << all.size() << ", commutation factors: " << commfac
                      << "  (group " << spec.str() << ", " << elapsed_ms() << " ms)\n";
            if (!args.json_path.empty()) {
                Json payload{{"command", "enumerate"},
                             {"group", spec.str()},
                             {"count", all.size()},
                             {"commutation_factor_count", commfac},
                             {"bicharacters", list},
                             {"exit_code", 0}};
                if (!write_json_file(args.json_path, payload)) {
                    std::cerr << "error: cannot write " << args.json_path << "\n";
                    return kExitIo;
                }
            }
            return kExitPass;
        }

        if (cmd_verify->parsed()) {
            std::vector<Bicharacter> targets;
            if (flag_all) {
                targets = enumerate_all(spec);
            } else if (*verify_bichar || *verify_k) {
                targets.push_back(bicharacter_from_args(spec, args, !!*verify_k));
            } else {
                std::cerr << "error: verify needs --all, --bichar or --k\n";
                return kExitUsage;
            }
            bool all_pass = true;
            Json structures = Json::array();
            for (const Bicharacter &sigma : targets) {
                AxiomReport report = verify_structure(sigma);
                all_pass = all_pass && report.all_pass();
                structures.push_back(structure_json(sigma, report));
                if (targets.size() == 1) {
                    std::cout << "K=" << sigma.k_str() << " on " << spec.str()
                              << (is_commutation_factor(sigma) ? "  [commutation factor]" : "")
                              << "\n";
                    print_report(report);
                    std::cout << "triangular: "
                              << (is_triangular(r_from_bicharacter(sigma)) ? "true" : "false")
                              << "\n";
                } else if (!report.all_pass()) {
                    std::cout << "FAIL at K=" << sigma.k_str() << "\n";
                    print_report(report);
                }
            }
            std::cout << (all_pass ? "pass" : "FAIL") << ": " << targets.size()
                      << " structure(s) verified on " << spec.str() << "  (" << elapsed_ms()
                      << " ms)\n";
            if (!args.json_path.empty()) {
                Json payload{{"command", "verify"},
                             {"group", spec.str()},
                             {"structures", structures},
                             {"exit_code", all_pass ? kExitPass : kExitFail}};
                if (!write_json_file(args.json_path, payload)) {
                    std::cerr << "error: cannot write " << args.json_path << "\n";
                    return kExitIo;
                }
            }
            return all_pass ? kExitPass : kExitFail;
        }

        if (cmd_rmatrix->parsed()) {
            if (!*rmatrix_bichar && !*rmatrix_k) {
                std::cerr << "error: rmatrix needs --bichar or --k\n";
                return kExitUsage;
            }
            Bicharacter sigma = bicharacter_from_args(spec, args, !!*rmatrix_k);
            Tensor2 r = r_from_bicharacter(sigma);
            std::cout << "R for K=" << sigma.k_str() << " on " << spec.str() << ":\n";
            print_tensor(r);
            std::cout << "support: " << r.coeffs.size() << " terms, triangular: "
                      << (is_triangular(r) ? "true" : "false") << "\n";
            bool pass = true;
            Json payload = metadata_json(spec, sigma, r);
            payload["command"] = "rmatrix";
            if (flag_verify) {
                AxiomReport report = verify_urm(r);
                pass = report.all_pass();
                print_report(report);
                payload["axioms"] = to_json(report)["axioms"];
            }
            std::cout << (pass ? "pass" : "FAIL") << "  (" << elapsed_ms() << " ms)\n";
            payload["exit_code"] = pass ? kExitPass : kExitFail;
            if (!args.json_path.empty() && !write_json_file(args.json_path, payload)) {
                std::cerr << "error: cannot write " << args.json_path << "\n";
                return kExitIo;
            }
            return pass ? kExitPass : kExitFail;
        }

        if (cmd_dump->parsed()) {
            if (!*dump_bichar && !*dump_k) {
                std::cerr << "error: dump needs --bichar or --k\n";
                return kExitUsage;
            }
            Bicharacter sigma = bicharacter_from_args(spec, args, !!*dump_k);
            Tensor2 r = r_from_bicharacter(sigma);
            Json payload = metadata_json(spec, sigma, r);
            if (!write_json_file(out_path, payload)) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitIo;
            }
            std::cout << "wrote " << r.coeffs.size() << " tensor terms to " << out_path
                      << "  (" << elapsed_ms() << " ms)\n";
            return kExitPass;
        }

        if (cmd_coquasi->parsed()) {
            Bicharacter sigma = parse_k_spec(spec, args.bichar);
            BilinearForm form = table_of(sigma);
            AxiomReport report = verify_coquasi(form);
            bool cotri = false;
            if (flag_cotriangular && report.all_pass()) {
                cotri = is_cotriangular(form);
                AxiomReport anti = antipode_relations_check(form);
                report.items.insert(report.items.end(), anti.items.begin(),
                                    anti.items.end());
            }
            std::cout << "coquasitriangular structure for K=" << sigma.k_str() << " on "
                      << spec.str() << ":\n";
            print_report(report);
            if (flag_cotriangular)
                std::cout << "cotriangular: " << (cotri ? "true" : "false") << "\n";
            bool pass = report.all_pass();
            std::cout << (pass ? "pass" : "FAIL") << "  (" << elapsed_ms() << " ms)\n";
            if (!args.json_path.empty()) {
                Json payload = to_json(report);
                if (flag_cotriangular)
                    payload["cotriangular"] = cotri;
                if (!write_json_file(args.json_path, payload)) {
                    std::cerr << "error: cannot write " << args.json_path << "\n";
                    return kExitIo;
                }
            }
            return pass ? kExitPass : kExitFail;
        }

        if (cmd_braid->parsed()) {
            Bicharacter sigma = parse_k_spec(spec, args.bichar);
            GradedSpace v = parse_dims(spec, dims_text);
            GradedMap psi = braid_graded(sigma, v, v);
            std::cout << "braiding on V (x) V with dim V = " << v.dim() << ":\n";
            for (int row = 0; row < psi.target.dim(); ++row)
                for (int col = 0; col < psi.source.dim(); ++col)
                    if (!psi.at(row, col).is_zero())
                        std::cout << "  (" << row << "," << col
                                  << ") = " << cyc_display(psi.at(row, col)) << "\n";
            bool pass = true;
            Json payload{{"command", "braid"},
                         {"group", spec.str()},
                         {"K", sigma.K},
                         {"space", to_json(v)},
                         {"dim", v.dim()}};
            if (flag_check_ybe) {
                AxiomReport report = verify_category_axioms(sigma, v, v, v);
                // drop the symmetry classification unless V supports all degrees
                if (v.dims().size() != static_cast<std::size_t>(spec.order()))
                    report.items.pop_back();
                GradedMap from_r = braid_from_r(r_from_bicharacter(sigma), v, v);
                GradedMap from_form = braid_from_coquasi(table_of(sigma), v, v);
                report.add("braiding routes agree", psi == from_r && psi == from_form);
                pass = report.all_pass();
                print_report(report);
                payload["axioms"] = to_json(report)["axioms"];
            }
            std::cout << (pass ? "pass" : "FAIL") << "  (" << elapsed_ms() << " ms)\n";
            payload["exit_code"] = pass ? kExitPass : kExitFail;
            if (!args.json_path.empty() && !write_json_file(args.json_path, payload)) {
                std::cerr << "error: cannot write " << args.json_path << "\n";
                return kExitIo;
            }
            return pass ? kExitPass : kExitFail;
        }
    } catch (const ParseError &err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const SpecMismatch &err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const Error &err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
