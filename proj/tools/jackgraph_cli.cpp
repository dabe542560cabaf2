// Command-line front end for the jackgraph library.
//
// Subcommands: jack, pieri, dim, kernel, shifted, boundary, harmonic, verify.
// Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jackgraph/boundary.hpp"
#include "jackgraph/branching.hpp"
#include "jackgraph/harmonic.hpp"
#include "jackgraph/jack.hpp"
#include "jackgraph/partition.hpp"
#include "jackgraph/shifted.hpp"
#include "jackgraph/symfunc.hpp"
#include "jackgraph/verify.hpp"

using namespace jackgraph;
using nlohmann::json;

namespace {

std::string g_command_line;

json make_manifest(const Rat& theta, int max_level, const std::string& out_path,
                   std::chrono::steady_clock::time_point t0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    json m;
    m["command"] = g_command_line;
    m["theta"] = to_string(theta);
    m["max_level"] = max_level;
    m["out"] = out_path.empty() ? "-" : out_path;
    m["wall_ms"] = ms;
    return m;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open " + out_path);
        os << text << "\n";
    }
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_rat(tok));
    return out;
}

// Plain chain recursion, deliberately unmemoized; the CLI's third opinion
// next to dim_hook and dim_recursive.
Rat dim_paths(const Partition& mu, const Partition& nu,
              const WeightedGraphView& view) {
    if (mu == nu) return 1;
    if (!nu.contains(mu)) return 0;
    Rat total = 0;
    for (const Partition& lambda : cocovers(nu))
        if (lambda.contains(mu) || lambda == mu)
            total += dim_paths(mu, lambda, view) * view.kappa(lambda, nu);
    return total;
}

AtomicMeasure parse_atoms(const std::string& text) {
    json j = json::parse(text);
    AtomicMeasure M;
    auto rats = [](const json& arr) {
        std::vector<Rat> v;
        for (const auto& e : arr) v.push_back(parse_rat(e.get<std::string>()));
        return v;
    };
    for (const auto& a : j) {
        ThomaPoint p(rats(a.at("alpha")), rats(a.at("beta")));
        M.atoms.push_back({p, parse_rat(a.at("w").get<std::string>())});
    }
    M.validate();
    return M;
}

std::vector<Partition> family_diagrams(const std::string& family, int kmax) {
    if (kmax < 2) throw CLI::ValidationError("--kmax", "need at least 2 points");
    int ra = 1, cb = 1;
    std::string kind = family;
    if (family.rfind("rect:", 0) == 0) {
        if (std::sscanf(family.c_str(), "rect:%d:%d", &ra, &cb) != 2 ||
            ra < 1 || cb < 1)
            throw CLI::ValidationError("--family", "want rect:a:b with a,b >= 1");
        kind = "rect";
    }
    std::vector<Partition> out;
    for (int k = 2; k <= kmax; ++k) {
        if (kind == "square")
            out.emplace_back(std::vector<int>(k, k));
        else if (kind == "row")
            out.emplace_back(std::vector<int>{k});
        else if (kind == "column")
            out.emplace_back(std::vector<int>(k, 1));
        else if (kind == "rect")
            out.emplace_back(std::vector<int>(ra * k, cb * k));
        else
            throw CLI::ValidationError("--family", "unknown family " + family);
    }
    return out;
}

ShiftedSymFunc pick_function(const std::string& name, const Rat& theta) {
    if (name == "ptilde2") return ShiftedSymFunc::ptilde(2, theta);
    if (name == "ptilde3") return ShiftedSymFunc::ptilde(3, theta);
    if (name == "pstar2") return shifted_jack(Partition({2}), theta);
    throw CLI::ValidationError("--function", "unknown function " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations on the Young graph with Jack edge weights"};
    app.require_subcommand(1);

    std::string mu_s = "[]", nu_s = "[]", lambda_s = "[]";
    std::string theta_s = "1", out_path, format = "json";
    auto t0 = std::chrono::steady_clock::now();

    // jack
    auto* c_jack = app.add_subcommand("jack", "Jack polynomial P_mu(.;theta)");
    std::string jack_basis = "m";
    c_jack->add_option("--mu", mu_s, "index partition, e.g. [3,1]");
    c_jack->add_option("--theta", theta_s, "Jack parameter p/q");
    c_jack->add_option("--basis", jack_basis, "m (monomial) or p (power sum)");
    c_jack->add_option("--format", format, "text or json");
    c_jack->add_option("--out", out_path, "write to file instead of stdout");
    c_jack->callback([&] {
        Partition mu = Partition::parse(mu_s);
        Rat theta = parse_rat(theta_s);
        const JackBasisElement& P = jack_P(mu, theta);
        const SymFunc& f =
            jack_basis == "p" ? P.powersum_expansion : P.expansion;
        if (format == "text") {
            emit(f.to_string(), out_path);
            return;
        }
        json j;
        j["mu"] = mu.parts();
        j["expansion"] = json::parse(f.json());
        j["norm"] = to_string(P.norm);
        j["manifest"] = make_manifest(theta, mu.size(), out_path, t0);
        emit(j.dump(2), out_path);
    });

    // pieri
    auto* c_pieri = app.add_subcommand("pieri", "Pieri multiplicities at lambda");
    std::string kj = "";
    c_pieri->add_option("--lambda", lambda_s, "base partition");
    c_pieri->add_option("--nu", nu_s, "optional single cover");
    c_pieri->add_option("--theta", theta_s, "Jack parameter p/q");
    c_pieri->add_option("--integral", kj,
                        "report kappa_J instead: ratio or corners");
    c_pieri->add_option("--out", out_path, "write to file instead of stdout");
    c_pieri->callback([&] {
        Partition lambda = Partition::parse(lambda_s);
        Rat theta = parse_rat(theta_s);
        auto edge = [&](const Partition& nu) -> Rat {
            if (kj.empty()) return pieri_kappa(lambda, nu, theta);
            if (kj == "ratio")
                return pieri_kappa_J(lambda, nu, theta, KappaJMethod::Ratio);
            if (kj == "corners")
                return pieri_kappa_J(lambda, nu, theta, KappaJMethod::Corners);
            throw CLI::ValidationError("--integral", "want ratio or corners");
        };
        json rows = json::array();
        std::vector<Partition> targets;
        if (nu_s != "[]")
            targets.push_back(Partition::parse(nu_s));
        else
            targets = covers(lambda);
        for (const Partition& nu : targets)
            rows.push_back({{"nu", nu.parts()}, {"kappa", to_string(edge(nu))}});
        json j;
        j["lambda"] = lambda.parts();
        j["edges"] = rows;
        j["manifest"] = make_manifest(theta, lambda.size() + 1, out_path, t0);
        emit(j.dump(2), out_path);
    });

    // dim
    auto* c_dim = app.add_subcommand("dim", "weighted dimension dim(mu, nu)");
    std::string method = "recursive";
    c_dim->add_option("--mu", mu_s, "lower partition (default empty)");
    c_dim->add_option("--nu", nu_s, "upper partition")->required();
    c_dim->add_option("--theta", theta_s, "Jack parameter p/q");
    c_dim->add_option("--method", method, "hook, recursive, or paths");
    c_dim->callback([&] {
        Partition mu = Partition::parse(mu_s);
        Partition nu = Partition::parse(nu_s);
        Rat theta = parse_rat(theta_s);
        WeightedGraphView view = WeightedGraphView::jack(theta);
        Rat d;
        if (method == "hook") {
            if (!mu.empty())
                throw CLI::ValidationError("--method",
                                           "hook method needs --mu []");
            d = dim_hook(nu, theta);
        } else if (method == "recursive") {
            d = dim_recursive(mu, nu, view);
        } else if (method == "paths") {
            d = dim_paths(mu, nu, view);
        } else {
            throw CLI::ValidationError("--method", "unknown method " + method);
        }
        std::cout << to_string(d) << "\n";
    });

    // kernel
    auto* c_ker = app.add_subcommand("kernel", "Martin kernel K(mu, nu)");
    std::string ker_method = "recursive";
    c_ker->add_option("--mu", mu_s, "lower partition")->required();
    c_ker->add_option("--nu", nu_s, "upper partition")->required();
    c_ker->add_option("--theta", theta_s, "Jack parameter p/q");
    c_ker->add_option("--method", ker_method, "recursive or interpolation");
    c_ker->callback([&] {
        Partition mu = Partition::parse(mu_s);
        Partition nu = Partition::parse(nu_s);
        Rat theta = parse_rat(theta_s);
        Rat v;
        if (ker_method == "interpolation")
            v = martin_kernel_via_interpolation(mu, nu, theta);
        else if (ker_method == "recursive")
            v = martin_kernel_finite(mu, nu, WeightedGraphView::jack(theta));
        else
            throw CLI::ValidationError("--method", "unknown method " + ker_method);
        std::cout << to_string(v) << "\n";
    });

    // shifted
    auto* c_sh = app.add_subcommand("shifted", "shifted Jack polynomials");
    c_sh->require_subcommand(1);
    auto* c_sh_eval = c_sh->add_subcommand("eval", "P*_mu(nu; theta)");
    c_sh_eval->add_option("--mu", mu_s, "index partition")->required();
    c_sh_eval->add_option("--nu", nu_s, "evaluation partition")->required();
    c_sh_eval->add_option("--theta", theta_s, "Jack parameter p/q");
    c_sh_eval->callback([&] {
        Rat v = shifted_jack(Partition::parse(mu_s), parse_rat(theta_s))
                    .eval(Partition::parse(nu_s));
        std::cout << to_string(v) << "\n";
    });
    int max_mu = 4, max_nu = 8;
    auto* c_sh_ver = c_sh->add_subcommand(
        "verify-dimension", "dim(mu,nu)/dim(nu) == P*_mu(nu)/(n falling m)");
    c_sh_ver->add_option("--max-mu", max_mu, "bound on |mu|");
    c_sh_ver->add_option("--max-nu", max_nu, "bound on |nu|");
    c_sh_ver->add_option("--theta", theta_s, "Jack parameter p/q");
    c_sh_ver->callback([&] {
        auto r = verify::dimension_formula(max_mu, max_nu,
                                           {parse_rat(theta_s)});
        std::cout << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " ("
                  << r.checks << " checks)";
        if (!r.detail.empty()) std::cout << " " << r.detail;
        std::cout << "\n";
        if (!r.pass) throw CLI::RuntimeError(1);
    });

    // boundary
    auto* c_b = app.add_subcommand("boundary", "Thoma simplex computations");
    c_b->require_subcommand(1);
    std::string alpha_s, beta_s;
    auto* c_bk = c_b->add_subcommand("kernel", "boundary kernel K(mu; omega)");
    c_bk->add_option("--mu", mu_s, "index partition")->required();
    c_bk->add_option("--alpha", alpha_s, "comma list, e.g. 1/2,1/4");
    c_bk->add_option("--beta", beta_s, "comma list");
    c_bk->add_option("--theta", theta_s, "Jack parameter p/q");
    c_bk->callback([&] {
        ThomaPoint omega(parse_rat_list(alpha_s), parse_rat_list(beta_s));
        auto kv = martin_kernel_boundary(Partition::parse(mu_s), omega,
                                         parse_rat(theta_s));
        std::cout << to_string(kv.value) << "\n";
    });
    std::string family = "square", function = "ptilde2";
    int kmax = 10;
    auto* c_ba = c_b->add_subcommand(
        "asym", "scaled values along a diagram family vs boundary limit");
    c_ba->add_option("--family", family, "square, row, column, or rect:a:b");
    c_ba->add_option("--kmax", kmax, "largest family index (from 2)");
    c_ba->add_option("--function", function, "ptilde2, ptilde3, or pstar2");
    c_ba->add_option("--theta", theta_s, "Jack parameter p/q");
    c_ba->add_option("--out", out_path, "write to file instead of stdout");
    c_ba->callback([&] {
        Rat theta = parse_rat(theta_s);
        auto rows = asymptotics_experiment(pick_function(function, theta),
                                           family_diagrams(family, kmax), theta);
        json table = json::array();
        for (const auto& r : rows)
            table.push_back({{"n", r.n},
                             {"scaled_value", to_string(r.scaled_value)},
                             {"boundary_value", to_string(r.boundary_value)},
                             {"error", to_string(r.error)},
                             {"error_decimal", to_double(r.error)},
                             {"sq_error_times_n", to_string(r.sq_error_times_n)}});
        json j;
        j["family"] = family;
        j["function"] = function;
        j["rows"] = table;
        j["manifest"] = make_manifest(theta, kmax, out_path, t0);
        emit(j.dump(2), out_path);
    });

    // harmonic
    auto* c_h = app.add_subcommand("harmonic", "harmonic functions from measures");
    c_h->require_subcommand(1);
    std::string atoms_s;
    int levels = 6;
    bool check = false;
    auto* c_hm = c_h->add_subcommand(
        "from-measure", "level distributions of a finite atomic measure");
    c_hm->add_option("--atoms", atoms_s,
                     R"(JSON, e.g. [{"alpha":["1/2"],"beta":[],"w":"1"}])")
        ->required();
    c_hm->add_option("--theta", theta_s, "Jack parameter p/q");
    c_hm->add_option("--levels", levels, "largest level to tabulate");
    c_hm->add_flag("--check", check, "verify harmonicity defects are zero");
    c_hm->add_option("--out", out_path, "write to file instead of stdout");
    c_hm->callback([&] {
        Rat theta = parse_rat(theta_s);
        AtomicMeasure M = parse_atoms(atoms_s);
        auto phi = harmonic_from_measure(M, theta);
        WeightedGraphView view = WeightedGraphView::jack(theta);
        json out_levels = json::array();
        bool all_zero = true;
        for (int n = 0; n <= levels; ++n) {
            LevelDistribution Ln = level_distribution(phi, n, theta);
            json masses = json::array();
            for (const auto& [lam, m] : Ln.masses)
                masses.push_back({{"lambda", lam.parts()},
                                  {"mass", to_string(m)}});
            json lvl = {{"n", n},
                        {"total", to_string(Ln.total())},
                        {"masses", masses}};
            if (check) {
                json defects = json::array();
                for (const Partition& lam : enumerate_partitions(n)) {
                    Rat d = harmonicity_defect(phi, lam, view);
                    if (d != 0) all_zero = false;
                    defects.push_back({{"lambda", lam.parts()},
                                       {"defect", to_string(d)}});
                }
                lvl["defects"] = defects;
            }
            out_levels.push_back(lvl);
        }
        json j;
        j["levels"] = out_levels;
        if (check) j["all_defects_zero"] = all_zero;
        j["manifest"] = make_manifest(theta, levels, out_path, t0);
        emit(j.dump(2), out_path);
        if (check && !all_zero) throw CLI::RuntimeError(1);
    });

    // verify
    auto* c_v = app.add_subcommand("verify", "identity suites");
    std::string suite;
    int max_level = 6;
    std::vector<std::string> theta_list;
    c_v->add_option("suite", suite, "one of: " + [] {
                        std::string s;
                        for (const auto& n : verify::suite_names())
                            s += (s.empty() ? "" : ", ") + n;
                        return s;
                    }())
        ->required();
    c_v->add_option("--max", max_level, "level bound");
    c_v->add_option("--theta", theta_list, "Jack parameter(s), repeatable");
    c_v->callback([&] {
        auto names = verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw CLI::ValidationError("suite", "unknown suite " + suite);
        std::vector<Rat> thetas;
        for (const auto& s : theta_list) thetas.push_back(parse_rat(s));
        if (thetas.empty()) thetas = {rat(1, 2), rat(1), rat(2)};
        verify::Result r = verify::run_by_name(suite, max_level, thetas);
        std::cout << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " ("
                  << r.checks << " checks)";
        if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
        std::cout << "\n";
        if (!r.pass) throw CLI::RuntimeError(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();  // verification failure, code 1
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    g_command_line = cmd.str();
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
