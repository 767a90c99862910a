#include "minann/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>

#include "minann/expr.hpp"
#include "minann/invariant.hpp"
#include "minann/report.hpp"
#include "minann/wronskian.hpp"

namespace minann {

namespace {

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (size_t i = 0; i < args.size(); i++) s += (i ? " " : "") + args[i];
    return s;
}

// Optional on-disk memoization of family models, keyed by MINANN_CACHE_DIR.
HomologyModel load_or_build(Family f, int p, int q) {
    const char* dir = std::getenv("MINANN_CACHE_DIR");
    if (!dir || !*dir) return build_family(f, p, q);
    std::string path = std::string(dir) + "/" + family_name(f) + "_" + std::to_string(p) + "_" +
                       std::to_string(q) + ".json";
    {
        std::ifstream in(path);
        if (in) {
            try {
                json j = json::parse(in);
                return model_from_json(j);
            } catch (...) {
                // unreadable cache entries are rebuilt below
            }
        }
    }
    HomologyModel m = build_family(f, p, q);
    std::ofstream outf(path);
    if (outf) outf << model_to_json(m).dump(2) << "\n";
    return m;
}

json report_header(const std::string& command, const HomologyModel& m) {
    json j;
    j["command"] = command;
    j["tool"] = std::string(kToolName) + " " + kToolVersion;
    j["family"] = family_name(m.params.family);
    j["p"] = m.params.p;
    j["q"] = m.params.q;
    j["m"] = m.params.m;
    j["n"] = m.params.n;
    j["rank"] = m.rank;
    return j;
}

// The orbit members the lotka_volterra family must produce: mon0^k H =
// span(gamma + P0 + ... + P_{k-1}, Delta1 - Delta2 + delta_k), k = 0..p-1.
std::vector<Subspace> lotka_volterra_expected_orbit(const HomologyModel& m) {
    std::vector<Subspace> expected;
    Vec d1 = m.generator_class("Delta1"), d2 = m.generator_class("Delta2");
    for (int k = 0; k < m.params.p; k++) {
        Vec first(m.rank, Rational(0));
        first[m.gamma_index] = 1;
        for (int j = 0; j < k; j++)
            first = vec_add(first, m.generator_class("P" + std::to_string(j)));
        Vec second = vec_sub(d1, d2);
        second = vec_add(second, m.generator_class("delta" + std::to_string(k)));
        expected.push_back(canonical_subspace({first, second}, m.rank));
    }
    return expected;
}

json minimal_report(const std::string& command, const HomologyModel& model, long exponent_bound,
                    size_t cap, bool& all_pass) {
    json j = report_header(command, model);
    std::vector<Check> checks = validate(model).checks;

    ClosureResult closure = gamma_closure(model, exponent_bound);
    CertifiedMinimal certified = certify_minimal(model, closure, cap);
    const FamilyParams& fp = model.params;
    long torsion = fp.family == Family::parabolic ? (long)fp.p * fp.q : fp.p;

    j["exponent_bound"] = exponent_bound == 0 ? 3 * torsion : exponent_bound;
    j["cap"] = cap;
    j["closure_dim"] = closure.subspace.dim();
    j["closure_passes"] = closure.passes;
    j["closure_certified"] = certified.certified;
    j["orbit_size"] = certified.orbit.finite ? json(certified.orbit.size) : json(nullptr);
    j["orbit_cap_hit"] = certified.orbit.cap_hit;

    checks.push_back({"closure_stable_under_doubling", closure.stable_under_doubling, ""});
    checks.push_back({"minimality_certified", certified.certified,
                      certified.orbit.cap_hit ? "orbit exceeded cap" : ""});

    std::optional<ZeroSubspaceProfile> profile;
    if (fp.family == Family::parabolic) {
        int expect = fp.p + fp.q;
        checks.push_back({"closure_dim_equals_p_plus_q", closure.subspace.dim() == expect,
                          "dim " + std::to_string(closure.subspace.dim())});
        checks.push_back({"orbit_is_single_point",
                          certified.orbit.finite && certified.orbit.size == 1,
                          "orbit size " + std::to_string(certified.orbit.size)});
        profile = zero_subspace_profile(model, closure.subspace, exponent_bound);
        j["zero_kernel_dim"] = profile->kernel.dim();
        j["parity_case"] = parity_case_name(profile->parity_case);
        checks.push_back({"zero_kernel_dim_at_most_one", profile->kernel.dim() <= 1,
                          "kernel dim " + std::to_string(profile->kernel.dim())});
        bool case_ok;
        if (profile->parity_case == ParityCase::both_odd)
            case_ok = profile->kernel.dim() == 0;
        else
            case_ok = profile->kernel.dim() == 1 &&
                      profile->kernel == canonical_subspace({*profile->predicted_span}, model.rank);
        checks.push_back({"zero_kernel_matches_parity_case", case_ok,
                          "kernel " + subspace_str(profile->kernel)});
    } else {
        checks.push_back({"closure_dim_is_two", closure.subspace.dim() == 2,
                          "dim " + std::to_string(closure.subspace.dim())});
        checks.push_back({"orbit_size_equals_p",
                          certified.orbit.finite && (int)certified.orbit.size == fp.p,
                          "orbit size " + std::to_string(certified.orbit.size)});
        Vec gamma(model.rank, Rational(0));
        gamma[model.gamma_index] = 1;
        Vec plane = vec_add(vec_sub(model.generator_class("Delta1"),
                                    model.generator_class("Delta2")),
                            model.generator_class("delta0"));
        Subspace expected = canonical_subspace({gamma, plane}, model.rank);
        checks.push_back({"closure_matches_vanishing_plane", closure.subspace == expected,
                          subspace_str(closure.subspace)});
        if (certified.orbit.finite) {
            std::vector<Subspace> want = lotka_volterra_expected_orbit(model);
            std::vector<Subspace> got = certified.orbit.subspaces;
            auto less = [](const Subspace& a, const Subspace& b) { return a < b; };
            std::sort(want.begin(), want.end(), less);
            std::sort(got.begin(), got.end(), less);
            checks.push_back({"orbit_members_match_formula", want == got, ""});
        }
    }

    if (certified.certified) {
        auto [low, high] =
            annihilator_order_bounds(model, certified, profile ? &*profile : nullptr);
        j["annihilator_order_low"] = low;
        j["annihilator_order_high"] = high;
        if (fp.family == Family::parabolic) {
            checks.push_back({"order_window_at_least_p_plus_q_minus_1", low >= fp.p + fp.q - 1,
                              "low " + std::to_string(low)});
        } else {
            checks.push_back({"order_window_is_second_order_phenomenon", high == 2,
                              "high " + std::to_string(high)});
        }
    } else {
        j["annihilator_order_low"] = nullptr;
        j["annihilator_order_high"] = nullptr;
    }

    j["checks"] = checks_json(checks);
    bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    j["all_pass"] = pass;
    all_pass = pass;
    return j;
}

json model_report(const std::string& command, const HomologyModel& model, bool dump,
                  bool& all_pass) {
    json j = report_header(command, model);
    if (dump) j["model"] = model_to_json(model);
    ValidationReport rep = validate(model);
    j["checks"] = checks_json(rep.checks);
    all_pass = rep.all_pass();
    j["all_pass"] = all_pass;
    return j;
}

int cmd_annihilate(const std::string& command, const std::string& solutions, std::ostream& out,
                   std::ostream& err) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : solutions) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    std::vector<SymbolicElement> basis;
    for (const std::string& text : parts) {
        try {
            basis.push_back(parse_element(text));
        } catch (const parse_error& e) {
            err << "parse error in '" << text << "': " << e.what() << "\n";
            return 2;
        }
    }
    DiffOperator op;
    try {
        op = minimal_annihilator(basis);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    json j;
    j["command"] = command;
    j["tool"] = std::string(kToolName) + " " + kToolVersion;
    json sols = json::array();
    for (const auto& b : basis) sols.push_back(render(b));
    j["solutions"] = sols;
    j["order"] = op.order;
    j["reduced"] = op.reduced;
    j["operator"] = operator_str(op);
    json coeffs = json::array();
    for (const auto& c : op.coeffs)
        coeffs.push_back(json{{"text", element_str(c)},
                              {"is_rational", c.is_rational()},
                              {"is_log_free", c.is_log_free()}});
    j["coefficients"] = coeffs;

    std::vector<Check> checks;
    for (size_t i = 0; i < basis.size(); i++) {
        SymbolicElement r = apply_operator(op, basis[i]);
        checks.push_back({"annihilates_solution_" + std::to_string(i), r.is_zero(),
                          r.is_zero() ? "" : element_str(r)});
    }
    j["checks"] = checks_json(checks);
    bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    j["all_pass"] = pass;
    out << j.dump(2) << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact monodromy models, minimal virtually invariant subspaces, and "
                 "Wronskian annihilators"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    std::string family_arg;
    int p = 1, q = 1;
    bool dump = false;
    long exponent_bound = 0;
    size_t cap = 10000;
    int max_pq = 6, jobs = 1;
    std::string solutions;

    auto* cmd_model = app.add_subcommand("model", "build a family model and validate it");
    cmd_model->add_option("family", family_arg, "toy, parabolic, or lotka_volterra")
        ->required()
        ->check(CLI::IsMember({"toy", "parabolic", "lotka_volterra"}));
    cmd_model->add_option("-p", p, "family parameter p")->required();
    cmd_model->add_option("-q", q, "family parameter q (unused for lotka_volterra)");
    cmd_model->add_flag("--dump", dump, "include the model matrices in the report");

    auto* cmd_minimal =
        app.add_subcommand("minimal", "minimal virtually invariant subspace and order window");
    cmd_minimal->add_option("family", family_arg, "parabolic or lotka_volterra")
        ->required()
        ->check(CLI::IsMember({"toy", "parabolic", "lotka_volterra"}));
    cmd_minimal->add_option("-p", p, "family parameter p")->required();
    cmd_minimal->add_option("-q", q, "family parameter q (unused for lotka_volterra)");
    cmd_minimal->add_option("--exponent-bound", exponent_bound,
                            "forcing exponent bound (default: 3x the torsion order)");
    cmd_minimal->add_option("--cap", cap, "orbit enumeration cap");

    auto* cmd_sweep = app.add_subcommand("sweep", "run every coprime pair up to a bound");
    cmd_sweep->add_option("--family", family_arg, "toy, parabolic, or lotka_volterra")
        ->required()
        ->check(CLI::IsMember({"toy", "parabolic", "lotka_volterra"}));
    cmd_sweep->add_option("--max-pq", max_pq, "parameter bound");
    cmd_sweep->add_option("--jobs", jobs, "concurrent workers")->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--exponent-bound", exponent_bound, "forcing exponent bound");
    cmd_sweep->add_option("--cap", cap, "orbit enumeration cap");

    auto* cmd_ann = app.add_subcommand("annihilate", "minimal annihilator of given solutions");
    cmd_ann->add_option("--solutions", solutions, "semicolon-separated expressions")->required();

    app.require_subcommand(1);

    try {
        std::vector<const char*> argv;
        argv.push_back(kToolName);
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const std::string command = join_args(args);
    try {
        if (*cmd_model) {
            HomologyModel model =
                load_or_build(*family_from_name(family_arg), p, q);
            bool pass = false;
            json j = model_report(command, model, dump, pass);
            out << j.dump(2) << "\n";
            return pass ? 0 : 1;
        }
        if (*cmd_minimal) {
            Family fam = *family_from_name(family_arg);
            if (fam == Family::toy) {
                err << "the toy family is a relative-homology model without an intersection "
                       "pairing, so no gamma-closure is defined; use 'model toy' instead\n";
                return 2;
            }
            HomologyModel model = load_or_build(fam, p, q);
            bool pass = false;
            json j = minimal_report(command, model, exponent_bound, cap, pass);
            out << j.dump(2) << "\n";
            return pass ? 0 : 1;
        }
        if (*cmd_sweep) {
            Family fam = *family_from_name(family_arg);
            std::vector<std::pair<int, int>> pairs;
            if (fam == Family::lotka_volterra) {
                for (int pp = 1; pp <= max_pq; pp++) pairs.emplace_back(pp, 1);
            } else {
                for (int pp = 1; pp <= max_pq; pp++)
                    for (int qq = 1; qq <= max_pq; qq++)
                        if (std::gcd(pp, qq) == 1) pairs.emplace_back(pp, qq);
            }
            std::vector<std::string> lines(pairs.size());
            std::vector<char> passes(pairs.size(), 0);
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (size_t i = next++; i < pairs.size(); i = next++) {
                    auto [pp, qq] = pairs[i];
                    HomologyModel model = load_or_build(fam, pp, qq);
                    std::ostringstream cmd;
                    cmd << "sweep " << family_name(fam) << " " << pp << " " << qq;
                    bool pass = false;
                    json j = fam == Family::toy
                                 ? model_report(cmd.str(), model, false, pass)
                                 : minimal_report(cmd.str(), model, exponent_bound, cap, pass);
                    lines[i] = j.dump();
                    passes[i] = pass ? 1 : 0;
                }
            };
            int nworkers = std::max(1, std::min<int>(jobs, (int)pairs.size()));
            std::vector<std::future<void>> futures;
            for (int w = 1; w < nworkers; w++)
                futures.push_back(std::async(std::launch::async, worker));
            worker();
            for (auto& f : futures) f.get();

            bool all = true;
            for (size_t i = 0; i < pairs.size(); i++) {
                out << lines[i] << "\n";
                all = all && passes[i];
            }
            json summary{{"command", command},
                         {"tool", std::string(kToolName) + " " + kToolVersion},
                         {"family", family_name(fam)},
                         {"max_pq", max_pq},
                         {"pairs", pairs.size()},
                         {"all_pass", all}};
            out << summary.dump() << "\n";
            return all ? 0 : 1;
        }
        if (*cmd_ann) return cmd_annihilate(command, solutions, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace minann
