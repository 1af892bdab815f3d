// Command line front end. Subcommands:
//   structure   sigmas, minimal indices and normal rank at points
//   rootvectors maximal sets of root vectors (pole-aware routing)
//   realize     minimal pencil realization as a JSON quintuple
//   pencil      maximal set of a pencil given as {L0, L1} JSON
//   coalescent  state-space pipeline with diagnostics
// Exit codes: 0 ok, 2 parse error, 3 verification failure, 4 precondition.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ratroot/json_io.hpp"

using namespace ratroot;

namespace {

struct Options {
    std::string backend = "exact";
    double tol = -1.0;
    std::uint64_t seed = 12345;
    bool json = false;
    bool exact_k = false;
    std::string points;  // comma separated, may include "inf"
    std::string file;
    std::string point;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' || c == '[';
    }
    return false;
}

template <class F>
RatMat<F> load_matrix(const std::string& path) {
    std::string text = read_input(path);
    if (looks_like_json(text)) return ratmat_from_json<F>(json::parse(text));
    return parse_ratmat<F>(text);
}

std::vector<std::string> split_points(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

template <class F>
std::string vec_str(const std::vector<RatFun<F>>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
}

void emit(const json& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
        return;
    }
    // flat text rendering with the same numeric content
    for (const auto& [key, value] : rep.items()) std::cout << key << ": " << value.dump() << "\n";
}

template <class F>
int cmd_structure(const Options& opt, const std::string& label) {
    RatMat<F> R = load_matrix<F>(opt.file);
    bool at_inf = (label == "inf");
    RatMat<F> Rl = at_inf ? subst_inverse(R) : R;
    F x0 = at_inf ? FieldOps<F>::zero() : parse_scalar<F>(label);
    LocalStructure<F> ls = smith_mcmillan_local(Rl, x0);
    std::vector<int> right = minimal_indices(minimal_kernel_basis(R));
    std::vector<int> left = minimal_indices(minimal_kernel_basis(R.transpose()));
    json rep = structure_report(x0, ls.sigmas, right, left, normal_rank(R));
    rep["point"] = label;
    emit(rep, opt.json);
    return 0;
}

template <class F>
int cmd_rootvectors(const Options& opt, const std::string& label) {
    RatMat<F> R = load_matrix<F>(opt.file);
    bool at_inf = (label == "inf");
    RatMat<F> Rl = at_inf ? subst_inverse(R) : R;
    F x0 = at_inf ? FieldOps<F>::zero() : parse_scalar<F>(label);
    MaximalSet<F> set;
    if (matrix_valuation(Rl, x0) < Valuation(0)) {
        set = coalescent_maximal_set(Rl, x0, opt.exact_k).set;  // pole: feedback route
    } else {
        set = maximal_set(Rl, x0);
    }
    set.at_infinity = at_inf;
    json rep = rootvector_report(set, label);
    if (!opt.json) {
        std::cout << "point: " << label << "\n";
        std::cout << "sigmas: " << json(set.sigmas).dump() << "\n";
        for (const auto& rv : set.vectors)
            std::cout << "order " << rv.order << ": " << vec_str(rv.x) << "\n";
        return 0;
    }
    emit(rep, true);
    return 0;
}

template <class F>
int cmd_realize(const Options& opt) {
    RatMat<F> R = load_matrix<F>(opt.file);
    StateSpace<F> s = realize(R);
    std::cout << state_space_to_json(s).dump(2) << "\n";
    return 0;
}

template <class F>
int cmd_pencil(const Options& opt, const std::string& label) {
    json j = json::parse(read_input(opt.file));
    Matrix<F> L0 = scalar_matrix_from_json<F>(j.at("L0"));
    Matrix<F> L1 = scalar_matrix_from_json<F>(j.at("L1"));
    F x0 = parse_scalar<F>(label);
    MaximalSet<F> set = pencil_maximal_set(L0, L1, x0);
    json rep = rootvector_report(set, label);
    if (!opt.json) {
        std::cout << "point: " << label << "\n";
        std::cout << "sigmas: " << json(set.sigmas).dump() << "\n";
        for (const auto& rv : set.vectors)
            std::cout << "order " << rv.order << ": " << vec_str(rv.x) << "\n";
        return 0;
    }
    emit(rep, true);
    return 0;
}

template <class F>
int cmd_coalescent(const Options& opt, const std::string& label) {
    RatMat<F> R = load_matrix<F>(opt.file);
    F x0 = parse_scalar<F>(label);
    CoalescentResult<F> res = coalescent_maximal_set(R, x0, opt.exact_k);
    json rep = rootvector_report(res.set, label);
    json diag;
    diag["pole_order"] = res.pole_order;
    diag["realization_order"] = res.sys.order();
    diag["substituted"] = res.substituted;
    json targets = json::array();
    for (const F& t : res.fb.targets) targets.push_back(scalar_to_json(t));
    diag["targets"] = targets;
    diag["pencil_orders"] = res.pencil_set.orders();
    rep["diagnostics"] = diag;
    if (!opt.json) {
        std::cout << "point: " << label << "\n";
        std::cout << "sigmas: " << json(res.set.sigmas).dump() << "\n";
        for (const auto& rv : res.set.vectors)
            std::cout << "order " << rv.order << ": " << vec_str(rv.x) << "\n";
        std::cout << "diagnostics: " << diag.dump() << "\n";
        return 0;
    }
    emit(rep, true);
    return 0;
}

template <class F>
int dispatch(const std::string& cmd, const Options& opt) {
    std::vector<std::string> pts =
        opt.points.empty() ? std::vector<std::string>{opt.point} : split_points(opt.points);
    int rc = 0;
    for (const std::string& label : pts) {
        if (cmd == "structure")
            rc = cmd_structure<F>(opt, label);
        else if (cmd == "rootvectors")
            rc = cmd_rootvectors<F>(opt, label);
        else if (cmd == "realize")
            rc = cmd_realize<F>(opt);
        else if (cmd == "pencil")
            rc = cmd_pencil<F>(opt, label);
        else if (cmd == "coalescent")
            rc = cmd_coalescent<F>(opt, label);
        if (rc != 0) return rc;
        if (cmd == "realize") break;  // point-independent
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local eigenstructure of rational matrices"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--backend", opt.backend, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", opt.tol, "override rank tolerance (float backend)");
    app.add_option("--seed", opt.seed, "seed for randomized choices");
    app.add_flag("--json", opt.json, "emit JSON reports");

    auto add_common = [&](CLI::App* sub, bool needs_point) {
        sub->fallthrough();  // allow global flags after the subcommand
        sub->add_option("file", opt.file, "matrix file ('-' for stdin)")->required();
        if (needs_point) sub->add_option("point", opt.point, "evaluation point, or 'inf'");
        sub->add_option("--points", opt.points, "comma separated list of points");
    };
    CLI::App* s1 = app.add_subcommand("structure", "sigmas, minimal indices, normal rank");
    add_common(s1, true);
    CLI::App* s2 = app.add_subcommand("rootvectors", "maximal set of root vectors");
    add_common(s2, true);
    s2->add_flag("--exact-k", opt.exact_k, "recover through K exactly instead of truncating");
    CLI::App* s3 = app.add_subcommand("realize", "minimal pencil realization (JSON)");
    add_common(s3, false);
    CLI::App* s4 = app.add_subcommand("pencil", "maximal set of a pencil {L0, L1}");
    add_common(s4, true);
    CLI::App* s5 = app.add_subcommand("coalescent", "feedback pipeline with diagnostics");
    add_common(s5, true);
    s5->add_flag("--exact-k", opt.exact_k, "recover through K exactly instead of truncating");

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();
    if (opt.point.empty() && opt.points.empty() && cmd != "realize") {
        std::cerr << "error: no evaluation point given\n";
        return 2;
    }
    if (opt.tol > 0) numeric_context().rank_tol = opt.tol;

    try {
        if (opt.backend == "float") {
#ifdef RATROOT_NO_FLOAT_BACKEND
            std::cerr << "error: float backend disabled in this build\n";
            return 4;
#else
            return dispatch<Complex>(cmd, opt);
#endif
        }
        return dispatch<Rational>(cmd, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    }
}
