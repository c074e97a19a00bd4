#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brauer/algebra_io.hpp"
#include "brauer/errors.hpp"
#include "brauer/invariants.hpp"
#include "brauer/verify.hpp"

#include <json.hpp>

namespace {

using namespace brauer;

int cmd_inv_real(const std::string& a_text, const std::string& b_text) {
    Rat a = Rat::parse(a_text), b = Rat::parse(b_text);
    std::cout << "inv_real(" << a.str() << "," << b.str() << ") = " << real_invariant(a, b).str()
              << "\n";
    return 0;
}

int cmd_inv_padic(long p, int f, const std::string& r_text, int prec) {
    auto ctx = make_padic_context(p, prec);
    auto W = unramified_extension(ctx, f);
    PadicNumber r = PadicNumber::from_rational(Rat::parse(r_text), ctx);
    std::cout << padic_invariant(PadicCyclicSpec::make(W, r)).str() << "\n";
    return 0;
}

int cmd_inv_quat(const std::string& a_text, const std::string& b_text, const std::string& place,
                 int prec, bool as_json) {
    Rat a = Rat::parse(a_text), b = Rat::parse(b_text);
    if (place != "all") {
        Place pl = place == "real" ? Place::real() : Place::prime(std::stol(place));
        BrauerInvariant inv = quaternion_local_invariant(a, b, pl, prec);
        if (as_json) {
            nlohmann::ordered_json j;
            j["place"] = pl.is_real() ? nlohmann::ordered_json("real") : nlohmann::ordered_json(pl.p);
            j["num"] = inv.value().num().get_si();
            j["den"] = inv.value().den().get_si();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "inv_" << pl.str() << "(" << a.str() << "," << b.str() << ") = " << inv.str()
                      << "\n";
        }
        return 0;
    }
    GlobalSumResult res = global_sum_check(a, b, prec);
    if (as_json) {
        nlohmann::ordered_json j;
        j["invariants"] = nlohmann::ordered_json::array();
        for (const auto& [pl, inv] : res.locals) {
            nlohmann::ordered_json e;
            e["place"] = pl.is_real() ? nlohmann::ordered_json("real") : nlohmann::ordered_json(pl.p);
            e["num"] = inv.value().num().get_si();
            e["den"] = inv.value().den().get_si();
            j["invariants"].push_back(std::move(e));
        }
        j["sum_zero"] = res.sum_zero;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [pl, inv] : res.locals)
            std::cout << "inv_" << pl.str() << "(" << a.str() << "," << b.str() << ") = " << inv.str()
                      << "\n";
        std::cout << "sum ≡ 0 (mod 1): " << (res.sum_zero ? "yes" : "no") << "\n";
    }
    return res.sum_zero ? 0 : 1;
}

int cmd_hensel(long p, int prec, const std::string& poly_text, long root) {
    auto ctx = make_padic_context(p, prec);
    std::vector<PadicNumber> coeffs;
    std::stringstream ss(poly_text);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(PadicNumber::from_rational(Rat::parse(item), ctx));
    Poly<PadicNumber> f(std::move(coeffs));
    PadicNumber r = hensel_lift_root(f, root, ctx);
    std::cout << r.digits_string() << "\n";
    return 0;
}

int cmd_algebra_check(const std::string& path, const std::string& emit_path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    AnyAlgebra alg = algebra_from_json(buf.str());

    auto report = [](const auto& a, const std::string& field) {
        std::cout << "field: " << field << "\n";
        std::cout << "dim: " << a.dim() << "\n";
        auto z = center(a);
        std::cout << "center dimension: " << z.size() << "\n";
        std::cout << "central simple: " << (is_central_simple(a) ? "yes" : "no") << "\n";
    };
    if (const auto* q = std::get_if<StructureConstantAlgebra<Rat>>(&alg)) {
        report(*q, "Q");
    } else if (const auto* fp = std::get_if<StructureConstantAlgebra<FpElem>>(&alg)) {
        report(*fp, "F_" + std::to_string(fp->sample().p()));
    } else {
        const auto& qp = std::get<StructureConstantAlgebra<PadicNumber>>(alg);
        report(qp, "Q_" + std::to_string(qp.sample().ctx().p));
    }
    if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        out << algebra_to_json(alg);
    }
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool any_failed = false;
    for (const auto& name : names) {
        SuiteReport rep = run_suite(name, seed);
        std::cout << "suite " << rep.name << ": " << rep.passed << " passed, " << rep.failed
                  << " failed\n";
        for (const auto& f : rep.failures) std::cout << "  FAIL " << f << "\n";
        any_failed = any_failed || !rep.ok();
    }
    return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact central simple algebra and local Brauer invariant toolkit"};
    app.require_subcommand(1);

    // inv
    auto* inv = app.add_subcommand("inv", "Brauer invariants");
    inv->require_subcommand(1);

    std::string a_text, b_text;
    auto* real = inv->add_subcommand("real", "invariant of (a, b) at the real place");
    real->add_option("a", a_text)->required();
    real->add_option("b", b_text)->required();

    long padic_p = 5;
    int padic_f = 1;
    std::string padic_r = "1";
    int prec = 32;
    auto* padic = inv->add_subcommand("padic", "invariant of (Frobenius, W_f, r) over Q_p");
    padic->add_option("--p", padic_p, "prime")->required();
    padic->add_option("--f", padic_f, "residue degree of the unramified field")->required();
    padic->add_option("--r", padic_r, "r as integer or num/den")->required();
    padic->add_option("--prec", prec, "working precision");

    std::string place = "all";
    bool as_json = false;
    auto* quat = inv->add_subcommand("quat", "quaternion symbol invariants");
    quat->add_option("a", a_text)->required();
    quat->add_option("b", b_text)->required();
    quat->add_option("--place", place, "real, a prime, or all");
    quat->add_option("--prec", prec, "working precision");
    quat->add_flag("--json", as_json, "machine-readable output");

    long hensel_p = 0;
    int hensel_prec = 32;
    std::string poly_text;
    long root = 0;
    auto* hensel = app.add_subcommand("hensel", "lift a simple residue root");
    hensel->add_option("--p", hensel_p, "prime")->required();
    hensel->add_option("--prec", hensel_prec, "working precision")->required();
    hensel->add_option("--poly", poly_text, "coefficients c0,c1,...")->required();
    hensel->add_option("--root", root, "residue root")->required();

    std::string json_path, emit_path;
    auto* algebra = app.add_subcommand("algebra", "structure constant algebras");
    auto* check = algebra->add_subcommand("check", "validate and classify an algebra JSON file");
    check->add_option("file", json_path)->required();
    check->add_option("--emit", emit_path, "write normalized JSON here");

    std::string suite;
    uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    verify->add_option("--suite", suite, "cocycle|norms|ramification|invariants|global|all")
        ->required();
    verify->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (real->parsed()) return cmd_inv_real(a_text, b_text);
        if (padic->parsed()) return cmd_inv_padic(padic_p, padic_f, padic_r, prec);
        if (quat->parsed()) {
            long p_of_place = place == "real" || place == "all" ? 2 : std::stol(place);
            if (p_of_place == 2 && prec < 4) {
                std::cerr << "p = 2 requires --prec >= 4\n";
                return 2;
            }
            return cmd_inv_quat(a_text, b_text, place, prec, as_json);
        }
        if (hensel->parsed()) {
            if (hensel_p == 2 && hensel_prec < 4) {
                std::cerr << "p = 2 requires --prec >= 4\n";
                return 2;
            }
            return cmd_hensel(hensel_p, hensel_prec, poly_text, root);
        }
        if (check->parsed()) return cmd_algebra_check(json_path, emit_path);
        if (verify->parsed()) return cmd_verify(suite, seed);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
