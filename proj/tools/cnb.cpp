// cnb: compound matrices, sharp norm bounds, eigenvalue-product bounds,
// extremal generators and a randomized verification sweep.
//
// Exit codes: 0 ok, 1 sweep property violation, 2 parse error,
// 3 domain error, 4 size guard, 5 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cnb/bounds.hpp"
#include "cnb/errors.hpp"
#include "cnb/extremal.hpp"
#include "cnb/io.hpp"
#include "cnb/verify.hpp"

#include <json.hpp>

namespace {

using namespace cnb;

std::size_t compound_guard_from_env() {
    const char* s = std::getenv("CNB_COMPOUND_GUARD");
    if (s == nullptr || *s == '\0') return kTol.compound_guard;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) {
        throw ParseError("CNB_COMPOUND_GUARD must be a positive integer, got '" +
                         std::string(s) + "'");
    }
    return static_cast<std::size_t>(v);
}

std::string fmt(double x) { return format_double(x, 6); }

nlohmann::json theta_json(const ThetaValue& tv) {
    return {{"kind", to_string(tv.kind)}, {"value", tv.value}};
}

void print_bound_report_human(const BoundReport& rep, unsigned n, unsigned k,
                              const std::string& mu, const std::string& nu) {
    std::cout << "n " << n << "  k " << k << "  mu " << mu << "  nu " << nu << "\n";
    std::cout << "quantity            " << fmt(rep.quantity) << "\n";
    std::cout << "theta               " << fmt(rep.theta.value) << " [" << to_string(rep.theta.kind)
              << "]\n";
    std::cout << "max column product  " << fmt(rep.column_product) << "\n";
    if (rep.row_product) std::cout << "max row product     " << fmt(*rep.row_product) << "\n";
    std::cout << "bound               " << fmt(rep.bound) << "\n";
    std::cout << "ratio               " << fmt(rep.ratio()) << "\n";
    std::cout << "tight               " << (rep.tight ? "yes" : "no") << "\n";
}

int cmd_compound(const std::string& input, unsigned k, const std::string& out,
                 std::size_t guard) {
    const ComplexMatrix a = read_matrix_file(input);
    const CompoundMatrix ck = compound(a, k, guard);
    write_matrix_file(out, ck.matrix);
    std::cout << "C(" << a.rows() << "," << k << ") = " << ck.matrix.rows() << "\n";
    std::cout << "l1 norm   = " << fmt(op_norm(ck.matrix, NormKind::L1)) << "\n";
    std::cout << "l2 norm   = " << fmt(op_norm(ck.matrix, NormKind::L2)) << "\n";
    std::cout << "linf norm = " << fmt(op_norm(ck.matrix, NormKind::LInf)) << "\n";
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_bound(const std::string& input, unsigned k, const std::string& mu_name,
              const std::string& nu_name, bool json, std::size_t guard) {
    const ComplexMatrix a = read_matrix_file(input);
    const NormKind mu = parse_norm_kind(mu_name);
    const NormKind nu = parse_norm_kind(nu_name);
    const CompoundMatrix ck = compound(a, k, guard);
    const BoundReport rep = compound_norm_bound(ck, a, mu, nu);
    if (json) {
        nlohmann::json j;
        j["n"] = a.rows();
        j["k"] = k;
        j["mu"] = to_string(mu);
        j["nu"] = to_string(nu);
        j["quantity"] = rep.quantity;
        j["theta"] = theta_json(rep.theta);
        j["column_product"] = rep.column_product;
        j["bound"] = rep.bound;
        j["ratio"] = rep.ratio();
        j["tight"] = rep.tight;
        j["side"] = to_string(rep.side);
        std::cout << j.dump(2) << "\n";
    } else {
        print_bound_report_human(rep, static_cast<unsigned>(a.rows()), k, to_string(mu),
                                 to_string(nu));
    }
    return 0;
}

int cmd_eigbound(const std::string& input, unsigned k, const std::string& norm_name,
                 bool smallest, bool json) {
    const ComplexMatrix a = read_matrix_file(input);
    const NormKind norm = parse_norm_kind(norm_name);
    const unsigned n = static_cast<unsigned>(a.rows());
    const BoundReport rep = eig_product_upper(a, k, norm);
    const char* winner =
        rep.column_product <= *rep.row_product ? "columns" : "rows";

    if (smallest) {
        if (k >= n) throw DomainError("--smallest requires k < n");
        if (!is_numerically_nonsingular(a)) {
            throw DomainError("--smallest requires a nonsingular matrix: the lower bound "
                              "|det A| / bound is vacuous when det A = 0");
        }
        const double lower = eig_product_lower(a, k, norm);
        const double actual = eigenvalues(a).product_of_smallest_after(k);
        if (json) {
            nlohmann::json j;
            j["n"] = n;
            j["k"] = k;
            j["norm"] = to_string(norm);
            j["quantity"] = actual;
            j["lower_bound"] = lower;
            j["upper_bound_used"] = rep.bound;
            j["winning_side"] = winner;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "n " << n << "  k " << k << "  norm " << to_string(norm)
                      << "  (smallest " << (n - k) << " eigenvalues)\n";
            std::cout << "|prod smallest|     " << fmt(actual) << "\n";
            std::cout << "lower bound         " << fmt(lower) << "\n";
            std::cout << "winning side        " << winner << "\n";
        }
        return 0;
    }

    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        j["norm"] = to_string(norm);
        j["quantity"] = rep.quantity;
        j["theta"] = theta_json(rep.theta);
        j["column_product"] = rep.column_product;
        j["row_product"] = *rep.row_product;
        j["winning_side"] = winner;
        j["bound"] = rep.bound;
        j["ratio"] = rep.ratio();
        j["tight"] = rep.tight;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n " << n << "  k " << k << "  norm " << to_string(norm)
                  << "  (largest " << k << " eigenvalues)\n";
        std::cout << "|prod largest|      " << fmt(rep.quantity) << "\n";
        std::cout << "column product      " << fmt(rep.column_product) << "\n";
        std::cout << "row product         " << fmt(*rep.row_product) << "\n";
        std::cout << "winning side        " << winner << "\n";
        std::cout << "bound               " << fmt(rep.bound) << "\n";
        std::cout << "ratio               " << fmt(rep.ratio()) << "\n";
        std::cout << "tight               " << (rep.tight ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_extremal(const std::string& family, unsigned n, int k_opt, std::uint64_t seed,
                 const std::string& out, std::size_t guard) {
    ComplexMatrix a(1, 1);
    if (family == "monomial") {
        Rng rng(seed);
        a = sample_matrix(MatrixClass::Monomial, n, rng);
        write_matrix_file(out, a);
        std::cout << "monomial n=" << n << " seed=" << seed << "\n";
        std::cout << "column l1 norms:";
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::cout << " " << fmt(vec_norm(a.column(j), NormKind::L1));
        std::cout << "\n";
    } else if (family == "fourier") {
        a = fourier(n);
        write_matrix_file(out, a);
        const ComplexMatrix gram = a * adjoint(a);
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                residual = std::max(residual,
                                    std::abs(gram(i, j) - (i == j ? Cplx(n, 0) : Cplx(0, 0))));
        std::cout << "fourier n=" << n << "\n";
        std::cout << "AA* - nI residual   " << fmt(residual) << "\n";
        std::cout << "|det|               " << fmt(std::abs(determinant(a))) << " (n^(n/2) = "
                  << fmt(std::pow(n, n / 2.0)) << ")\n";
    } else if (family == "hadamard") {
        if (n == 0 || (n & (n - 1)) != 0) {
            throw DomainError("hadamard requires n to be a power of two, got " +
                              std::to_string(n));
        }
        unsigned m = 0;
        while ((1u << m) < n) ++m;
        a = hadamard_sylvester(m);
        write_matrix_file(out, a);
        const ComplexMatrix gram = a * adjoint(a);
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                residual = std::max(residual,
                                    std::abs(gram(i, j) - (i == j ? Cplx(n, 0) : Cplx(0, 0))));
        std::cout << "hadamard n=" << n << " (Sylvester 2^" << m << ")\n";
        std::cout << "HH^T - nI residual  " << fmt(residual) << "\n";
    } else if (family == "first-row-ones") {
        a = first_row_ones(n);
        write_matrix_file(out, a);
        std::cout << "first-row-ones n=" << n << "\n";
        std::cout << "linf operator norm  " << fmt(op_norm(a, NormKind::LInf)) << "\n";
    } else if (family == "psd-theta2") {
        if (k_opt <= 0) throw DomainError("psd-theta2 requires -k");
        const unsigned k = static_cast<unsigned>(k_opt);
        a = theta2_extremal(n, k);
        write_matrix_file(out, a);
        double col_dev = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            col_dev = std::max(col_dev, std::abs(vec_norm(a.column(j), NormKind::L2) - 1.0));
        const CompoundMatrix ck = compound(a, k, guard);
        const double norm2 = op_norm(ck.matrix, NormKind::L2);
        const double target = std::pow(static_cast<double>(n) / k, k / 2.0);
        std::cout << "psd-theta2 n=" << n << " k=" << k << "\n";
        std::cout << "column l2 norm dev  " << fmt(col_dev) << "\n";
        std::cout << "||C_k(A)||_2        " << fmt(norm2) << " (target " << fmt(target) << ")\n";
    } else {
        throw DomainError("unknown extremal family '" + family +
                          "' (monomial, fourier, hadamard, first-row-ones, psd-theta2)");
    }
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_verify(std::uint64_t seed, unsigned n_min, unsigned n_max, unsigned samples,
               const std::string& classes_arg, double tolerance, bool json,
               const std::string& out) {
    SweepConfig config;
    config.seed = seed;
    config.n_min = n_min;
    config.n_max = n_max;
    config.samples_per_n = samples;
    config.tolerance = tolerance;
    if (!classes_arg.empty()) {
        config.classes.clear();
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            const std::size_t comma = classes_arg.find(',', pos);
            const std::string name = classes_arg.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!name.empty()) config.classes.insert(parse_matrix_class(name));
            pos = comma == std::string::npos ? std::string::npos : comma + 1;
        }
        if (config.classes.empty()) throw DomainError("--classes parsed to an empty set");
    }

    const SweepReport report = run_sweep(config);
    const std::string json_text = report.to_json();
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw ParseError("cannot open '" + out + "' for writing");
        f << json_text;
    }
    if (json) {
        std::cout << json_text;
    } else {
        std::cout << "sweep seed=" << seed << " n=[" << n_min << "," << n_max
                  << "] samples/n=" << samples << "\n";
        for (const auto& [name, st] : report.properties) {
            std::cout << name << ": pass " << st.pass << " fail " << st.fail;
            if (st.has_ratio) std::cout << " worst " << fmt(st.worst_ratio);
            std::cout << "\n";
        }
        std::cout << "numerical failures " << report.numerical_failures << "/"
                  << report.samples_total << "\n";
        std::cout << "RESULT " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compound matrix norm and eigenvalue-product bounds"};
    app.require_subcommand(1);
    int exit_code = 0;

    // compound
    std::string in_path, out_path;
    int k_arg = 0;
    auto* sc_compound = app.add_subcommand("compound", "write C_k(A) and print its norms");
    sc_compound->add_option("input", in_path, "matrix file")->required();
    sc_compound->add_option("-k", k_arg, "compound order")->required();
    sc_compound->add_option("-o,--out", out_path, "output matrix file")->required();

    // bound
    std::string mu_name = "l2", nu_name = "l2";
    bool json_flag = false;
    auto* sc_bound =
        app.add_subcommand("bound", "compound-norm bound mu(C_k(A)) <= theta * max product");
    sc_bound->add_option("input", in_path, "matrix file")->required();
    sc_bound->add_option("-k", k_arg, "compound order")->required();
    sc_bound->add_option("--mu", mu_name, "operator norm (l1|l2|linf)")->required();
    sc_bound->add_option("--nu", nu_name, "column vector norm (l1|l2|linf)")->required();
    sc_bound->add_flag("--json", json_flag, "machine-readable output");

    // eigbound
    std::string norm_name = "l2";
    bool smallest = false;
    auto* sc_eig = app.add_subcommand("eigbound", "bound on products of eigenvalue moduli");
    sc_eig->add_option("input", in_path, "matrix file")->required();
    sc_eig->add_option("-k", k_arg, "number of largest eigenvalues")->required();
    sc_eig->add_option("--norm", norm_name, "row/column norm (l1|l2|linf)")->required();
    sc_eig->add_flag("--smallest", smallest, "lower-bound the n-k smallest moduli instead");
    sc_eig->add_flag("--json", json_flag, "machine-readable output");

    // extremal
    std::string family;
    int n_arg = 0;
    int k_opt = -1;
    std::uint64_t seed = 42;
    auto* sc_ext = app.add_subcommand("extremal", "generate an equality-case matrix");
    sc_ext->add_option("family", family,
                       "monomial | fourier | hadamard | first-row-ones | psd-theta2")
        ->required();
    sc_ext->add_option("-n", n_arg, "dimension")->required();
    sc_ext->add_option("-k", k_opt, "compound order (psd-theta2)");
    sc_ext->add_option("--seed", seed, "random seed (monomial)");
    sc_ext->add_option("-o,--out", out_path, "output matrix file")->required();

    // verify
    unsigned n_min = 2, n_max = 6, samples = 50;
    double tolerance = 1e-7;
    std::string classes_arg, report_path;
    auto* sc_verify = app.add_subcommand("verify", "randomized property sweep");
    sc_verify->add_option("--seed", seed, "random seed");
    sc_verify->add_option("--n-min", n_min, "smallest dimension");
    sc_verify->add_option("--n-max", n_max, "largest dimension");
    sc_verify->add_option("--samples", samples, "samples per dimension per class");
    sc_verify->add_option("--classes", classes_arg,
                          "comma list: gaussian,monomial,unitary,psd,singular (default all)");
    sc_verify->add_option("--tolerance", tolerance, "identity-check tolerance");
    sc_verify->add_flag("--json", json_flag, "print the JSON report");
    sc_verify->add_option("--out", report_path, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
        const std::size_t guard = compound_guard_from_env();

        auto checked_k = [&]() -> unsigned {
            if (k_arg <= 0) throw cnb::DomainError("k must be a positive integer");
            return static_cast<unsigned>(k_arg);
        };
        auto checked_n = [&]() -> unsigned {
            if (n_arg <= 0) throw cnb::DomainError("n must be a positive integer");
            return static_cast<unsigned>(n_arg);
        };

        if (sc_compound->parsed()) {
            exit_code = cmd_compound(in_path, checked_k(), out_path, guard);
        } else if (sc_bound->parsed()) {
            exit_code = cmd_bound(in_path, checked_k(), mu_name, nu_name, json_flag, guard);
        } else if (sc_eig->parsed()) {
            exit_code = cmd_eigbound(in_path, checked_k(), norm_name, smallest, json_flag);
        } else if (sc_ext->parsed()) {
            exit_code = cmd_extremal(family, checked_n(), k_opt, seed, out_path, guard);
        } else if (sc_verify->parsed()) {
            exit_code = cmd_verify(seed, n_min, n_max, samples, classes_arg, tolerance,
                                   json_flag, report_path);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cnb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cnb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cnb::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cnb::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return exit_code;
}
