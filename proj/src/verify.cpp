#include "cnb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <json.hpp>

#include "cnb/errors.hpp"
#include "cnb/extremal.hpp"
#include "cnb/io.hpp"
#include "cnb/norms.hpp"
#include "cnb/tolerances.hpp"

namespace cnb {

// --- oracles ----------------------------------------------------------------

namespace {

Cplx laplace_det(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Cplx det = 0.0;
    // Expand along the first row.
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == Cplx{0.0, 0.0}) continue;
        ComplexMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        det += sign * m(0, j) * laplace_det(minor);
    }
    return det;
}

} // namespace

Cplx oracle_minor(const ComplexMatrix& a, const SubsetLex& alpha, const SubsetLex& beta) {
    if (alpha.size() != beta.size()) {
        throw DomainError("oracle_minor requires |alpha| = |beta|");
    }
    if (alpha.size() > 8) {
        throw ResourceError("oracle_minor is limited to 8x8 minors, got " +
                            std::to_string(alpha.size()));
    }
    return laplace_det(submatrix(a, alpha, beta));
}

double oracle_subset_max(const ComplexMatrix& a, unsigned k, NormKind nu, Side side) {
    if (!a.is_square()) throw DomainError("oracle_subset_max requires a square matrix");
    const unsigned n = static_cast<unsigned>(a.rows());
    if (k == 0 || k > n) throw DomainError("oracle_subset_max requires 1 <= k <= n");
    if (binomial(n, k) > kTol.compound_guard) {
        throw ResourceError("subset enumeration C(" + std::to_string(n) + "," +
                            std::to_string(k) + ") exceeds the size guard");
    }
    if (side == Side::MinOfBoth) {
        return std::min(oracle_subset_max(a, k, nu, Side::Columns),
                        oracle_subset_max(a, k, nu, Side::Rows));
    }
    std::vector<double> norms(n);
    for (unsigned i = 0; i < n; ++i) {
        norms[i] = side == Side::Rows ? vec_norm(a.row_span(i), nu)
                                      : vec_norm(a.column(i), nu);
    }
    double best = 0.0;
    for (const SubsetLex& alpha : subsets_lex(n, k)) {
        // Multiply in descending order so the winning subset reproduces the
        // fast path bit-for-bit.
        std::vector<double> chosen(k);
        for (unsigned i = 0; i < k; ++i) chosen[i] = norms[alpha.members[i] - 1];
        std::sort(chosen.begin(), chosen.end(), std::greater<>());
        double p = 1.0;
        for (double v : chosen) p *= v;
        best = std::max(best, p);
    }
    return best;
}

double oracle_eig_product(const ComplexMatrix& a, unsigned k) {
    return spectral_radius(compound(a, k).matrix);
}

// --- matrix classes ---------------------------------------------------------

const char* to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::GaussianComplex: return "GaussianComplex";
        case MatrixClass::Monomial: return "Monomial";
        case MatrixClass::UnitaryScaled: return "UnitaryScaled";
        case MatrixClass::PSD: return "PSD";
        case MatrixClass::Singular: return "Singular";
    }
    return "?";
}

MatrixClass parse_matrix_class(const std::string& name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "gaussian" || lower == "gaussiancomplex") return MatrixClass::GaussianComplex;
    if (lower == "monomial") return MatrixClass::Monomial;
    if (lower == "unitary" || lower == "unitaryscaled") return MatrixClass::UnitaryScaled;
    if (lower == "psd") return MatrixClass::PSD;
    if (lower == "singular") return MatrixClass::Singular;
    throw DomainError("unknown matrix class '" + name +
                      "' (expected gaussian, monomial, unitary, psd or singular)");
}

const std::set<MatrixClass>& all_matrix_classes() {
    static const std::set<MatrixClass> all = {
        MatrixClass::GaussianComplex, MatrixClass::Monomial, MatrixClass::UnitaryScaled,
        MatrixClass::PSD, MatrixClass::Singular};
    return all;
}

ComplexMatrix sample_matrix(MatrixClass c, unsigned n, Rng& rng) {
    switch (c) {
        case MatrixClass::GaussianComplex: {
            ComplexMatrix a(n, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
            return a;
        }
        case MatrixClass::Monomial: {
            MonomialSpec spec;
            spec.permutation = rng.permutation(n);
            spec.diagonal.resize(n);
            // One log-uniform magnitude per permutation cycle; phases are
            // free per entry. Cycle-constant magnitudes keep the eigenvalue
            // moduli equal to the column norms, which is what makes the l1
            // bounds attained on this family.
            std::vector<double> magnitude(n, 0.0);
            std::vector<bool> visited(n, false);
            for (unsigned start = 0; start < n; ++start) {
                if (visited[start]) continue;
                const double m = rng.log_uniform(0.1, 10.0);
                std::size_t j = start;
                while (!visited[j]) {
                    visited[j] = true;
                    magnitude[j] = m;
                    j = spec.permutation[j];
                }
            }
            for (unsigned j = 0; j < n; ++j) spec.diagonal[j] = magnitude[j] * rng.random_phase();
            return monomial(spec);
        }
        case MatrixClass::UnitaryScaled: {
            ComplexMatrix a = fourier(n);
            std::vector<Cplx> phases(n);
            for (unsigned j = 0; j < n; ++j) phases[j] = rng.random_phase();
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) a(i, j) *= phases[j];
            return a;
        }
        case MatrixClass::PSD: {
            ComplexMatrix g(n, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
            return adjoint(g) * g;
        }
        case MatrixClass::Singular: {
            ComplexMatrix a(n, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
            const std::size_t dead = rng.index(n);
            for (unsigned i = 0; i < n; ++i) a(i, dead) = 0.0;
            return a;
        }
    }
    throw DomainError("unknown matrix class");
}

// --- sweep ------------------------------------------------------------------

namespace {

constexpr double kCompoundSlack = 1e-8;   // compound-norm bound
constexpr double kEigSlack = 1e-7;   // eigenvalue-product bounds
constexpr double kTightTol = 1e-10; // monomial tightness
constexpr std::size_t kMaxCounterexamples = 3;

struct Recorder {
    SweepReport& report;

    PropertyStats& stats(const std::string& property) { return report.properties[property]; }

    void outcome(const std::string& property, bool ok, const Counterexample& ce) {
        PropertyStats& st = stats(property);
        if (ok) {
            ++st.pass;
        } else {
            ++st.fail;
            if (st.counterexamples.size() < kMaxCounterexamples) st.counterexamples.push_back(ce);
        }
    }

    void ratio_max(const std::string& property, double r) {
        if (!std::isfinite(r)) return;
        PropertyStats& st = stats(property);
        if (!st.has_ratio || r > st.worst_ratio) {
            st.worst_ratio = r;
            st.has_ratio = true;
        }
    }

    void ratio_min(const std::string& property, double r) {
        if (!std::isfinite(r)) return;
        PropertyStats& st = stats(property);
        if (!st.has_ratio || r < st.worst_ratio) {
            st.worst_ratio = r;
            st.has_ratio = true;
        }
    }
};

std::string prop_name(const char* base, MatrixClass c) {
    return std::string(base) + "[" + to_string(c) + "]";
}

} // namespace

bool SweepReport::failure_budget_exceeded() const {
    return numerical_failures * 100 > samples_total;
}

bool SweepReport::all_passed() const {
    if (failure_budget_exceeded()) return false;
    for (const auto& [name, st] : properties) {
        if (st.fail > 0) return false;
    }
    return true;
}

SweepReport run_sweep(const SweepConfig& config) {
    if (config.n_min < 2 || config.n_max < config.n_min) {
        throw DomainError("sweep requires 2 <= n_min <= n_max, got [" +
                          std::to_string(config.n_min) + ", " + std::to_string(config.n_max) +
                          "]");
    }
    if (config.samples_per_n == 0) throw DomainError("sweep requires samples_per_n >= 1");
    if (config.classes.empty()) throw DomainError("sweep requires at least one matrix class");

    SweepReport report;
    report.config = config;
    Rng rng(config.seed);
    Recorder rec{report};
    const double tol = config.tolerance;

    for (unsigned n = config.n_min; n <= config.n_max; ++n) {
        {
            // Class-independent: the theta-table ordering inequalities.
            bool ok = true;
            double worst = 0.0;
            for (unsigned k = 1; k < n; ++k) {
                ok = ok && theta_dominance_check(n, k);
                worst = std::max(worst, h(k, n));
            }
            rec.outcome("theta_dominance", ok,
                        {"", n, 0, "", 0.0, 0.0, "", ""});
            rec.ratio_max("theta_dominance", worst);
        }

        for (MatrixClass cls : config.classes) {
            for (unsigned sample = 0; sample < config.samples_per_n; ++sample) {
                const ComplexMatrix a = sample_matrix(cls, n, rng);
                const ComplexMatrix b = sample_matrix(cls, n, rng); // Cauchy-Binet partner
                ++report.samples_total;
                const std::string cls_name = to_string(cls);
                const std::string a_text = matrix_to_string(a);

                Counterexample base{cls_name, n, 0, "", 0.0, 0.0, a_text, ""};

                // Eigen data is shared across several properties; a rare
                // non-converging sample is recorded, not fatal.
                Spectrum spec;
                Spectrum spec_t;
                bool have_eig = false;
                try {
                    spec = eigenvalues(a);
                    spec_t = eigenvalues(transpose(a));
                    have_eig = true;
                } catch (const NumericalError&) {
                    ++report.numerical_failures;
                }

                const bool nonsingular = is_numerically_nonsingular(a);
                const double abs_det = std::abs(determinant(a));

                for (unsigned k = 1; k <= n; ++k) {
                    Counterexample ce = base;
                    ce.k = k;
                    const CompoundMatrix ck = compound(a, k);

                    // Compound-norm bound soundness over all nine norm pairs. Violations
                    // are measured against max(1, quantity, bound) so an
                    // exactly-zero bound tolerates eigensolver noise.
                    for (NormKind mu : kAllNorms) {
                        for (NormKind nu : kAllNorms) {
                            const BoundReport rep = compound_norm_bound(ck, a, mu, nu);
                            const bool ok =
                                rep.quantity - rep.bound <=
                                kCompoundSlack * std::max({1.0, rep.quantity, rep.bound});
                            ce.context = std::string("mu=") + to_string(mu) +
                                         " nu=" + to_string(nu);
                            ce.lhs = rep.quantity;
                            ce.rhs = rep.bound;
                            const std::string name = prop_name("compound_bound_soundness", cls);
                            rec.outcome(name, ok, ce);
                            rec.ratio_max(name, rep.ratio());
                        }
                    }

                    // Subset-max fast path against exhaustive enumeration.
                    {
                        bool ok = true;
                        for (NormKind nu : kAllNorms) {
                            for (Side side : {Side::Columns, Side::Rows}) {
                                const double fast = max_subset_norm_product(a, k, nu, side);
                                const double slow = oracle_subset_max(a, k, nu, side);
                                if (fast != slow) {
                                    ok = false;
                                    ce.context = std::string("nu=") + to_string(nu) + " side=" +
                                                 to_string(side);
                                    ce.lhs = fast;
                                    ce.rhs = slow;
                                }
                            }
                        }
                        rec.outcome(prop_name("subset_max_oracle", cls), ok, ce);
                    }

                    // Spectral correspondence and the eigenvalue bounds.
                    if (have_eig) {
                        try {
                            const double rho = spectral_radius(ck.matrix);
                            const double prod = spec.product_of_largest(k);
                            const double dev = rel_diff(rho, prod);
                            ce.context = "rho(C_k) vs |prod lambda|";
                            ce.lhs = rho;
                            ce.rhs = prod;
                            const std::string name = prop_name("spectral_correspondence", cls);
                            rec.outcome(name, dev <= tol, ce);
                            rec.ratio_max(name, dev);
                        } catch (const NumericalError&) {
                            ++report.numerical_failures;
                        }
                        {
                            const double q = spec.product_of_largest(k);
                            const double qt = spec_t.product_of_largest(k);
                            const double dev = rel_diff(q, qt);
                            ce.context = "quantity(A) vs quantity(A^T)";
                            ce.lhs = q;
                            ce.rhs = qt;
                            const std::string name =
                                prop_name("transpose_quantity_symmetry", cls);
                            rec.outcome(name, dev <= 1e-8, ce);
                            rec.ratio_max(name, dev);
                        }

                        double l2_bound = 0.0, linf_bound = 0.0;
                        for (NormKind norm : kAllNorms) {
                            const BoundReport rep = eig_product_upper(spec, a, k, norm);
                            if (norm == NormKind::L2) l2_bound = rep.bound;
                            if (norm == NormKind::LInf) linf_bound = rep.bound;
                            const bool ok =
                                rep.quantity - rep.bound <=
                                kEigSlack * std::max({1.0, rep.quantity, rep.bound});
                            ce.context = std::string("norm=") + to_string(norm);
                            ce.lhs = rep.quantity;
                            ce.rhs = rep.bound;
                            const std::string name = prop_name("eig_bound_soundness", cls);
                            rec.outcome(name, ok, ce);
                            rec.ratio_max(name, rep.ratio());

                            if (cls == MatrixClass::Monomial && norm == NormKind::L1) {
                                const bool tight_ok = std::abs(rep.ratio() - 1.0) <= kTightTol;
                                ce.context = "eig l1 tightness ratio";
                                const std::string tname =
                                    prop_name("monomial_l1_tightness", cls);
                                rec.outcome(tname, tight_ok, ce);
                                rec.ratio_min(tname, rep.ratio());
                            }

                            if (nonsingular && k < n) {
                                const double lower = abs_det / rep.bound;
                                const double actual = spec.product_of_smallest_after(k);
                                const bool ok_low =
                                    lower <= actual + kEigSlack * std::max(1.0, actual);
                                ce.context = std::string("norm=") + to_string(norm) +
                                             " lower bound";
                                ce.lhs = lower;
                                ce.rhs = actual;
                                const std::string name2 =
                                    prop_name("lower_bound_soundness", cls);
                                rec.outcome(name2, ok_low, ce);
                                rec.ratio_max(name2, actual > 0.0 ? lower / actual : 1.0);
                            }
                        }

                        // The linf eigenvalue bound is implied by the l2 one: it can never be smaller.
                        {
                            const bool ok = linf_bound >= l2_bound * (1.0 - 1e-12);
                            ce.context = "linf bound vs l2 bound";
                            ce.lhs = linf_bound;
                            ce.rhs = l2_bound;
                            const std::string name = prop_name("linf_bound_dominates_l2", cls);
                            rec.outcome(name, ok, ce);
                            rec.ratio_min(name, l2_bound > 0.0 ? linf_bound / l2_bound : 1.0);
                        }
                    }

                    // Monomial tightness of the compound-norm l1 bound.
                    if (cls == MatrixClass::Monomial) {
                        const BoundReport rep =
                            compound_norm_bound(ck, a, NormKind::L1, NormKind::L1);
                        const bool ok = std::abs(rep.ratio() - 1.0) <= kTightTol;
                        ce.context = "compound l1/l1 ratio";
                        ce.lhs = rep.quantity;
                        ce.rhs = rep.bound;
                        const std::string name = prop_name("monomial_l1_tightness", cls);
                        rec.outcome(name, ok, ce);
                        rec.ratio_min(name, rep.ratio());
                    }

                    // Strictness of the l2/l2 bound for nonsingular samples.
                    if (nonsingular && k < n) {
                        const BoundReport rep =
                            compound_norm_bound(ck, a, NormKind::L2, NormKind::L2);
                        const bool ok = rep.ratio() < 1.0 - 1e-10;
                        ce.context = "l2/l2 strictness";
                        ce.lhs = rep.quantity;
                        ce.rhs = rep.bound;
                        const std::string name = prop_name("l2_strictness", cls);
                        rec.outcome(name, ok, ce);
                        rec.ratio_max(name, rep.ratio());
                    }

                    // Cauchy-Binet on the sample pair.
                    {
                        const CompoundMatrix cab = compound(a * b, k);
                        const CompoundMatrix cb = compound(b, k);
                        const double dev =
                            rel_frobenius_diff(cab.matrix, ck.matrix * cb.matrix);
                        ce.context = "C_k(AB) vs C_k(A)C_k(B)";
                        ce.lhs = dev;
                        ce.rhs = 0.0;
                        Counterexample pair = ce;
                        pair.second_matrix = matrix_to_string(b);
                        const std::string name = prop_name("cauchy_binet", cls);
                        rec.outcome(name, dev <= 1e-8, pair);
                        rec.ratio_max(name, dev);
                    }

                    // A few minors against the Laplace oracle.
                    {
                        const std::uint64_t count = binomial(n, k);
                        bool ok = true;
                        double worst = 0.0;
                        for (int t = 0; t < 3; ++t) {
                            const SubsetLex alpha = subset_unrank(n, k, rng.index(count));
                            const SubsetLex beta = subset_unrank(n, k, rng.index(count));
                            const Cplx fast =
                                ck.matrix(subset_rank(alpha), subset_rank(beta));
                            const Cplx slow = oracle_minor(a, alpha, beta);
                            const double dev =
                                std::abs(fast - slow) /
                                std::max({1.0, std::abs(fast), std::abs(slow)});
                            worst = std::max(worst, dev);
                            if (dev > 1e-9) {
                                ok = false;
                                ce.context = "minor LU vs Laplace";
                                ce.lhs = std::abs(fast);
                                ce.rhs = std::abs(slow);
                            }
                        }
                        const std::string name = prop_name("minor_oracle", cls);
                        rec.outcome(name, ok, ce);
                        rec.ratio_max(name, worst);
                    }
                }
            }
        }
    }
    return report;
}

std::string SweepReport::to_json() const {
    nlohmann::json j;
    nlohmann::json cfg;
    cfg["seed"] = config.seed;
    cfg["n_min"] = config.n_min;
    cfg["n_max"] = config.n_max;
    cfg["samples_per_n"] = config.samples_per_n;
    cfg["tolerance"] = config.tolerance;
    std::vector<std::string> classes;
    for (MatrixClass c : config.classes) classes.emplace_back(to_string(c));
    cfg["classes"] = classes;
    j["config"] = cfg;
    j["samples_total"] = samples_total;
    j["numerical_failures"] = numerical_failures;
    j["failure_budget_exceeded"] = failure_budget_exceeded();
    j["all_passed"] = all_passed();

    nlohmann::json props = nlohmann::json::object();
    for (const auto& [name, st] : properties) {
        nlohmann::json p;
        p["pass"] = st.pass;
        p["fail"] = st.fail;
        if (st.has_ratio) {
            p["worst_ratio"] = st.worst_ratio;
        } else {
            p["worst_ratio"] = nullptr;
        }
        nlohmann::json ces = nlohmann::json::array();
        for (const Counterexample& ce : st.counterexamples) {
            nlohmann::json c;
            c["class"] = ce.matrix_class;
            c["n"] = ce.n;
            c["k"] = ce.k;
            c["context"] = ce.context;
            c["lhs"] = ce.lhs;
            c["rhs"] = ce.rhs;
            c["matrix"] = ce.matrix;
            if (!ce.second_matrix.empty()) c["second_matrix"] = ce.second_matrix;
            ces.push_back(c);
        }
        p["counterexamples"] = ces;
        props[name] = p;
    }
    j["properties"] = props;
    return j.dump(2) + "\n";
}

} // namespace cnb
