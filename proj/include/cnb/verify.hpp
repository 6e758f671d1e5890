#pragma once

#include <map>
#include <set>
#include <string>

#include "cnb/bounds.hpp"
#include "cnb/rng.hpp"

namespace cnb {

// --- independent oracles ---------------------------------------------------

/// det A(alpha|beta) by recursive Laplace expansion; algorithmically
/// independent of the LU path used by compound(). Guarded at |alpha| <= 8.
Cplx oracle_minor(const ComplexMatrix& a, const SubsetLex& alpha, const SubsetLex& beta);

/// Explicit maximization over all size-k subsets, each product taken in
/// descending norm order; must match max_subset_norm_product bit-for-bit.
double oracle_subset_max(const ComplexMatrix& a, unsigned k, NormKind nu, Side side);

/// Spectral radius of C_k(A), i.e. the eigensolver run on the compound
/// matrix itself rather than on A.
double oracle_eig_product(const ComplexMatrix& a, unsigned k);

// --- randomized sweep ------------------------------------------------------

enum class MatrixClass { GaussianComplex, Monomial, UnitaryScaled, PSD, Singular };

const char* to_string(MatrixClass c);
MatrixClass parse_matrix_class(const std::string& name);
const std::set<MatrixClass>& all_matrix_classes();

/// Draws one n x n matrix of the given class. Monomial magnitudes are
/// log-uniform but constant along each permutation cycle, so the eigenvalue
/// moduli coincide with the column norms and the l1 bounds are attained.
ComplexMatrix sample_matrix(MatrixClass c, unsigned n, Rng& rng);

struct SweepConfig {
    unsigned n_min = 2;
    unsigned n_max = 6;
    unsigned samples_per_n = 50;
    std::uint64_t seed = 42;
    std::set<MatrixClass> classes = all_matrix_classes();
    /// Base tolerance for identity-style checks (spectral correspondence,
    /// oracle agreement). Inequality slacks are fixed by the contracts:
    /// 1e-8 for the compound-norm bound, 1e-7 for the eigenvalue bounds.
    double tolerance = 1e-7;
};

/// A failing sample, embedded so the violation can be replayed: matrices are
/// in matrix-file text form at full precision.
struct Counterexample {
    std::string matrix_class;
    unsigned n = 0;
    unsigned k = 0;
    std::string context; // norms or subset choice, empty when not applicable
    double lhs = 0;
    double rhs = 0;
    std::string matrix;
    std::string second_matrix; // pair properties only
};

struct PropertyStats {
    long pass = 0;
    long fail = 0;
    bool has_ratio = false;
    double worst_ratio = 0;
    std::vector<Counterexample> counterexamples; // capped at 3
};

struct SweepReport {
    SweepConfig config;
    std::map<std::string, PropertyStats> properties;
    long samples_total = 0;
    long numerical_failures = 0;

    /// Eigensolver failures above 1% of samples fail the sweep.
    bool failure_budget_exceeded() const;
    bool all_passed() const;

    /// Deterministic pretty-printed JSON: property name ->
    /// {pass, fail, worst_ratio, counterexamples[]}.
    std::string to_json() const;
};

/// Evaluates every bound, identity and oracle property on the configured
/// random ensemble. Identical configs produce identical reports.
SweepReport run_sweep(const SweepConfig& config);

} // namespace cnb
