#include "cnb/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnb/eigen.hpp"
#include "cnb/errors.hpp"

namespace cnb {

const char* to_string(NormKind p) {
    switch (p) {
        case NormKind::L1: return "l1";
        case NormKind::L2: return "l2";
        case NormKind::LInf: return "linf";
    }
    return "?";
}

NormKind parse_norm_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "l1") return NormKind::L1;
    if (lower == "l2") return NormKind::L2;
    if (lower == "linf") return NormKind::LInf;
    throw DomainError("unknown norm '" + std::string(text) + "' (expected l1, l2 or linf)");
}

double vec_norm(std::span<const Cplx> v, NormKind p) {
    if (v.empty()) throw DomainError("vec_norm requires a nonempty vector");
    switch (p) {
        case NormKind::L1: {
            double s = 0.0;
            for (const Cplx& z : v) s += std::abs(z);
            return s;
        }
        case NormKind::L2: {
            double s = 0.0;
            for (const Cplx& z : v) s += std::norm(z);
            return std::sqrt(s);
        }
        case NormKind::LInf: {
            double m = 0.0;
            for (const Cplx& z : v) m = std::max(m, std::abs(z));
            return m;
        }
    }
    throw DomainError("unreachable norm kind");
}

double op_norm(const ComplexMatrix& m, NormKind p) {
    if (m.empty()) throw DomainError("op_norm requires a nonempty matrix");
    switch (p) {
        case NormKind::L1: {
            double best = 0.0;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                double s = 0.0;
                for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
                best = std::max(best, s);
            }
            return best;
        }
        case NormKind::LInf: {
            double best = 0.0;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
                best = std::max(best, s);
            }
            return best;
        }
        case NormKind::L2: {
            return singular_values(m).front();
        }
    }
    throw DomainError("unreachable norm kind");
}

} // namespace cnb
