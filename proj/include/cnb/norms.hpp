#pragma once

#include <span>
#include <string_view>

#include "cnb/matrix.hpp"

namespace cnb {

/// The three norms under study. A NormKind plays both roles: the vector norm
/// nu applied to columns/rows and the induced operator norm mu applied to
/// compounds.
enum class NormKind { L1, L2, LInf };

const char* to_string(NormKind p);
NormKind parse_norm_kind(std::string_view text); // "l1" | "l2" | "linf"

inline constexpr NormKind kAllNorms[] = {NormKind::L1, NormKind::L2, NormKind::LInf};

/// l1 = sum of moduli, l2 = Euclidean, linf = max modulus.
double vec_norm(std::span<const Cplx> v, NormKind p);

/// Induced operator norm: l1 = max column sum, linf = max row sum,
/// l2 = largest singular value.
double op_norm(const ComplexMatrix& m, NormKind p);

} // namespace cnb
