#pragma once

// Reference data shipped with the tool so verification needs no external files.

#include "pvs/trivector.hpp"

#include <string>

namespace pvs {

/// Parses covector text such as "3f7 - 3f8", "-f1" or "0".
SMatrix<Rational>::Covector parse_covector(const std::string& text);

/// Reference S matrices of w and wprime, transcribed entry by entry.
SMatrix<Rational> golden_s_matrix(const std::string& name);

/// The transcribed 8x8 table A(alpha, beta, gamma) of ad(v), evaluated at
/// (alpha, beta, gamma) = (v7 + v8, -2v7 + v8, -v1, -v2, v3, v4, v5, -v6)
/// with alpha3 = -alpha1 - alpha2.
QMatrix golden_ad_table(const std::vector<Rational>& v);

}  // namespace pvs
