#pragma once

#include "tds/matrix.hpp"

namespace tds::modular {

/// Factor gamma over the SL2(Z) generators T and S by Euclidean reduction of
/// the left column. The returned word satisfies product(word) = gamma exactly,
/// with a possible global -I recorded in the sign.
GeneratorWord decompose_full(const UnimodularMatrix& gamma);

/// Factor gamma over T^2 and R^2. Requires membership in Gamma_2 (throws
/// NotInGroup otherwise); the sign is always +1 since -I is not in Gamma_2.
GeneratorWord decompose_gamma2(const UnimodularMatrix& gamma);

}  // namespace tds::modular
