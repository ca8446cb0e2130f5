#ifndef MINDA_MINDA_HPP
#define MINDA_MINDA_HPP

#include "minda/series.hpp"
#include "minda/schwarz.hpp"
#include "minda/phi.hpp"
#include "minda/conditions.hpp"
#include "minda/coefficients.hpp"
#include "minda/verify.hpp"
#include "minda/io.hpp"

namespace minda {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // MINDA_MINDA_HPP
