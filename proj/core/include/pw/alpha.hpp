#pragma once

#include <string>

#include "pw/product_state.hpp"
#include "pw/seesaw.hpp"
#include "pw/witness.hpp"

namespace pw {

enum class AlphaMethod { Auto, Closed, Numeric, Seesaw };

/// "auto", "closed", "numeric" or "seesaw".
AlphaMethod parse_alpha_method(const std::string& text);
std::string to_string(AlphaMethod method);

/// True when (kappa, n) has an exact route: [n], [n-1|1], or any kappa at n = 3.
bool has_closed_form(const SeparabilityPartition& kappa);

/// alpha_kappa(W). Closed forms cover [n] (smallest coefficient), [n-1|1]
/// (interlacing minimization) and n = 3; "numeric" is the spectral route for
/// [n-1|1]; seesaw gives an upper bound for any kappa. Throws
/// std::invalid_argument for unsupported (kappa, method) pairs.
AlphaResult compute_alpha(const Witness& w, const SeparabilityPartition& kappa, AlphaMethod method,
                          const SeesawOptions& seesaw = {});

}  // namespace pw
