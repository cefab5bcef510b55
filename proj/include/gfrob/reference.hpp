#pragma once

#include <vector>

#include "gfrob/poly.hpp"
#include "gfrob/report.hpp"

namespace gfrob {

/// Published closed forms, typed in by hand: Φ for A_3, A_5, D_3, D_4.
/// Throws BadIndex for anything else.
MultiPoly reference_potential(char kind, int n);

/// a_0(t) .. a_{m-1}(t) of flat_coordinates(n) for n = 3, 4.
std::vector<MultiPoly> reference_chart(int n);
/// t_0(a) .. t_4(a) for flat_coordinates(4).
std::vector<MultiPoly> reference_chart_inverse_4();

/// Every published example, one check each.
Report verify_paper();

}  // namespace gfrob
