#pragma once

#include <map>
#include <string>

#include "oir/free_complex.hpp"
#include "oir/ideal.hpp"

namespace oir {
namespace fixtures {

/// The five-generator squarefree example in width 4:
/// (x1x2, x1x3, x1x4, x2x3, x2x4).
MonomialOIIdeal cob_ideal();

/// (x1) generated in width 1; expands to (x1, ..., xw).
MonomialOIIdeal koszul_ideal();

/// (x1) generated in width 2; expands to (x1, ..., x_{w-1}). Its level-1
/// syzygy module is flat but not free.
MonomialOIIdeal wide_koszul_ideal();

/// The principal squarefree ideal (x1 x2 ... xd) generated in width d.
MonomialOIIdeal principal_ideal(int d);

/// Ferrers seed x_{1,1} x_{2,2} in the two-row algebra, width 2.
MonomialOIIdeal ferrers_seed_ideal();

/// Ferrers seed x_{1,1} x_{2,2} x_{3,3} in the three-row algebra, width 3.
MonomialOIIdeal ferrers_seed_d3_ideal();

/// (x1^3) generated in width 1. Its width-2 expansion (x1^3, x2^3) is not
/// strongly stable.
MonomialOIIdeal cubed_variable_ideal();

/// The two-step complex F^{OI,3} -> F^{OI,2} -> F^{OI,1} whose middle map
/// sends the width-3 generator to e_13 - e_23: a minimal but not width-wise
/// minimal presentation.
FreeOIComplex non_widthwise_minimal_complex();

/// The Koszul complex as a free OI-complex with levels F^{OI,i}[-i] for
/// i = 0..top_level and differentials with variable coefficients.
FreeOIComplex oi_koszul_complex(int top_level);

/// All bundled fixtures as pretty-printed JSON documents, keyed by file
/// name.
std::map<std::string, std::string> bundled_fixture_files();

} // namespace fixtures
} // namespace oir
