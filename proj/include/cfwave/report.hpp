#pragma once

#include <string>

namespace cfwave::report {

/// Sobolev exponents, rows M = 1..Mmax, columns L = 1..Lmax, CSV with a
/// '#' header describing the generation parameters. Cells the solver cannot
/// produce are "." with the failure collected in the trailing notes column.
std::string table1_csv(int Lmax, int Mmax);

/// |1 - e^{i eta_L}| over [-4pi, 4pi] for L in {2,4,8,16}.
std::string figure1_csv();
std::string figure1_svg();

/// |psi_h| and |psi_h + i psi_g| over [-16pi, 16pi] for M in {2,3,4},
/// L in {2,4,8}.
std::string figure2_csv();
std::string figure2_svg();

/// E1/E2 against L in {1..8} for M in {2,3,4}.
std::string figure3_csv();
std::string figure3_svg();

}  // namespace cfwave::report
