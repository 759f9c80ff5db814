#pragma once

#include "ttba/builders.hpp"

#include <vector>

namespace ttba {

/// Conjugation x -> g x g^-1 on M_n(Q); g given row-major and invertible.
Automorphism inner_automorphism(std::size_t n, const Matrix& g);

/// A = B = X = Q, identity twist: the 3-dim upper-triangular algebra.
TriAlgebra scalar_triangular();
/// A = B = Q, X = 0.
TriAlgebra zero_offdiagonal_triangular();
/// A = M_2(Q), B = Q, X = M_{2,1}(Q), sigma_A = conjugation by [[1,1],[0,1]].
TriAlgebra matrix_block_triangular();
/// A = B = X = Q[C_3], sigma = (sigma_inv, id).
TriAlgebra c3_inversion_triangular();

/// Three anchored function systems with surjective anchors, |K|,|L| <= 3, |Omega| <= 4.
std::vector<AnchoredFunctionSystem> anchored_examples();
TriAlgebra anchored_triangular(const AnchoredFunctionSystem& sys);

}  // namespace ttba
