#pragma once

#include <vector>

#include "gsptorsion/padic.hpp"
#include "gsptorsion/rng.hpp"

namespace gspt {

/// Submodule of (Z/ell^N)^{2g} spanned by the columns of `generators`.
struct Lattice {
    ResidueMatrix generators;  // ambient_rank x k
    int rank;                  // declared rank

    const PrecisionContext& context() const { return generators.context(); }
    std::size_t ambient_rank() const { return generators.rows(); }

    static Lattice from_columns(const PrecisionContext& ctx, std::size_t ambient, const std::vector<Vector>& cols);
};

/// Columns e_1..e_g, f_1..f_g with Gram matrix J.
struct SymplecticBasis {
    int g;
    ResidueMatrix vectors;
};

bool is_saturated(const Lattice& l);
Lattice saturate(const Lattice& l);
Lattice complement_basis(const Lattice& l);
bool is_isotropic(const Lattice& l);
SymplecticBasis symplectic_complete(const Lattice& l);

/// Lifts an isotropic subspace given mod ell to an isotropic lattice at
/// precision `target_precision` with the same reduction mod ell.
Lattice isotropic_lift(const Lattice& subspace, int target_precision);

/// Vectors v_j = base_j mod ell^{congruence_j} that are pairwise orthogonal
/// modulo ell^N. Requires congruence nonincreasing, base independent mod ell
/// and <base_i, base_j> = 0 mod ell^{min(congruence_i, congruence_j)}.
std::vector<Vector> isotropic_congruence_lift(const PrecisionContext& ctx, const std::vector<Vector>& base,
                                              const std::vector<int>& congruence);

/// Whether two lattices at the same context span the same submodule.
bool same_span(const Lattice& a, const Lattice& b);
bool contains_span(const Lattice& outer, const Lattice& inner);

/// Image of the standard lagrangian span{e_1..e_g} under a random element of Sp.
Lattice random_maximal_isotropic(const PrecisionContext& ctx, int g, SplitMix64& rng);

}  // namespace gspt
