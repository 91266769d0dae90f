#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gsptorsion/padic.hpp"
#include "gsptorsion/rng.hpp"

namespace gspt {

enum class Family { Sp, GSp, Pr, Prs, E };

std::string family_name(Family f);
Family parse_family(const std::string& s);

/// One of the matrix group families over Z/ell^N. P_r and P_{r,s} are the
/// subgroups of Sp_{2g} fixing e_1..e_r and e_{g+1}..e_{g+s}; E is the fibered
/// product of GSp_{2g1} and GSp_{2g2} over the multiplier.
struct GroupDescriptor {
    Family family = Family::Sp;
    int g = 1;
    int g2 = 0;  // second genus, family E only
    int r = 0;
    int s = 0;

    static GroupDescriptor sp(int g);
    static GroupDescriptor gsp(int g);
    static GroupDescriptor pr(int g, int r);
    static GroupDescriptor prs(int g, int r, int s);
    static GroupDescriptor e(int g1, int g2);

    int dimension() const;
    int rank() const;
    std::size_t matrix_size() const;
    std::string name() const;

    // Number of leading e-columns and f-columns that members fix exactly.
    int fixed_e() const { return (family == Family::Pr || family == Family::Prs) ? r : 0; }
    int fixed_f() const { return family == Family::Prs ? s : 0; }
};

struct SymplecticElement {
    ResidueMatrix matrix;
    std::uint64_t multiplier;

    /// Computes and attaches the multiplier; throws NotSymplecticSimilitude.
    static SymplecticElement from_matrix(const ResidueMatrix& m);
};

ResidueMatrix standard_form(const PrecisionContext& ctx, int g);

/// <u, v> = u^T J v for the standard J.
std::uint64_t symplectic_pairing(const PrecisionContext& ctx, std::span<const std::uint64_t> u,
                                 std::span<const std::uint64_t> v);

/// Gram matrix V^T J V of the columns of v.
ResidueMatrix gram_matrix(const ResidueMatrix& v);

Residue multiplier(const ResidueMatrix& m);
bool is_member(const ResidueMatrix& m, const GroupDescriptor& d);
/// Family E membership for a pair (x, y) of blocks.
bool is_member_pair(const ResidueMatrix& x, const ResidueMatrix& y, const GroupDescriptor& d);
bool det_multiplier_check(const SymplecticElement& m);

mpz_class sp_order(int g, std::uint64_t ell, int n);
mpz_class gsp_order(int g, std::uint64_t ell, int n);

/// ell^{(m-1)d} * level1_order.
mpz_class hensel_order(const GroupDescriptor& d, std::uint64_t ell, int m, const mpz_class& level1_order);
/// Same, with the level-1 order taken from the closed formula (Sp, GSp) or by
/// enumeration (P_r, P_{r,s}).
mpz_class hensel_order(const GroupDescriptor& d, std::uint64_t ell, int m);

struct EnumerationOptions {
    int budget_log2 = 34;
    std::size_t part = 0;   // this worker's slice of the first-column candidates
    std::size_t parts = 1;
};

/// Size of the pruned search space explored by the column-by-column generator.
mpz_class enumeration_estimate(const GroupDescriptor& d, std::uint64_t ell, int m);

/// Visits every element; the callback receives the matrix in column-major
/// order and its multiplier.
using ElementVisitor = std::function<void(std::span<const std::uint64_t> column_major, std::uint64_t multiplier)>;
void for_each_element(const GroupDescriptor& d, const PrecisionContext& ctx, const ElementVisitor& visit,
                      const EnumerationOptions& opts = {});

std::vector<SymplecticElement> enumerate_elements(const GroupDescriptor& d, const PrecisionContext& ctx,
                                                  const EnumerationOptions& opts = {});

mpz_class group_order_enumerate(const GroupDescriptor& d, std::uint64_t ell, int m,
                                const EnumerationOptions& opts = {});

/// Unpruned scan of every matrix; only for spaces of at most 2^26 matrices.
mpz_class group_order_full_scan(const GroupDescriptor& d, std::uint64_t ell, int m);

/// |G(F_ell)| / ell^dim inside [(1-1/ell)^dim, (1+1/ell)^dim].
bool order_bounds_check(const GroupDescriptor& d, std::uint64_t ell, const mpz_class& level1_order);

int codim_pr(int g, int r);
int codim_prs(int g, int r, int s);

/// One step of a congruence chain: the group P_{r,s} imposed up to `level`.
struct ChainStep {
    int level;
    int r;
    int s;
};

/// Exponent sum d_i (m_i - m_{i-1}); steps ordered from the smallest group.
int chain_index_exponent(int g, const std::vector<ChainStep>& chain);

/// Exact index in Sp_{2g}(Z/ell^{m_t}) of the matrices lying in P_{r_i,s_i}
/// modulo ell^{m_i} for every step; computed by enumeration.
mpz_class chain_index_enumerate(int g, std::uint64_t ell, const std::vector<ChainStep>& chain,
                                const EnumerationOptions& opts = {});

/// m = diag(I, lambda I) * sp_part.
std::pair<SymplecticElement, SymplecticElement> sp_factorize(const SymplecticElement& m);

/// Whether M e_1 = e_1 and M e_{g+1} = e_{g+1} modulo ell^k.
bool congruence_multiplier_check(const SymplecticElement& m, int k);

/// g2 Tr(x) = g1 Tr(y) mod ell^N.
bool lie_trace_check(const ResidueMatrix& x, const ResidueMatrix& y, int g1, int g2);

/// Product of `steps` random elementary symplectic generators
/// [[I,S],[0,I]], [[I,0],[S,I]] (S symmetric) and diag(A, A^{-T}).
ResidueMatrix random_sp_element(const PrecisionContext& ctx, int g, SplitMix64& rng, int steps = 6);

}  // namespace gspt
