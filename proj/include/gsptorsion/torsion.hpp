#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gsptorsion/lattice.hpp"
#include "gsptorsion/padic.hpp"
#include "gsptorsion/symplectic.hpp"

namespace gspt {

/// The point coords / ell^N of (Q_ell/Z_ell)^{2g}, N the context precision.
struct TorsionPoint {
    Vector coords;

    int order_exponent(const PrecisionContext& ctx) const;
};

struct TorsionSubgroup {
    PrecisionContext ctx;
    std::size_t ambient;  // 2g
    std::vector<TorsionPoint> generators;

    int genus() const { return static_cast<int>(ambient / 2); }

    /// Adds the point coords / ell^order_exp; requires order_exp <= N.
    void add_generator(const Vector& coords, int order_exp);
    /// Generator matrix with one column per point (coords at precision N).
    ResidueMatrix generator_matrix() const;
};

struct SubgroupType {
    std::vector<int> exponents;       // m^1 > ... > m^t >= 1
    std::vector<int> multiplicities;  // a_1 .. a_t

    int t() const { return static_cast<int>(exponents.size()); }
    int log_order() const;
    friend bool operator==(const SubgroupType&, const SubgroupType&) = default;
};

/// Basis of the ambient module adapted to H: H = sum_i <basis_i / ell^{orders_i}>,
/// orders nonincreasing (0 means the vector contributes nothing).
struct AdaptedBasis {
    std::vector<Vector> basis;
    std::vector<int> orders;
};

/// Chain entries in chain order: index 0 is the smallest group of the chain
/// (all generators fixed), the last entry fixes only the top exponent class.
struct FlagChain {
    struct Level {
        int r;
        int s;
        int delta;
    };
    std::vector<Level> levels;

    /// Entry for the k-th exponent class counted from the top (1-based).
    const Level& by_class(int k) const { return levels[levels.size() - static_cast<std::size_t>(k)]; }
};

AdaptedBasis adapted_basis(const TorsionSubgroup& h);
SubgroupType canonical_type(const TorsionSubgroup& h);

struct PairingResult {
    int n;  // common order exponent
    int k;  // the pairing value generates mu_{ell^k}
};
PairingResult weil_pairing(const PrecisionContext& ctx, const TorsionPoint& p, const TorsionPoint& q);

int m_invariant(const TorsionSubgroup& h);
int m1_invariant(const TorsionSubgroup& h);
bool is_totally_isotropic(const TorsionSubgroup& h);

/// ell^j H.
TorsionSubgroup multiply_by_ell_power(const TorsionSubgroup& h, int j);

FlagChain isotropy_chain(const TorsionSubgroup& h);

/// Exhaustive list of the elements of H (as coords at precision N).
std::vector<Vector> subgroup_elements(const TorsionSubgroup& h, std::size_t max_elements = 1u << 20);

/// Pair-scan values of m and m1 over all elements; the oracle for the Gram
/// matrix formulas.
std::pair<int, int> pairing_invariants_bruteforce(const TorsionSubgroup& h);

/// Canonical generating set; equal iff the subgroups are equal.
ResidueMatrix subgroup_canonical_form(const TorsionSubgroup& h);

/// Caches the enumeration of Sp/GSp at each level so that stabilizers of many
/// subgroups can be computed against one element list.
class StabilizerOracle {
public:
    explicit StabilizerOracle(EnumerationOptions opts = {}) : opts_(opts) {}

    struct Result {
        mpz_class order;
        mpz_class index;
        int level;
        std::vector<std::uint64_t> multipliers;  // distinct multipliers of the stabilizer, sorted
    };

    Result stabilizer(const TorsionSubgroup& h, Family family);
    mpz_class delta(const TorsionSubgroup& h);

private:
    struct Elements {
        std::size_t n;
        std::vector<std::uint64_t> data;  // column-major blocks
        std::vector<std::uint64_t> multipliers;
    };
    const Elements& elements(Family family, int g, std::uint64_t ell, int level);

    EnumerationOptions opts_;
    std::map<std::tuple<int, int, std::uint64_t, int>, std::unique_ptr<Elements>> cache_;
};

StabilizerOracle::Result stabilizer_enumerate(const TorsionSubgroup& h, Family family,
                                              const EnumerationOptions& opts = {});
mpz_class delta_estimate(const TorsionSubgroup& h, const EnumerationOptions& opts = {});

int degree_exponent_prediction(int g, const SubgroupType& type, const FlagChain& chain);

struct FactorPrediction {
    int g;
    SubgroupType type;
    FlagChain chain;
};
/// Returns (m, exponent) for a product of factors.
std::pair<int, int> product_degree_exponent(const std::vector<FactorPrediction>& parts);

struct TotallyIsotropicLift {
    TorsionSubgroup h_ti;
    Lattice lattice;
};
TotallyIsotropicLift isotropic_group_lift(const TorsionSubgroup& h);

/// Every subgroup of (Z/ell^n)^2, one canonical representative each.
std::vector<TorsionSubgroup> all_subgroups_rank2(std::uint64_t ell, int n);

/// Whether every element of `inner` lies in `outer`.
bool subgroup_contains(const TorsionSubgroup& outer, const TorsionSubgroup& inner);

}  // namespace gspt
