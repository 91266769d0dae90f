#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gsptorsion/rational.hpp"

namespace gspt {

struct ShapeFactor {
    int g;
    int n;
};
using ProductShape = std::vector<ShapeFactor>;

using Witness = std::vector<int>;

struct ExponentReport {
    ExactRational value;
    std::vector<Witness> maximizers;  // sorted lexicographically
    std::vector<std::pair<Witness, ExactRational>> table;
};

ExactRational gamma_simple(int g);
long masser_bound(const ProductShape& shape);
/// subset holds 1-based factor indices.
long mt_dimension(const ProductShape& shape, const std::vector<int>& subset);

/// Maximizers are 1-based index subsets.
ExponentReport alpha_product(const ProductShape& shape);
/// Maximizers are tuples (x_i) with 2 <= x_i <= 2 g_i.
ExponentReport rho0(const ProductShape& shape);
/// The same maximum over tuples (r_i, s_i), 1 <= s_i <= r_i <= g_i, flattened.
ExponentReport rho0_rs(const ProductShape& shape);
/// Maximizers are tuples (r_i) with 0 <= r_i <= g_i, not all zero.
ExponentReport rho1(const ProductShape& shape);
bool verify_rho_bounds(const ProductShape& shape);

using IntList = std::vector<long>;

ExponentReport prefix_max(const IntList& a, const IntList& b);
ExponentReport prefix_max_multi(const std::vector<IntList>& a, const std::vector<IntList>& b);
/// Max over integer tuples bound >= m_1 >= ... >= m_k >= 0, not all zero.
ExactRational sup_bruteforce(const IntList& a, const IntList& b, int grid_bound);
/// Max over per-factor nonincreasing tuples in [0, bound] sharing a common
/// leading entry m_{i1} = c >= 1.
ExactRational sup_bruteforce_multi(const std::vector<IntList>& a, const std::vector<IntList>& b, int grid_bound);
/// Max over independent per-factor nonincreasing tuples in [0, bound], not all
/// zero; the cones are not tied together.
ExactRational sup_bruteforce_multi_independent(const std::vector<IntList>& a, const std::vector<IntList>& b,
                                               int grid_bound);
/// Max over cut tuples 0 <= h_i <= t_i, not all zero.
ExactRational cut_max_allowing_empty(const std::vector<IntList>& a, const std::vector<IntList>& b);

struct ExceptionalWitness {
    enum class Kind { None, Power, Binomial } kind = Kind::None;
    int k = 0;
    long a = 0;  // Power only
};
std::pair<bool, ExceptionalWitness> is_exceptional(long g);
/// Independent membership test by scanning every (k, a) with the value <= g.
bool is_exceptional_scan(long g);

/// Witness layout: [t, m^1..m^t, a_1..a_t, then (r, s, delta) per chain entry
/// in chain order].
ExponentReport gamma_ratio_search(int g, int max_t, int max_level);

}  // namespace gspt
