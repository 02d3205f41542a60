#pragma once

#include <cstddef>
#include <vector>

#include "hyperalg/errors.hpp"

namespace hyperalg {

using IntVec = std::vector<int>;

// Index tuple of a multinomial expansion. `u` has one block per generator
// (single-generator expansions use one block), `v` indexes the coefficients
// solved for, `l` counts the scalar tail factors of generators 2..N.
struct LatticeTuple {
    std::vector<IntVec> u;
    IntVec v;
    IntVec l;

    int u_total() const;
    int v_total() const;
    bool operator==(const LatticeTuple&) const = default;
};

// All non-negative integer vectors of length `parts` summing to `total`,
// in lexicographically decreasing order.
std::vector<IntVec> compositions(int total, int parts);

// Tuples (u, v) with |u| + |v| = n, u of length pu and v of length pv.
std::vector<LatticeTuple> lattice_level(int pu, int pv, int n);

struct LatticeSet {
    std::vector<LatticeTuple> star;                // level m without the survivors
    std::vector<LatticeTuple> survivors;           // |u| = 0, v = m e_j
    std::vector<std::vector<LatticeTuple>> lower;  // lower[j - 1] is level j, 1 <= j < m
};

bool is_survivor(const LatticeTuple& t, int m);

LatticeSet enumerate_lattice(int pu, int pv, int m);
inline LatticeSet enumerate_lattice(int p, int m) { return enumerate_lattice(p, p, m); }

double binomial(int n, int k);
// n! / prod(parts_i!) with n = sum(parts). Exact below 2^53.
double multinomial(const IntVec& parts);

// (|u|+|v|)! prod a_i^{u_i} / (u_i! v_i!), total degree at most 64.
Cplx multinomial_gamma(const IntVec& u, const IntVec& v, const std::vector<Cplx>& a);

// c with c^m * phi_val^N = b * exp(log_extra), principal root. |phi_val| must exceed 1 + margin.
Cplx solve_coeff(Cplx b, int m, Cplx phi_val, long long N, double log_extra = 0.0, double margin = 1e-9);

struct ExponentSet {
    std::vector<IntVec> tuples;

    // Throws InputError when empty, ragged, negative, containing zero or duplicates.
    void validate() const;
    int dim() const { return tuples.empty() ? 0 : static_cast<int>(tuples.front().size()); }
    int max_entry() const;  // m = max sup-norm
    int max_degree() const; // d_A = max |alpha|
};

struct WeightSelection {
    std::vector<long long> k;  // weights in permuted coordinates
    IntVec perm;               // permuted coordinate i is original coordinate perm[i]
    IntVec beta;               // in original coordinates
    IntVec beta_permuted;
    int m = 0;
    int d_A = 0;
    std::vector<IntVec> A1;    // permuted tuples with first entry m
    bool injective = false;
    bool a1_holds = false;
};

IntVec permute(const IntVec& x, const IntVec& perm);
long long weight_value(const std::vector<long long>& k, const IntVec& x);

WeightSelection select_weights(const ExponentSet& A);

// Tuples (u, v, l) with |u_1| + |v| = alpha_1 and |u_i| + l_i = alpha_i (i >= 2).
// `pu[i]` is the number of terms of generator i, `pv` the number of solved coefficients.
std::vector<LatticeTuple> multi_lattice(const IntVec& alpha, const IntVec& pu, int pv);

}  // namespace hyperalg
