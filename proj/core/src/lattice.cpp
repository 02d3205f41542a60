#include "hyperalg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace hyperalg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void compose(int total, int parts, IntVec& cur, std::size_t pos, std::vector<IntVec>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int x = total; x >= 0; --x) {
        cur[pos] = x;
        compose(total - x, parts, cur, pos + 1, out);
    }
}

int sum(const IntVec& x) { return std::accumulate(x.begin(), x.end(), 0); }

}  // namespace

int LatticeTuple::u_total() const {
    int s = 0;
    for (const auto& b : u) s += sum(b);
    return s;
}

int LatticeTuple::v_total() const { return sum(v); }

std::vector<IntVec> compositions(int total, int parts) {
    if (total < 0 || parts < 0) throw InputError("compositions: negative argument");
    std::vector<IntVec> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    IntVec cur(static_cast<std::size_t>(parts), 0);
    compose(total, parts, cur, 0, out);
    return out;
}

std::vector<LatticeTuple> lattice_level(int pu, int pv, int n) {
    std::vector<LatticeTuple> out;
    for (int su = n; su >= 0; --su) {
        const auto us = compositions(su, pu);
        const auto vs = compositions(n - su, pv);
        for (const auto& u : us)
            for (const auto& v : vs) out.push_back(LatticeTuple{{u}, v, {}});
    }
    return out;
}

bool is_survivor(const LatticeTuple& t, int m) {
    if (t.u_total() != 0) return false;
    return std::count(t.v.begin(), t.v.end(), m) == 1 && t.v_total() == m;
}

LatticeSet enumerate_lattice(int pu, int pv, int m) {
    if (pu < 1 || pv < 1) throw InputError("enumerate_lattice: p must be >= 1");
    if (m < 2) throw InputError("enumerate_lattice: m must be >= 2");
    LatticeSet s;
    for (auto& t : lattice_level(pu, pv, m)) (is_survivor(t, m) ? s.survivors : s.star).push_back(std::move(t));
    for (int j = 1; j < m; ++j) s.lower.push_back(lattice_level(pu, pv, j));
    return s;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r) < 9007199254740992.0 ? std::round(r) : r;
}

double multinomial(const IntVec& parts) {
    double r = 1.0;
    int running = 0;
    for (int p : parts) {
        if (p < 0) throw InputError("multinomial: negative part");
        running += p;
        r *= binomial(running, p);
    }
    return r;
}

Cplx multinomial_gamma(const IntVec& u, const IntVec& v, const std::vector<Cplx>& a) {
    if (u.size() > a.size()) throw InputError("multinomial_gamma: more u entries than coefficients");
    if (sum(u) + sum(v) > 64) throw RangeError("multinomial_gamma: total degree above 64", Cplx(sum(u) + sum(v), 0));
    IntVec parts = u;
    parts.insert(parts.end(), v.begin(), v.end());
    Cplx g(multinomial(parts), 0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (int e = 0; e < u[i]; ++e) g *= a[i];
    return g;
}

Cplx solve_coeff(Cplx b, int m, Cplx phi_val, long long N, double log_extra, double margin) {
    if (m < 1) throw InputError("solve_coeff: m must be >= 1");
    if (N < 0) throw InputError("solve_coeff: N must be >= 0");
    if (b == Cplx(0.0, 0.0)) throw InputError("solve_coeff: b must be nonzero");
    if (!(std::abs(phi_val) > 1.0 + margin))
        throw HypothesisError("|phi(m lambda)| > 1", "|phi_val| = " + std::to_string(std::abs(phi_val)));
    const double log_mod = (std::log(std::abs(b)) + log_extra - double(N) * std::log(std::abs(phi_val))) / m;
    // arg(b) - N arg(phi), reduced to (-pi, pi] before taking the principal root
    double ang = std::arg(b) - std::remainder(double(N) * std::arg(phi_val), 2.0 * kPi);
    ang = std::remainder(ang, 2.0 * kPi);
    if (ang <= -kPi) ang += 2.0 * kPi;
    if (log_mod < -690.0)
        throw RangeError("solve_coeff: coefficient underflows double range", phi_val);
    return std::polar(std::exp(log_mod), ang / m);
}

void ExponentSet::validate() const {
    if (tuples.empty()) throw InputError("exponent set must be nonempty");
    const std::size_t n = tuples.front().size();
    if (n == 0) throw InputError("exponent tuples must have at least one coordinate");
    std::set<IntVec> seen;
    for (const auto& t : tuples) {
        if (t.size() != n) throw InputError("exponent tuples must share one length");
        if (std::any_of(t.begin(), t.end(), [](int x) { return x < 0; }))
            throw InputError("exponent tuples must be non-negative");
        if (std::all_of(t.begin(), t.end(), [](int x) { return x == 0; }))
            throw InputError("exponent set must not contain the zero tuple");
        if (!seen.insert(t).second) throw InputError("exponent set contains a duplicate tuple");
    }
}

int ExponentSet::max_entry() const {
    int m = 0;
    for (const auto& t : tuples) m = std::max(m, *std::max_element(t.begin(), t.end()));
    return m;
}

int ExponentSet::max_degree() const {
    int d = 0;
    for (const auto& t : tuples) d = std::max(d, sum(t));
    return d;
}

IntVec permute(const IntVec& x, const IntVec& perm) {
    IntVec y(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) y[i] = x[static_cast<std::size_t>(perm[i])];
    return y;
}

long long weight_value(const std::vector<long long>& k, const IntVec& x) {
    long long s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * x[i];
    return s;
}

WeightSelection select_weights(const ExponentSet& A) {
    A.validate();
    WeightSelection w;
    const int n = A.dim();
    w.m = A.max_entry();
    w.d_A = A.max_degree();

    // Bring the first coordinate that attains m to the front.
    int lead = -1;
    for (int i = 0; i < n && lead < 0; ++i)
        for (const auto& t : A.tuples)
            if (t[static_cast<std::size_t>(i)] == w.m) {
                lead = i;
                break;
            }
    w.perm.resize(static_cast<std::size_t>(n));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    std::swap(w.perm[0], w.perm[static_cast<std::size_t>(lead)]);

    w.k.resize(static_cast<std::size_t>(n));
    long long base = 1;
    for (int i = 0; i < n; ++i, base *= (w.m + 1)) w.k[static_cast<std::size_t>(i)] = base;

    std::vector<long long> values;
    for (const auto& t : A.tuples) values.push_back(weight_value(w.k, permute(t, w.perm)));
    std::vector<long long> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    w.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    long long best = 0;
    for (const auto& t : A.tuples) {
        IntVec p = permute(t, w.perm);
        if (p[0] != w.m) continue;
        const long long val = weight_value(w.k, p);
        if (w.A1.empty() || val < best) {
            best = val;
            w.beta_permuted = p;
            w.beta = t;
        }
        w.A1.push_back(std::move(p));
    }
    w.a1_holds = true;
    for (const auto& alpha : w.A1) {
        if (alpha == w.beta_permuted) continue;
        long long s = 0;
        for (int i = 1; i < n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            s += w.k[ui] * (w.beta_permuted[ui] - alpha[ui]);
        }
        w.a1_holds = w.a1_holds && s < 0;
    }
    return w;
}

std::vector<LatticeTuple> multi_lattice(const IntVec& alpha, const IntVec& pu, int pv) {
    if (alpha.size() != pu.size() || alpha.empty()) throw InputError("multi_lattice: dimension mismatch");
    const std::size_t n = alpha.size();
    std::vector<LatticeTuple> out;
    // First generator: split alpha_1 between its own terms and the solved coefficients.
    std::vector<std::pair<IntVec, IntVec>> heads;
    for (int s = alpha[0]; s >= 0; --s)
        for (const auto& u : compositions(s, pu[0]))
            for (const auto& v : compositions(alpha[0] - s, pv)) heads.emplace_back(u, v);
    std::vector<LatticeTuple> partial;
    for (auto& [u, v] : heads) partial.push_back(LatticeTuple{{u}, v, {}});
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<LatticeTuple> next;
        for (const auto& t : partial)
            for (int s = alpha[i]; s >= 0; --s)
                for (const auto& u : compositions(s, pu[i])) {
                    LatticeTuple x = t;
                    x.u.push_back(u);
                    x.l.push_back(alpha[i] - s);
                    next.push_back(std::move(x));
                }
        partial = std::move(next);
    }
    out = std::move(partial);
    return out;
}

}  // namespace hyperalg
