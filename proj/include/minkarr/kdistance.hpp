#pragma once

// Distance spectra under a norm, k-distance sets, and extraction of
// decreasing-distance chains from them.

#include "minkarr/arrangement.hpp"
#include "minkarr/body.hpp"
#include "minkarr/parallel.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minkarr {

template <Scalar S>
class PointSet {
public:
    PointSet(std::size_t dim, std::vector<Vector<S>> points) : dim_(dim), points_(std::move(points))
    {
        for (std::size_t a = 0; a < points_.size(); ++a) {
            if (points_[a].dim() != dim_) throw dimension_error("point set: dimension mismatch");
            for (std::size_t b = 0; b < a; ++b)
                if (points_[a].approx_equal(points_[b]))
                    throw geometry_error("point set: points " + std::to_string(b) + " and " +
                                         std::to_string(a) + " coincide");
        }
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const Vector<S>& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Vector<S>>& points() const { return points_; }

private:
    std::size_t dim_;
    std::vector<Vector<S>> points_;
};

template <Scalar S>
struct SpectrumEntry {
    S distance;
    std::size_t multiplicity = 0;
};

template <Scalar S>
using DistanceSpectrum = std::vector<SpectrumEntry<S>>;

template <Scalar S>
DistanceSpectrum<S> spectrum(const SymmetricBody<S>& body, const PointSet<S>& set)
{
    if (set.size() < 2) throw geometry_error("spectrum needs at least two points");
    const std::size_t n = set.size();
    std::vector<S> dists(n * (n - 1) / 2);
    parallel_for(n, [&](std::size_t a) {
        std::size_t slot = a * n - a * (a + 1) / 2;
        for (std::size_t b = a + 1; b < n; ++b) dists[slot++] = gauge(body, Vector<S>(set[a] - set[b]));
    });
    std::sort(dists.begin(), dists.end(), [](const S& x, const S& y) { return x < y; });
    DistanceSpectrum<S> out;
    for (const auto& d : dists) {
        if (!out.empty() && num::eq(out.back().distance, d))
            ++out.back().multiplicity;
        else
            out.push_back({d, 1});
    }
    return out;
}

template <Scalar S>
bool is_k_distance(const SymmetricBody<S>& body, const PointSet<S>& set, std::size_t k)
{
    if (set.size() < 2) return true;
    return spectrum(body, set).size() <= k;
}

// {0, ..., k}^d in lexicographic order.
template <Scalar S>
PointSet<S> grid_set(std::size_t d, std::size_t k)
{
    if (d == 0) throw dimension_error("grid_set needs d >= 1");
    std::vector<Vector<S>> pts;
    std::vector<long> digit(d, 0);
    for (;;) {
        Vector<S> p(d);
        for (std::size_t c = 0; c < d; ++c) p[c] = num::from_int<S>(digit[c]);
        pts.push_back(std::move(p));
        std::size_t c = d;
        while (c > 0 && digit[c - 1] == static_cast<long>(k)) digit[--c] = 0;
        if (c == 0) break;
        ++digit[c - 1];
    }
    return PointSet<S>(d, std::move(pts));
}

// ---- f(d) and k^{f(d)} -------------------------------------------------------

struct Undefined {
    friend bool operator==(Undefined, Undefined) { return true; }
};

// floor(d (1 + 2/(2 - 2^{1/(d-1)}))^{d+1}) evaluated with `bits` of precision.
inline mpz_class f_of_d_at_precision(int d, mpfr_prec_t bits)
{
    mpfr_t a, t;
    mpfr_init2(a, bits);
    mpfr_init2(t, bits);
    mpfr_set_ui(a, 2, MPFR_RNDN);
    mpfr_rootn_ui(a, a, static_cast<unsigned long>(d - 1), MPFR_RNDN);  // 2^{1/(d-1)}
    mpfr_ui_sub(a, 2, a, MPFR_RNDN);
    mpfr_ui_div(a, 2, a, MPFR_RNDN);
    mpfr_add_ui(a, a, 1, MPFR_RNDN);
    mpfr_pow_ui(a, a, static_cast<unsigned long>(d + 1), MPFR_RNDN);
    mpfr_mul_ui(a, a, static_cast<unsigned long>(d), MPFR_RNDN);
    mpfr_floor(t, a);
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(a);
    mpfr_clear(t);
    mpfr_free_cache();
    return out;
}

inline std::variant<mpz_class, Undefined> f_of_d(int d)
{
    if (d < 2) throw dimension_error("f(d) needs d >= 2");
    if (d == 2) return Undefined{};
    const mpz_class lo = f_of_d_at_precision(d, 128);
    const mpz_class hi = f_of_d_at_precision(d, 256);
    if (lo != hi) throw std::runtime_error("f(d) is not stable under precision doubling");
    return hi;
}

inline std::variant<mpz_class, Undefined> theorem3_bound(int d, unsigned long k)
{
    if (k == 0) throw geometry_error("theorem3_bound needs k >= 1");
    const auto f = f_of_d(d);
    if (std::holds_alternative<Undefined>(f)) return Undefined{};
    const mpz_class& e = std::get<mpz_class>(f);
    if (!e.fits_ulong_p()) throw std::overflow_error("f(d) too large for an explicit power");
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), k, e.get_ui());
    return out;
}

// ---- chains ------------------------------------------------------------------

template <Scalar S>
struct ChainResult {
    std::vector<std::size_t> indices;
    std::vector<Vector<S>> points;
    std::vector<S> lambdas;
    bool guaranteed = false;   // |S| met the pigeonhole threshold
    bool backtracked = false;  // plain greedy fell short and a search finished the chain
    std::size_t target = 0;
    bool complete() const { return points.size() == target; }
};

namespace detail {

// Distance classes from `from` into `pool`, largest first, then smallest distance.
template <Scalar S>
std::vector<std::pair<S, std::vector<std::size_t>>> distance_classes(const SymmetricBody<S>& body,
                                                                     const PointSet<S>& set, std::size_t from,
                                                                     const std::vector<std::size_t>& pool)
{
    std::vector<std::pair<S, std::vector<std::size_t>>> classes;
    for (auto j : pool) {
        const S dist = gauge(body, Vector<S>(set[from] - set[j]));
        if (num::is_zero(dist)) continue;
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return num::eq(c.first, dist); });
        if (it == classes.end())
            classes.push_back({dist, {j}});
        else
            it->second.push_back(j);
    }
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
        return num::lt(a.first, b.first);
    });
    return classes;
}

inline bool power_at_most(std::size_t k, std::size_t e, std::size_t n)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), k, e);
    return p <= n;
}

}  // namespace detail

// Steps: start at x_1; repeatedly take the most populated distance class from
// the newest chain point inside the surviving index set, keep that class, and
// append its first member. When the pigeonhole threshold is not met and this
// runs dry, a depth-first search over the same preference order is tried
// (bounded by `search_budget` visited nodes).
template <Scalar S>
ChainResult<S> greedy_chain(const SymmetricBody<S>& body, const PointSet<S>& set, std::size_t k,
                            std::size_t target, std::size_t search_budget = 1'000'000)
{
    if (set.size() == 0) throw geometry_error("greedy_chain needs a nonempty set");
    if (target == 0) throw geometry_error("greedy_chain needs target >= 1");
    if (k == 0 || !is_k_distance(body, set, k))
        throw geometry_error("greedy_chain: the set is not a " + std::to_string(k) + "-distance set");
    ChainResult<S> res;
    res.target = target;
    res.guaranteed = k >= 2 ? detail::power_at_most(k, target - 1, set.size()) : set.size() >= target;

    std::vector<std::size_t> pool(set.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    std::vector<std::size_t> chain{0};
    std::vector<S> lambdas;
    while (chain.size() < target) {
        const auto classes = detail::distance_classes(body, set, chain.back(), pool);
        if (classes.empty()) break;
        lambdas.push_back(classes.front().first);
        pool = classes.front().second;
        chain.push_back(pool.front());
    }

    if (chain.size() < target) {
        std::size_t visited = 0;
        std::vector<std::size_t> best_chain;
        std::vector<S> best_lambdas;
        std::vector<std::size_t> cur{0};
        std::vector<S> cur_l;
        auto dfs = [&](auto&& self, const std::vector<std::size_t>& avail) -> bool {
            if (cur.size() > best_chain.size()) {
                best_chain = cur;
                best_lambdas = cur_l;
            }
            if (cur.size() == target) return true;
            if (++visited > search_budget) return false;
            for (const auto& [dist, members] : detail::distance_classes(body, set, cur.back(), avail)) {
                if (members.size() + cur.size() < target) continue;
                for (auto j : members) {
                    cur.push_back(j);
                    cur_l.push_back(dist);
                    if (self(self, members)) return true;
                    cur.pop_back();
                    cur_l.pop_back();
                    if (visited > search_budget) return false;
                }
            }
            return false;
        };
        std::vector<std::size_t> all(set.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        dfs(dfs, all);
        if (best_chain.size() > chain.size()) {
            chain = std::move(best_chain);
            lambdas = std::move(best_lambdas);
            res.backtracked = true;
        }
    }

    res.indices = chain;
    res.lambdas = lambdas;
    for (auto i : chain) res.points.push_back(set[i]);
    return res;
}

template <Scalar S>
PairCheck verify_chain(const SymmetricBody<S>& body, const ChainResult<S>& chain)
{
    if (chain.lambdas.size() + 1 != chain.points.size() && !chain.points.empty())
        return {false, std::nullopt};
    if (const auto bad = find_chain_violation(body, chain.points, chain.lambdas)) return {false, bad};
    return {};
}

}  // namespace minkarr
