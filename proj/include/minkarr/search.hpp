#pragma once

// Seeded local search for large pairwise-intersecting Minkowski arrangements.

#include "minkarr/arrangement.hpp"
#include "minkarr/parallel.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <optional>
#include <random>
#include <vector>

namespace minkarr {

struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t iterations = 1000;
    std::size_t batch = 16;         // candidate moves generated per iteration
    std::size_t stagnation = 50;    // iterations without growth before a removal
    long grid = 64;                 // coordinates and ratios live on a 1/grid lattice
};

template <Scalar S>
struct SearchResult {
    std::optional<Arrangement<S>> best;
    std::size_t size = 0;
    std::size_t iterations = 0;
    std::size_t accepted = 0;
    std::size_t removals = 0;
};

namespace detail {

// Bounded draw from mt19937_64 by rejection; the standard distributions are
// implementation-defined, this is not.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

template <Scalar S>
S lattice(long numer, long grid)
{
    if constexpr (scalar_traits<S>::exact) {
        mpq_class q(numer, grid);
        q.canonicalize();
        return q;
    } else {
        return static_cast<double>(numer) / static_cast<double>(grid);
    }
}

template <Scalar S>
long to_lattice_floor(const S& x, long grid)
{
    if constexpr (scalar_traits<S>::exact) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), mpq_class(x * grid).get_num_mpz_t(), mpq_class(x * grid).get_den_mpz_t());
        return f.get_si();
    } else {
        return static_cast<long>(std::floor(x * static_cast<double>(grid) + 1e-9));
    }
}

template <Scalar S>
S uniform_lattice(std::mt19937_64& rng, const S& lo, const S& hi, long grid)
{
    long a = to_lattice_floor(lo, grid);
    if (lattice<S>(a, grid) < lo) ++a;
    const long b = to_lattice_floor(hi, grid);
    if (b <= a) return lattice<S>(a, grid);
    return lattice<S>(a + static_cast<long>(draw(rng, static_cast<std::uint64_t>(b - a + 1))), grid);
}

template <Scalar S>
struct Move {
    enum class Kind { insert, ratio, center } kind = Kind::insert;
    std::size_t target = 0;
    std::optional<Homothet<S>> homothet;
};

template <Scalar S>
bool compatible(const SymmetricBody<S>& body, const Homothet<S>& a, const Homothet<S>& b)
{
    return intersects(body, a, b) && !center_in_interior(body, a, b.center) &&
           !center_in_interior(body, b, a.center);
}

}  // namespace detail

template <Scalar S>
SearchResult<S> search_arrangement(const SymmetricBody<S>& body, std::size_t dim, const SearchConfig& cfg,
                                   const std::optional<Arrangement<S>>& warm = std::nullopt)
{
    if (dim != body.dim()) throw dimension_error("search dimension does not match the body");
    std::mt19937_64 rng(cfg.seed);
    const long grid = cfg.grid;
    std::vector<Homothet<S>> state;
    if (warm) {
        if (!is_minkowski_arrangement(*warm) || !is_pairwise_intersecting(*warm))
            throw geometry_error("warm start is not a pairwise-intersecting Minkowski arrangement");
        state = warm->members();
    } else {
        state.emplace_back(Vector<S>(dim), S(1));
    }

    SearchResult<S> res;
    auto best = state;
    std::size_t idle = 0;
    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        S max_ratio = state.front().ratio, min_ratio = max_ratio;
        for (const auto& h : state) {
            if (h.ratio > max_ratio) max_ratio = h.ratio;
            if (h.ratio < min_ratio) min_ratio = h.ratio;
        }

        std::vector<detail::Move<S>> moves;
        for (std::size_t b = 0; b < cfg.batch; ++b) {
            detail::Move<S> mv;
            // perturbations only once insertions have stalled for a while
            const auto roll = idle < cfg.stagnation / 5 ? 0 : detail::draw(rng, 4);
            if (roll < 2) {
                // new member at gauge distance in [max(r, r_a), r + r_a] from a random anchor
                mv.kind = detail::Move<S>::Kind::insert;
                const auto& anchor = state[detail::draw(rng, state.size())];
                // half the time reuse an existing ratio, equal sizes pack best
                const S r = detail::draw(rng, 2) == 0
                                ? state[detail::draw(rng, state.size())].ratio
                                : detail::uniform_lattice(rng, S(min_ratio / 2), S(2 * max_ratio), grid);
                // coarse directions from {-1, 0, 1}^d half the time
                const long spread = detail::draw(rng, 2) == 0 ? 1 : grid;
                Vector<S> dir(dim);
                while (dir.is_zero())
                    for (std::size_t k = 0; k < dim; ++k)
                        dir[k] = detail::lattice<S>(static_cast<long>(detail::draw(rng, 2 * spread + 1)) - spread, spread);
                const S near = r < anchor.ratio ? anchor.ratio : r;
                // feasible centers often sit on the boundary of the allowed shell, so the endpoints get extra weight
                const auto pick_dist = detail::draw(rng, 4);
                const S dist = pick_dist == 0   ? near
                               : pick_dist == 1 ? S(r + anchor.ratio)
                                                : detail::uniform_lattice(rng, near, S(r + anchor.ratio), grid);
                const S scale = dist / gauge(body, dir);
                Vector<S> c(dim);
                for (std::size_t k = 0; k < dim; ++k)
                    c[k] = detail::lattice<S>(detail::to_lattice_floor(S(anchor.center[k] + scale * dir[k]), grid), grid);
                mv.homothet.emplace(std::move(c), r);
            } else if (roll == 2) {
                mv.kind = detail::Move<S>::Kind::ratio;
                mv.target = detail::draw(rng, state.size());
                const S factor = detail::uniform_lattice(rng, S(S(5) / S(6)), S(S(6) / S(5)), 1000);
                const auto& h = state[mv.target];
                long q = detail::to_lattice_floor(S(h.ratio * factor), grid);
                if (q < 1) q = 1;
                mv.homothet.emplace(h.center, detail::lattice<S>(q, grid));
            } else {
                mv.kind = detail::Move<S>::Kind::center;
                mv.target = detail::draw(rng, state.size());
                const auto& h = state[mv.target];
                Vector<S> c = h.center;
                for (std::size_t k = 0; k < dim; ++k)
                    c[k] += detail::uniform_lattice(rng, S(-h.ratio / 4), S(h.ratio / 4), grid);
                mv.homothet.emplace(std::move(c), h.ratio);
            }
            moves.push_back(std::move(mv));
        }

        std::vector<char> feasible(moves.size(), 0);
        parallel_for(moves.size(), [&](std::size_t m) {
            const auto& mv = moves[m];
            bool ok = true;
            for (std::size_t k = 0; k < state.size() && ok; ++k) {
                if (mv.kind != detail::Move<S>::Kind::insert && k == mv.target) continue;
                if (state[k].center.approx_equal(mv.homothet->center)) ok = false;
                else ok = detail::compatible(body, state[k], *mv.homothet);
            }
            feasible[m] = ok;
        });

        // a feasible insertion beats any perturbation
        std::size_t pick = moves.size();
        for (std::size_t m = 0; m < moves.size(); ++m) {
            if (!feasible[m]) continue;
            if (moves[m].kind == detail::Move<S>::Kind::insert) {
                pick = m;
                break;
            }
            if (pick == moves.size()) pick = m;
        }
        bool grew = false;
        for (std::size_t m = pick; m < moves.size(); ++m) {
            if (moves[m].kind == detail::Move<S>::Kind::insert) {
                state.push_back(*moves[m].homothet);
                grew = true;
            } else {
                state[moves[m].target] = *moves[m].homothet;
            }
            ++res.accepted;
            break;
        }
        if (grew) {
            idle = 0;
            if (state.size() > best.size()) best = state;
        } else if (++idle >= cfg.stagnation && state.size() > 1) {
            // every other stall restarts from the best family so far
            if (res.removals % 2 == 1) state = best;
            state.erase(state.begin() + static_cast<std::ptrdiff_t>(detail::draw(rng, state.size())));
            ++res.removals;
            idle = 0;
        }
        ++res.iterations;
    }

    res.best.emplace(body, std::move(best));
    // independent re-check of the returned family
    if (!is_minkowski_arrangement(*res.best) || !is_pairwise_intersecting(*res.best))
        throw std::logic_error("search produced an infeasible arrangement");
    res.size = res.best->size();
    return res;
}

}  // namespace minkarr
