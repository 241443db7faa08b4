#pragma once

#include "minkarr/body.hpp"
#include "minkarr/scalar.hpp"
#include "minkarr/vector.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace minkarr {

// center + ratio * K, ratio > 0.
template <Scalar S>
struct Homothet {
    Vector<S> center;
    S ratio;

    Homothet(Vector<S> c, S r) : center(std::move(c)), ratio(std::move(r))
    {
        if (num::sign(ratio) <= 0) throw geometry_error("homothety ratio must be positive");
    }
};

template <Scalar S>
class Arrangement {
public:
    Arrangement(SymmetricBody<S> body, std::vector<Homothet<S>> members)
        : body_(std::move(body)), members_(std::move(members))
    {
        if (members_.empty()) throw geometry_error("an arrangement needs at least one homothet");
        for (const auto& h : members_) body_.require_dim(h.center);
    }

    const SymmetricBody<S>& body() const { return body_; }
    const std::vector<Homothet<S>>& members() const { return members_; }
    const Homothet<S>& operator[](std::size_t i) const { return members_[i]; }
    std::size_t size() const { return members_.size(); }
    std::size_t dim() const { return body_.dim(); }

private:
    SymmetricBody<S> body_;
    std::vector<Homothet<S>> members_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

// Outcome of an all-pairs predicate; `witness` names the first failing pair.
struct PairCheck {
    bool ok = true;
    std::optional<IndexPair> witness;
    explicit operator bool() const { return ok; }
};

// Closed homothets of a symmetric body meet iff ||v1 - v2||_K <= r1 + r2.
template <Scalar S>
bool intersects(const SymmetricBody<S>& body, const Homothet<S>& a, const Homothet<S>& b)
{
    return num::le(gauge(body, Vector<S>(a.center - b.center)), S(a.ratio + b.ratio));
}

template <Scalar S>
bool center_in_interior(const SymmetricBody<S>& body, const Homothet<S>& owner, const Vector<S>& point)
{
    return num::lt(gauge(body, Vector<S>(point - owner.center)), owner.ratio);
}

template <Scalar S>
PairCheck is_minkowski_arrangement(const Arrangement<S>& arr)
{
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = 0; j < arr.size(); ++j)
            if (i != j && center_in_interior(arr.body(), arr[i], arr[j].center))
                return {false, IndexPair{i, j}};
    return {};
}

template <Scalar S>
PairCheck is_pairwise_intersecting(const Arrangement<S>& arr)
{
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            if (!intersects(arr.body(), arr[i], arr[j])) return {false, IndexPair{i, j}};
    return {};
}

// Unit cubes centered at {-1,0,1}^d: 3^d pairwise touching homothets.
template <Scalar S>
Arrangement<S> cube_arrangement(std::size_t d)
{
    if (d == 0) throw dimension_error("cube_arrangement needs d >= 1");
    std::vector<Homothet<S>> members;
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
        Vector<S> c(d);
        std::size_t rest = code;
        for (std::size_t i = 0; i < d; ++i) {
            c[d - 1 - i] = num::from_int<S>(static_cast<long>(rest % 3) - 1);
            rest /= 3;
        }
        members.emplace_back(std::move(c), S(1));
    }
    return Arrangement<S>(SymmetricBody<S>::cube(d), std::move(members));
}

class chain_violation : public geometry_error {
public:
    chain_violation(std::size_t i, std::size_t j, const std::string& what)
        : geometry_error(what), first(i), second(j)
    {
    }
    std::size_t first;
    std::size_t second;
};

// Checks ||v_i - v_j||_K = lambda_i for all i < j; returns the first violating pair.
template <Scalar S>
std::optional<IndexPair> find_chain_violation(const SymmetricBody<S>& body,
                                              const std::vector<Vector<S>>& points,
                                              const std::vector<S>& lambdas)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (!num::eq(gauge(body, Vector<S>(points[i] - points[j])), lambdas[i]))
                return IndexPair{i, j};
    return std::nullopt;
}

// Chain v_1..v_n with lambdas lambda_1..lambda_{n-1} -> homothets (v_i, lambda_i),
// the last one reusing lambda_{n-1}.
template <Scalar S>
Arrangement<S> chain_to_arrangement(const std::vector<Vector<S>>& points, const std::vector<S>& lambdas,
                                    const SymmetricBody<S>& body)
{
    if (points.empty()) throw geometry_error("empty chain");
    if (lambdas.size() + 1 != points.size())
        throw geometry_error("a chain of n points needs n-1 lambdas");
    if (const auto bad = find_chain_violation(body, points, lambdas))
        throw chain_violation(bad->first, bad->second,
                              "chain property violated at pair (" + std::to_string(bad->first) + ", " +
                                  std::to_string(bad->second) + ")");
    std::vector<Homothet<S>> members;
    if (points.size() == 1) {
        members.emplace_back(points[0], S(1));
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            members.emplace_back(points[i], i + 1 < points.size() ? lambdas[i] : lambdas.back());
    }
    return Arrangement<S>(body, std::move(members));
}

// ---- homothety-ratio partition -------------------------------------------

// Class l (1..d) and block k (>= 1): lambda/max in (mu^{(k-1)d+l}, mu^{(k-1)d+l-1}].
struct PartitionLabel {
    int cls = 1;
    int block = 1;
    friend bool operator==(const PartitionLabel&, const PartitionLabel&) = default;
};

inline double partition_mu(int d)
{
    if (d < 2) throw dimension_error("partition needs d >= 2");
    return std::pow(2.0, -1.0 / (d - 1));
}

// Exponent m with lambda in (mu^{m+1}, mu^m], snapped to the right-closed endpoint.
inline long partition_exponent(long double normalized, int d, long double eps = 1e-9L)
{
    const long double mu = std::pow(2.0L, -1.0L / (d - 1));
    const long double e = std::log(normalized) / std::log(mu);
    const long double nearest = std::round(e);
    if (std::fabs(e - nearest) <= eps) return static_cast<long>(nearest);
    return static_cast<long>(std::floor(e));
}

template <Scalar S>
std::vector<PartitionLabel> partition_classes(const std::vector<S>& lambdas, int d)
{
    if (d < 2) throw dimension_error("partition needs d >= 2");
    if (lambdas.empty()) return {};
    long double top = 0;
    for (const auto& l : lambdas) {
        if (num::sign(l) <= 0) throw geometry_error("partition needs positive ratios");
        top = std::max(top, static_cast<long double>(num::to_double(l)));
    }
    std::vector<PartitionLabel> out;
    out.reserve(lambdas.size());
    for (const auto& l : lambdas) {
        const long m = partition_exponent(static_cast<long double>(num::to_double(l)) / top, d);
        out.push_back({static_cast<int>(m % d) + 1, static_cast<int>(m / d) + 1});
    }
    return out;
}

// ---- bounds ----------------------------------------------------------------

inline std::uint64_t kappa_upper_bound(int d)
{
    if (d < 1) throw dimension_error("kappa bound needs d >= 1");
    if (d > 38) throw std::overflow_error("3^(d+1) does not fit in 64 bits");
    std::uint64_t r = 1;
    for (int i = 0; i <= d; ++i) r *= 3;
    return r;
}

struct Infinite {
    friend bool operator==(Infinite, Infinite) { return true; }
};

// d (1 + 2/(2 - 2^{1/(d-1)}))^{d+1}; the denominator vanishes at d = 2.
inline std::variant<long double, Infinite> theorem2_bound(int d)
{
    if (d < 2) throw dimension_error("theorem2_bound needs d >= 2");
    if (d == 2) return Infinite{};
    const long double base = 1.0L + 2.0L / (2.0L - std::pow(2.0L, 1.0L / (d - 1)));
    return static_cast<long double>(d) * std::pow(base, static_cast<long double>(d + 1));
}

}  // namespace minkarr
