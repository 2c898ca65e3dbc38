#include "latgon/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "latgon/errors.hpp"

namespace latgon {

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::greedy: return "greedy";
        case Method::shape_guided: return "shape_guided";
    }
    return "?";
}

double perimeter(const LatticePolygon& polygon, const ConvexBody& body) {
    double total = 0.0;
    for (const LatticeVector& e : polygon.edges()) total += norm_eval(body, e.to_vec2());
    return total;
}

namespace {

// Deterministic order for shortest-vector selection: by D-norm, then angle,
// then Euclidean length.
struct NormEntry {
    LatticeVector v;
    double norm;
};

bool norm_entry_less(const NormEntry& a, const NormEntry& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    SlopeLess less;
    if (less(a.v, b.v)) return true;
    if (less(b.v, a.v)) return false;
    return false;
}

// All primitive vectors with D-norm <= bound, sorted by (norm, angle).
std::vector<NormEntry> primitives_with_norm_at_most(const ConvexBody& body, double bound) {
    const double radius = bound * body.circumradius() + 1.0;
    if (radius > 1e6) throw ValidationError("primitive enumeration radius exceeds 1e6");
    const auto r = static_cast<std::int64_t>(std::ceil(radius));
    std::vector<NormEntry> out;
    for (std::int64_t y = -r; y <= r; ++y)
        for (std::int64_t x = -r; x <= r; ++x) {
            const LatticeVector v{x, y};
            if (!is_primitive(v)) continue;
            const double nv = norm_eval(body, v.to_vec2());
            if (nv <= bound) out.push_back({v, nv});
        }
    std::sort(out.begin(), out.end(), norm_entry_less);
    return out;
}

}  // namespace

std::vector<LatticeVector> shortest_primitive_vectors(const ConvexBody& body, int n) {
    if (n < 1) throw ValidationError("shortest_primitive_vectors: n must be at least 1");
    // Density heuristic: {norm <= lambda} = lambda * D holds about
    // (6/pi^2) * lambda^2 * Area(D) primitives; grow until enough.
    double lambda = 1.3 * std::numbers::pi * std::sqrt(static_cast<double>(n) / (6.0 * body.area())) +
                    2.0 * norm_eval(body, {1.0, 0.0});
    for (;;) {
        auto entries = primitives_with_norm_at_most(body, lambda);
        if (entries.size() >= static_cast<std::size_t>(n)) {
            std::vector<LatticeVector> out;
            out.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) out.push_back(entries[static_cast<std::size_t>(i)].v);
            return out;
        }
        lambda *= 1.5;
    }
}

namespace {

// Keep `keep` consecutive vertices of `poly`, always including both
// endpoints of the edge starting at vertex index `anchor`; the dropped run
// is centred on the arc opposite that edge. The hull of the kept vertices is
// exactly the kept chain closed up.
LatticePolygon trim_to(const LatticePolygon& poly, std::size_t anchor, std::size_t keep) {
    const auto& w = poly.vertices();
    const std::size_t m = w.size();
    if (keep >= m) return poly;
    if (keep < 3) throw DegenerateClosing("cannot trim below 3 vertices");
    const std::size_t drop = m - keep;
    // Linearize the cycle starting just past the anchored edge: positions
    // 0 .. m-1 are w[anchor+1], ..., w[anchor]; both anchored-edge endpoints
    // sit at the ends and are never dropped.
    const std::size_t avail = m - 2;  // positions 1 .. m-2
    const std::size_t start = 1 + (avail - drop) / 2;
    std::vector<LatticeVector> kept;
    kept.reserve(keep);
    for (std::size_t k = 0; k < m; ++k) {
        if (k >= start && k < start + drop) continue;
        kept.push_back(w[(anchor + 1 + k) % m]);
    }
    return LatticePolygon(std::move(kept));
}

std::size_t edge_index_same_direction(const LatticePolygon& poly, LatticeVector dir) {
    const auto edges = poly.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (same_direction(edges[i], dir)) return i;
    throw Error("special edge direction not found in constructed polygon");
}

std::size_t longest_edge_index(const LatticePolygon& poly, const ConvexBody& body) {
    const auto edges = poly.edges();
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const double nv = norm_eval(body, edges[i].to_vec2());
        if (nv > best_norm) {
            best_norm = nv;
            best = i;
        }
    }
    return best;
}

// Shared tail of the greedy and shape-guided constructions: close the vector
// collection with z0 = -sum, merge a parallel same-direction member if
// needed, build by increasing slope, and trim to n vertices around the
// special edge.
MinimizerResult close_and_trim(const ConvexBody& body, std::vector<LatticeVector> vectors, int n,
                               Method method) {
    LatticeVector z0{0, 0};
    for (const LatticeVector& v : vectors) z0 = z0 - v;

    std::vector<LatticeVector> collected = vectors;  // primitives, before closing
    std::optional<LatticeVector> special;
    if (!z0.is_zero()) {
        vectors.push_back(z0);
        special = z0;
    }
    LatticePolygon t = [&] {
        try {
            return increasing_slope_construct(std::move(vectors));
        } catch (const EmptyEdgeSet& e) {
            throw DegenerateClosing(e.what());
        }
    }();

    const std::size_t anchor = special ? edge_index_same_direction(t, *special)
                                       : longest_edge_index(t, body);
    LatticePolygon trimmed = trim_to(t, anchor, static_cast<std::size_t>(n));
    MinimizerResult result{std::move(trimmed), 0.0, n, method, special, {}, true};

    // Final edges not among the collected primitives are construction
    // artifacts (the closing edge and/or the trim closure).
    std::vector<LatticeVector> pool = std::move(collected);
    for (const LatticeVector& e : result.polygon.edges()) {
        const auto it = std::find(pool.begin(), pool.end(), e);
        if (it != pool.end()) pool.erase(it);
        else result.synthetic_edges.push_back(e);
    }

    result.perimeter = perimeter(result.polygon, body);
    return result;
}

}  // namespace

MinimizerResult greedy_polygon(const ConvexBody& body, int n) {
    if (n < 3) throw ValidationError("greedy_polygon: n must be at least 3");
    return close_and_trim(body, shortest_primitive_vectors(body, n), n, Method::greedy);
}

MinimizerResult shape_guided_polygon(const ConvexBody& body, const RadialFunction& shape, int n) {
    if (n < 3) throw ValidationError("shape_guided_polygon: n must be at least 3");
    if (std::abs(area(shape) - 1.0) > 1e-6)
        throw InfeasibleShape("guide shape must have unit area");
    if (centroid(shape).norm() > 1e-6)
        throw InfeasibleShape("guide shape must have centroid at the origin");

    double r_max = 0.0;
    for (double v : shape.samples()) r_max = std::max(r_max, v);

    // Entry radius of z: the minimal lambda with z inside lambda * shape.
    const auto entry = [&shape](LatticeVector z) {
        return z.to_vec2().norm() / shape.eval(z.to_vec2().angle());
    };

    double lambda_hi = 1.2 * std::numbers::pi * std::sqrt(static_cast<double>(n) / 6.0) + 4.0;
    std::vector<std::pair<double, LatticeVector>> entries;
    for (;;) {
        entries.clear();
        const auto r = static_cast<std::int64_t>(std::ceil(lambda_hi * r_max)) + 1;
        if (r > 1'000'000) throw ValidationError("shape_guided_polygon: enumeration too large");
        for (std::int64_t y = -r; y <= r; ++y)
            for (std::int64_t x = -r; x <= r; ++x) {
                const LatticeVector v{x, y};
                if (!is_primitive(v)) continue;
                const double lam = entry(v);
                if (lam <= lambda_hi) entries.emplace_back(lam, v);
            }
        if (entries.size() >= static_cast<std::size_t>(n)) break;
        lambda_hi *= 1.4;
    }

    // Minimal lambda whose shape contains at least n primitives, and every
    // primitive inside it (ties at the threshold all enter together).
    std::nth_element(entries.begin(), entries.begin() + (n - 1), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const double lambda_min = entries[static_cast<std::size_t>(n - 1)].first;
    std::vector<LatticeVector> collected;
    for (const auto& [lam, v] : entries)
        if (lam <= lambda_min) collected.push_back(v);

    return close_and_trim(body, std::move(collected), n, Method::shape_guided);
}

// ---------------------------------------------------------------------------
// Branch and bound over zero-sum subsets of primitive candidates
// ---------------------------------------------------------------------------

namespace {

bool lex_less(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i].x != b[i].x) return a[i].x < b[i].x;
        if (a[i].y != b[i].y) return a[i].y < b[i].y;
    }
    return a.size() < b.size();
}

struct SearchState {
    const std::vector<NormEntry>& cand;
    std::vector<double> prefix;      // prefix sums of sorted candidate norms
    std::vector<double> suffix_max;  // max Euclidean length among cand[i..]
    const ConvexBody& body;
    int n;
    double incumbent;
    double tie_eps;
    std::vector<LatticeVector> best;   // slope-ordered optimal edge list
    std::vector<LatticeVector> stack;  // current partial selection
    std::int64_t nodes = 0;
    std::int64_t budget;
    bool exhausted = false;

    void dfs(std::size_t i, int left, LatticeVector sum, double cost) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (left == 0) {
            if (!sum.is_zero()) return;
            auto sorted = slope_order(stack);
            if (cost < incumbent - tie_eps ||
                (cost <= incumbent + tie_eps && (best.empty() || lex_less(sorted, best)))) {
                if (cost < incumbent - tie_eps) incumbent = cost;
                best = std::move(sorted);
            }
            return;
        }
        const std::size_t remaining = static_cast<std::size_t>(left);
        if (i + remaining > cand.size()) return;

        // Triangle inequality: the unchosen edges must sum to -sum, so their
        // total norm is at least ||-sum||_D.
        const double closer = sum.is_zero() ? 0.0 : norm_eval(body, (-sum).to_vec2());
        if (cost + closer > incumbent + tie_eps) return;
        // Reachability: |sum| can shrink by at most max Euclidean step each.
        if (sum.to_vec2().norm() >
            static_cast<double>(left) * suffix_max[i] + 1e-9)
            return;

        for (std::size_t j = i; j + remaining <= cand.size(); ++j) {
            // Cheapest completion using slots j..j+left-1; grows with j.
            if (cost + (prefix[j + remaining] - prefix[j]) > incumbent + tie_eps) break;
            stack.push_back(cand[j].v);
            dfs(j + 1, left - 1, sum + cand[j].v, cost + cand[j].norm);
            stack.pop_back();
            if (exhausted) return;
        }
    }
};

}  // namespace

MinimizerResult exact_minimizer(const ConvexBody& body, int n, ExactOptions options) {
    if (n < 3 || n > 10)
        throw ValidationError("exact_minimizer supports 3 <= n <= 10");

    MinimizerResult warm = greedy_polygon(body, n);
    const double m1 =
        norm_eval(body, shortest_primitive_vectors(body, 1).front().to_vec2());
    // Any edge of an optimum costs at most the incumbent perimeter minus the
    // cheapest possible n-1 other edges.
    const double cap = warm.perimeter - static_cast<double>(n - 1) * m1;
    auto candidates = primitives_with_norm_at_most(body, cap * (1.0 + 1e-12));
    if (candidates.size() > options.max_candidates)
        throw ValidationError("exact_minimizer: candidate set too large, refusing");

    SearchState state{candidates, {}, {}, body, n, warm.perimeter,
                      1e-12 * std::max(1.0, warm.perimeter),
                      {},  {},  0,  options.node_budget, false};
    state.prefix.resize(candidates.size() + 1, 0.0);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        state.prefix[i + 1] = state.prefix[i] + candidates[i].norm;
    state.suffix_max.resize(candidates.size() + 1, 0.0);
    for (std::size_t i = candidates.size(); i-- > 0;)
        state.suffix_max[i] =
            std::max(state.suffix_max[i + 1], candidates[i].v.to_vec2().norm());

    state.best = slope_order(warm.polygon.edges());
    state.dfs(0, n, {0, 0}, 0.0);

    if (state.best.empty()) throw BudgetExceeded("no feasible polygon found within budget");

    LatticePolygon polygon = increasing_slope_construct(state.best);
    MinimizerResult result{std::move(polygon), 0.0, n, Method::exact, std::nullopt, {},
                           !state.exhausted};
    result.perimeter = perimeter(result.polygon, body);
    return result;
}

// ---------------------------------------------------------------------------
// Exchange certificate
// ---------------------------------------------------------------------------

namespace {

// p = alpha a + beta b with alpha, beta in [0,1], decided exactly:
// alpha = cross(p,b)/cross(a,b), beta = cross(a,p)/cross(a,b).
bool in_parallelogram(LatticeVector p, LatticeVector a, LatticeVector b) {
    const __int128 d = icross(a, b);
    const __int128 alpha_num = icross(p, b);
    const __int128 beta_num = icross(a, p);
    if (d < 0)
        return (-alpha_num >= 0 && -alpha_num <= -d) && (-beta_num >= 0 && -beta_num <= -d);
    return (alpha_num >= 0 && alpha_num <= d) && (beta_num >= 0 && beta_num <= d);
}

}  // namespace

bool edge_exchange_certificate(const LatticePolygon& polygon, const ConvexBody& body) {
    const auto edges = polygon.edges();
    const auto is_edge = [&edges](LatticeVector v) {
        return std::find(edges.begin(), edges.end(), v) != edges.end();
    };
    const auto nrm = [&body](LatticeVector v) { return norm_eval(body, v.to_vec2()); };

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const LatticeVector a = edges[i], b = edges[j];
            if (a == b || a == -b) continue;
            const double pair_cost = nrm(a) + nrm(b);
            // Bounding box of the parallelogram {0, a, b, a+b}.
            const std::int64_t xlo = std::min({std::int64_t{0}, a.x, b.x, a.x + b.x});
            const std::int64_t xhi = std::max({std::int64_t{0}, a.x, b.x, a.x + b.x});
            const std::int64_t ylo = std::min({std::int64_t{0}, a.y, b.y, a.y + b.y});
            const std::int64_t yhi = std::max({std::int64_t{0}, a.y, b.y, a.y + b.y});
            std::vector<LatticeVector> inside;
            for (std::int64_t y = ylo; y <= yhi; ++y)
                for (std::int64_t x = xlo; x <= xhi; ++x) {
                    const LatticeVector p{x, y};
                    if (!is_primitive(p)) continue;
                    if (!in_parallelogram(p, a, b)) continue;
                    if (is_edge(p)) continue;
                    inside.push_back(p);
                }
            for (std::size_t s = 0; s < inside.size(); ++s)
                for (std::size_t t = s + 1; t < inside.size(); ++t) {
                    const LatticeVector x = inside[s], y = inside[t];
                    if (!in_parallelogram(x + y, a, b)) continue;
                    // Candidate exchange {a, b} -> {x, y, z}. The gauge is
                    // additive along a ray, so a same-direction merge of z
                    // with another edge does not change the total.
                    const LatticeVector z = a + b - x - y;
                    const double new_cost = nrm(x) + nrm(y) + (z.is_zero() ? 0.0 : nrm(z));
                    if (new_cost < pair_cost - 1e-9 * (1.0 + pair_cost)) return false;
                }
        }
    }
    return true;
}

}  // namespace latgon
