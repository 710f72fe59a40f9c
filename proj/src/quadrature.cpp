#include "plv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace plv {

namespace {

// One node of the rule at u > 0: s = 1 - tanh((pi/2) sinh u) is the distance
// of the abscissa from the near endpoint as a fraction of the half-width,
// w is the full weight including the step factor's cosh term.
struct Node {
    PrecReal s;
    PrecReal w;
};

// Level 0 holds u = 0, 1, 2, ...; level l >= 1 holds odd multiples of 2^-l.
struct LevelNodes {
    PrecReal center_weight;  // only used at level 0
    std::vector<Node> nodes;
};

std::mutex g_node_mutex;
std::map<std::pair<mpfr_prec_t, int>, LevelNodes>& node_memo() {
    static std::map<std::pair<mpfr_prec_t, int>, LevelNodes> memo;
    return memo;
}

double cutoff_u(mpfr_prec_t wp) {
    // Beyond u_max the weight underflows the target: (pi/2) e^u > wp ln 2 + margin.
    const double target = (static_cast<double>(wp) * 0.6931 + 40.0) * 2.0 / 3.14159265358979;
    return std::max(4.0, std::log(target) + 0.5);
}

Node make_node(const PrecReal& u, mpfr_prec_t wp) {
    const PrecReal half_pi = pi_value(wp) / 2L;
    const PrecReal v = half_pi * sinh(u);
    // 1 - tanh v = 2 e^{-2v} / (1 + e^{-2v}), stable for large v.
    const PrecReal em = exp(v * (-2L));
    const PrecReal s = em * 2L / (em + 1L);
    // w = (pi/2) cosh u / cosh^2 v, with sech v = 2 e^{-v} / (1 + e^{-2v}).
    const PrecReal sech = exp(-v) * 2L / (em + 1L);
    const PrecReal w = half_pi * cosh(u) * sech * sech;
    return Node{s, w};
}

const LevelNodes& nodes_for(mpfr_prec_t wp, int level) {
    const auto key = std::make_pair(wp, level);
    {
        std::lock_guard<std::mutex> lock(g_node_mutex);
        auto it = node_memo().find(key);
        if (it != node_memo().end()) return it->second;
    }
    LevelNodes out;
    const double umax = cutoff_u(wp);
    if (level == 0) {
        out.center_weight = pi_value(wp) / 2L;  // w(0)
        for (int k = 1; k <= static_cast<int>(umax); ++k) {
            out.nodes.push_back(make_node(PrecReal::of(static_cast<long>(k), wp), wp));
        }
    } else {
        const double h = std::ldexp(1.0, -level);
        for (int k = 1; k * h <= umax; k += 2) {
            out.nodes.push_back(make_node(PrecReal::of(static_cast<long>(k), wp) * mul_2si(PrecReal::of(1L, wp), -level), wp));
        }
    }
    std::lock_guard<std::mutex> lock(g_node_mutex);
    return node_memo().emplace(key, std::move(out)).first->second;
}

}  // namespace

QuadratureResult tanh_sinh(const Integrand& f, const PrecReal& a, const PrecReal& b,
                           mpfr_prec_t precision_bits, int max_levels) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal aw = a.round_to(wp);
    const PrecReal bw = b.round_to(wp);
    const PrecReal width = bw - aw;
    PrecReal zero(wp);
    mpfr_set_zero(zero.raw(), 1);
    if (width.is_zero()) {
        return QuadratureResult{zero.round_to(precision_bits), zero.round_to(precision_bits), 0};
    }
    if (width.sign() < 0) throw std::invalid_argument("tanh_sinh: b < a");
    const PrecReal radius = width / 2L;

    // Evaluates the transformed integrand pair at one positive-u node.
    const auto node_term = [&](const Node& n) {
        const PrecReal d = radius * n.s;          // distance from the near endpoint
        const PrecReal dfar = width - d;          // distance from the far endpoint
        const PrecReal left = f(aw + d, d, dfar);
        const PrecReal right = f(bw - d, dfar, d);
        return (left + right) * n.w;
    };

    const PrecReal tol_scale = PrecReal::two_pow(-static_cast<long>(precision_bits) - 10, wp);
    PrecReal sum(wp);
    PrecReal prev_diff(wp);
    mpfr_set_inf(prev_diff.raw(), 1);
    PrecReal diff = prev_diff;
    int level = 0;
    for (; level <= max_levels; ++level) {
        const LevelNodes& ln = nodes_for(wp, level);
        PrecReal acc = zero;
        if (level == 0) {
            const PrecReal mid = aw + radius;
            acc = f(mid, radius, radius) * ln.center_weight;
        }
        for (const Node& n : ln.nodes) acc += node_term(n);
        const PrecReal h = mul_2si(PrecReal::of(1L, wp), -level);
        const PrecReal estimate = (level == 0) ? radius * h * acc : sum / 2L + radius * h * acc;
        prev_diff = diff;
        diff = abs(estimate - sum);
        sum = estimate;
        if (level >= 2) {
            const PrecReal tol = tol_scale * max(PrecReal::of(1L, wp), abs(sum));
            if (diff <= tol && prev_diff <= tol) {
                return QuadratureResult{sum.round_to(precision_bits), diff.round_to(precision_bits),
                                        level + 1};
            }
        }
    }
    QuadratureResult best{sum.round_to(precision_bits), diff.round_to(precision_bits), level};
    throw QuadratureError("tanh_sinh: no convergence within the level cap", std::move(best));
}

}  // namespace plv
