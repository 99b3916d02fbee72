// SPDX-License-Identifier: Apache-2.0
//
// rispdl: mean-SNR analysis and simulation of RIS-aided links with
// phase dependent reflection loss
// Copyright (C) 2026 rispdl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISPDL_QUADRATURE_HPP
#define RISPDL_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rispdl {

// Raised when an adaptive rule exhausts its subdivision budget before the
// requested tolerance is met. Carries the error estimate it did reach.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string &what, double achieved)
        : std::runtime_error(what), achieved_(achieved)
    {
    }
    double achieved_error() const { return achieved_; }

  private:
    double achieved_;
};

struct QuadratureOptions
{
    double abs_tol = 1e-9;
    int initial_panels = 8;
    int max_panels = 5000;
};

namespace quad_detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// constants). Odd-indexed Kronrod nodes are the embedded Gauss nodes.
inline constexpr double kNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <typename Value, typename F>
inline void gk15_panel(F &f, double a, double b, Value &value, double &error)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const Value fc = f(mid);
    Value resk = kKronrodWeights[7] * fc;
    Value resg = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j)
    {
        const double dx = half * kNodes[j];
        const Value f1 = f(mid - dx);
        const Value f2 = f(mid + dx);
        resk += kKronrodWeights[j] * (f1 + f2);
        if (j % 2 == 1)
            resg += kGaussWeights[j / 2] * (f1 + f2);
    }
    value = resk * half;
    error = std::abs((resk - resg) * half);
}

template <typename Value, typename F>
Value adaptive(F &&f, double a, double b, const QuadratureOptions &opt, const char *label)
{
    struct Segment
    {
        double a, b, err;
        Value val;
        bool operator<(const Segment &other) const { return err < other.err; }
    };

    if (!(b > a))
        throw std::invalid_argument("integrate: empty interval");

    std::vector<Segment> segs;
    const int n0 = std::max(1, opt.initial_panels);
    segs.reserve(static_cast<std::size_t>(opt.max_panels) + 2);
    double total_err = 0.0;
    const double step = (b - a) / n0;
    for (int i = 0; i < n0; ++i)
    {
        Segment s;
        s.a = a + i * step;
        s.b = (i + 1 == n0) ? b : a + (i + 1) * step;
        gk15_panel(f, s.a, s.b, s.val, s.err);
        total_err += s.err;
        segs.push_back(s);
    }
    std::make_heap(segs.begin(), segs.end());

    while (total_err > opt.abs_tol)
    {
        if (static_cast<int>(segs.size()) >= opt.max_panels)
        {
            total_err = 0.0;
            for (const auto &s : segs)
                total_err += s.err;
            if (total_err <= opt.abs_tol)
                break;
            throw ToleranceError(std::string(label) + ": subdivision cap reached", total_err);
        }
        std::pop_heap(segs.begin(), segs.end());
        Segment worst = segs.back();
        segs.pop_back();
        total_err -= worst.err;

        const double mid = 0.5 * (worst.a + worst.b);
        Segment left{worst.a, mid, 0.0, Value{}};
        Segment right{mid, worst.b, 0.0, Value{}};
        gk15_panel(f, left.a, left.b, left.val, left.err);
        gk15_panel(f, right.a, right.b, right.val, right.err);
        total_err += left.err + right.err;
        segs.push_back(left);
        std::push_heap(segs.begin(), segs.end());
        segs.push_back(right);
        std::push_heap(segs.begin(), segs.end());
    }

    // Sum in left-to-right order so the result does not depend on the heap
    // layout at exit.
    std::sort(segs.begin(), segs.end(),
              [](const Segment &x, const Segment &y) { return x.a < y.a; });
    Value total{};
    for (const auto &s : segs)
        total += s.val;
    return total;
}

} // namespace quad_detail

template <typename F>
double integrate(F &&f, double a, double b, QuadratureOptions opt = {})
{
    return quad_detail::adaptive<double>(std::forward<F>(f), a, b, opt, "integrate");
}

template <typename F>
std::complex<double> integrate_complex(F &&f, double a, double b, QuadratureOptions opt = {})
{
    return quad_detail::adaptive<std::complex<double>>(std::forward<F>(f), a, b, opt,
                                                       "integrate_complex");
}

// Tensor-product adaptive rule: the outer (y) rule integrates inner adaptive
// integrals over x. The budget is split so inner errors accumulated over the
// outer interval and the outer error each stay below abs_tol / 2.
template <typename F2>
double integrate_2d(F2 &&f, double ax, double bx, double ay, double by, double abs_tol = 1e-7)
{
    QuadratureOptions inner;
    inner.abs_tol = 0.5 * abs_tol / (by - ay);
    inner.initial_panels = 4;
    inner.max_panels = 2000;

    QuadratureOptions outer;
    outer.abs_tol = 0.5 * abs_tol;
    outer.initial_panels = 8;
    outer.max_panels = 2000;

    auto marginal = [&](double y) {
        return integrate([&f, y](double x) { return f(x, y); }, ax, bx, inner);
    };
    return integrate(marginal, ay, by, outer);
}

} // namespace rispdl

#endif
