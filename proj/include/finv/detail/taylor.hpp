#pragma once

#include <cmath>
#include <numbers>

namespace finv {

template <typename F>
std::vector<Complex> taylor_coefficients(F&& f, int order, double radius, int points)
{
    std::vector<Complex> samples(points);
    for (int j = 0; j < points; ++j)
        samples[j] = f(std::polar(radius, 2 * std::numbers::pi * j / points));
    std::vector<Complex> out(order + 1);
    for (int k = 0; k <= order; ++k) {
        Complex acc = 0;
        for (int j = 0; j < points; ++j)
            acc += samples[j] * std::polar(1.0, -2 * std::numbers::pi * j * k / points);
        out[k] = acc / (static_cast<double>(points) * std::pow(radius, k));
    }
    return out;
}

}  // namespace finv
