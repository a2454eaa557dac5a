#include "docclean/noise.hpp"

#include "docclean/errors.hpp"

#include <random>
#include <string>

namespace docclean {

namespace {

double unit_interval(std::uint64_t u) { return static_cast<double>(u >> 11) * 0x1.0p-53; }

bool in_unit_range(double v) { return v >= 0.0 && v <= 1.0; } // false for NaN

} // namespace

void validate(const NoiseSpec& spec) {
    if (!in_unit_range(spec.density)) {
        throw ParameterError("density must lie in [0, 1], got " + std::to_string(spec.density));
    }
    if (!in_unit_range(spec.salt_fraction)) {
        throw ParameterError("salt fraction must lie in [0, 1], got " +
                             std::to_string(spec.salt_fraction));
    }
}

GrayImage add_salt_pepper(const GrayImage& img, const NoiseSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    std::vector<Intensity> out(img.pixels().begin(), img.pixels().end());
    for (auto& px : out) {
        const double corrupt = unit_interval(rng());
        const double salt = unit_interval(rng());
        if (corrupt < spec.density) px = salt < spec.salt_fraction ? kBrightest : kDarkest;
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

} // namespace docclean
