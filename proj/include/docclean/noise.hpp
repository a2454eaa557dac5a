#ifndef DOCCLEAN_NOISE_HPP
#define DOCCLEAN_NOISE_HPP

#include "docclean/image.hpp"

#include <cstdint>

namespace docclean {

/// Independent salt-and-pepper corruption.
///
/// The generator is std::mt19937_64 seeded with `seed`, whose output
/// sequence is fixed by the C++ standard. Each pixel, in row-major order,
/// consumes exactly two 64-bit draws u1, u2, each mapped to [0, 1) as
/// (u >> 11) * 2^-53. The pixel is corrupted when u1 < density; a corrupted
/// pixel becomes 255 when u2 < salt_fraction and 0 otherwise. Both draws are
/// taken whether or not the pixel is corrupted.
struct NoiseSpec {
    double density = 0.0;
    double salt_fraction = 0.5;
    std::uint64_t seed = 0;

    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// Throws ParameterError if density or salt_fraction lies outside [0, 1].
void validate(const NoiseSpec& spec);

GrayImage add_salt_pepper(const GrayImage& img, const NoiseSpec& spec);

} // namespace docclean

#endif // DOCCLEAN_NOISE_HPP
