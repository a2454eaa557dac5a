#ifndef DOCCLEAN_BINARIZE_HPP
#define DOCCLEAN_BINARIZE_HPP

#include "docclean/filters.hpp"
#include "docclean/image.hpp"

#include <cstdint>

namespace docclean {

/// Global mean intensity kept as the exact rational sum / count.
class Threshold {
public:
    Threshold(std::uint64_t sum, std::uint64_t count);

    std::uint64_t sum() const noexcept { return sum_; }
    std::uint64_t count() const noexcept { return count_; }
    double value() const noexcept { return static_cast<double>(sum_) / static_cast<double>(count_); }

    /// v >= sum / count, evaluated without division.
    bool at_or_above(Intensity v) const noexcept { return std::uint64_t{v} * count_ >= sum_; }

private:
    std::uint64_t sum_;
    std::uint64_t count_;
};

Threshold mean_intensity(const GrayImage& img);

/// Pixels at or above the mean become white (0), the rest black (1).
BinaryImage binarize(const GrayImage& img);

/// Buffered conditional median filter followed by mean-threshold binarization.
BinaryImage k_algorithm(const GrayImage& img, const FilterParams& params = FilterParams{});

} // namespace docclean

#endif // DOCCLEAN_BINARIZE_HPP
