#include "docclean/binarize.hpp"

#include "docclean/errors.hpp"

#include <numeric>

namespace docclean {

Threshold::Threshold(std::uint64_t sum, std::uint64_t count) : sum_(sum), count_(count) {
    if (count == 0) throw UsageError("threshold over zero pixels");
}

Threshold mean_intensity(const GrayImage& img) {
    const auto px = img.pixels();
    const std::uint64_t sum = std::accumulate(px.begin(), px.end(), std::uint64_t{0});
    return Threshold(sum, px.size());
}

BinaryImage binarize(const GrayImage& img) {
    const Threshold t = mean_intensity(img);
    std::vector<std::uint8_t> bits(img.size());
    const auto px = img.pixels();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = t.at_or_above(px[i]) ? BinaryImage::kWhite : BinaryImage::kBlack;
    }
    return BinaryImage(img.width(), img.height(), std::move(bits));
}

BinaryImage k_algorithm(const GrayImage& img, const FilterParams& params) {
    return binarize(k_filter(img, params, FilterMode::buffered));
}

} // namespace docclean
