#ifndef DOCCLEAN_FILTERS_HPP
#define DOCCLEAN_FILTERS_HPP

#include "docclean/image.hpp"

#include <vector>

namespace docclean {

/// Window geometry and isolation gate for the conditional median filter.
///
/// `matrix_size` is the window radius times two: the window spans offsets
/// -matrix_size/2 .. +matrix_size/2 around the centre, so 2 means 3x3 and
/// 4 means 5x5. It must be even and >= 2.
///
/// `k` is compared for equality against the number of times the window
/// minimum occurs. 1 is the documented choice for a 3x3 window; other
/// sizes have no prescribed value, so it stays a free parameter.
class FilterParams {
public:
    static constexpr int kDefaultMatrixSize = 2;
    static constexpr int kDefaultK = 1;

    /// Throws ParameterError on an odd or too-small matrix size or a negative k.
    explicit FilterParams(int matrix_size = kDefaultMatrixSize, int k = kDefaultK);

    int matrix_size() const noexcept { return matrix_size_; }
    int k() const noexcept { return k_; }
    int radius() const noexcept { return matrix_size_ / 2; }
    int window_side() const noexcept { return matrix_size_ + 1; }

    friend bool operator==(const FilterParams&, const FilterParams&) = default;

private:
    int matrix_size_;
    int k_;
};

/// Intensities of the in-bounds neighbours of one pixel (centre included),
/// in row-major order of the neighbourhood. Out-of-range neighbours are
/// skipped, never padded.
struct Window {
    std::vector<Intensity> values;
};

enum class FilterMode {
    /// Every window is read from the unmodified input.
    buffered,
    /// Column-major scan (x outer, y inner) rewriting the image in place, so
    /// later windows see earlier replacements. Inherently sequential.
    paper_literal,
};

/// Throws UsageError if (x, y) is outside the image and ParameterError if
/// matrix_size is invalid.
Window neighborhood(const GrayImage& img, int x, int y, int matrix_size);

/// Element at index n/2 of the sorted values: the median for odd n, the
/// upper median for even n. Throws UsageError on an empty window.
Intensity median_of(const Window& w);

/// Multiplicity of the smallest value. Always >= 1 for a non-empty window.
int count_min(const Window& w);

/// Unconditional median filter with border clipping.
GrayImage median_filter(const GrayImage& img, int matrix_size);

/// Conditional median filter: a pixel is replaced by its window median only
/// when the window minimum occurs exactly params.k() times.
GrayImage k_filter(const GrayImage& img, const FilterParams& params,
                   FilterMode mode = FilterMode::buffered);

} // namespace docclean

#endif // DOCCLEAN_FILTERS_HPP
