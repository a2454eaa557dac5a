#ifndef DOCCLEAN_IMAGE_HPP
#define DOCCLEAN_IMAGE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace docclean {

using Intensity = std::uint8_t;

inline constexpr Intensity kDarkest = 0;
inline constexpr Intensity kBrightest = 255;

/// 8-bit grayscale raster, row-major, 0 = darkest. Coordinates are
/// x = column, y = row, origin at the top-left corner.
class GrayImage {
public:
    /// Throws UsageError unless width, height >= 1 and
    /// pixels.size() == width * height.
    GrayImage(int width, int height, std::vector<Intensity> pixels);

    static GrayImage filled(int width, int height, Intensity value);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    /// Bounds-checked accessor; throws UsageError outside the raster.
    Intensity at(int x, int y) const;
    void set(int x, int y, Intensity value);

    /// Unchecked accessor for hot loops.
    Intensity operator()(int x, int y) const noexcept {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::span<const Intensity> pixels() const noexcept { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_;
    int height_;
    std::vector<Intensity> pixels_;
};

/// Logical raster: 0 = white/background, 1 = black/ink.
class BinaryImage {
public:
    static constexpr std::uint8_t kWhite = 0;
    static constexpr std::uint8_t kBlack = 1;

    /// Throws UsageError on bad dimensions or any value outside {0, 1}.
    BinaryImage(int width, int height, std::vector<std::uint8_t> bits);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return bits_.size(); }

    std::uint8_t at(int x, int y) const;

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> bits_;
};

/// Intensity for display: white (0) -> 255, black (1) -> 0.
GrayImage render_binary(const BinaryImage& b);

/// Inverse of render_binary. Throws UsageError if any pixel is not 0 or 255.
BinaryImage binary_from_rendered(const GrayImage& img);

} // namespace docclean

#endif // DOCCLEAN_IMAGE_HPP
