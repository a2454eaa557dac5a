#include "docclean/image.hpp"

#include "docclean/errors.hpp"

#include <algorithm>
#include <string>

namespace docclean {

namespace {

void check_dimensions(int width, int height, std::size_t length) {
    if (width < 1 || height < 1) {
        throw UsageError("image dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
    }
    if (length != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw UsageError("pixel count " + std::to_string(length) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height));
    }
}

[[noreturn]] void out_of_bounds(int x, int y, int width, int height) {
    throw UsageError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                     ") outside " + std::to_string(width) + "x" + std::to_string(height) +
                     " image");
}

} // namespace

GrayImage::GrayImage(int width, int height, std::vector<Intensity> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width_, height_, pixels_.size());
}

GrayImage GrayImage::filled(int width, int height, Intensity value) {
    if (width < 1 || height < 1) check_dimensions(width, height, 0);
    return GrayImage(width, height,
                     std::vector<Intensity>(static_cast<std::size_t>(width) * height, value));
}

Intensity GrayImage::at(int x, int y) const {
    if (!contains(x, y)) out_of_bounds(x, y, width_, height_);
    return (*this)(x, y);
}

void GrayImage::set(int x, int y, Intensity value) {
    if (!contains(x, y)) out_of_bounds(x, y, width_, height_);
    pixels_[static_cast<std::size_t>(y) * width_ + x] = value;
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
    check_dimensions(width_, height_, bits_.size());
    if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
        throw UsageError("binary image values must be 0 or 1");
    }
}

std::uint8_t BinaryImage::at(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_) out_of_bounds(x, y, width_, height_);
    return bits_[static_cast<std::size_t>(y) * width_ + x];
}

GrayImage render_binary(const BinaryImage& b) {
    std::vector<Intensity> out(b.size());
    std::transform(b.bits().begin(), b.bits().end(), out.begin(), [](std::uint8_t bit) {
        return bit == BinaryImage::kBlack ? kDarkest : kBrightest;
    });
    return GrayImage(b.width(), b.height(), std::move(out));
}

BinaryImage binary_from_rendered(const GrayImage& img) {
    std::vector<std::uint8_t> bits(img.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const Intensity v = img.pixels()[i];
        if (v == kDarkest) {
            bits[i] = BinaryImage::kBlack;
        } else if (v == kBrightest) {
            bits[i] = BinaryImage::kWhite;
        } else {
            throw UsageError("pixel " + std::to_string(i) + " has intensity " +
                             std::to_string(v) + "; a rendered binary image holds only 0 and 255");
        }
    }
    return BinaryImage(img.width(), img.height(), std::move(bits));
}

} // namespace docclean
