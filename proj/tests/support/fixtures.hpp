#ifndef DOCCLEAN_TESTS_FIXTURES_HPP
#define DOCCLEAN_TESTS_FIXTURES_HPP

#include "docclean/image.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace docclean::fixtures {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline GrayImage random_image(Rng& rng, int width, int height) {
    std::vector<Intensity> px(static_cast<std::size_t>(width) * height);
    for (auto& v : px) v = static_cast<Intensity>(rng() & 0xFF);
    return GrayImage(width, height, std::move(px));
}

/// Random size in [1, max_side] on both axes, uniform intensities.
inline GrayImage random_image(Rng& rng, int max_side) {
    return random_image(rng, uniform_int(rng, 1, max_side), uniform_int(rng, 1, max_side));
}

/// Few distinct levels, so window minima repeat and the gate actually fires
/// in a useful share of pixels.
inline GrayImage random_low_entropy_image(Rng& rng, int width, int height) {
    static constexpr Intensity levels[] = {0, 60, 128, 255};
    std::vector<Intensity> px(static_cast<std::size_t>(width) * height);
    for (auto& v : px) v = levels[rng() % 4];
    return GrayImage(width, height, std::move(px));
}

inline BinaryImage random_binary_with_both(Rng& rng, int width, int height) {
    while (true) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(width) * height);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        bool zero = false, one = false;
        for (auto b : bits) (b ? one : zero) = true;
        if (zero && one) return BinaryImage(width, height, std::move(bits));
    }
}

struct Point {
    int x;
    int y;
};

enum class Direction { horizontal, vertical, diagonal, anti_diagonal };

inline std::vector<Point> stroke_points(Point start, Direction dir, int length) {
    const int dx = dir == Direction::vertical ? 0 : 1;
    const int dy = dir == Direction::horizontal ? 0 : (dir == Direction::anti_diagonal ? -1 : 1);
    std::vector<Point> pts;
    for (int i = 0; i < length; ++i) pts.push_back({start.x + i * dx, start.y + i * dy});
    return pts;
}

inline GrayImage with_pixels(GrayImage img, const std::vector<Point>& pts, Intensity value) {
    for (const auto& p : pts) img.set(p.x, p.y, value);
    return img;
}

inline void draw_line(GrayImage& img, Point a, Point b, Intensity value) {
    // Bresenham; 8-connected, one pixel thick
    int x = a.x, y = a.y;
    const int dx = std::abs(b.x - a.x), sx = a.x < b.x ? 1 : -1;
    const int dy = -std::abs(b.y - a.y), sy = a.y < b.y ? 1 : -1;
    int e = dx + dy;
    while (true) {
        if (img.contains(x, y)) img.set(x, y, value);
        if (x == b.x && y == b.y) break;
        const int e2 = 2 * e;
        if (e2 >= dy) { e += dy; x += sx; }
        if (e2 <= dx) { e += dx; y += sy; }
    }
}

inline void draw_ellipse(GrayImage& img, Point c, int rx, int ry, Intensity value) {
    constexpr int kSteps = 64;
    Point prev{c.x + rx, c.y};
    for (int i = 1; i <= kSteps; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * i / kSteps;
        const Point p{c.x + static_cast<int>(std::lround(rx * std::cos(t))),
                      c.y + static_cast<int>(std::lround(ry * std::sin(t)))};
        draw_line(img, prev, p, value);
        prev = p;
    }
}

/// 128x128 page of handwriting-like glyphs: rows of one-pixel-thick letter
/// shapes (loops, stems, slanted strokes, connectors) in ink 0 on paper 255.
/// Every third word is drawn with a doubled (two-pixel) stroke.
inline GrayImage synthetic_document() {
    GrayImage page = GrayImage::filled(128, 128, kBrightest);
    int word = 0;
    for (int baseline = 22; baseline < 128 - 6; baseline += 18) {
        int x = 6 + (baseline / 18) % 3 * 2;
        while (x < 128 - 22) {
            const int letters = 3 + (word % 3);
            const bool bold = word % 3 == 2;
            for (int dup = 0; dup < (bold ? 2 : 1); ++dup) {
                int lx = x + dup;
                for (int l = 0; l < letters; ++l) {
                    switch ((word + l) % 4) {
                        case 0:  // 'o'
                            draw_ellipse(page, {lx + 3, baseline - 4}, 3, 4, kDarkest);
                            break;
                        case 1:  // 'l' with ascender
                            draw_line(page, {lx + 1, baseline - 13}, {lx + 3, baseline}, kDarkest);
                            break;
                        case 2:  // 'v'
                            draw_line(page, {lx, baseline - 8}, {lx + 3, baseline}, kDarkest);
                            draw_line(page, {lx + 3, baseline}, {lx + 6, baseline - 8}, kDarkest);
                            break;
                        default:  // 'n'
                            draw_line(page, {lx, baseline - 8}, {lx, baseline}, kDarkest);
                            draw_line(page, {lx, baseline - 7}, {lx + 4, baseline - 8}, kDarkest);
                            draw_line(page, {lx + 5, baseline - 7}, {lx + 5, baseline}, kDarkest);
                            break;
                    }
                    // connector to the next letter
                    draw_line(page, {lx + 6, baseline}, {lx + 8, baseline - 1}, kDarkest);
                    lx += 8;
                }
            }
            x += letters * 8 + 6;
            ++word;
        }
    }
    return page;
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("docclean-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

} // namespace docclean::fixtures

#endif // DOCCLEAN_TESTS_FIXTURES_HPP
