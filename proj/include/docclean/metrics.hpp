#ifndef DOCCLEAN_METRICS_HPP
#define DOCCLEAN_METRICS_HPP

#include "docclean/image.hpp"

#include <cstdint>
#include <optional>

namespace docclean {

/// Peak signal-to-noise ratio in dB against a peak of 255. Identical
/// images have no finite PSNR; that case is represented explicitly.
class Psnr {
public:
    static Psnr infinite() { return Psnr(); }
    static Psnr decibels(double db) { return Psnr(db); }

    bool is_infinite() const noexcept { return !db_.has_value(); }
    /// +inf for the infinite case, so comparisons order naturally.
    double value() const noexcept;

    friend bool operator==(const Psnr&, const Psnr&) = default;

private:
    Psnr() = default;
    explicit Psnr(double db) : db_(db) {}
    std::optional<double> db_;
};

/// Ink (bit 1) is the positive class.
struct Confusion {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    double precision() const noexcept;
    double recall() const noexcept;
    /// Harmonic mean of precision and recall, 0 when both are 0.
    double f1() const noexcept;

    friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct QualityReport {
    double mse = 0.0;
    Psnr psnr = Psnr::infinite();
    std::uint64_t changed_pixels = 0;
    std::optional<Confusion> confusion;

    friend bool operator==(const QualityReport&, const QualityReport&) = default;
};

// All comparisons throw UsageError when dimensions differ.
double mse(const GrayImage& a, const GrayImage& b);
Psnr psnr(const GrayImage& a, const GrayImage& b);
Psnr psnr_from_mse(double mse);
std::uint64_t changed_pixels(const GrayImage& a, const GrayImage& b);
Confusion binary_confusion(const BinaryImage& pred, const BinaryImage& truth);

/// mse, psnr and changed_pixels of `candidate` against `reference`.
QualityReport compare(const GrayImage& reference, const GrayImage& candidate);

} // namespace docclean

#endif // DOCCLEAN_METRICS_HPP
