#include "docclean/metrics.hpp"

#include "docclean/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace docclean {

namespace {

template <typename A, typename B>
void require_same_shape(const A& a, const B& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw UsageError("dimension mismatch: " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()));
    }
}

double ratio(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

double Psnr::value() const noexcept {
    return db_ ? *db_ : std::numeric_limits<double>::infinity();
}

double Confusion::precision() const noexcept { return ratio(tp, tp + fp); }

double Confusion::recall() const noexcept { return ratio(tp, tp + fn); }

double Confusion::f1() const noexcept {
    const double p = precision();
    const double r = recall();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

double mse(const GrayImage& a, const GrayImage& b) {
    require_same_shape(a, b);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t d = std::int64_t{a.pixels()[i]} - std::int64_t{b.pixels()[i]};
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(a.size());
}

Psnr psnr_from_mse(double mse) {
    if (mse == 0.0) return Psnr::infinite();
    return Psnr::decibels(10.0 * std::log10(255.0 * 255.0 / mse));
}

Psnr psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

std::uint64_t changed_pixels(const GrayImage& a, const GrayImage& b) {
    require_same_shape(a, b);
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += a.pixels()[i] != b.pixels()[i];
    return n;
}

Confusion binary_confusion(const BinaryImage& pred, const BinaryImage& truth) {
    require_same_shape(pred, truth);
    Confusion c;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const bool p = pred.bits()[i] == BinaryImage::kBlack;
        const bool t = truth.bits()[i] == BinaryImage::kBlack;
        if (p && t) ++c.tp;
        else if (p) ++c.fp;
        else if (t) ++c.fn;
        else ++c.tn;
    }
    return c;
}

QualityReport compare(const GrayImage& reference, const GrayImage& candidate) {
    QualityReport r;
    r.mse = mse(reference, candidate);
    r.psnr = psnr_from_mse(r.mse);
    r.changed_pixels = changed_pixels(reference, candidate);
    return r;
}

} // namespace docclean
