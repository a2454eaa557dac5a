#include "docclean/filters.hpp"

#include "docclean/errors.hpp"

#include <algorithm>
#include <string>

namespace docclean {

namespace {

void check_matrix_size(int matrix_size) {
    if (matrix_size < 2 || matrix_size % 2 != 0) {
        throw ParameterError("matrix size must be an even integer >= 2, got " +
                             std::to_string(matrix_size));
    }
}

// Gathers the clipped neighbourhood of (x, y) into `out`, reusing its storage.
void gather(const GrayImage& img, int x, int y, int radius, std::vector<Intensity>& out) {
    out.clear();
    const int y0 = std::max(y - radius, 0);
    const int y1 = std::min(y + radius, img.height() - 1);
    const int x0 = std::max(x - radius, 0);
    const int x1 = std::min(x + radius, img.width() - 1);
    for (int ny = y0; ny <= y1; ++ny) {
        for (int nx = x0; nx <= x1; ++nx) out.push_back(img(nx, ny));
    }
}

// Selection only needs a partial order; the result equals sorted[n / 2].
Intensity select_median(std::vector<Intensity>& values) {
    auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

int min_multiplicity(const std::vector<Intensity>& values) {
    const Intensity lowest = *std::min_element(values.begin(), values.end());
    return static_cast<int>(std::count(values.begin(), values.end(), lowest));
}

void require_non_empty(const Window& w) {
    if (w.values.empty()) throw UsageError("window is empty");
}

} // namespace

FilterParams::FilterParams(int matrix_size, int k) : matrix_size_(matrix_size), k_(k) {
    check_matrix_size(matrix_size);
    if (k < 0) throw ParameterError("k must be non-negative, got " + std::to_string(k));
}

Window neighborhood(const GrayImage& img, int x, int y, int matrix_size) {
    check_matrix_size(matrix_size);
    if (!img.contains(x, y)) {
        throw UsageError("window centre (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") outside image");
    }
    Window w;
    gather(img, x, y, matrix_size / 2, w.values);
    return w;
}

Intensity median_of(const Window& w) {
    require_non_empty(w);
    auto values = w.values;
    return select_median(values);
}

int count_min(const Window& w) {
    require_non_empty(w);
    return min_multiplicity(w.values);
}

GrayImage median_filter(const GrayImage& img, int matrix_size) {
    check_matrix_size(matrix_size);
    const int radius = matrix_size / 2;
    std::vector<Intensity> out(img.size());
    std::vector<Intensity> scratch;
    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            gather(img, x, y, radius, scratch);
            out[i++] = select_median(scratch);
        }
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage k_filter(const GrayImage& img, const FilterParams& params, FilterMode mode) {
    const int radius = params.radius();
    std::vector<Intensity> scratch;

    if (mode == FilterMode::paper_literal) {
        GrayImage work = img;
        for (int x = 0; x < work.width(); ++x) {
            for (int y = 0; y < work.height(); ++y) {
                gather(work, x, y, radius, scratch);
                if (min_multiplicity(scratch) == params.k()) work.set(x, y, select_median(scratch));
            }
        }
        return work;
    }

    std::vector<Intensity> out(img.pixels().begin(), img.pixels().end());
    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x, ++i) {
            gather(img, x, y, radius, scratch);
            if (min_multiplicity(scratch) == params.k()) out[i] = select_median(scratch);
        }
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

} // namespace docclean
