#include "docclean/pgm.hpp"

#include "docclean/errors.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <system_error>
#include <unistd.h>

namespace docclean::pgm {

namespace {

// Largest raster we are willing to allocate from an untrusted header.
constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 28;

bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (!at_end()) {
            const auto c = bytes_[pos_];
            if (is_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else {
                break;
            }
        }
    }

    // Reads one unsigned decimal token. `what` names the field in diagnostics.
    std::uint64_t integer(const char* what) {
        skip_space_and_comments();
        if (at_end()) throw ParseError(std::string("truncated stream: expected ") + what, pos_);
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!at_end() && is_digit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                throw ParseError(std::string(what) + " is out of range", start);
            }
            ++pos_;
        }
        if (pos_ == start || (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')) {
            throw ParseError(std::string("invalid ") + what + " token '" + token_at(start) + "'",
                             start);
        }
        return value;
    }

    std::uint8_t byte() { return bytes_[pos_++]; }
    std::size_t remaining() const { return bytes_.size() - pos_; }

    std::string token_at(std::size_t start) const {
        std::string tok;
        for (std::size_t i = start; i < bytes_.size() && !is_space(bytes_[i]) && tok.size() < 16; ++i) {
            tok.push_back(static_cast<char>(bytes_[i]));
        }
        return tok;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

Intensity rescale(std::uint64_t sample, std::uint64_t maxval) {
    if (maxval == 255) return static_cast<Intensity>(sample);
    // round(sample * 255 / maxval), halves rounded up
    return static_cast<Intensity>((2 * sample * 255 + maxval) / (2 * maxval));
}

} // namespace

GrayImage load(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2) throw ParseError("truncated stream: missing magic number", 0);
    if (bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        std::string magic{static_cast<char>(bytes[0]), static_cast<char>(bytes[1])};
        throw ParseError("unknown magic number '" + magic + "' (expected P2 or P5)", 0);
    }
    const bool ascii = bytes[1] == '2';

    Reader in(bytes);
    in.byte();
    in.byte();
    if (!in.at_end() && !is_space(bytes[2]) && bytes[2] != '#') {
        throw ParseError("unknown magic number '" + in.token_at(0) + "'", 0);
    }

    in.skip_space_and_comments();
    const std::size_t width_pos = in.pos();
    const auto width = in.integer("width");
    const auto height = in.integer("height");
    if (width == 0 || height == 0) {
        throw ParseError("image dimensions must be positive, got " + std::to_string(width) +
                             "x" + std::to_string(height),
                         width_pos);
    }
    if (width * height > kMaxPixels) {
        throw ParseError("image dimensions " + std::to_string(width) + "x" +
                             std::to_string(height) + " exceed the supported size",
                         width_pos);
    }
    in.skip_space_and_comments();
    const std::size_t maxval_pos = in.pos();
    const auto maxval = in.integer("maxval");
    if (maxval < 1 || maxval > 255) {
        throw ParseError("maxval " + std::to_string(maxval) + " outside 1..255", maxval_pos);
    }

    const std::size_t count = width * height;
    std::vector<Intensity> pixels;
    pixels.reserve(count);

    if (ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            in.skip_space_and_comments();
            const std::size_t at = in.pos();
            if (in.at_end()) {
                throw ParseError("truncated pixel data: got " + std::to_string(i) + " of " +
                                     std::to_string(count) + " samples",
                                 at);
            }
            const auto sample = in.integer("sample");
            if (sample > maxval) {
                throw ParseError("sample " + std::to_string(sample) + " exceeds maxval " +
                                     std::to_string(maxval),
                                 at);
            }
            pixels.push_back(rescale(sample, maxval));
        }
    } else {
        // Exactly one whitespace byte separates maxval from the raster.
        if (in.at_end()) throw ParseError("truncated stream: missing raster", in.pos());
        in.byte();
        if (in.remaining() < count) {
            throw ParseError("truncated pixel data: got " + std::to_string(in.remaining()) +
                                 " of " + std::to_string(count) + " bytes",
                             bytes.size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = in.pos();
            const auto sample = in.byte();
            if (sample > maxval) {
                throw ParseError("sample " + std::to_string(sample) + " exceeds maxval " +
                                     std::to_string(maxval),
                                 at);
            }
            pixels.push_back(rescale(sample, maxval));
        }
    }

    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> save(const GrayImage& img, Format format) {
    std::string header = format == Format::ascii ? "P2\n" : "P5\n";
    header += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";

    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (format == Format::binary) {
        out.insert(out.end(), img.pixels().begin(), img.pixels().end());
        return out;
    }

    std::string body;
    body.reserve(img.size() * 4);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (x > 0) body.push_back(' ');
            body += std::to_string(img(x, y));
        }
        body.push_back('\n');
    }
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "': " + std::strerror(errno));
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                    std::istreambuf_iterator<char>());
    if (file.bad()) throw IoError("error reading '" + path.string() + "'");
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    auto tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw IoError("cannot open '" + tmp.string() + "' for writing: " +
                          std::strerror(errno));
        }
        file.write(reinterpret_cast<const char*>(bytes.data()),
                   static_cast<std::streamsize>(bytes.size()));
        file.flush();
        if (!file) {
            file.close();
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("error writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoError("cannot move output into place at '" + path.string() + "': " +
                      ec.message());
    }
}

GrayImage load_file(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    try {
        return load(bytes);
    } catch (const ParseError& e) {
        throw e.with_source(path.string());
    }
}

void save_file(const std::filesystem::path& path, const GrayImage& img, Format format) {
    write_file(path, save(img, format));
}

} // namespace docclean::pgm
