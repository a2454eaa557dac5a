#ifndef DOCCLEAN_PGM_HPP
#define DOCCLEAN_PGM_HPP

#include "docclean/image.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace docclean::pgm {

enum class Format { ascii, binary };

/// Parses a P2 or P5 stream. `#` comments are accepted between header
/// tokens (and between P2 samples). Samples are rescaled to 0..255 with
/// round-half-up when maxval != 255. Bytes after the last sample are ignored.
/// Throws ParseError.
GrayImage load(std::span<const std::uint8_t> bytes);

/// Canonical form: "P2\n" or "P5\n", "<w> <h>\n", "255\n", then samples.
/// P2 puts one image row per line with single spaces between samples.
std::vector<std::uint8_t> save(const GrayImage& img, Format format);

/// File helpers. read_file throws IoError; write_file writes to a sibling
/// temporary and renames it into place, so a failed write leaves no
/// partial output behind.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

GrayImage load_file(const std::filesystem::path& path);
void save_file(const std::filesystem::path& path, const GrayImage& img,
               Format format = Format::binary);

} // namespace docclean::pgm

#endif // DOCCLEAN_PGM_HPP
