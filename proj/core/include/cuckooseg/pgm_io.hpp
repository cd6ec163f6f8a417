#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cuckooseg/gray_image.hpp"

namespace cuckooseg {

enum class PgmFormat { Ascii, Binary };  // P2, P5

/// Parses a P2 or P5 file with maxval 255. '#' comments are accepted in the
/// header up to and including the line holding maxval.
/// Errors: BadMagic, UnsupportedMaxval, TruncatedData, MalformedHeader
/// (also used for junk samples or trailing data), ValueOutOfRange for P2
/// samples above 255.
GrayImage read_pgm(std::string_view bytes);

/// Canonical form: "P5\n<w> <h>\n255\n" + raster, or "P2\n<w> <h>\n255\n"
/// followed by one space-separated row of samples per line.
std::string write_pgm(const GrayImage& image, PgmFormat format = PgmFormat::Binary);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& image,
                    PgmFormat format = PgmFormat::Binary);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace cuckooseg
