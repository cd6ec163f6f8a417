#include "cuckooseg/pgm_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <vector>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view data) : data_(data) {}

  bool at_end() const { return pos_ >= data_.size(); }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return data_.substr(pos_); }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_space(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (!at_end() && data_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  void skip_space() {
    while (!at_end() && is_space(data_[pos_])) ++pos_;
  }

  /// Reads a run of decimal digits; false when none are present.
  bool read_unsigned(std::uint64_t& out) {
    const char* begin = data_.data() + pos_;
    const char* end = data_.data() + data_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    pos_ += static_cast<std::size_t>(ptr - begin);
    return true;
  }

  void advance(std::size_t n) { pos_ += n; }
  char peek() const { return data_[pos_]; }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

std::uint64_t header_field(Cursor& cur, const char* name) {
  cur.skip_space_and_comments();
  if (cur.at_end()) throw Error(ErrorCode::TruncatedData, std::string("missing ") + name);
  std::uint64_t value = 0;
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())) || !cur.read_unsigned(value)) {
    throw Error(ErrorCode::MalformedHeader, std::string("invalid ") + name);
  }
  if (!cur.at_end() && !is_space(cur.peek()) && cur.peek() != '#') {
    throw Error(ErrorCode::MalformedHeader, std::string("invalid ") + name);
  }
  return value;
}

}  // namespace

GrayImage read_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(ErrorCode::BadMagic, "expected P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  Cursor cur(bytes);
  cur.advance(2);
  if (cur.at_end() || (!is_space(cur.peek()) && cur.peek() != '#')) {
    throw Error(ErrorCode::BadMagic, "expected P2 or P5");
  }

  constexpr std::uint64_t kMaxSide = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t width = header_field(cur, "width");
  const std::uint64_t height = header_field(cur, "height");
  if (width == 0 || height == 0 || width > kMaxSide || height > kMaxSide) {
    throw Error(ErrorCode::MalformedHeader, "image dimensions out of range");
  }
  const std::uint64_t maxval = header_field(cur, "maxval");
  if (maxval != 255) {
    throw Error(ErrorCode::UnsupportedMaxval,
                "maxval " + std::to_string(maxval) + " is not supported; only 255 is accepted");
  }
  if (cur.at_end()) throw Error(ErrorCode::TruncatedData, "no raster data");

  const std::size_t count = static_cast<std::size_t>(width * height);
  std::vector<std::uint8_t> pixels;
  pixels.reserve(count);

  if (binary) {
    if (!is_space(cur.peek())) throw Error(ErrorCode::MalformedHeader, "comment after maxval");
    cur.advance(1);  // the single whitespace byte ending the header
    const std::string_view raster = cur.rest();
    if (raster.size() < count) {
      throw Error(ErrorCode::TruncatedData, "expected " + std::to_string(count) +
                                                " raster bytes, found " + std::to_string(raster.size()));
    }
    if (raster.size() > count) {
      throw Error(ErrorCode::MalformedHeader, "unexpected data after the raster");
    }
    for (const char c : raster) pixels.push_back(static_cast<std::uint8_t>(c));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space();
      if (cur.at_end()) {
        throw Error(ErrorCode::TruncatedData, "expected " + std::to_string(count) +
                                                  " samples, found " + std::to_string(i));
      }
      std::uint64_t v = 0;
      if (!cur.read_unsigned(v) || (!cur.at_end() && !is_space(cur.peek()))) {
        throw Error(ErrorCode::MalformedHeader, "malformed sample " + std::to_string(i));
      }
      if (v > 255) {
        throw Error(ErrorCode::ValueOutOfRange,
                    "sample " + std::to_string(i) + " has value " + std::to_string(v));
      }
      pixels.push_back(static_cast<std::uint8_t>(v));
    }
    cur.skip_space();
    if (!cur.at_end()) throw Error(ErrorCode::MalformedHeader, "unexpected data after the raster");
  }
  return GrayImage(static_cast<std::size_t>(width), static_cast<std::size_t>(height),
                   std::move(pixels));
}

std::string write_pgm(const GrayImage& image, PgmFormat format) {
  std::string out = format == PgmFormat::Binary ? "P5\n" : "P2\n";
  out += std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  const auto px = image.pixels();
  if (format == PgmFormat::Binary) {
    out.append(reinterpret_cast<const char*>(px.data()), px.size());
    return out;
  }
  out.reserve(out.size() + px.size() * 4);
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      if (x != 0) out += ' ';
      out += std::to_string(px[y * image.width() + x]);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void write_pgm_file(const std::filesystem::path& path, const GrayImage& image, PgmFormat format) {
  write_file(path, write_pgm(image, format));
}

}  // namespace cuckooseg
