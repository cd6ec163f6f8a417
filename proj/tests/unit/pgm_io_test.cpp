#include <gtest/gtest.h>

#include <random>
#include <string>

#include "cuckooseg/error.hpp"
#include "cuckooseg/pgm_io.hpp"
#include "test_support.hpp"

namespace cuckooseg {
namespace {

using namespace std::string_literals;

ErrorCode read_error(std::string_view bytes) {
  try {
    read_pgm(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << bytes;
  return ErrorCode::InvalidArgs;
}

const GrayImage kTiny = GrayImage(2, 2, {0, 0, 255, 128});

TEST(ReadPgm, MinimalAscii) { EXPECT_EQ(read_pgm("P2\n2 2\n255\n0 0 255 128\n"), kTiny); }

TEST(ReadPgm, MinimalBinary) { EXPECT_EQ(read_pgm("P5\n2 2\n255\n\x00\x00\xff\x80"s), kTiny); }

TEST(ReadPgm, CommentsBeforeMaxval) {
  EXPECT_EQ(read_pgm("P2 # made by hand\n# size\n2 # w\n2\n#max\n255\n0 0\n255 128"), kTiny);
  EXPECT_EQ(read_pgm("P5\n#c\n2 2 255\n\x00\x00\xff\x80"s), kTiny);
}

TEST(ReadPgm, BinaryRasterMayStartWithWhitespaceBytes) {
  const GrayImage img(2, 1, {0x0a, 0x20});
  EXPECT_EQ(read_pgm("P5\n2 1\n255\n\x0a\x20"s), img);
}

TEST(ReadPgm, Errors) {
  EXPECT_EQ(read_error("P6\n2 2\n255\n"), ErrorCode::BadMagic);
  EXPECT_EQ(read_error("P"), ErrorCode::BadMagic);
  EXPECT_EQ(read_error("P25\n"), ErrorCode::BadMagic);
  EXPECT_EQ(read_error("P2\n2 2\n65535\n0 0 0 0\n"), ErrorCode::UnsupportedMaxval);
  EXPECT_EQ(read_error("P2\n2 2\n15\n0 0 0 0\n"), ErrorCode::UnsupportedMaxval);
  EXPECT_EQ(read_error("P2\n2 2\n255\n0 0 255\n"), ErrorCode::TruncatedData);
  EXPECT_EQ(read_error("P5\n2 2\n255\n\x00\x00\xff"s), ErrorCode::TruncatedData);
  EXPECT_EQ(read_error("P2\n2"), ErrorCode::TruncatedData);
  EXPECT_EQ(read_error("P2\n2 x\n255\n"), ErrorCode::MalformedHeader);
  EXPECT_EQ(read_error("P2\n0 2\n255\n"), ErrorCode::MalformedHeader);
  EXPECT_EQ(read_error("P2\n2 1\n255\n1 a\n"), ErrorCode::MalformedHeader);
  EXPECT_EQ(read_error("P2\n1 1\n255\n1 2\n"), ErrorCode::MalformedHeader);
  EXPECT_EQ(read_error("P2\n1 1\n255\n300\n"), ErrorCode::ValueOutOfRange);
}

TEST(WritePgm, CanonicalBinary) {
  EXPECT_EQ(write_pgm(GrayImage(1, 1, {0}), PgmFormat::Binary), "P5\n1 1\n255\n\x00"s);
}

TEST(WritePgm, CanonicalAsciiOneRowPerLine) {
  EXPECT_EQ(write_pgm(GrayImage(3, 2, {1, 2, 3, 40, 50, 255}), PgmFormat::Ascii),
            "P2\n3 2\n255\n1 2 3\n40 50 255\n");
}

TEST(PgmProperty, RoundTripBothFormats) {
  std::mt19937_64 gen(6);
  std::uniform_int_distribution<std::size_t> side(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const auto img = testing::random_image(gen, side(gen), side(gen));
    const std::string ascii = write_pgm(img, PgmFormat::Ascii);
    const std::string binary = write_pgm(img, PgmFormat::Binary);
    EXPECT_EQ(read_pgm(ascii), img);
    EXPECT_EQ(read_pgm(binary), img);
    EXPECT_EQ(write_pgm(read_pgm(binary), PgmFormat::Binary), binary);
    EXPECT_EQ(write_pgm(read_pgm(ascii), PgmFormat::Ascii), ascii);
  }
}

TEST(PgmFiles, FixtureLoads) {
  const auto img = read_pgm_file(std::string(CUCKOOSEG_TEST_DATA_DIR) + "/camera256.pgm");
  EXPECT_EQ(img.width(), 256u);
  EXPECT_EQ(img.height(), 256u);
  EXPECT_GT(histogram(img).distinct_values(), 200u);
}

}  // namespace
}  // namespace cuckooseg
