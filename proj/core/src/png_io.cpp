#include "sdm/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>

namespace sdm {

namespace {

struct ReadCursor {
  const std::uint8_t* bytes;
  size_t size;
  size_t offset;
};

void read_from_memory(png_structp png, png_bytep out, png_size_t n) {
  auto* cur = static_cast<ReadCursor*>(png_get_io_ptr(png));
  if (cur->offset + n > cur->size) {
    png_error(png, "png: read past end of buffer");
  }
  std::memcpy(out, cur->bytes + cur->offset, n);
  cur->offset += n;
}

void write_to_vector(png_structp png, png_bytep data, png_size_t n) {
  auto* vec = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  vec->insert(vec->end(), data, data + n);
}

void flush_noop(png_structp) {}

ImageU8 decode_impl(png_structp png, png_infop info) {
  png_read_info(png, info);

  png_uint_32 width = png_get_image_width(png, info);
  png_uint_32 height = png_get_image_height(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);

  int channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    png_error(png, "png: unsupported channel count after expansion");
  }

  ImageU8 img(static_cast<int>(width), static_cast<int>(height), channels);
  std::vector<png_bytep> rows(height);
  size_t stride = static_cast<size_t>(width) * channels;
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = img.data.data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  return img;
}

}  // namespace

ImageU8 decode_png(const std::uint8_t* bytes, size_t size) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png: failed to allocate read struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png: failed to allocate info struct");
  }
  ReadCursor cur{bytes, size, 0};
  ImageU8 img;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError("png: malformed stream");
  }
  png_set_read_fn(png, &cur, read_from_memory);
  img = decode_impl(png, info);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

ImageU8 load_png(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("png: cannot open " + path);
  std::vector<std::uint8_t> bytes;
  std::uint8_t buf[65536];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) bytes.insert(bytes.end(), buf, buf + n);
  std::fclose(f);
  try {
    return decode_png(bytes.data(), bytes.size());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " (" + path + ")");
  }
}

std::vector<std::uint8_t> encode_png(const ImageU8& img) {
  if (img.channels != 1 && img.channels != 3) {
    throw ValidationError("png: only 1- or 3-channel images are written");
  }
  if (img.width <= 0 || img.height <= 0) throw ValidationError("png: empty image");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png: failed to allocate write struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: failed to allocate info struct");
  }
  std::vector<std::uint8_t> out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png: encode failed");
  }
  png_set_write_fn(png, &out, write_to_vector, flush_noop);
  // Fixed encoder settings keep outputs byte-stable across runs.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  int color = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(png, info, img.width, img.height, 8, color, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_bytep> rows(img.height);
  size_t stride = static_cast<size_t>(img.width) * img.channels;
  for (int y = 0; y < img.height; ++y) {
    rows[y] = const_cast<png_bytep>(img.data.data() + y * stride);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void save_png(const ImageU8& img, const std::string& path) {
  std::vector<std::uint8_t> bytes = encode_png(img);
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("png: cannot write " + path);
  size_t written = std::fwrite(bytes.data(), 1, bytes.size(), f);
  std::fclose(f);
  if (written != bytes.size()) throw IoError("png: short write to " + path);
}

ImageU8 load_mask_png(const std::string& path) {
  ImageU8 raw = load_png(path);
  ImageU8 mask(raw.width, raw.height, 1);
  for (int y = 0; y < raw.height; ++y) {
    for (int x = 0; x < raw.width; ++x) {
      std::uint8_t v = 0;
      for (int c = 0; c < raw.channels; ++c) v = std::max(v, raw.at(x, y, c));
      mask.at(x, y) = v ? 255 : 0;
    }
  }
  return mask;
}

}  // namespace sdm
