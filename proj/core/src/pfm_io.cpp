#include "sdm/pfm_io.hpp"

#include <cstdio>
#include <cstring>

namespace sdm {

void save_pfm(const ImageF& img, const std::string& path) {
  if (img.channels != 1 && img.channels != 3) {
    throw ValidationError("pfm: only 1- or 3-channel images");
  }
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("pfm: cannot write " + path);
  std::fprintf(f, "%s\n%d %d\n-1.0\n", img.channels == 1 ? "Pf" : "PF", img.width, img.height);
  size_t stride = static_cast<size_t>(img.width) * img.channels;
  for (int y = img.height - 1; y >= 0; --y) {
    if (std::fwrite(img.data.data() + static_cast<size_t>(y) * stride, sizeof(float), stride, f) !=
        stride) {
      std::fclose(f);
      throw IoError("pfm: short write to " + path);
    }
  }
  std::fclose(f);
}

ImageF load_pfm(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("pfm: cannot open " + path);
  char magic[3] = {0};
  int width = 0, height = 0;
  double scale = 0.0;
  if (std::fscanf(f, "%2s %d %d %lf", magic, &width, &height, &scale) != 4) {
    std::fclose(f);
    throw ParseError("pfm: malformed header in " + path);
  }
  int channels;
  if (std::strcmp(magic, "Pf") == 0) {
    channels = 1;
  } else if (std::strcmp(magic, "PF") == 0) {
    channels = 3;
  } else {
    std::fclose(f);
    throw ParseError("pfm: bad magic in " + path);
  }
  if (width <= 0 || height <= 0) {
    std::fclose(f);
    throw ParseError("pfm: bad dimensions in " + path);
  }
  if (scale > 0) {
    std::fclose(f);
    throw ParseError("pfm: big-endian files are not supported (" + path + ")");
  }
  std::fgetc(f);  // single whitespace after the scale
  ImageF img(width, height, channels);
  size_t stride = static_cast<size_t>(width) * channels;
  for (int y = height - 1; y >= 0; --y) {
    if (std::fread(img.data.data() + static_cast<size_t>(y) * stride, sizeof(float), stride, f) !=
        stride) {
      std::fclose(f);
      throw ParseError("pfm: truncated data in " + path);
    }
  }
  std::fclose(f);
  return img;
}

}  // namespace sdm
