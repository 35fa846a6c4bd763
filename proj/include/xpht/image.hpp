#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace xpht {

/// Binary raster shape. `pixels` is row-major, nonzero = foreground.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    BinaryImage() = default;
    BinaryImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int c, int r) const { return pixels[static_cast<std::size_t>(r) * width + c] != 0; }
    void set(int c, int r, bool fg) {
        pixels[static_cast<std::size_t>(r) * width + c] = fg ? 1 : 0;
    }

    std::size_t foreground_count() const;

    // Grid isometries. The returned image is the rotated/mirrored pixel set,
    // re-indexed from (0, 0); see tests for the exact coordinate maps.
    BinaryImage rotated90() const;
    BinaryImage rotated180() const;
    BinaryImage rotated270() const;
    BinaryImage mirrored_columns() const;  // flip about the vertical axis
    BinaryImage mirrored_rows() const;     // flip about the horizontal axis
};

enum class Polarity { DarkForeground, LightForeground };

/// Decode a PBM (P1/P4), PGM (P2/P5) or PNG file and threshold it to a binary
/// shape. Luminance is 0.299R + 0.587G + 0.114B rounded to nearest; alpha is
/// composited over white first. Dark polarity selects luminance <= threshold,
/// light polarity luminance > threshold.
///
/// Throws std::runtime_error on undecodable bytes or an empty foreground.
BinaryImage load_binary_image(std::span<const unsigned char> bytes, Polarity polarity,
                              int luminance_threshold);

BinaryImage load_binary_image_file(const std::filesystem::path& path, Polarity polarity,
                                   int luminance_threshold);

/// Binary PGM (P5) with foreground black on white background.
std::vector<unsigned char> encode_pgm(const BinaryImage& img);
void save_pgm(const BinaryImage& img, const std::filesystem::path& path);

}  // namespace xpht
