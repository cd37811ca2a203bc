#pragma once

// Space-time diagrams as portable bitmaps. Each row is one time step; since a
// finite word loses a cell on each side per step, row k is shifted right by k
// cells so that the cells stay above the positions they came from.

#include <stdexcept>
#include <string>

#include "eca/core.hpp"

namespace eca {

enum class PbmFormat { Plain, Raw };  // P1 and P4

/// Cell (row, col) of the padded image; padding reads as background 0.
inline Cell diagram_pixel(const SpaceTimeDiagram& d, std::size_t row, std::size_t col) {
  const Word& w = d[row];
  if (col < row || col - row >= w.size()) return 0;
  return w[col - row];
}

inline std::string render_pbm(const SpaceTimeDiagram& d, PbmFormat format = PbmFormat::Plain) {
  if (d.empty() || d.front().empty()) throw std::invalid_argument("cannot render an empty diagram");
  const std::size_t width = d.front().size(), height = d.size();
  std::string out = std::string(format == PbmFormat::Plain ? "P1" : "P4") + " " + std::to_string(width) + " " +
                    std::to_string(height) + "\n";
  for (std::size_t r = 0; r < height; ++r) {
    if (format == PbmFormat::Plain) {
      for (std::size_t c = 0; c < width; ++c) {
        if (c) out += ' ';
        out += static_cast<char>('0' + diagram_pixel(d, r, c));
      }
      out += '\n';
    } else {
      // P4 packs eight pixels per byte, most significant bit first, each row
      // padded to a whole byte.
      for (std::size_t c = 0; c < width; c += 8) {
        unsigned char byte = 0;
        for (std::size_t k = 0; k < 8; ++k)
          if (c + k < width && diagram_pixel(d, r, c + k)) byte |= static_cast<unsigned char>(0x80U >> k);
        out += static_cast<char>(byte);
      }
    }
  }
  return out;
}

/// Rows as text, same layout as the image with ' ' for padding.
inline std::string render_text(const SpaceTimeDiagram& d) {
  std::string out;
  for (std::size_t r = 0; r < d.size(); ++r) out += std::string(r, ' ') + d[r].str() + "\n";
  return out;
}

}  // namespace eca
