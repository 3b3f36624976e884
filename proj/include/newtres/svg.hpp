#pragma once

#include <ostream>
#include <string>
#include <string_view>

namespace newtres {

/// Minimal SVG writer: fixed header, paths and rects only, numbers printed
/// as shortest round-trip decimals. Output bytes depend only on the calls
/// made, never on locale or environment.
class SvgWriter {
 public:
  SvgWriter(std::ostream& out, double width, double height);
  ~SvgWriter();

  SvgWriter(const SvgWriter&) = delete;
  SvgWriter& operator=(const SvgWriter&) = delete;

  void rect(double x, double y, double w, double h, std::string_view fill);
  /// Raw path data with a solid fill and no stroke.
  void path(const std::string& d, std::string_view fill);
  void line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double stroke_width);

 private:
  std::ostream& out_;
  bool closed_ = false;
};

}  // namespace newtres
