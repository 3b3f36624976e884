#include "newtres/svg.hpp"

#include "newtres/format.hpp"

namespace newtres {

SvgWriter::SvgWriter(std::ostream& out, double width, double height) : out_(out) {
  out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width)
       << "\" height=\"" << format_double(height) << "\" viewBox=\"0 0 "
       << format_double(width) << " " << format_double(height) << "\">\n";
}

SvgWriter::~SvgWriter() {
  if (!closed_) out_ << "</svg>\n";
}

void SvgWriter::rect(double x, double y, double w, double h, std::string_view fill) {
  out_ << "<rect x=\"" << format_double(x) << "\" y=\"" << format_double(y) << "\" width=\""
       << format_double(w) << "\" height=\"" << format_double(h) << "\" fill=\"" << fill
       << "\"/>\n";
}

void SvgWriter::path(const std::string& d, std::string_view fill) {
  out_ << "<path d=\"" << d << "\" fill=\"" << fill << "\"/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2, std::string_view stroke,
                     double stroke_width) {
  out_ << "<line x1=\"" << format_double(x1) << "\" y1=\"" << format_double(y1) << "\" x2=\""
       << format_double(x2) << "\" y2=\"" << format_double(y2) << "\" stroke=\"" << stroke
       << "\" stroke-width=\"" << format_double(stroke_width) << "\"/>\n";
}

}  // namespace newtres
