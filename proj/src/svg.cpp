#include "netocc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netocc/io.hpp"

namespace netocc {

namespace {

constexpr int kCell = 80;
constexpr int kMarginLeft = 90;
constexpr int kMarginTop = 60;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Diverging blue-white-red scale, symmetric about 0.
std::string diverging_color(double v, double vmax) {
  double t = vmax > 0.0 ? std::clamp(v / vmax, -1.0, 1.0) : 0.0;
  int r, g, b;
  if (t >= 0.0) {
    r = static_cast<int>(std::lround(245 - t * 30));
    g = static_cast<int>(std::lround(240 - t * 205));
    b = static_cast<int>(std::lround(245 - t * 197));
  } else {
    r = static_cast<int>(std::lround(245 + t * 189));
    g = static_cast<int>(std::lround(240 + t * 126));
    b = static_cast<int>(std::lround(245 + t * 65));
  }
  std::ostringstream oss;
  oss << "rgb(" << r << "," << g << "," << b << ")";
  return oss.str();
}

std::string header(int width, int height) {
  std::ostringstream oss;
  oss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  return oss.str();
}

}  // namespace

std::string svg_heatmap(const Eigen::MatrixXd& m,
                        const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        const std::string& title) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int width = kMarginLeft + cols * kCell + 20;
  const int height = kMarginTop + rows * kCell + 20;
  double vmax = m.cwiseAbs().maxCoeff();

  std::ostringstream oss;
  oss << header(width, height);
  oss << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">"
      << escape(title) << "</text>\n";
  for (int j = 0; j < cols; ++j) {
    oss << "<text x=\"" << kMarginLeft + j * kCell + kCell / 2 << "\" y=\""
        << kMarginTop - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << escape(col_labels[j]) << "</text>\n";
  }
  for (int i = 0; i < rows; ++i) {
    oss << "<text x=\"" << kMarginLeft - 8 << "\" y=\""
        << kMarginTop + i * kCell + kCell / 2 + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << escape(row_labels[i]) << "</text>\n";
    for (int j = 0; j < cols; ++j) {
      int x = kMarginLeft + j * kCell;
      int y = kMarginTop + i * kCell;
      oss << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\""
          << diverging_color(m(i, j), vmax)
          << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
      oss << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"12\">"
          << format_number(m(i, j)) << "</text>\n";
    }
  }
  oss << "</svg>\n";
  return oss.str();
}

std::string svg_bar_chart(const Eigen::MatrixXd& m,
                          const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels,
                          const std::string& title) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int bar_w = 34;
  const int group_gap = 30;
  const int plot_h = 260;
  const int width =
      kMarginLeft + rows * (cols * bar_w + group_gap) + 20;
  const int height = kMarginTop + plot_h + 70;
  double vmax = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  const double zero_y = kMarginTop + plot_h / 2.0;
  const double scale = (plot_h / 2.0 - 10.0) / vmax;

  std::ostringstream oss;
  oss << header(width, height);
  oss << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">"
      << escape(title) << "</text>\n";
  oss << "<line x1=\"" << kMarginLeft - 10 << "\" y1=\"" << zero_y
      << "\" x2=\"" << width - 10 << "\" y2=\"" << zero_y
      << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  for (int i = 0; i < rows; ++i) {
    int gx = kMarginLeft + i * (cols * bar_w + group_gap);
    oss << "<text x=\"" << gx + cols * bar_w / 2 << "\" y=\""
        << kMarginTop + plot_h + 40
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << escape(row_labels[i]) << "</text>\n";
    for (int j = 0; j < cols; ++j) {
      double v = m(i, j);
      double h = std::abs(v) * scale;
      double y = v >= 0.0 ? zero_y - h : zero_y;
      int x = gx + j * bar_w;
      oss << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w - 6
          << "\" height=\"" << h << "\" fill=\""
          << (v >= 0.0 ? "#3b6fb5" : "#c14f4f") << "\"/>\n";
      oss << "<text x=\"" << x + (bar_w - 6) / 2 << "\" y=\""
          << (v >= 0.0 ? y - 4 : y + h + 12)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"10\">"
          << escape(col_labels[j]) << " " << format_number(v) << "</text>\n";
    }
  }
  oss << "</svg>\n";
  return oss.str();
}

}  // namespace netocc
