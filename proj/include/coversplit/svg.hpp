#pragma once

// Deterministic SVG rendering of realizations and extended point sets:
// disks as stroked circles, points as dots, the construction boxes as dashed
// rectangles. Output is byte-stable for golden tests (fixed precision, fixed
// element order, no timestamps).

#include "coversplit/extension.hpp"

#include <sstream>
#include <string>

namespace coversplit {

namespace detail {

// y is flipped: SVG grows downward.
inline void svg_circle(std::ostream& os, const Rational& scale, const RationalPoint& c,
                       const std::string& r, const char* cls, const char* style) {
    os << "  <circle class=\"" << cls << "\" cx=\"" << rational_to_decimal(c.x * scale, 3)
       << "\" cy=\"" << rational_to_decimal(-c.y * scale, 3) << "\" r=\"" << r << "\" " << style
       << "/>\n";
}

inline void svg_rect(std::ostream& os, const Rational& scale, const Rect& box,
                     const char* style) {
    os << "  <rect x=\"" << rational_to_decimal(box.x0 * scale, 3) << "\" y=\""
       << rational_to_decimal(-box.y1 * scale, 3) << "\" width=\""
       << rational_to_decimal((box.x1 - box.x0) * scale, 3) << "\" height=\""
       << rational_to_decimal((box.y1 - box.y0) * scale, 3) << "\" " << style << "/>\n";
}

inline void svg_open(std::ostream& os, const Rational& scale, const Rect& view) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << rational_to_decimal(view.x0 * scale, 3) << " "
       << rational_to_decimal(-view.y1 * scale, 3) << " "
       << rational_to_decimal((view.x1 - view.x0) * scale, 3) << " "
       << rational_to_decimal((view.y1 - view.y0) * scale, 3) << "\">\n";
}

constexpr const char* kDiskStyleRed = "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.5%\"";
constexpr const char* kDiskStyleBlue = "fill=\"none\" stroke=\"#2e6da4\" stroke-width=\"0.5%\"";
constexpr const char* kPointStyle = "fill=\"#111\"";
constexpr const char* kExtraStyle = "fill=\"#999\"";
constexpr const char* kBoxStyle =
    "fill=\"none\" stroke=\"#777\" stroke-width=\"0.25%\" stroke-dasharray=\"4 3\"";

inline void svg_realization_body(std::ostream& os, const Realization& r, const Rational& scale) {
    const Rational eps = r.eps, eps2 = r.eps * r.eps;
    svg_rect(os, scale, {-eps, -eps2, eps, eps2}, kBoxStyle);
    svg_rect(os, scale, {-eps, 1 - eps2, eps, 1 + eps2}, kBoxStyle);
    svg_rect(os, scale, {-eps, -1 - eps2, eps, -1 + eps2}, kBoxStyle);
    for (const auto& d : r.disks)
        svg_circle(os, scale, d.center, rational_to_decimal(scale, 3), "disk",
                   d.klass == Color::Red ? kDiskStyleRed : kDiskStyleBlue);
    const std::string pr = rational_to_decimal(scale / 200, 3);
    for (const auto& p : r.points) svg_circle(os, scale, p, pr, "pt", kPointStyle);
}

}  // namespace detail

inline std::string svg_realization(const Realization& r, const Rational& scale) {
    std::ostringstream os;
    Rect view{Rational(-13, 10), Rational(-23, 10), Rational(13, 10), Rational(23, 10)};
    detail::svg_open(os, scale, view);
    detail::svg_realization_body(os, r, scale);
    os << "</svg>\n";
    return os.str();
}

inline std::string svg_extended(const ExtendedPointSet& e, const Rational& scale) {
    std::ostringstream os;
    detail::svg_open(os, scale, e.bounding_box);
    const std::string gr = rational_to_decimal(scale / 300, 3);
    for (const auto& p : e.extra_points) detail::svg_circle(os, scale, p, gr, "extra",
                                                            detail::kExtraStyle);
    detail::svg_realization_body(os, e.base, scale);
    os << "</svg>\n";
    return os.str();
}

}  // namespace coversplit
