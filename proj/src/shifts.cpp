#include "klcy/shifts.hpp"

#include <algorithm>
#include <sstream>

#include "klcy/errors.hpp"

namespace klcy {

ShiftData ShiftData::type_a(const CoxeterGroup& g) {
  if (!g.is_type_a())
    throw DomainError("shape-based shift data needs a type-A group");
  ShiftData sd;
  sd.g_ = &g;
  for (Element w : g.elements()) {
    if (g.multiply(w, w) != g.identity()) continue;
    Partition lam = rs_shape(g, w);
    sd.duflo_.push_back(w);
    sd.a_.emplace_back(shape_a(lam), shape_a(w0_shape(lam)));
  }
  // elements() is sorted, so duflo_ already is
  return sd;
}

ShiftData ShiftData::from_cells(const CellData& cd) {
  const CoxeterGroup& g = cd.hecke().group();
  ShiftData sd;
  sd.g_ = &g;
  sd.duflo_ = cd.duflo().duflo;
  for (Element d : sd.duflo_)
    sd.a_.emplace_back(cd.a(d), cd.a(g.w0_mult(d)));
  return sd;
}

bool ShiftData::is_duflo(Element d) const {
  return std::binary_search(duflo_.begin(), duflo_.end(), d);
}

CYShift ShiftData::shift_of(Element d) const {
  auto it = std::lower_bound(duflo_.begin(), duflo_.end(), d);
  if (it == duflo_.end() || *it != d)
    throw NotDuflo("shift_of: " + g_->name(d) + " is not a Duflo involution");
  auto [ad, aw0d] = a_[static_cast<std::size_t>(it - duflo_.begin())];
  return CYShift{d, 2 * aw0d, 2 * (ad - aw0d)};
}

std::vector<long long> ShiftData::admissible_dims() const {
  std::vector<long long> dims;
  dims.reserve(a_.size());
  for (const auto& [ad, aw0d] : a_) dims.push_back(2 * aw0d);
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  return dims;
}

std::vector<ShiftDot> figure1_coordinates(int n) {
  if (n < 1) throw DomainError("figure1_coordinates: n must be >= 1");
  std::vector<ShiftDot> dots;
  for (const Partition& lam : all_partitions(n)) {
    long long a = shape_a(lam);
    long long at = shape_a(lam.transpose());
    dots.push_back(ShiftDot{lam, 2 * a, 2 * (at - a)});
  }
  return dots;
}

std::string figure1_svg(int n) {
  const auto dots = figure1_coordinates(n);
  long long hom_max = 0, grade_max = 0, grade_min = 0;
  for (const auto& d : dots) {
    hom_max = std::max(hom_max, d.hom_shift);
    grade_max = std::max(grade_max, d.grade_shift);
    grade_min = std::min(grade_min, d.grade_shift);
  }
  // a little margin in data units so dots and arrows stay inside
  const long long hx = hom_max + 4;
  const long long gy_top = grade_max + 4;
  const long long gy_bot = grade_min - 4;

  const long long scale = 12;
  const long long pad = 60;
  // homological axis increases to the LEFT, grading increases UP
  auto X = [&](long long hom) { return pad + scale * (hx - hom); };
  auto Y = [&](long long grade) { return pad + scale * (gy_top - grade); };
  const long long width = X(-2) + pad;
  const long long height = Y(gy_bot) + pad;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
    << height << "\">\n";
  s << "<rect width=\"" << width << "\" height=\"" << height
    << "\" fill=\"white\"/>\n";

  // axes through the origin
  s << "<g stroke=\"black\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << X(-2) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(hx)
    << "\" y2=\"" << Y(0) << "\"/>\n";
  s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(gy_bot) << "\" x2=\"" << X(0)
    << "\" y2=\"" << Y(gy_top) << "\"/>\n";
  // arrowheads: homological axis points left, grading axis points up
  s << "<path d=\"M " << X(hx) << " " << Y(0) << " l 8 -4 l 0 8 z\" fill=\"black\"/>\n";
  s << "<path d=\"M " << X(0) << " " << Y(gy_top) << " l -4 8 l 8 0 z\" fill=\"black\"/>\n";
  s << "</g>\n";

  // ticks every 2 units, numbers every other tick
  s << "<g stroke=\"black\" stroke-width=\"1\" font-size=\"10\" "
       "font-family=\"sans-serif\">\n";
  for (long long h = 2; h <= hom_max; h += 2) {
    s << "<line x1=\"" << X(h) << "\" y1=\"" << Y(0) - 3 << "\" x2=\"" << X(h)
      << "\" y2=\"" << Y(0) + 3 << "\"/>\n";
    if (h % 4 == 0)
      s << "<text x=\"" << X(h) - 6 << "\" y=\"" << Y(0) + 16
        << "\" stroke=\"none\">" << h << "</text>\n";
  }
  for (long long gr = gy_bot + 4; gr <= grade_max; gr += 2) {
    if (gr == 0) continue;
    s << "<line x1=\"" << X(0) - 3 << "\" y1=\"" << Y(gr) << "\" x2=\""
      << X(0) + 3 << "\" y2=\"" << Y(gr) << "\"/>\n";
    if (gr % 4 == 0)
      s << "<text x=\"" << X(0) + 8 << "\" y=\"" << Y(gr) + 4
        << "\" stroke=\"none\">" << gr << "</text>\n";
  }
  s << "</g>\n";

  // axis names
  s << "<text x=\"" << X(hx) - 4 << "\" y=\"" << Y(0) - 10
    << "\" font-size=\"12\" font-family=\"sans-serif\">homological shift</text>\n";
  s << "<text x=\"" << X(0) + 10 << "\" y=\"" << Y(gy_top) + 6
    << "\" font-size=\"12\" font-family=\"sans-serif\">grading shift</text>\n";

  // dots with partition labels
  for (const auto& d : dots) {
    s << "<circle cx=\"" << X(d.hom_shift) << "\" cy=\"" << Y(d.grade_shift)
      << "\" r=\"5\" fill=\"magenta\"/>\n";
    s << "<text x=\"" << X(d.hom_shift) + 8 << "\" y=\""
      << Y(d.grade_shift) - 6 << "\" font-size=\"11\" "
      << "font-family=\"sans-serif\">" << d.cell.str() << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

} // namespace klcy
