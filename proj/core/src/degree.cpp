#include "mpres/degree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mpres/error.hpp"

namespace mpres {
namespace {

void require_same_dim(const DegreeVec& u, const DegreeVec& v) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch("degree vectors " + u.to_string() + " and " + v.to_string() +
                            " have different lengths");
  }
}

}  // namespace

DegreeVec DegreeVec::step_up(std::size_t axis) const {
  DegreeVec out = *this;
  ++out.coords_.at(axis);
  return out;
}

DegreeVec DegreeVec::step_down(std::size_t axis) const {
  if (coords_.at(axis) == 0) throw InvalidInput("step_down below zero at " + to_string());
  DegreeVec out = *this;
  --out.coords_[axis];
  return out;
}

std::string DegreeVec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ' ';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

bool leq(const DegreeVec& u, const DegreeVec& v) {
  require_same_dim(u, v);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

bool lt(const DegreeVec& u, const DegreeVec& v) { return leq(u, v) && u != v; }

DegreeVec join(const DegreeVec& u, const DegreeVec& v) {
  require_same_dim(u, v);
  DegreeVec out = u;
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = std::max(u[i], v[i]);
  return out;
}

DegreeVec meet(const DegreeVec& u, const DegreeVec& v) {
  require_same_dim(u, v);
  DegreeVec out = u;
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = std::min(u[i], v[i]);
  return out;
}

DegreeVec parse_degree(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw InvalidInput("degree must look like '(a b ...)', got '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::uint32_t> coords;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
      continue;
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw InvalidInput("bad degree coordinate in '(" + std::string(text) + ")'");
    }
    coords.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (coords.empty()) throw InvalidInput("degree vector must have at least one coordinate");
  return DegreeVec(std::move(coords));
}

Grid::Grid(DegreeVec box) : box_(std::move(box)), strides_(box_.dim(), 1) {
  size_ = 1;
  for (std::size_t i = box_.dim(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(box_[i]) + 1;
  }
}

bool Grid::contains(const DegreeVec& u) const {
  return u.dim() == box_.dim() && leq(u, box_);
}

std::size_t Grid::index(const DegreeVec& u) const {
  if (!contains(u)) {
    throw DimensionMismatch("degree " + u.to_string() + " outside grid box " + box_.to_string());
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) idx += strides_[i] * u[i];
  return idx;
}

DegreeVec Grid::point(std::size_t index) const {
  DegreeVec u(box_.dim());
  for (std::size_t i = 0; i < box_.dim(); ++i) {
    u[i] = static_cast<std::uint32_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return u;
}

DegreeVec Grid::clamp(const DegreeVec& u) const {
  if (u.dim() != box_.dim()) throw DimensionMismatch("clamp: dimension mismatch");
  return meet(u, box_);
}

}  // namespace mpres
