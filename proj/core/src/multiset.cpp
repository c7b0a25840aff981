#include "mpres/multiset.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "mpres/error.hpp"

namespace mpres {

Multiset::Multiset(std::size_t n,
                   std::initializer_list<std::pair<DegreeVec, std::size_t>> entries)
    : n_(n) {
  for (const auto& [v, count] : entries) add(v, count);
}

void Multiset::add(const DegreeVec& v, std::size_t count) {
  if (v.dim() != n_) {
    throw DimensionMismatch("degree " + v.to_string() + " does not have length " +
                            std::to_string(n_));
  }
  if (count == 0) return;
  entries_[v] += count;
}

std::size_t Multiset::multiplicity(const DegreeVec& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

std::size_t Multiset::size() const {
  std::size_t total = 0;
  for (const auto& [v, count] : entries_) total += count;
  return total;
}

std::vector<DegreeVec> Multiset::support() const {
  std::vector<DegreeVec> out;
  out.reserve(entries_.size());
  for (const auto& [v, count] : entries_) out.push_back(v);
  return out;
}

std::string Multiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, count] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << v.to_string() << ':' << count;
  }
  os << '}';
  return os.str();
}

bool dominates(const Multiset& xi1, const Multiset& xi0) {
  if (xi1.ambient_dim() != xi0.ambient_dim()) {
    throw DimensionMismatch("dominates: multisets live in different dimensions");
  }
  for (const auto& [v, mv] : xi1) {
    for (const auto& [w, mw] : xi0) {
      if (!lt(w, v)) return false;
    }
  }
  return true;
}

std::size_t graded_dim(const Multiset& xi, const DegreeVec& v) {
  if (v.dim() != xi.ambient_dim()) throw DimensionMismatch("graded_dim: dimension mismatch");
  std::size_t total = 0;
  for (const auto& [w, count] : xi) {
    if (leq(w, v)) total += count;
  }
  return total;
}

Multiset parse_multiset(std::string_view text, std::size_t n_if_empty) {
  auto skip_ws = [&](std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::size_t pos = 0;
  skip_ws(pos);
  if (pos >= text.size() || text[pos] != '{') {
    throw InvalidInput("multiset must start with '{': '" + std::string(text) + "'");
  }
  ++pos;
  std::vector<std::pair<DegreeVec, std::size_t>> items;
  for (;;) {
    skip_ws(pos);
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      break;
    }
    if (pos >= text.size() || text[pos] != '(') {
      throw InvalidInput("expected '(' in multiset '" + std::string(text) + "'");
    }
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidInput("unterminated degree in multiset");
    DegreeVec v = parse_degree(text.substr(pos, close - pos + 1));
    pos = close + 1;
    skip_ws(pos);
    std::size_t count = 1;
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      skip_ws(pos);
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), count);
      if (ec != std::errc() || count == 0) {
        throw InvalidInput("bad multiplicity in multiset '" + std::string(text) + "'");
      }
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    items.emplace_back(std::move(v), count);
    skip_ws(pos);
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  skip_ws(pos);
  if (pos != text.size()) throw InvalidInput("trailing characters after multiset");
  const std::size_t n = items.empty() ? n_if_empty : items.front().first.dim();
  if (n == 0) throw InvalidInput("cannot infer the dimension of an empty multiset");
  Multiset xi(n);
  for (const auto& [v, count] : items) xi.add(v, count);
  return xi;
}

}  // namespace mpres
