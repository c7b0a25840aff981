#include "mpres/filtration.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mpres {
namespace {

using Kind = FiltrationError::Kind;

std::string where(std::size_t line) {
  return line ? "line " + std::to_string(line) + ": " : std::string();
}

std::string vertex_string(const std::vector<std::uint32_t>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s + "]";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    std::size_t end = pos;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
bool parse_uint(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool Simplex::alive_at(const DegreeVec& u) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const DegreeVec& e) { return leq(e, u); });
}

FiltrationError::FiltrationError(Kind kind, std::size_t line, const std::string& message)
    : InvalidInput(where(line) + message), kind_(kind), line_(line) {}

MultifilteredComplex::MultifilteredComplex(std::size_t n, std::vector<Simplex> simplices)
    : n_(n), simplices_(std::move(simplices)) {
  if (n_ == 0) throw FiltrationError(Kind::kDimension, 0, "grading dimension must be >= 1");

  for (std::size_t idx = 0; idx < simplices_.size(); ++idx) {
    Simplex& s = simplices_[idx];
    if (s.vertices.empty()) throw FiltrationError(Kind::kSyntax, s.line, "simplex without vertices");
    std::sort(s.vertices.begin(), s.vertices.end());
    if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end()) {
      throw FiltrationError(Kind::kSyntax, s.line,
                            "repeated vertex in simplex " + vertex_string(s.vertices));
    }
    if (s.entries.empty()) {
      throw FiltrationError(Kind::kNotAntichain, s.line, "simplex has no entry degree");
    }
    for (const auto& e : s.entries) {
      if (e.dim() != n_) {
        throw FiltrationError(Kind::kDimension, s.line,
                              "entry degree " + e.to_string() + " does not have length " +
                                  std::to_string(n_));
      }
    }
    for (std::size_t a = 0; a < s.entries.size(); ++a) {
      for (std::size_t b = 0; b < s.entries.size(); ++b) {
        if (a != b && leq(s.entries[a], s.entries[b])) {
          throw FiltrationError(Kind::kNotAntichain, s.line,
                                "entry degrees " + s.entries[a].to_string() + " and " +
                                    s.entries[b].to_string() + " are comparable");
        }
      }
    }
    lookup_.emplace_back(s.vertices, idx);
    const std::size_t k = s.dimension();
    if (by_dim_.size() <= k) by_dim_.resize(k + 1);
    by_dim_[k].push_back(idx);
  }

  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i) {
    if (lookup_[i].first == lookup_[i - 1].first) {
      throw FiltrationError(Kind::kDuplicate, simplices_[lookup_[i].second].line,
                            "duplicate simplex " + vertex_string(lookup_[i].first));
    }
  }

  auto find = [&](const std::vector<std::uint32_t>& vs) -> const Simplex* {
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), vs,
                               [](const auto& entry, const auto& key) { return entry.first < key; });
    if (it == lookup_.end() || it->first != vs) return nullptr;
    return &simplices_[it->second];
  };

  for (const Simplex& s : simplices_) {
    if (s.vertices.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<std::uint32_t> face = s.vertices;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      const Simplex* f = find(face);
      if (!f) {
        throw FiltrationError(Kind::kMissingFace, s.line,
                              "face " + vertex_string(face) + " of " +
                                  vertex_string(s.vertices) + " is missing");
      }
      for (const auto& u : s.entries) {
        if (!f->alive_at(u)) {
          throw FiltrationError(Kind::kMonotonicity, s.line,
                                "simplex " + vertex_string(s.vertices) + " enters at " +
                                    u.to_string() + " before its face " + vertex_string(face));
        }
      }
    }
  }
}

int MultifilteredComplex::top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

const std::vector<std::size_t>& MultifilteredComplex::simplices_of_dim(std::size_t k) const {
  static const std::vector<std::size_t> kEmpty;
  return k < by_dim_.size() ? by_dim_[k] : kEmpty;
}

std::size_t MultifilteredComplex::position_in_dim(const std::vector<std::uint32_t>& vertices) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), vertices,
                             [](const auto& entry, const auto& key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != vertices) {
    throw InvalidInput("no simplex " + vertex_string(vertices));
  }
  const auto& row = simplices_of_dim(vertices.size() - 1);
  return static_cast<std::size_t>(std::find(row.begin(), row.end(), it->second) - row.begin());
}

DegreeVec MultifilteredComplex::box() const {
  DegreeVec out(n_);
  for (const auto& s : simplices_) {
    for (const auto& e : s.entries) out = join(out, e);
  }
  return out;
}

MultifilteredComplex parse_filtration(std::string_view text) {
  std::size_t n = 0;
  std::vector<Simplex> simplices;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    auto tokens = split_ws(line);
    if (tokens[0] == "dim") {
      if (n != 0) throw FiltrationError(Kind::kSyntax, line_no, "repeated 'dim' header");
      if (tokens.size() != 2 || !parse_uint(tokens[1], n) || n == 0) {
        throw FiltrationError(Kind::kSyntax, line_no, "expected 'dim <n>' with n >= 1");
      }
    } else if (tokens[0] == "simplex") {
      if (n == 0) throw FiltrationError(Kind::kSyntax, line_no, "'simplex' before 'dim' header");
      const std::size_t at = line.find('@');
      if (at == std::string_view::npos) {
        throw FiltrationError(Kind::kSyntax, line_no, "missing '@' before entry degrees");
      }
      Simplex s;
      s.line = line_no;
      auto vtoks = split_ws(line.substr(0, at));
      for (std::size_t i = 1; i < vtoks.size(); ++i) {
        std::uint32_t v = 0;
        if (!parse_uint(vtoks[i], v)) {
          throw FiltrationError(Kind::kSyntax, line_no,
                                "bad vertex '" + std::string(vtoks[i]) + "'");
        }
        s.vertices.push_back(v);
      }
      if (s.vertices.empty()) throw FiltrationError(Kind::kSyntax, line_no, "simplex without vertices");
      std::string_view rest = line.substr(at + 1);
      std::size_t p = 0;
      while (p <= rest.size()) {
        std::size_t bar = rest.find('|', p);
        if (bar == std::string_view::npos) bar = rest.size();
        std::string_view item = trim(rest.substr(p, bar - p));
        try {
          s.entries.push_back(parse_degree(item));
        } catch (const InvalidInput& e) {
          throw FiltrationError(Kind::kSyntax, line_no, e.what());
        }
        p = bar + 1;
      }
      simplices.push_back(std::move(s));
    } else {
      throw FiltrationError(Kind::kSyntax, line_no,
                            "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (n == 0) throw FiltrationError(Kind::kSyntax, line_no, "missing 'dim <n>' header");
  return MultifilteredComplex(n, std::move(simplices));
}

MultifilteredComplex read_filtration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_filtration(buffer.str());
}

std::vector<std::size_t> complex_at(const MultifilteredComplex& X, const DegreeVec& u) {
  if (u.dim() != X.ambient_dim()) throw DimensionMismatch("complex_at: dimension mismatch");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < X.simplices().size(); ++i) {
    if (X.simplices()[i].alive_at(u)) out.push_back(i);
  }
  return out;
}

}  // namespace mpres
