#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mpres/degree.hpp"
#include "mpres/error.hpp"

namespace mpres {

struct Simplex {
  std::vector<std::uint32_t> vertices;  // sorted ascending
  std::vector<DegreeVec> entries;       // antichain of entry degrees
  std::size_t line = 0;                 // source line, 0 if built in code

  std::size_t dimension() const { return vertices.size() - 1; }
  /// Present at u iff some entry degree is <= u.
  bool alive_at(const DegreeVec& u) const;
};

class FiltrationError : public InvalidInput {
 public:
  enum class Kind { kSyntax, kMissingFace, kMonotonicity, kNotAntichain, kDuplicate, kDimension };

  FiltrationError(Kind kind, std::size_t line, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// A finite simplicial complex with an n-parameter filtration given by
/// per-simplex entry antichains. Simplices keep their input order.
class MultifilteredComplex {
 public:
  /// Validates faces, monotonicity and antichains; throws FiltrationError.
  MultifilteredComplex(std::size_t n, std::vector<Simplex> simplices);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  /// Largest simplex dimension, or -1 for the empty complex.
  int top_dimension() const;
  /// Indices into simplices() of the k-simplices, in input order.
  const std::vector<std::size_t>& simplices_of_dim(std::size_t k) const;
  /// Position of a simplex among the k-simplices, looked up by vertex list.
  std::size_t position_in_dim(const std::vector<std::uint32_t>& vertices) const;
  /// Join of all entry degrees (the zero vector for the empty complex).
  DegreeVec box() const;

 private:
  std::size_t n_;
  std::vector<Simplex> simplices_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> lookup_;  // sorted
};

MultifilteredComplex parse_filtration(std::string_view text);
MultifilteredComplex read_filtration_file(const std::string& path);

/// Simplices of X_u, as indices into X.simplices().
std::vector<std::size_t> complex_at(const MultifilteredComplex& X, const DegreeVec& u);

}  // namespace mpres
