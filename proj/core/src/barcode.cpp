#include "mpres/barcode.hpp"

#include <algorithm>
#include <sstream>

#include "mpres/error.hpp"
#include "mpres/linalg.hpp"

namespace mpres {
namespace {

void require_one_parameter(std::size_t n) {
  if (n != 1) throw InvalidInput("barcodes are defined for one-parameter modules only");
}

DegreeVec at(std::uint32_t t) { return DegreeVec{t}; }

}  // namespace

std::string Bar::to_string() const {
  return "[" + std::to_string(birth) + "," + (death ? std::to_string(*death) : "inf") + ")";
}

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  for (const Bar& b : bars_) {
    if (b.death && *b.death <= b.birth) throw InvalidInput("empty bar " + b.to_string());
  }
  std::sort(bars_.begin(), bars_.end());
}

std::string Barcode::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < bars_.size(); ++i) os << (i ? ", " : "") << bars_[i].to_string();
  os << '}';
  return os.str();
}

Barcode barcode(const PersistenceModule& M) {
  require_one_parameter(M.ambient_dim());
  const Field field = M.field();
  const std::uint32_t top = M.box()[0];

  // Current basis of M_t, oldest first, with the birth of each vector.
  std::vector<Vec> basis;
  std::vector<std::uint32_t> births;
  std::vector<Bar> bars;
  auto complete = [&](std::uint32_t t) {
    const std::size_t d = M.dim(at(t));
    EchelonBasis span(field, d);
    for (const Vec& b : basis) span.insert(b);
    for (std::size_t c = 0; c < d && span.dim() < d; ++c) {
      Vec e = unit_vec(field, d, c);
      if (span.insert(e)) {
        basis.push_back(std::move(e));
        births.push_back(t);
      }
    }
  };

  complete(0);
  for (std::uint32_t t = 0; t < top; ++t) {
    const DenseMatrix s = M.step(at(t), 0);
    EchelonBasis span(field, s.rows());
    std::vector<Vec> next;
    std::vector<std::uint32_t> next_births;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Vec image = s * basis[k];
      if (span.insert(image)) {
        next.push_back(std::move(image));
        next_births.push_back(births[k]);
      } else {
        bars.push_back({births[k], t + 1});
      }
    }
    basis = std::move(next);
    births = std::move(next_births);
    complete(t + 1);
  }
  for (std::uint32_t b : births) bars.push_back({b, std::nullopt});
  return Barcode(std::move(bars));
}

RankInvariant rank_from_barcode(const Barcode& B, std::uint32_t top) {
  RankInvariant::Table table;
  for (std::uint32_t u = 0; u <= top; ++u) {
    std::size_t dim = 0;
    for (const Bar& b : B.bars()) dim += b.contains(u) ? 1 : 0;
    for (std::uint32_t v = u; v <= top; ++v) {
      std::size_t rank = 0;
      for (const Bar& b : B.bars()) rank += (b.contains(u) && b.contains(v)) ? 1 : 0;
      table.emplace(std::make_pair(at(u), at(v)), RankEntry{rank, dim});
    }
  }
  return RankInvariant(at(top), std::move(table));
}

Barcode barcode_from_rank(const RankInvariant& R) {
  require_one_parameter(R.ambient_dim());
  const std::uint32_t top = R.box()[0];
  for (std::uint32_t u = 0; u <= top; ++u) {
    if (R.rank(at(u), at(u)) != R.dim(at(u))) {
      throw InvalidInput("rank(" + std::to_string(u) + "," + std::to_string(u) + ") != dim(" +
                         std::to_string(u) + ")");
    }
  }
  // r(u, v) for u <= v, with r(-1, v) = 0 and r(u, u - 1) read as r(u, u).
  auto r = [&](std::int64_t u, std::int64_t v) -> std::int64_t {
    if (u < 0) return 0;
    return static_cast<std::int64_t>(R.rank(at(static_cast<std::uint32_t>(u)),
                                            at(static_cast<std::uint32_t>(std::max(u, v)))));
  };
  auto pair_name = [](std::int64_t u, std::int64_t v) {
    return "rank(" + std::to_string(u) + "," + std::to_string(v) + ")";
  };

  std::vector<Bar> bars;
  for (std::int64_t b = 0; b <= top; ++b) {
    // Bars born at b that die at d: the drop in rank from d-1 to d among
    // classes born by b, minus the same drop among classes born by b-1.
    for (std::int64_t d = b + 1; d <= top + 1; ++d) {
      std::int64_t count;
      std::string inequality;
      if (d <= top) {
        count = (r(b, d - 1) - r(b, d)) - (r(b - 1, d - 1) - r(b - 1, d));
        inequality = pair_name(b, d - 1) + " - " + pair_name(b, d) + " >= " +
                     pair_name(b - 1, d - 1) + " - " + pair_name(b - 1, d);
      } else {
        count = r(b, top) - r(b - 1, top);
        inequality = pair_name(b, top) + " >= " + pair_name(b - 1, top);
      }
      if (count < 0) throw InvalidInput("rank table violates " + inequality);
      for (std::int64_t k = 0; k < count; ++k) {
        bars.push_back({static_cast<std::uint32_t>(b),
                        d <= top ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(d))
                                 : std::nullopt});
      }
    }
  }
  Barcode out(std::move(bars));
  if (!(rank_from_barcode(out, top) == R)) {
    throw InvalidInput("rank table is not realized by any barcode");
  }
  return out;
}

}  // namespace mpres
