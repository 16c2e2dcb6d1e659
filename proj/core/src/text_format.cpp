#include "xaax/text_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace xaax {

std::string render_grid(const Matrix& m) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::size_t width = 0;
  for (const auto& s : m.entries()) {
    cells.push_back(s.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      os << ' ' << std::string(width - cell.size(), ' ') << cell;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string render_basis(const SolutionBasis& basis) {
  std::ostringstream os;
  if (basis.spec) os << "n = " << basis.spec->n << ", mu = " << basis.spec->mu << '\n';
  os << "dimension = " << basis.dimension() << '\n';
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    os << '\n' << basis.roles[i].label() << '\n' << render_grid(basis.elements[i]);
  }
  return os.str();
}

std::string render_structure(const StructureConstants& sc) {
  std::ostringstream os;
  os << "dim = " << sc.dim() << '\n';
  for (std::size_t i = 0; i < sc.dim(); ++i) {
    for (std::size_t j = i + 1; j < sc.dim(); ++j) {
      std::string terms;
      for (std::size_t k = 0; k < sc.dim(); ++k) {
        const Scalar& c = sc(i, j, k);
        if (c.is_zero()) continue;
        if (!terms.empty()) terms += " + ";
        terms += c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
        terms += " b" + std::to_string(k);
      }
      if (terms.empty()) continue;
      os << "[b" << i << ", b" << j << "] = " << terms << '\n';
    }
  }
  return os.str();
}

}  // namespace xaax
