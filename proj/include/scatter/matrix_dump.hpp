// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "scatter/errors.hpp"
#include "scatter/format.hpp"
#include "scatter/so31.hpp"

// Text dump of the generator matrices of a TruncatedRep.
//
//   # scatter-matrix-dump 1
//   # tau <tau>
//   # lambda 0
//   # l_max <l_max>
//   # dimension <(l_max+1)^2>
//   # basis flat = l*l + l + mu
//   @ <name>                  one section per generator: L3 L+ L- N3 N+ N-
//   <row> <col> <re> <im>     non-zero entries only, column-major order
//
// Numbers carry 17 significant digits, so a dump reads back bit-exactly.

namespace scatter {

inline void write_matrix_dump(std::ostream& os, const TruncatedRep& rep) {
  os << "# scatter-matrix-dump 1\n"
     << "# tau " << format_double(rep.label().tau) << '\n'
     << "# lambda " << format_double(rep.label().lambda()) << '\n'
     << "# l_max " << rep.l_max() << '\n'
     << "# dimension " << rep.dimension() << '\n'
     << "# basis flat = l*l + l + mu\n";
  for (Generator g : kAllGenerators) {
    os << "@ " << generator_name(g) << '\n';
    const ComplexMatrix& m = rep.generator(g);
    for (int c = 0; c < m.cols(); ++c) {
      for (int r = 0; r < m.rows(); ++r) {
        const Complex v = m(r, c);
        if (v == Complex{}) continue;
        os << r << ' ' << c << ' ' << format_double(v.real()) << ' ' << format_double(v.imag())
           << '\n';
      }
    }
  }
}

struct MatrixDump {
  double tau{0};
  int l_max{0};
  int dimension{0};
  std::map<std::string, ComplexMatrix> matrices;
};

inline MatrixDump read_matrix_dump(std::istream& is) {
  MatrixDump dump;
  std::string line;
  ComplexMatrix* current = nullptr;
  auto fail = [](const std::string& why) { throw DomainError("read_matrix_dump: " + why); };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, key, value;
      ls >> hash >> key >> value;
      if (key == "tau" && !parse_double(value, dump.tau)) fail("bad tau");
      if (key == "l_max") dump.l_max = std::stoi(value);
      if (key == "dimension") dump.dimension = std::stoi(value);
    } else if (line[0] == '@') {
      std::string at, name;
      ls >> at >> name;
      if (dump.dimension <= 0) fail("section before dimension header");
      current = &dump.matrices[name];
      *current = ComplexMatrix::Zero(dump.dimension, dump.dimension);
    } else {
      if (current == nullptr) fail("entry outside a section");
      int r = -1, c = -1;
      std::string re, im;
      ls >> r >> c >> re >> im;
      double vr = 0, vi = 0;
      if (r < 0 || c < 0 || r >= dump.dimension || c >= dump.dimension ||
          !parse_double(re, vr) || !parse_double(im, vi)) {
        fail("malformed entry: " + line);
      }
      (*current)(r, c) = Complex{vr, vi};
    }
  }
  return dump;
}

}  // namespace scatter
