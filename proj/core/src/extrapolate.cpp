// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/extrapolate.hpp"

#include <stdexcept>

namespace swrt {

Extrapolation extrapolate_to_zero(const std::vector<HPReal>& t,
                                  const std::vector<HPComplex>& v, int degree) {
  if (degree < 0) throw std::invalid_argument("extrapolation degree must be nonnegative");
  if (t.size() != v.size()) throw std::invalid_argument("extrapolation sample size mismatch");
  const std::size_t m = t.size();
  if (m < static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("extrapolation needs at least degree+1 samples");
  }
  const mpfr_prec_t prec = v.front().prec();
  for (std::size_t j = 0; j < m; ++j) {
    if (!(t[j] > HPReal(0, prec))) throw std::invalid_argument("extrapolation abscissas must be positive");
    if (j + 1 < m && !(t[j + 1] < t[j])) {
      throw std::invalid_argument("extrapolation abscissas must decrease strictly");
    }
  }

  // Window of the last degree+2 samples when available (degree+1 otherwise);
  // the extra sample yields a second deepest extrapolant for the spread.
  const std::size_t w = std::min(m, static_cast<std::size_t>(degree) + 2);
  const std::size_t off = m - w;

  // row[i] holds P_{i,k}(0) over window indices; k advances each pass.
  std::vector<HPComplex> row(v.begin() + off, v.end());
  std::vector<HPComplex> prev_row;
  for (int k = 1; k <= degree; ++k) {
    prev_row = row;
    for (std::size_t i = 0; i + k < w; ++i) {
      const HPReal& ti = t[off + i];
      const HPReal& tk = t[off + i + k];
      row[i] = (row[i + 1] * ti - row[i] * tk) * (HPReal(1, prec) / (ti - tk));
    }
    row.resize(w - k);
  }

  Extrapolation out;
  if (w == static_cast<std::size_t>(degree) + 2) {
    out.value = row[1];
    out.spread = abs(row[1] - row[0]);
  } else if (degree >= 1) {
    out.value = row[0];
    out.spread = abs(row[0] - prev_row[1]);
  } else {
    out.value = row[0];
    out.spread = abs(row[0]);
  }
  return out;
}

}  // namespace swrt
