#include "lagsub/exact/lattice.hpp"

#include <utility>

#include "lagsub/error.hpp"

namespace lagsub::exact {

namespace {

// Unimodular echelon reduction of the first `cols` columns; returns the number
// of pivot rows. Rows past the returned count are zero on those columns.
std::size_t echelonize(IntMatrix& m, std::size_t cols, std::vector<std::size_t>* pivots) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    // Euclid on column c among rows lead..end until a single nonzero remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = lead; r < m.size(); ++r) {
        if (sgn(m[r][c]) == 0) continue;
        if (best == m.size() || abs(m[r][c]) < abs(m[best][c])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[lead], m[best]);
      bool done = true;
      for (std::size_t r = lead + 1; r < m.size(); ++r) {
        if (sgn(m[r][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[lead][c].get_mpz_t());
        for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= q * m[lead][j];
        if (sgn(m[r][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (lead < m.size() && sgn(m[lead][c]) != 0) {
      if (sgn(m[lead][c]) < 0) {
        for (auto& e : m[lead]) e = -e;
      }
      if (pivots) pivots->push_back(c);
      ++lead;
    }
  }
  return lead;
}

}  // namespace

bool IntegerLattice::contains(const IntVec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("lattice membership: wrong length");
  IntVec r = v;
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (sgn(row[p]) == 0) ++p;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[p].get_mpz_t(), row[p].get_mpz_t());
    if (sgn(rem) != 0) return false;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= q * row[j];
  }
  for (const auto& e : r) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

IntegerLattice hnf(const IntMatrix& m, std::size_t ambient) {
  IntMatrix work = m;
  for (const auto& row : work) {
    if (row.size() != ambient) throw DimensionMismatch("hnf: row length differs from ambient");
  }
  std::vector<std::size_t> pivots;
  const std::size_t r = echelonize(work, ambient, &pivots);
  work.resize(r);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t c = pivots[k];
    for (std::size_t above = 0; above < k; ++above) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), work[above][c].get_mpz_t(), work[k][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = 0; j < ambient; ++j) work[above][j] -= q * work[k][j];
    }
  }
  IntegerLattice out(ambient);
  out.basis_ = std::move(work);
  return out;
}

IntegerLattice integer_left_kernel(const IntMatrix& m, std::size_t cols) {
  const std::size_t n = m.size();
  IntMatrix aug(n, IntVec(cols + n));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != cols) throw DimensionMismatch("integer_left_kernel: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = m[r][c];
    aug[r][cols + r] = 1;
  }
  const std::size_t lead = echelonize(aug, cols, nullptr);
  IntMatrix kernel;
  for (std::size_t r = lead; r < n; ++r) kernel.emplace_back(aug[r].begin() + cols, aug[r].end());
  return hnf(kernel, n);
}

std::string to_string(const IntegerLattice& l) {
  std::string s = "[";
  for (std::size_t r = 0; r < l.basis().size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < l.ambient(); ++c) {
      if (c) s += ",";
      s += l.basis()[r][c].get_str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace lagsub::exact
