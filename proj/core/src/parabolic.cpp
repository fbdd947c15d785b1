#include "lagsub/roots/parabolic.hpp"

#include <algorithm>
#include <set>

#include "lagsub/error.hpp"
#include "lagsub/exact/matrix.hpp"

namespace lagsub::roots {

bool is_closed(const RootSystem& r, const RootSubset& s) {
  std::vector<char> in(r.size(), 0);
  for (int i : s) in[i] = 1;
  for (int a : s) {
    for (int b : s) {
      const int c = r.sum_index(a, b);
      if (c >= 0 && !in[c]) return false;
    }
  }
  return true;
}

bool is_symmetric(const RootSystem& r, const RootSubset& s) {
  return std::all_of(s.begin(), s.end(), [&](int i) {
    return std::binary_search(s.begin(), s.end(), r.negative(i));
  });
}

bool is_parabolic(const RootSystem& r, const RootSubset& p) {
  std::vector<char> in(r.size(), 0);
  for (int i : p) in[i] = 1;
  for (int i = 0; i < r.size(); ++i) {
    if (!in[i] && !in[r.negative(i)]) return false;
  }
  return is_closed(r, p);
}

RootSubset levi_part(const RootSystem& r, const RootSubset& p) {
  RootSubset a;
  for (int i : p) {
    if (std::binary_search(p.begin(), p.end(), r.negative(i))) a.push_back(i);
  }
  return a;
}

RootSubset standard_parabolic(const RootSystem& r, const std::vector<int>& simple) {
  std::vector<char> allowed(r.rank(), 0);
  for (int s : simple) allowed[s] = 1;
  RootSubset p;
  for (int i = 0; i < r.size(); ++i) {
    if (r.is_positive(i)) {
      p.push_back(i);
      continue;
    }
    bool supported = true;
    for (int k = 0; k < r.rank(); ++k) {
      if (r.root(i)[k] != 0 && !allowed[k]) supported = false;
    }
    if (supported) p.push_back(i);
  }
  return p;
}

RootSubset apply(const WeylElement& w, const RootSubset& s) {
  RootSubset out;
  out.reserve(s.size());
  for (int i : s) out.push_back(w.perm[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootSubset> enumerate_parabolic_subsets(const RootSystem& r) {
  if (r.rank() > 4) throw RankCapExceeded("parabolic enumeration is capped at rank 4");
  std::set<RootSubset> found;
  const auto& weyl = r.weyl_group();
  for (unsigned mask = 0; mask < (1u << r.rank()); ++mask) {
    std::vector<int> simple;
    for (int k = 0; k < r.rank(); ++k) {
      if (mask & (1u << k)) simple.push_back(k);
    }
    const RootSubset p = standard_parabolic(r, simple);
    for (const auto& w : weyl) found.insert(apply(w, p));
  }
  return {found.begin(), found.end()};
}

RootSubset simple_system(const RootSystem& r, const RootSubset& s) {
  RootSubset pos;
  for (int i : s) {
    if (r.is_positive(i)) pos.push_back(i);
  }
  RootSubset out;
  for (int a : pos) {
    bool decomposable = false;
    for (int b : pos) {
      const int c = r.sum_index(a, r.negative(b));
      if (c >= 0 && std::binary_search(pos.begin(), pos.end(), c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

int reflect_by(const RootSystem& r, int beta, int gamma) {
  const int p = r.pairing(gamma, beta);
  RootVec v = r.root(gamma);
  for (int k = 0; k < r.rank(); ++k) v[k] -= p * r.root(beta)[k];
  return r.index_of(v);
}

int span_rank(const RootSystem& r, const RootSubset& s) {
  exact::Matrix m(0, r.rank());
  for (int i : s) {
    exact::Vec v;
    for (int c : r.root(i)) v.emplace_back(static_cast<long>(c));
    m.append_row(v);
  }
  return static_cast<int>(exact::rank(m));
}

}  // namespace lagsub::roots
