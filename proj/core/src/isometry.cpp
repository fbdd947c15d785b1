#include "lagsub/roots/isometry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lagsub/error.hpp"
#include "lagsub/exact/matrix.hpp"
#include "lagsub/roots/parabolic.hpp"

namespace lagsub::roots {

namespace {

bool contains(const RootSubset& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

// Coefficients of each root of A in the basis `simple` (rows: roots of A).
std::vector<std::vector<mpq_class>> coefficients(const RootSystem& r, const RootSubset& a,
                                                 const RootSubset& simple) {
  const std::size_t k = simple.size();
  exact::Matrix m(r.rank(), k);
  for (std::size_t j = 0; j < k; ++j) {
    for (int t = 0; t < r.rank(); ++t) m(t, j) = static_cast<long>(r.root(simple[j])[t]);
  }
  std::vector<std::vector<mpq_class>> out;
  for (int i : a) {
    exact::Vec b;
    for (int t = 0; t < r.rank(); ++t) b.emplace_back(static_cast<long>(r.root(i)[t]));
    const auto sol = exact::solve(m, b);
    if (!sol) throw Error("internal: root outside the span of its simple system");
    std::vector<mpq_class> c;
    for (const auto& s : *sol) c.push_back(s.as_rational());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

int RootIsometry::preimage(int j) const {
  for (int i : source) {
    if (image[i] == j) return i;
  }
  return -1;
}

RootIsometry identity_isometry(const RootSystem& r, const RootSubset& a) {
  RootIsometry s;
  s.source = a;
  s.target = a;
  s.image.assign(r.size(), -1);
  for (int i : a) s.image[i] = i;
  return s;
}

bool extend_isometry(const RootSystem& r, const RootSubset& a, const RootSubset& a_prime,
                     const std::vector<int>& simple_images, RootIsometry& out) {
  if (a.size() != a_prime.size()) return false;
  const RootSubset simple = simple_system(r, a);
  if (simple.size() != simple_images.size()) return false;
  const auto coeff = coefficients(r, a, simple);
  out.source = a;
  out.target = a_prime;
  out.image.assign(r.size(), -1);
  std::set<int> hit;
  for (std::size_t n = 0; n < a.size(); ++n) {
    RatVec v(r.rank(), 0);
    for (std::size_t j = 0; j < simple.size(); ++j) {
      for (int t = 0; t < r.rank(); ++t) v[t] += coeff[n][j] * r.root(simple_images[j])[t];
    }
    RootVec iv(r.rank());
    for (int t = 0; t < r.rank(); ++t) {
      if (v[t].get_den() != 1) return false;
      iv[t] = static_cast<int>(v[t].get_num().get_si());
    }
    const int img = r.index_of(iv);
    if (img < 0 || !contains(a_prime, img) || !hit.insert(img).second) return false;
    out.image[a[n]] = img;
  }
  return true;
}

bool is_isometry(const RootSystem& r, const RootIsometry& sigma) {
  if (sigma.source.size() != sigma.target.size()) return false;
  std::set<int> hit;
  for (int i : sigma.source) {
    if (!sigma.defined_at(i) || !contains(sigma.target, sigma(i))) return false;
    hit.insert(sigma(i));
  }
  if (hit.size() != sigma.target.size()) return false;
  for (int i : sigma.source) {
    for (int j : sigma.source) {
      if (r.inner(r.root(i), r.root(j)) != r.inner(r.root(sigma(i)), r.root(sigma(j)))) return false;
    }
  }
  return true;
}

std::vector<RootIsometry> enumerate_isometries(const RootSystem& r, const RootSubset& a,
                                               const RootSubset& a_prime) {
  std::vector<RootIsometry> out;
  if (a.size() != a_prime.size()) return out;
  const RootSubset simple = simple_system(r, a);
  const std::size_t k = simple.size();
  std::vector<int> chosen;
  // Depth-first over images of the simple roots, pruning on the Gram matrix.
  auto recurse = [&](auto&& self) -> void {
    const std::size_t depth = chosen.size();
    if (depth == k) {
      RootIsometry s;
      if (extend_isometry(r, a, a_prime, chosen, s)) out.push_back(std::move(s));
      return;
    }
    for (int cand : a_prime) {
      bool ok = true;
      for (std::size_t j = 0; j <= depth && ok; ++j) {
        const int img = j == depth ? cand : chosen[j];
        ok = r.inner(r.root(simple[depth]), r.root(simple[j])) == r.inner(r.root(cand), r.root(img));
      }
      if (!ok) continue;
      chosen.push_back(cand);
      self(self);
      chosen.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

RootSubset levi_of_sigma(const RootSystem& r, const RootIsometry& sigma) {
  std::vector<char> in(r.size(), 0);
  for (int i : sigma.source) {
    if (contains(sigma.target, i)) in[i] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < r.size(); ++i) {
      if (!in[i]) continue;
      const int fwd = sigma(i);
      const int back = sigma.preimage(i);
      if (!in[fwd] || back < 0 || !in[back]) {
        in[i] = 0;
        changed = true;
      }
    }
  }
  RootSubset u;
  for (int i = 0; i < r.size(); ++i) {
    if (in[i]) u.push_back(i);
  }
  return u;
}

RootSubset stable_simple_system(const RootSystem& r, const RootIsometry& sigma) {
  const RootSubset u = levi_of_sigma(r, sigma);
  if (u.empty()) return {};
  if (span_rank(r, u) > 4) throw RankCapExceeded("simple-system search is capped at rank 4");
  const RootSubset start = simple_system(r, u);
  std::set<RootSubset> seen{start};
  std::deque<RootSubset> queue{start};
  while (!queue.empty()) {
    const RootSubset delta = queue.front();
    queue.pop_front();
    RootSubset mapped;
    for (int b : delta) mapped.push_back(sigma(b));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == delta) return delta;
    for (int b : delta) {
      RootSubset next;
      for (int g : delta) next.push_back(reflect_by(r, b, g));
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {};
}

bool preserves_simple_system(const RootSystem& r, const RootIsometry& sigma) {
  if (levi_of_sigma(r, sigma).empty()) return true;
  return !stable_simple_system(r, sigma).empty();
}

}  // namespace lagsub::roots
