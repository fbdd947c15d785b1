#include "lagsub/roots/canonical_label.hpp"

#include <algorithm>

namespace lagsub::roots {

bool operator<(const OrbitKey& a, const OrbitKey& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.p_prime != b.p_prime) return a.p_prime < b.p_prime;
  if (a.sigma != b.sigma) return a.sigma < b.sigma;
  return std::lexicographical_compare(a.h.begin(), a.h.end(), b.h.begin(), b.h.end());
}

OrbitKey make_key(const RootSubset& p, const RootSubset& p_prime, const RootIsometry& sigma,
                  const RatVec& h) {
  OrbitKey k;
  k.p = p;
  k.p_prime = p_prime;
  for (int a : sigma.source) k.sigma.emplace_back(a, sigma(a));
  std::sort(k.sigma.begin(), k.sigma.end());
  k.h = h;
  return k;
}

OrbitKey act(const RootSystem& r, const WeylElement& w, const OrbitKey& k) {
  OrbitKey out;
  for (int i : k.p) out.p.push_back(w.perm[i]);
  for (int i : k.p_prime) out.p_prime.push_back(w.perm[i]);
  std::sort(out.p.begin(), out.p.end());
  std::sort(out.p_prime.begin(), out.p_prime.end());
  for (const auto& [a, b] : k.sigma) out.sigma.emplace_back(w.perm[a], w.perm[b]);
  std::sort(out.sigma.begin(), out.sigma.end());
  out.h = r.act_on_cartan(w, k.h);
  return out;
}

OrbitKey weyl_canonical_label(const RootSystem& r, const OrbitKey& k) {
  OrbitKey best = k;
  for (const auto& w : r.weyl_group()) {
    OrbitKey c = act(r, w, k);
    if (c < best) best = std::move(c);
  }
  return best;
}

OrbitKey weyl_canonical_label(const RootSystem& r, const RootSubset& p, const RootSubset& p_prime,
                              const RootIsometry& sigma, const RatVec& h) {
  return weyl_canonical_label(r, make_key(p, p_prime, sigma, h));
}

std::string to_string(const OrbitKey& k) {
  auto list = [](const RootSubset& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
  };
  std::string out = "P=" + list(k.p) + " P'=" + list(k.p_prime) + " sigma={";
  for (std::size_t i = 0; i < k.sigma.size(); ++i) {
    out += (i ? "," : "") + std::to_string(k.sigma[i].first) + ":" + std::to_string(k.sigma[i].second);
  }
  out += "} h=(";
  for (std::size_t i = 0; i < k.h.size(); ++i) out += (i ? "," : "") + k.h[i].get_str();
  return out + ")";
}

}  // namespace lagsub::roots
