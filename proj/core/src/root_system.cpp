#include "lagsub/roots/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "lagsub/error.hpp"
#include "lagsub/exact/matrix.hpp"

namespace lagsub::roots {

namespace {

constexpr int kWeylRankCap = 4;

bool valid_factor(const SimpleFactor& f) {
  switch (f.type) {
    case 'A':
      return f.rank >= 1;
    case 'B':
    case 'C':
      return f.rank >= 2;
    case 'D':
      return f.rank >= 4;
    case 'E':
      return f.rank >= 6 && f.rank <= 8;
    case 'F':
      return f.rank == 4;
    case 'G':
      return f.rank == 2;
    default:
      return false;
  }
}

// Gram matrix of one simple factor, long roots of norm 2, Bourbaki numbering.
std::vector<std::vector<mpq_class>> factor_gram(const SimpleFactor& f) {
  const int n = f.rank;
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n, 0));
  auto link = [&g](int i, int j, mpq_class v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (f.type) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 1 : 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, mpq_class(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 2;
      g[2][2] = g[3][3] = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, mpq_class(-1, 2));
      break;
    case 'G':
      g[0][0] = mpq_class(2, 3);
      g[1][1] = 2;
      link(0, 1, -1);
      break;
    default:
      break;
  }
  return g;
}

}  // namespace

std::vector<SimpleFactor> parse_cartan_type(const std::string& type) {
  std::vector<SimpleFactor> out;
  std::size_t pos = 0;
  while (pos < type.size()) {
    const auto next = type.find('x', pos);
    const std::string part = type.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0]))) {
      throw ParseError("unknown Cartan type '" + type + "'");
    }
    SimpleFactor f;
    f.type = part[0];
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError("unknown Cartan type '" + type + "'");
      }
    }
    f.rank = std::stoi(part.substr(1));
    if (!valid_factor(f)) throw ParseError("unknown Cartan type '" + part + "'");
    out.push_back(f);
    if (next == std::string::npos) break;
    pos = next + 1;
    if (pos == type.size()) throw ParseError("unknown Cartan type '" + type + "'");
  }
  if (out.empty()) throw ParseError("empty Cartan type");
  return out;
}

RootSystem::RootSystem(const std::string& type) : type_(type), factors_(parse_cartan_type(type)) {
  build_gram();
  generate_roots();
  if (rank_ <= kWeylRankCap) build_weyl_group();
}

void RootSystem::build_gram() {
  for (const auto& f : factors_) rank_ += f.rank;
  gram_.assign(rank_, std::vector<mpq_class>(rank_, 0));
  int offset = 0;
  for (const auto& f : factors_) {
    const auto g = factor_gram(f);
    for (int i = 0; i < f.rank; ++i) {
      for (int j = 0; j < f.rank; ++j) gram_[offset + i][offset + j] = g[i][j];
    }
    offset += f.rank;
  }
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      const mpq_class a = 2 * gram_[i][j] / gram_[i][i];
      cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }
  }
}

void RootSystem::generate_roots() {
  std::set<RootVec> positive;
  std::vector<RootVec> level;
  for (int i = 0; i < rank_; ++i) {
    RootVec v(rank_, 0);
    v[i] = 1;
    positive.insert(v);
    level.push_back(v);
  }
  while (!level.empty()) {
    std::set<RootVec> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank_; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i.
        int p = 0;
        RootVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!positive.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < rank_; ++j) pair += beta[j] * cartan_[i][j];
        if (p - pair > 0) {
          RootVec up = beta;
          up[i] += 1;
          if (!positive.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    positive.insert(next.begin(), next.end());
  }
  std::vector<RootVec> pos(positive.begin(), positive.end());
  auto height_of = [](const RootVec& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  num_positive_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& v : pos) {
    RootVec n = v;
    for (auto& c : n) c = -c;
    roots_.push_back(n);
  }
  for (int i = 0; i < size(); ++i) index_[roots_[i]] = i;

  const int n = size();
  sum_table_.assign(n * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RootVec s = roots_[i];
      for (int k = 0; k < rank_; ++k) s[k] += roots_[j][k];
      sum_table_[i * n + j] = index_of(s);
    }
  }
  coroots_.resize(n);
  for (int i = 0; i < n; ++i) {
    const mpq_class nrm = norm2(i);
    RootVec c(rank_, 0);
    for (int j = 0; j < rank_; ++j) {
      const mpq_class v = roots_[i][j] * gram_[j][j] / nrm;
      if (v.get_den() != 1) throw Error("internal: non-integral coroot coordinate");
      c[j] = static_cast<int>(v.get_num().get_si());
    }
    coroots_[i] = c;
  }
  reflect_table_.assign(rank_, std::vector<int>(n, -1));
  for (int k = 0; k < rank_; ++k) {
    for (int i = 0; i < n; ++i) {
      RootVec v = roots_[i];
      const int p = pairing(i, k);
      v[k] -= p;
      reflect_table_[k][i] = index_of(v);
    }
  }
}

int RootSystem::index_of(const RootVec& v) const {
  const auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int i) const {
  int h = 0;
  for (int c : roots_[i]) h += c;
  return h;
}

mpq_class RootSystem::inner(const RootVec& a, const RootVec& b) const {
  mpq_class s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] != 0 && sgn(gram_[i][j]) != 0) s += a[i] * b[j] * gram_[i][j];
    }
  }
  return s;
}

mpq_class RootSystem::inner(const RatVec& a, const RatVec& b) const {
  mpq_class s = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::pairing(int a, int b) const {
  const mpq_class v = 2 * inner(roots_[a], roots_[b]) / norm2(b);
  return static_cast<int>(v.get_num().get_si());
}

mpq_class RootSystem::evaluate(int root, const RatVec& h) const {
  mpq_class s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (sgn(h[i]) == 0) continue;
    int a = 0;
    for (int j = 0; j < rank_; ++j) a += roots_[root][j] * cartan_[i][j];
    s += h[i] * a;
  }
  return s;
}

int RootSystem::reflect(int k, int i) const { return reflect_table_[k][i]; }

void RootSystem::build_weyl_group() {
  const int n = size();
  WeylElement id;
  id.root_matrix.assign(rank_, std::vector<int>(rank_, 0));
  id.coroot_matrix.assign(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) id.root_matrix[i][i] = id.coroot_matrix[i][i] = 1;
  id.perm.resize(n);
  for (int i = 0; i < n; ++i) id.perm[i] = i;

  std::set<std::vector<int>> seen{id.perm};
  weyl_.push_back(id);
  std::size_t head = 0;
  while (head < weyl_.size()) {
    const WeylElement w = weyl_[head++];
    for (int k = 0; k < rank_; ++k) {
      // w' = w s_k: w'(x) = w(s_k x).
      WeylElement nw;
      nw.word = w.word;
      nw.word.push_back(k);
      nw.perm.resize(n);
      for (int i = 0; i < n; ++i) nw.perm[i] = w.perm[reflect(k, i)];
      if (seen.count(nw.perm)) continue;
      seen.insert(nw.perm);
      nw.root_matrix.assign(rank_, std::vector<int>(rank_, 0));
      nw.coroot_matrix.assign(rank_, std::vector<int>(rank_, 0));
      for (int j = 0; j < rank_; ++j) {
        // Column j: image of the j-th simple root / simple coroot.
        const int img = nw.perm[j];
        for (int r = 0; r < rank_; ++r) {
          nw.root_matrix[r][j] = roots_[img][r];
          nw.coroot_matrix[r][j] = coroots_[img][r];
        }
      }
      weyl_.push_back(std::move(nw));
    }
  }
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  if (rank_ > kWeylRankCap) {
    throw RankCapExceeded("Weyl group enumeration is capped at rank " +
                          std::to_string(kWeylRankCap) + " (type " + type_ + ")");
  }
  return weyl_;
}

std::vector<RatVec> RootSystem::fundamental_coweights() const {
  exact::Matrix a(rank_, rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) a(i, j) = cartan_[i][j];
  }
  const auto inv = exact::inverse(a);
  std::vector<RatVec> out(rank_, RatVec(rank_));
  for (int i = 0; i < rank_; ++i) {
    for (int k = 0; k < rank_; ++k) out[i][k] = (*inv)(i, k).as_rational();
  }
  return out;
}

RatVec RootSystem::act_on_cartan(const WeylElement& w, const RatVec& h) const {
  RatVec out(rank_, 0);
  for (int r = 0; r < rank_; ++r) {
    for (int j = 0; j < rank_; ++j) {
      if (w.coroot_matrix[r][j] != 0) out[r] += w.coroot_matrix[r][j] * h[j];
    }
  }
  return out;
}

}  // namespace lagsub::roots
