#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lagsub::roots {

/// Root written in the basis of simple roots.
using RootVec = std::vector<int>;
/// Rational vector (coroot coordinates of a Cartan element, or rational root-space vectors).
using RatVec = std::vector<mpq_class>;
/// Sorted, duplicate-free list of root indices.
using RootSubset = std::vector<int>;

struct SimpleFactor {
  char type = 'A';
  int rank = 1;
};

/// Parses "A1", "A2", "A1xA1", "B2", "G2", ... into simple factors.
std::vector<SimpleFactor> parse_cartan_type(const std::string& type);

struct WeylElement {
  /// Lexicographically smallest reduced word in the simple reflections.
  std::vector<int> word;
  /// Action on simple-root coordinates: v -> root_matrix * v.
  std::vector<std::vector<int>> root_matrix;
  /// Action on simple-coroot coordinates of the Cartan subalgebra.
  std::vector<std::vector<int>> coroot_matrix;
  /// perm[i] = index of w(root i).
  std::vector<int> perm;
};

/**
 * Crystallographic root system given by a Cartan type.
 *
 * Roots are indexed 0..|R|-1: positive roots first (ordered by height, then
 * descending lexicographic coefficients, so the simple roots come first in
 * Bourbaki order), then their negatives in the same order.
 *
 * Inner product: long roots of every simple factor have norm 2.
 */
class RootSystem {
 public:
  explicit RootSystem(const std::string& type);

  const std::string& type() const { return type_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }

  const RootVec& root(int i) const { return roots_[i]; }
  const std::vector<RootVec>& roots() const { return roots_; }
  /// Index of a root vector, or -1 if it is not a root.
  int index_of(const RootVec& v) const;
  int negative(int i) const { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }
  bool is_positive(int i) const { return i < num_positive_; }
  /// Index of the i-th simple root (0-based), which equals i.
  int simple(int i) const { return i; }
  int height(int i) const;
  /// Index of root_i + root_j, or -1 if the sum is not a root.
  int sum_index(int i, int j) const { return sum_table_[i * size() + j]; }

  /// <alpha_i^vee, alpha_j> (Cartan matrix entry).
  int cartan(int i, int j) const { return cartan_[i][j]; }
  /// Gram matrix of the simple roots.
  const mpq_class& gram(int i, int j) const { return gram_[i][j]; }
  mpq_class inner(const RootVec& a, const RootVec& b) const;
  mpq_class inner(const RatVec& a, const RatVec& b) const;
  mpq_class norm2(int i) const { return inner(roots_[i], roots_[i]); }
  /// 2 <a, b> / <b, b> for root indices.
  int pairing(int a, int b) const;
  /// alpha(h) for a Cartan element h given in simple-coroot coordinates.
  mpq_class evaluate(int root, const RatVec& h) const;
  /// Coroot of root i in simple-coroot coordinates.
  const RootVec& coroot(int i) const { return coroots_[i]; }

  /// Simple reflection s_k applied to root index i.
  int reflect(int k, int i) const;

  /// All Weyl group elements in breadth-first (length, then lexicographic word)
  /// order. Built eagerly for rank <= 4; throws RankCapExceeded above that.
  const std::vector<WeylElement>& weyl_group() const;
  /// Fundamental coweights in simple-coroot coordinates (rows).
  std::vector<RatVec> fundamental_coweights() const;

  /// Applies a Weyl element to a Cartan element (simple-coroot coordinates).
  RatVec act_on_cartan(const WeylElement& w, const RatVec& h) const;

 private:
  std::string type_;
  std::vector<SimpleFactor> factors_;
  int rank_ = 0;
  int num_positive_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<mpq_class>> gram_;
  std::vector<RootVec> roots_;
  std::vector<RootVec> coroots_;
  std::map<RootVec, int> index_;
  std::vector<int> sum_table_;
  std::vector<std::vector<int>> reflect_table_;
  std::vector<WeylElement> weyl_;

  void build_gram();
  void generate_roots();
  void build_weyl_group();
};

}  // namespace lagsub::roots
