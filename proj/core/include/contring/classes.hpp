#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "contring/mat.hpp"
#include "contring/poly.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

/// Fixed-size bitset over element or class indices.
class IndexSet {
 public:
  explicit IndexSet(std::size_t size = 0) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const noexcept;
  bool all() const noexcept { return count() == size_; }
  IndexSet& operator|=(const IndexSet& other) noexcept;
  std::vector<std::size_t> indices() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend bool operator<(const IndexSet& a, const IndexSet& b) noexcept { return a.words_ < b.words_; }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

struct ClassInfo {
  std::size_t id = 0;
  std::size_t size = 0;
  std::size_t representative = 0;  // element index
  std::size_t ind = 0;
  RankValue center_dist;
  std::vector<Poly> factors;
  std::size_t inverse = 0;         // class of rep^-1
};

/// GL_n(GF(p)) or SL_n(GF(p)) with its conjugacy classes.
class ClassTable {
 public:
  /// Throws BudgetExceeded when the group order exceeds the budget.
  static ClassTable enumerate(std::size_t n, std::uint32_t p, bool special, std::uint64_t budget = 100000);

  std::size_t n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  bool special() const noexcept { return special_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }

  const Mat& element(std::size_t i) const { return elements_[i]; }
  /// Element index of g; throws PreconditionViolation if g is not in the group.
  std::size_t index_of(const Mat& g) const;
  std::size_t identity() const noexcept { return identity_; }
  /// Element index of element(i) * element(j).
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const ClassInfo& info(std::size_t class_id) const { return classes_[class_id]; }
  const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  const std::vector<std::size_t>& members(std::size_t class_id) const { return members_[class_id]; }

  /// Classes meeting Cl(a) * Cl(b).
  const IndexSet& product_support(std::size_t a, std::size_t b) const { return support_[a * classes_.size() + b]; }

  /// Union of the given classes as an element set.
  IndexSet expand(const IndexSet& class_set) const;

  /// Whether the orbit partition equals the partition by invariant factors.
  /// Always true for GL; for SL it may refine it.
  bool partition_matches_invariants() const noexcept { return partition_matches_; }

 private:
  ClassTable(std::size_t n, Field field, bool special) : n_(n), field_(field), special_(special) {}

  std::size_t n_;
  Field field_;
  bool special_;
  std::vector<Mat> elements_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> class_of_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<IndexSet> support_;
  bool partition_matches_ = false;
};

/// |GL_n(q)| or |SL_n(q)|, or nullopt on overflow.
std::optional<std::uint64_t> group_order_formula(std::size_t n, std::uint64_t q, bool special);

/// Cl(c_1) ... Cl(c_m) as a set of classes, multiplying one class at a time.
IndexSet class_product_classes(const ClassTable& table, std::span<const std::size_t> class_ids);
/// The same product as an element set.
IndexSet class_product_closure(const ClassTable& table, std::span<const std::size_t> class_ids);
/// Element-level reference: every product x*y formed explicitly.
IndexSet class_product_bruteforce(const ClassTable& table, std::span<const std::size_t> class_ids);

struct CoverageReport {
  std::vector<std::size_t> tuple;
  std::size_t sum_ind = 0;
  RankValue sum_center_dist;    // sum of d(a_i, K), over n
  bool hypothesis = false;      // coverage hypothesis holds for the tuple
  bool covered = false;
  std::size_t covered_count = 0;
  std::size_t order = 0;
  bool consistent = true;       // hypothesis implies covered
};

/// Hypothesis: sum of indices > 6(n-1). Throws HypothesisNotMet for n <= 2.
CoverageReport rodgers_saxl_check(const ClassTable& table, std::span<const std::size_t> class_ids);
/// Hypothesis: sum of d(a_i, K) >= 12. Throws HypothesisNotMet for n <= 2.
CoverageReport corollary_index_check(const ClassTable& table, std::span<const std::size_t> class_ids);

/// Least m with (Cl(g) u Cl(g^-1))^m = G, or nullopt when the powers never
/// reach G.
std::optional<std::size_t> conjugacy_width(const ClassTable& table, std::size_t class_id);

}  // namespace contring
