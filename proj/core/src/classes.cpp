#include "contring/classes.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "contring/canonical.hpp"
#include "contring/error.hpp"
#include "contring/linalg.hpp"

namespace contring {

std::size_t IndexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::optional<std::uint64_t> group_order_formula(std::size_t n, std::uint64_t q, bool special) {
  if (q < 2) return std::nullopt;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  auto times = [&](std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t> {
    if (b != 0 && a > kLimit / b) return std::nullopt;
    return a * b;
  };
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto next = times(qn, q);
    if (!next) return std::nullopt;
    qn = *next;
  }
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto next = times(order, qn - qi);
    if (!next) return std::nullopt;
    order = *next;
    qi *= q;
  }
  if (special) order /= q - 1;
  return order;
}

std::size_t ClassTable::index_of(const Mat& g) const {
  if (g.rows() != n_ || g.cols() != n_ || !(g.field() == field_)) {
    fail(ErrorKind::PreconditionViolation, "matrix does not belong to this group");
  }
  auto it = lookup_.find(encode_matrix(g));
  if (it == lookup_.end()) fail(ErrorKind::PreconditionViolation, "matrix does not belong to this group");
  return it->second;
}

std::size_t ClassTable::multiply(std::size_t i, std::size_t j) const {
  const auto x = elements_[i].data();
  const auto y = elements_[j].data();
  const std::uint64_t p = field_.p();
  std::uint64_t code = 0;
  std::uint64_t weight = 1;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n_; ++k) acc += static_cast<std::uint64_t>(x[r * n_ + k]) * y[k * n_ + c];
      code += (acc % p) * weight;
      weight *= p;
    }
  return lookup_.at(code);
}

IndexSet ClassTable::expand(const IndexSet& class_set) const {
  IndexSet out(order());
  for (std::size_t c : class_set.indices())
    for (std::size_t e : members_[c]) out.set(e);
  return out;
}

ClassTable ClassTable::enumerate(std::size_t n, std::uint32_t p, bool special, std::uint64_t budget) {
  if (n == 0) fail(ErrorKind::PreconditionViolation, "group dimension must be positive");
  const Field k(p);
  const auto order = group_order_formula(n, p, special);
  const auto space = matrix_space_size(k, n, n);
  if (!order || !space || *order > budget) fail(ErrorKind::BudgetExceeded, "group order exceeds the budget");

  ClassTable t(n, k, special);
  t.elements_.reserve(*order);
  for (std::uint64_t code = 0; code < *space; ++code) {
    Mat g = decode_matrix(k, n, n, code);
    const Elem d = det(g);
    if (d == 0 || (special && d != 1)) continue;
    t.lookup_.emplace(code, t.elements_.size());
    t.codes_.push_back(code);
    t.elements_.push_back(std::move(g));
  }
  if (t.elements_.size() != *order) throw std::logic_error("enumerated order disagrees with the order formula");
  t.identity_ = t.index_of(Mat::identity(k, n));

  // Orbits under conjugation by a generating set.
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat s = Mat::identity(k, n);
      s(i, j) = 1;
      gens.push_back(t.index_of(s));
    }
  if (!special && p > 2) {
    Mat s = Mat::identity(k, n);
    s(0, 0) = k.primitive_root();
    gens.push_back(t.index_of(s));
  }
  std::vector<std::size_t> gen_inv;
  for (std::size_t s : gens) gen_inv.push_back(t.index_of(inverse(t.elements_[s])));

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  t.class_of_.assign(t.order(), kUnset);
  for (std::size_t start = 0; start < t.order(); ++start) {
    if (t.class_of_[start] != kUnset) continue;
    const std::size_t cid = t.members_.size();
    std::vector<std::size_t> orbit{start};
    t.class_of_[start] = cid;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::size_t y = t.multiply(t.multiply(gens[g], orbit[head]), gen_inv[g]);
        if (t.class_of_[y] == kUnset) {
          t.class_of_[y] = cid;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    t.members_.push_back(std::move(orbit));
  }

  // Invariant factors must be constant on classes.
  std::map<std::vector<std::vector<Elem>>, std::size_t> by_factors;
  for (std::size_t cid = 0; cid < t.members_.size(); ++cid) {
    const std::vector<std::size_t>& mem = t.members_[cid];
    ClassInfo info;
    info.id = cid;
    info.size = mem.size();
    info.representative = mem.front();
    info.factors = invariant_factors(t.elements_[mem.front()]);
    for (std::size_t e : mem) {
      if (invariant_factors(t.elements_[e]) != info.factors) {
        throw std::logic_error("invariant factors vary within a conjugacy class");
      }
    }
    info.ind = n - info.factors.size();
    info.center_dist = dist_to_center(t.elements_[mem.front()]).dist;
    std::vector<std::vector<Elem>> key;
    for (const Poly& f : info.factors) key.push_back(f.coeffs());
    by_factors.emplace(std::move(key), cid);
    t.classes_.push_back(std::move(info));
  }
  for (ClassInfo& info : t.classes_) {
    info.inverse = t.class_of_[t.index_of(inverse(t.elements_[info.representative]))];
  }
  t.partition_matches_ = by_factors.size() == t.classes_.size();
  if ((!special || std::gcd<std::size_t>(n, p - 1) == 1) && !t.partition_matches_) {
    throw std::logic_error("conjugacy classes disagree with the invariant-factor partition");
  }

  // Cl(a) Cl(b) is a union of classes, each meeting rep(a) * Cl(b).
  const std::size_t nc = t.classes_.size();
  t.support_.assign(nc * nc, IndexSet(nc));
  for (std::size_t a = 0; a < nc; ++a) {
    const std::size_t x = t.classes_[a].representative;
    for (std::size_t b = 0; b < nc; ++b) {
      IndexSet& s = t.support_[a * nc + b];
      for (std::size_t y : t.members_[b]) s.set(t.class_of_[t.multiply(x, y)]);
    }
  }
  return t;
}

namespace {

void require_ids(const ClassTable& table, std::span<const std::size_t> ids) {
  for (std::size_t c : ids) {
    if (c >= table.class_count()) fail(ErrorKind::PreconditionViolation, "unknown class id " + std::to_string(c));
  }
}

CoverageReport coverage_common(const ClassTable& table, std::span<const std::size_t> ids) {
  if (table.n() <= 2) fail(ErrorKind::HypothesisNotMet, "coverage bounds need n > 2");
  require_ids(table, ids);
  CoverageReport rep;
  rep.tuple.assign(ids.begin(), ids.end());
  std::uint64_t dist_num = 0;
  for (std::size_t c : ids) {
    rep.sum_ind += table.info(c).ind;
    dist_num += table.info(c).center_dist.over(table.n()).num;
  }
  rep.sum_center_dist = RankValue{dist_num, table.n()};
  const IndexSet classes = class_product_classes(table, ids);
  rep.covered = classes.all();
  rep.covered_count = table.expand(classes).count();
  rep.order = table.order();
  return rep;
}

}  // namespace

IndexSet class_product_classes(const ClassTable& table, std::span<const std::size_t> class_ids) {
  require_ids(table, class_ids);
  IndexSet cur(table.class_count());
  if (class_ids.empty()) {
    cur.set(table.class_of(table.identity()));
    return cur;
  }
  cur.set(class_ids[0]);
  for (std::size_t k = 1; k < class_ids.size(); ++k) {
    IndexSet next(table.class_count());
    for (std::size_t c : cur.indices()) next |= table.product_support(c, class_ids[k]);
    cur = std::move(next);
  }
  return cur;
}

IndexSet class_product_closure(const ClassTable& table, std::span<const std::size_t> class_ids) {
  return table.expand(class_product_classes(table, class_ids));
}

IndexSet class_product_bruteforce(const ClassTable& table, std::span<const std::size_t> class_ids) {
  require_ids(table, class_ids);
  IndexSet cur(table.order());
  if (class_ids.empty()) {
    cur.set(table.identity());
    return cur;
  }
  for (std::size_t e : table.members(class_ids[0])) cur.set(e);
  for (std::size_t k = 1; k < class_ids.size(); ++k) {
    IndexSet next(table.order());
    for (std::size_t x : cur.indices())
      for (std::size_t y : table.members(class_ids[k])) next.set(table.multiply(x, y));
    cur = std::move(next);
  }
  return cur;
}

CoverageReport rodgers_saxl_check(const ClassTable& table, std::span<const std::size_t> class_ids) {
  CoverageReport rep = coverage_common(table, class_ids);
  rep.hypothesis = rep.sum_ind > 6 * (table.n() - 1);
  rep.consistent = !rep.hypothesis || rep.covered;
  return rep;
}

CoverageReport corollary_index_check(const ClassTable& table, std::span<const std::size_t> class_ids) {
  CoverageReport rep = coverage_common(table, class_ids);
  rep.hypothesis = rep.sum_center_dist.num >= 12 * rep.sum_center_dist.den;
  rep.consistent = !rep.hypothesis || rep.covered;
  return rep;
}

std::optional<std::size_t> conjugacy_width(const ClassTable& table, std::size_t class_id) {
  const std::size_t ids[] = {class_id};
  require_ids(table, ids);
  IndexSet gen(table.class_count());
  gen.set(class_id);
  gen.set(table.info(class_id).inverse);
  const std::vector<std::size_t> gen_ids = gen.indices();
  IndexSet cur = gen;
  std::set<IndexSet> seen;
  for (std::size_t m = 1;; ++m) {
    if (cur.all()) return m;
    if (!seen.insert(cur).second) return std::nullopt;
    IndexSet next(table.class_count());
    for (std::size_t a : cur.indices())
      for (std::size_t s : gen_ids) next |= table.product_support(a, s);
    cur = std::move(next);
  }
}

}  // namespace contring
