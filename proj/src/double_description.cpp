#include "ontic/detail/double_description.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>

namespace ontic::detail {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic.
std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t abs_val(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
std::int64_t gcd_val(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt abs_val(const BigInt& a) { return boost::multiprecision::abs(a); }
BigInt gcd_val(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class Int>
using Vec = std::vector<Int>;

template <class Int>
Int dot(const Vec<Int>& a, const Vec<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s = add(s, mul(a[i], b[i]));
  return s;
}

template <class Int>
void make_primitive(Vec<Int>& v) {
  Int g = 0;
  for (const auto& x : v) {
    if (x != 0) g = gcd_val(g, abs_val(x));
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : v) x /= g;
}

/// u * a - w * b, primitive.
template <class Int>
Vec<Int> combine(const Int& u, const Vec<Int>& a, const Int& w, const Vec<Int>& b) {
  Vec<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(mul(u, a[i]), mul(w, b[i]));
  make_primitive(r);
  return r;
}

/// Fraction-free Gauss-Jordan basis: every stored row has a positive pivot
/// and zeros in all other rows' pivot columns.
template <class Int>
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}

  std::size_t rank() const { return rows_.size(); }

  bool add(Vec<Int> r) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (r[p] != 0) r = combine(rows_[k][p], r, r[p], rows_[k]);
    }
    std::size_t p = 0;
    while (p < n_ && r[p] == 0) ++p;
    if (p == n_) return false;
    if (r[p] < 0)
      for (auto& x : r) x = -x;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k][p] != 0) rows_[k] = combine(r[p], rows_[k], rows_[k][p], r);
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  /// A nonzero kernel vector; requires rank < n.
  Vec<Int> kernel_vector() const {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    Int scale = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k][free_col] == 0) continue;
      const Int& pv = rows_[k][pivots_[k]];
      scale = mul(scale / gcd_val(scale, pv), pv);
    }
    Vec<Int> x(n_, Int(0));
    x[free_col] = scale;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k][free_col] == 0) continue;
      x[pivots_[k]] = -mul(rows_[k][free_col], scale / rows_[k][pivots_[k]]);
    }
    make_primitive(x);
    return x;
  }

 private:
  std::size_t n_;
  std::vector<Vec<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

class ZeroSet {
 public:
  ZeroSet() = default;
  explicit ZeroSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  static void intersect(const ZeroSet& a, const ZeroSet& b, ZeroSet& out) {
    for (std::size_t w = 0; w < a.words_.size(); ++w) out.words_[w] = a.words_[w] & b.words_[w];
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const ZeroSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

template <class Int>
struct Ray {
  Vec<Int> v;
  ZeroSet zeros;
};

template <class Int>
ConeRays run(const std::vector<Vec<Int>>& rows, std::size_t n) {
  ConeRays out;
  const std::size_t m = rows.size();

  // Initial basis: the first n linearly independent rows in input order.
  Echelon<Int> ech(n);
  std::vector<std::size_t> basis;
  std::vector<bool> in_basis(m, false);
  for (std::size_t k = 0; k < m && basis.size() < n; ++k) {
    if (ech.add(rows[k])) {
      basis.push_back(k);
      in_basis[k] = true;
    }
  }
  out.rank = ech.rank();
  if (out.rank < n) {
    for (const auto& x : ech.kernel_vector()) out.lineality.emplace_back(x);
    return out;
  }

  // Rays of the simplicial cone {x : B x >= 0}: the j-th ray spans the
  // kernel of B without row j, signed so that row j is positive on it.
  std::vector<Ray<Int>> rays;
  for (std::size_t j = 0; j < n; ++j) {
    Echelon<Int> others(n);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) others.add(rows[basis[i]]);
    Vec<Int> r = others.kernel_vector();
    if (dot(rows[basis[j]], r) < 0)
      for (auto& x : r) x = -x;
    ZeroSet z(m);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) z.set(basis[i]);
    rays.push_back({std::move(r), std::move(z)});
  }

  std::vector<Int> slack;
  std::vector<std::size_t> pos, neg, zer;
  ZeroSet common(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    const auto& a = rows[k];
    slack.resize(rays.size());
    pos.clear();
    neg.clear();
    zer.clear();
    for (std::size_t r = 0; r < rays.size(); ++r) {
      slack[r] = dot(a, rays[r].v);
      if (slack[r] > 0)
        pos.push_back(r);
      else if (slack[r] < 0)
        neg.push_back(r);
      else
        zer.push_back(r);
    }
    for (auto r : zer) rays[r].zeros.set(k);
    if (neg.empty()) continue;

    std::vector<Ray<Int>> next;
    next.reserve(pos.size() + zer.size());
    for (auto p : pos) {
      for (auto q : neg) {
        ZeroSet::intersect(rays[p].zeros, rays[q].zeros, common);
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        // slack[p] > 0 > slack[q]; the combination vanishes on row k.
        Vec<Int> v = combine(slack[p], rays[q].v, slack[q], rays[p].v);
        ZeroSet z = common;
        z.set(k);
        next.push_back({std::move(v), std::move(z)});
      }
    }
    for (auto p : pos) next.push_back(std::move(rays[p]));
    for (auto r : zer) next.push_back(std::move(rays[r]));
    rays = std::move(next);
  }

  for (const auto& r : rays) {
    BigVector v;
    v.reserve(n);
    for (const auto& x : r.v) v.emplace_back(x);
    out.rays.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Vec<std::int64_t>>> narrow(const std::vector<BigVector>& rows) {
  std::vector<Vec<std::int64_t>> out;
  out.reserve(rows.size());
  const BigInt lo = std::numeric_limits<std::int64_t>::min() / 2;
  const BigInt hi = std::numeric_limits<std::int64_t>::max() / 2;
  for (const auto& row : rows) {
    Vec<std::int64_t> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      if (x < lo || x > hi) return std::nullopt;
      r.push_back(static_cast<std::int64_t>(x));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ConeRays extreme_rays_bigint(const std::vector<BigVector>& constraints, std::size_t n) {
  return run<BigInt>(constraints, n);
}

ConeRays extreme_rays(const std::vector<BigVector>& constraints, std::size_t n) {
  if (auto small = narrow(constraints)) {
    try {
      return run<std::int64_t>(*small, n);
    } catch (const Overflow&) {
    }
  }
  return extreme_rays_bigint(constraints, n);
}

}  // namespace ontic::detail
