#include "germforge/order.hpp"

#include <numeric>
#include <stdexcept>

namespace germforge {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence,
                             std::vector<std::size_t> block_sizes)
    : kind_(kind), prec_(std::move(precedence)), blocks_(std::move(block_sizes)) {
  if (prec_.empty() || prec_.size() > kMaxVars) throw std::invalid_argument("bad variable list");
  for (std::size_t v : prec_) {
    if (v >= kMaxVars) throw std::invalid_argument("variable index out of range");
    if (mask_ & (1ull << v)) throw std::invalid_argument("repeated variable in order");
    mask_ |= 1ull << v;
  }
  if (kind_ == OrderKind::Block) {
    std::size_t total = std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
    if (total != prec_.size()) throw std::invalid_argument("block sizes do not cover variables");
  } else {
    blocks_ = {prec_.size()};
  }
}

static std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

MonomialOrder MonomialOrder::alex(std::size_t nvars) {
  return MonomialOrder(OrderKind::AntiGradedLex, iota_vars(nvars));
}
MonomialOrder MonomialOrder::lex(std::size_t nvars) { return MonomialOrder(OrderKind::Lex, iota_vars(nvars)); }
MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  return MonomialOrder(OrderKind::DegRevLex, iota_vars(nvars));
}
MonomialOrder MonomialOrder::block(std::vector<std::size_t> block_sizes) {
  std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  return MonomialOrder(OrderKind::Block, iota_vars(n), std::move(block_sizes));
}

bool MonomialOrder::covers(const Monomial& m) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m[i] && !(mask_ & (1ull << i))) return false;
  return true;
}

int MonomialOrder::lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
  for (std::size_t k = lo; k < hi; ++k) {
    unsigned ea = a[prec_[k]], eb = b[prec_[k]];
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                 std::size_t hi) const {
  unsigned da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a[prec_[k]];
    db += b[prec_[k]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = hi; k-- > lo;) {
    unsigned ea = a[prec_[k]], eb = b[prec_[k]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::AntiGradedLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return lex_range(a, b, 0, prec_.size());
    case OrderKind::Lex:
      return lex_range(a, b, 0, prec_.size());
    case OrderKind::DegRevLex:
      return grevlex_range(a, b, 0, prec_.size());
    case OrderKind::Block: {
      std::size_t lo = 0;
      for (std::size_t s : blocks_) {
        int c = grevlex_range(a, b, lo, lo + s);
        if (c) return c;
        lo += s;
      }
      return 0;
    }
  }
  return 0;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!covers(a) || !covers(b)) throw std::invalid_argument("monomial uses a variable outside the order");
  return static_cast<Cmp>(cmp(a, b));
}

std::string MonomialOrder::describe() const {
  std::string name;
  switch (kind_) {
    case OrderKind::AntiGradedLex: name = "alex"; break;
    case OrderKind::Lex: name = "lex"; break;
    case OrderKind::DegRevLex: name = "degrevlex"; break;
    case OrderKind::Block: name = "block"; break;
  }
  return name;
}

Cmp order_compare(const MonomialOrder& o, const Monomial& a, const Monomial& b) { return o.compare(a, b); }

}  // namespace germforge
