#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germforge/monomial.hpp"

namespace germforge {

enum class OrderKind {
  AntiGradedLex,  // local: higher total degree is smaller, ties by lex
  Lex,            // global lex
  DegRevLex,      // global graded reverse lex
  Block,          // global elimination order, graded reverse lex inside blocks
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

class MonomialOrder {
 public:
  // precedence lists variable indices from most to least significant.
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence,
                std::vector<std::size_t> block_sizes = {});

  static MonomialOrder alex(std::size_t nvars = 2);
  static MonomialOrder lex(std::size_t nvars = 2);
  static MonomialOrder degrevlex(std::size_t nvars);
  // Variables 0..nvars-1 in index order split into consecutive blocks.
  static MonomialOrder block(std::vector<std::size_t> block_sizes);

  OrderKind kind() const { return kind_; }
  bool is_local() const { return kind_ == OrderKind::AntiGradedLex; }
  const std::vector<std::size_t>& precedence() const { return prec_; }
  const std::vector<std::size_t>& block_sizes() const { return blocks_; }
  std::size_t nvars() const { return prec_.size(); }

  // Throws std::invalid_argument if a or b uses a variable outside the list.
  Cmp compare(const Monomial& a, const Monomial& b) const;
  // Same without the variable check; >0 when a is greater.
  int cmp(const Monomial& a, const Monomial& b) const;

  bool covers(const Monomial& m) const;

  std::string describe() const;

 private:
  int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  OrderKind kind_;
  std::vector<std::size_t> prec_;
  std::vector<std::size_t> blocks_;
  unsigned long long mask_ = 0;
};

Cmp order_compare(const MonomialOrder& o, const Monomial& a, const Monomial& b);

}  // namespace germforge
