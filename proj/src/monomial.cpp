#include "charp/monomial.hpp"

#include "charp/errors.hpp"

namespace charp {

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVars) throw ContextError("too many variables in monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = exponents[i];
    degree_ += exponents[i];
  }
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> precedence) {
  MonomialOrder o;
  o.kind_ = OrderKind::lex;
  o.blocks_.push_back({true, std::move(precedence)});
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> precedence) {
  MonomialOrder o;
  o.kind_ = OrderKind::grevlex;
  o.blocks_.push_back({false, std::move(precedence)});
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front, std::vector<std::size_t> rest) {
  MonomialOrder o;
  o.kind_ = OrderKind::block;
  o.blocks_.push_back({false, std::move(front)});
  o.blocks_.push_back({false, std::move(rest)});
  return o;
}

std::vector<std::size_t> MonomialOrder::precedence() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

std::vector<std::size_t> MonomialOrder::front_block() const {
  if (kind_ != OrderKind::block) return {};
  return blocks_.front().vars;
}

std::string MonomialOrder::describe(std::span<const std::string> names) const {
  auto list = [&](const std::vector<std::size_t>& vars) {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) s += ">";
      s += vars[i] < names.size() ? names[vars[i]] : "?";
    }
    return s;
  };
  switch (kind_) {
    case OrderKind::lex:
      return "lex(" + list(blocks_[0].vars) + ")";
    case OrderKind::grevlex:
      return "grevlex(" + list(blocks_[0].vars) + ")";
    case OrderKind::block:
      return "block(" + list(blocks_[0].vars) + " >> " + list(blocks_[1].vars) + ")";
  }
  return "?";
}

}  // namespace charp
