#include "charp/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace charp {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
  if (vars_.empty()) throw ContextError("a ring needs at least one variable");
  if (vars_.size() > kMaxVars) {
    throw ContextError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw ContextError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw ContextError("duplicate variable '" + vars_[i] + "'");
    }
  }
  auto prec = order_.precedence();
  std::sort(prec.begin(), prec.end());
  std::vector<std::size_t> expected(vars_.size());
  std::iota(expected.begin(), expected.end(), 0);
  if (prec != expected) throw ContextError("monomial order does not rank every variable exactly once");
}

MonomialOrder PolyRing::default_order(const std::vector<std::string>& vars) {
  std::vector<std::size_t> prec;
  std::optional<std::size_t> param;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == kParameter) {
      param = i;
    } else {
      prec.push_back(i);
    }
  }
  if (param) prec.push_back(*param);
  return MonomialOrder::grevlex(std::move(prec));
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> vars) {
  MonomialOrder order = default_order(vars);
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars), std::move(order));
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars), std::move(order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw ContextError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolyRing>(field_, vars_, std::move(order));
}

RingPtr PolyRing::with_variable(std::string name, MonomialOrder order) const {
  auto vars = vars_;
  vars.push_back(std::move(name));
  return std::make_shared<const PolyRing>(field_, std::move(vars), std::move(order));
}

std::string PolyRing::fresh_name(std::string stem) const {
  std::string name = stem;
  for (int k = 0; index_of(name); ++k) name = stem + std::to_string(k);
  return name;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order();
  const PrimeField& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  MultiPoly out(std::move(ring));
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = field.add(out.terms_.back().coeff, t.coeff);
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return out;
}

MultiPoly MultiPoly::constant(RingPtr ring, std::int64_t c) {
  FieldElem v = ring->field().from_int(c);
  return monomial(std::move(ring), Monomial{}, v);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, FieldElem c) {
  MultiPoly out(std::move(ring));
  if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  Monomial m;
  m.set(ring->require_index(name), 1);
  FieldElem one = ring->field().one();
  return monomial(std::move(ring), m, one);
}

MultiPoly MultiPoly::from_univariate(RingPtr ring, const UniPoly& u, std::size_t var) {
  if (!(u.field() == ring->field())) throw ContextError("characteristic mismatch");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
    if (u.coeff(k).is_zero()) continue;
    Monomial m;
    m.set(var, static_cast<std::uint32_t>(k));
    terms.push_back({m, u.coeff(k)});
  }
  return from_terms(std::move(ring), std::move(terms));
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

FieldElem MultiPoly::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return {};
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coeff().value == 1) return *this;
  return scale(field().inv(leading_coeff()));
}

MultiPoly MultiPoly::scale(FieldElem c) const {
  MultiPoly out(ring_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = field().mul(t.coeff, c);
  return out;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, FieldElem c) const {
  MultiPoly out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return out;
}

MultiPoly MultiPoly::pow(std::uint64_t k) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::frobenius(std::uint32_t q) const {
  // Coefficients are fixed by x -> x^p on F_p and cross terms vanish.
  MultiPoly out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono.pow(q), t.coeff});
  return out;
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!same_ring(ring_, other.ring_)) throw ContextError("polynomials belong to different rings");
}

MultiPoly MultiPoly::combine(const MultiPoly& other, bool subtract) const {
  check_ring(other);
  const PrimeField& field = this->field();
  const MonomialOrder& order = ring_->order();
  MultiPoly out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c = a == terms_.end() ? -1 : b == other.terms_.end() ? 1 : order.compare(a->mono, b->mono);
    if (c > 0) {
      out.terms_.push_back(*a++);
    } else if (c < 0) {
      out.terms_.push_back({b->mono, subtract ? field.neg(b->coeff) : b->coeff});
      ++b;
    } else {
      FieldElem v = subtract ? field.sub(a->coeff, b->coeff) : field.add(a->coeff, b->coeff);
      if (!v.is_zero()) out.terms_.push_back({a->mono, v});
      ++a;
      ++b;
    }
  }
  return out;
}

void MultiPoly::sub_scaled(const MultiPoly& g, const Monomial& m, FieldElem c) {
  const PrimeField& field = this->field();
  const MonomialOrder& order = ring_->order();
  const FieldElem neg_c = field.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.insert(out.end(), a, terms_.end());
      break;
    }
    const Monomial bm = b->mono * m;
    int cmp = a == terms_.end() ? -1 : order.compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({bm, field.mul(neg_c, b->coeff)});
      ++b;
    } else {
      FieldElem v = field.add(a->coeff, field.mul(neg_c, b->coeff));
      if (!v.is_zero()) out.push_back({bm, v});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) { return *this = combine(other, false); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this = combine(other, true); }

MultiPoly operator-(const MultiPoly& a) { return a.scale(a.field().neg(a.field().one())); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  const PrimeField& field = a.field();
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, field.mul(s.coeff, t.coeff)});
  }
  return MultiPoly::from_terms(a.ring_, std::move(products));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly MultiPoly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    MultiPoly out = *this;
    out.ring_ = target;
    return out;
  }
  if (!(ring_->field() == target->field())) throw ContextError("characteristic mismatch");
  const auto& names = ring_->variables();
  std::vector<std::optional<std::size_t>> map(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) map[i] = target->index_of(names[i]);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw ContextError("variable '" + names[i] + "' does not exist in the target ring");
      m.set(*map[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

std::optional<UniPoly> MultiPoly::to_univariate(std::size_t var) const {
  std::vector<FieldElem> coeffs;
  for (const auto& t : terms_) {
    if (t.mono.degree() != t.mono[var]) return std::nullopt;
    const std::size_t k = t.mono[var];
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = t.coeff;
  }
  return UniPoly(field(), std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->variables();
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff.value);
    } else if (t.coeff.value == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff.value) + "*" + mono;
    }
  }
  return out;
}

MultiPoly multiply(const MultiPoly& f, const MultiPoly& g) { return f * g; }

std::pair<Monomial, FieldElem> leading_term(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ArithmeticError("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return {best->mono, best->coeff};
}

MultiPoly divide_exact(const MultiPoly& g, const MultiPoly& f) {
  if (f.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const RingPtr& ring = g.ring();
  const PrimeField& field = g.field();
  const Term& lead = f.leading_term();
  const FieldElem inv = field.inv(lead.coeff);
  MultiPoly rest = g;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    if (!lead.mono.divides(top.mono)) throw ArithmeticError("inexact polynomial division");
    const Monomial m = top.mono / lead.mono;
    const FieldElem c = field.mul(top.coeff, inv);
    quotient.push_back({m, c});
    rest.sub_scaled(f, m, c);
  }
  return MultiPoly::from_terms(ring, std::move(quotient));
}

MultiPoly LinearForm::to_poly(const RingPtr& ring) const {
  const std::size_t t = ring->require_index(PolyRing::kParameter);
  const MultiPoly x = MultiPoly::variable(ring, "x");
  const MultiPoly y = MultiPoly::variable(ring, "y");
  return MultiPoly::from_univariate(ring, x_coeff, t) * x + MultiPoly::from_univariate(ring, y_coeff, t) * y;
}

namespace {

// Checks that `image` is a*x + b*y with a, b in F_p[t].
void require_linear_form(const MultiPoly& image, const std::string& target) {
  const RingPtr& ring = image.ring();
  const auto x = ring->index_of("x");
  const auto y = ring->index_of("y");
  for (const auto& t : image.terms()) {
    std::uint32_t xy_degree = 0;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (i == x || i == y) {
        xy_degree += t.mono[i];
      } else if (ring->variables()[i] != PolyRing::kParameter) {
        throw PreconditionError("image of " + target + " involves variable " + ring->variables()[i]);
      }
    }
    if (xy_degree != 1) throw PreconditionError("image of " + target + " is not linear in x, y");
  }
}

}  // namespace

MultiPoly linear_substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& images) {
  const RingPtr& ring = f.ring();
  std::vector<std::optional<MultiPoly>> image_of(ring->nvars());
  for (const auto& [name, image] : images) {
    if (name == PolyRing::kParameter) throw PreconditionError("substitution may not target t");
    if (name != "x" && name != "y") throw PreconditionError("substitution may only target x and y");
    const std::size_t idx = ring->require_index(name);
    MultiPoly img = image.in_ring(ring);
    require_linear_form(img, name);
    image_of[idx] = std::move(img);
  }
  // Powers of each image, built on demand.
  std::vector<std::vector<MultiPoly>> powers(ring->nvars());
  auto power = [&](std::size_t var, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(ring, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * *image_of[var]);
    return cache[k];
  };
  MultiPoly result(ring);
  for (const auto& t : f.terms()) {
    Monomial kept;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (!image_of[i]) kept.set(i, t.mono[i]);
    }
    MultiPoly term = MultiPoly::monomial(ring, kept, t.coeff);
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (image_of[i] && t.mono[i] > 0) term = term * power(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly linear_substitute(const MultiPoly& f, const LinearForm& x_image, const LinearForm& y_image) {
  return linear_substitute(f, {{"x", x_image.to_poly(f.ring())}, {"y", y_image.to_poly(f.ring())}});
}

}  // namespace charp
