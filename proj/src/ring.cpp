#include "bcinv/ring.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace bcinv {
namespace {

constexpr std::uint64_t kTableThreshold = 256;  // build op tables up to here
constexpr std::uint32_t kMaxMatDigits = 32;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw std::invalid_argument("ring cardinality overflows");
  return a * b;
}

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw std::invalid_argument("cannot parse " + std::string(what) + ": '" +
                              std::string(text) + "'");
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool eat(std::string_view lit) {
    if (s.substr(pos, lit.size()) != lit) return false;
    pos += lit.size();
    return true;
  }
  bool done() const { return pos == s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  std::uint64_t number() {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      parse_fail("number", s.substr(pos));
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > UINT64_MAX / 10) parse_fail("number (too large)", s);
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    return v;
  }
};

RingSpec parse_spec(Cursor& c) {
  if (c.eat("zmod:")) return RingSpec::zmod(c.number());
  if (c.eat("mat:")) {
    std::uint64_t k = c.number();
    if (!c.eat(":zmod:")) parse_fail("ring spec (expected :zmod:)", c.s);
    std::uint64_t n = c.number();
    if (k > UINT32_MAX) parse_fail("ring spec (dimension too large)", c.s);
    return RingSpec::mat(static_cast<std::uint32_t>(k), n);
  }
  if (c.eat("prod:(")) {
    RingSpec l = parse_spec(c);
    if (!c.eat(";")) parse_fail("ring spec (expected ;)", c.s);
    RingSpec r = parse_spec(c);
    if (!c.eat(")")) parse_fail("ring spec (expected ))", c.s);
    return RingSpec::prod(std::move(l), std::move(r));
  }
  parse_fail("ring spec", c.s.substr(c.pos));
}

}  // namespace

RingSpec RingSpec::zmod(std::uint64_t n) {
  RingSpec s;
  s.kind = Kind::zmod;
  s.n = n;
  return s;
}

RingSpec RingSpec::mat(std::uint32_t k, std::uint64_t n) {
  RingSpec s;
  s.kind = Kind::mat;
  s.k = k;
  s.n = n;
  return s;
}

RingSpec RingSpec::prod(RingSpec l, RingSpec r) {
  RingSpec s;
  s.kind = Kind::prod;
  s.left = std::make_shared<const RingSpec>(std::move(l));
  s.right = std::make_shared<const RingSpec>(std::move(r));
  return s;
}

std::uint64_t RingSpec::cardinality() const {
  switch (kind) {
    case Kind::zmod:
      return n;
    case Kind::mat: {
      std::uint64_t c = 1;
      for (std::uint64_t i = 0; i < std::uint64_t(k) * k; ++i)
        c = checked_mul(c, n);
      return c;
    }
    case Kind::prod:
      return checked_mul(left->cardinality(), right->cardinality());
  }
  throw std::invalid_argument("malformed ring spec");
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::zmod:
      return "zmod:" + std::to_string(n);
    case Kind::mat:
      return "mat:" + std::to_string(k) + ":zmod:" + std::to_string(n);
    case Kind::prod:
      return "prod:(" + left->to_string() + ";" + right->to_string() + ")";
  }
  throw std::invalid_argument("malformed ring spec");
}

RingSpec RingSpec::parse(std::string_view text) {
  Cursor c{text};
  RingSpec s = parse_spec(c);
  if (!c.done()) parse_fail("ring spec (trailing input)", text);
  return s;
}

Ring::Ring(const RingSpec& spec, std::uint64_t cap) : spec_(spec) {
  switch (spec.kind) {
    case RingSpec::Kind::zmod:
      if (spec.n < 2) throw std::invalid_argument("zmod modulus must be >= 2");
      mod_ = spec.n;
      break;
    case RingSpec::Kind::mat:
      if (spec.k < 1) throw std::invalid_argument("mat dimension must be >= 1");
      if (spec.n < 2)
        throw std::invalid_argument("mat base modulus must be >= 2");
      if (std::uint64_t(spec.k) * spec.k > kMaxMatDigits)
        throw std::invalid_argument("mat dimension too large");
      mod_ = spec.n;
      dim_ = spec.k;
      break;
    case RingSpec::Kind::prod:
      if (!spec.left || !spec.right)
        throw std::invalid_argument("malformed prod spec");
      left_ = build_ring(*spec.left, cap);
      right_ = build_ring(*spec.right, cap);
      break;
  }

  card_ = spec.cardinality();
  if (card_ > cap)
    throw std::invalid_argument("ring cardinality " + std::to_string(card_) +
                                " exceeds cap " + std::to_string(cap));

  switch (spec.kind) {
    case RingSpec::Kind::zmod:
      one_code_ = 1;
      break;
    case RingSpec::Kind::mat: {
      powers_.resize(std::size_t(dim_) * dim_ + 1);
      powers_[0] = 1;
      for (std::size_t i = 1; i < powers_.size(); ++i)
        powers_[i] = powers_[i - 1] * mod_;
      std::uint64_t one = 0;
      for (std::uint32_t j = 0; j < dim_; ++j)
        one += powers_[std::size_t(j) * dim_ + j];
      one_code_ = one;
      break;
    }
    case RingSpec::Kind::prod:
      one_code_ = left_->one_code_ + left_->card_ * right_->one_code_;
      break;
  }

  if (card_ <= kTableThreshold) {
    std::vector<std::uint32_t> add(card_ * card_), mul(card_ * card_);
    std::vector<std::uint32_t> neg(card_), str(card_);
    for (std::uint64_t x = 0; x < card_; ++x) {
      for (std::uint64_t y = 0; y < card_; ++y) {
        add[x * card_ + y] = static_cast<std::uint32_t>(add_formula(x, y));
        mul[x * card_ + y] = static_cast<std::uint32_t>(mul_formula(x, y));
      }
      neg[x] = static_cast<std::uint32_t>(neg_formula(x));
      str[x] = static_cast<std::uint32_t>(star_formula(x));
    }
    add_tab_ = std::move(add);
    mul_tab_ = std::move(mul);
    neg_tab_ = std::move(neg);
    star_tab_ = std::move(str);
  }
}

RingHandle build_ring(const RingSpec& spec, std::uint64_t cardinality_cap) {
  return RingHandle(new Ring(spec, cardinality_cap));
}

Element Ring::element(std::uint64_t code) const {
  if (code >= card_)
    throw std::invalid_argument("element code " + std::to_string(code) +
                                " out of range for " + spec_.to_string());
  return Element(this, code);
}

std::vector<Element> Ring::elements() const {
  std::vector<Element> out;
  out.reserve(card_);
  for (std::uint64_t c = 0; c < card_; ++c) out.push_back(Element(this, c));
  return out;
}

void Ring::require_mine(Element x) const {
  if (&x.ring() != this)
    throw std::invalid_argument("mixed-ring operands");
}

void Ring::decode_mat(std::uint64_t code, std::uint64_t* d) const {
  for (std::uint32_t i = 0; i < dim_ * dim_; ++i) {
    d[i] = code % mod_;
    code /= mod_;
  }
}

std::uint64_t Ring::encode_mat(const std::uint64_t* d) const {
  std::uint64_t code = 0;
  for (std::uint32_t i = dim_ * dim_; i-- > 0;) code = code * mod_ + d[i];
  return code;
}

std::uint64_t Ring::add_formula(std::uint64_t x, std::uint64_t y) const {
  switch (spec_.kind) {
    case RingSpec::Kind::zmod:
      return (x + y) % mod_;
    case RingSpec::Kind::mat: {
      std::array<std::uint64_t, kMaxMatDigits> a, b;
      decode_mat(x, a.data());
      decode_mat(y, b.data());
      for (std::uint32_t i = 0; i < dim_ * dim_; ++i)
        a[i] = (a[i] + b[i]) % mod_;
      return encode_mat(a.data());
    }
    case RingSpec::Kind::prod: {
      std::uint64_t lc = left_->card_;
      return left_->add_code(x % lc, y % lc) +
             lc * right_->add_code(x / lc, y / lc);
    }
  }
  return 0;
}

std::uint64_t Ring::mul_formula(std::uint64_t x, std::uint64_t y) const {
  switch (spec_.kind) {
    case RingSpec::Kind::zmod:
      return (x * y) % mod_;
    case RingSpec::Kind::mat: {
      std::array<std::uint64_t, kMaxMatDigits> a, b, c;
      decode_mat(x, a.data());
      decode_mat(y, b.data());
      for (std::uint32_t r = 0; r < dim_; ++r) {
        for (std::uint32_t j = 0; j < dim_; ++j) {
          std::uint64_t acc = 0;
          for (std::uint32_t t = 0; t < dim_; ++t)
            acc += a[std::size_t(r) * dim_ + t] * b[std::size_t(t) * dim_ + j];
          c[std::size_t(r) * dim_ + j] = acc % mod_;
        }
      }
      return encode_mat(c.data());
    }
    case RingSpec::Kind::prod: {
      std::uint64_t lc = left_->card_;
      return left_->mul_code(x % lc, y % lc) +
             lc * right_->mul_code(x / lc, y / lc);
    }
  }
  return 0;
}

std::uint64_t Ring::add_code(std::uint64_t x, std::uint64_t y) const {
  if (!add_tab_.empty()) return add_tab_[x * card_ + y];
  return add_formula(x, y);
}

std::uint64_t Ring::mul_code(std::uint64_t x, std::uint64_t y) const {
  if (!mul_tab_.empty()) return mul_tab_[x * card_ + y];
  return mul_formula(x, y);
}

std::uint64_t Ring::neg_code(std::uint64_t x) const {
  if (!neg_tab_.empty()) return neg_tab_[x];
  return neg_formula(x);
}

std::uint64_t Ring::neg_formula(std::uint64_t x) const {
  switch (spec_.kind) {
    case RingSpec::Kind::zmod:
      return (mod_ - x) % mod_;
    case RingSpec::Kind::mat: {
      std::array<std::uint64_t, kMaxMatDigits> a;
      decode_mat(x, a.data());
      for (std::uint32_t i = 0; i < dim_ * dim_; ++i)
        a[i] = (mod_ - a[i]) % mod_;
      return encode_mat(a.data());
    }
    case RingSpec::Kind::prod: {
      std::uint64_t lc = left_->card_;
      return left_->neg_code(x % lc) + lc * right_->neg_code(x / lc);
    }
  }
  return 0;
}

std::uint64_t Ring::star_code(std::uint64_t x) const {
  if (!star_tab_.empty()) return star_tab_[x];
  return star_formula(x);
}

std::uint64_t Ring::star_formula(std::uint64_t x) const {
  switch (spec_.kind) {
    case RingSpec::Kind::zmod:
      return x;  // identity involution
    case RingSpec::Kind::mat: {
      std::array<std::uint64_t, kMaxMatDigits> d, t;
      decode_mat(x, d.data());
      for (std::uint32_t r = 0; r < dim_; ++r)
        for (std::uint32_t c = 0; c < dim_; ++c)
          t[std::size_t(c) * dim_ + r] = d[std::size_t(r) * dim_ + c];
      return encode_mat(t.data());
    }
    case RingSpec::Kind::prod: {
      std::uint64_t lc = left_->card_;
      return left_->star_code(x % lc) + lc * right_->star_code(x / lc);
    }
  }
  return 0;
}

Element Ring::add(Element x, Element y) const {
  require_mine(x);
  require_mine(y);
  return Element(this, add_code(x.code(), y.code()));
}

Element Ring::mul(Element x, Element y) const {
  require_mine(x);
  require_mine(y);
  return Element(this, mul_code(x.code(), y.code()));
}

Element Ring::neg(Element x) const {
  require_mine(x);
  return Element(this, neg_code(x.code()));
}

Element Ring::star(Element x) const {
  require_mine(x);
  return Element(this, star_code(x.code()));
}

Element Ring::pow(Element x, std::uint64_t m) const {
  require_mine(x);
  std::uint64_t acc = one_code_, base = x.code();
  while (m > 0) {
    if (m & 1) acc = mul_code(acc, base);
    base = mul_code(base, base);
    m >>= 1;
  }
  return Element(this, acc);
}

std::uint64_t Ring::residue(Element x) const {
  require_mine(x);
  if (spec_.kind != RingSpec::Kind::zmod)
    throw std::invalid_argument("residue() needs a zmod carrier");
  return x.code();
}

std::uint64_t Ring::entry(Element x, std::uint32_t r, std::uint32_t c) const {
  require_mine(x);
  if (spec_.kind != RingSpec::Kind::mat || r >= dim_ || c >= dim_)
    throw std::invalid_argument("entry() needs a mat carrier and valid index");
  std::array<std::uint64_t, kMaxMatDigits> d;
  decode_mat(x.code(), d.data());
  return d[std::size_t(r) * dim_ + c];
}

Element Ring::from_entries(const std::vector<std::uint64_t>& rm) const {
  if (spec_.kind != RingSpec::Kind::mat ||
      rm.size() != std::size_t(dim_) * dim_)
    throw std::invalid_argument("from_entries() needs k*k entries of a mat");
  std::array<std::uint64_t, kMaxMatDigits> d;
  for (std::size_t i = 0; i < rm.size(); ++i) d[i] = rm[i] % mod_;
  return Element(this, encode_mat(d.data()));
}

Element Ring::pair_first(Element x) const {
  require_mine(x);
  if (spec_.kind != RingSpec::Kind::prod)
    throw std::invalid_argument("pair_first() needs a prod carrier");
  return Element(left_.get(), x.code() % left_->card_);
}

Element Ring::pair_second(Element x) const {
  require_mine(x);
  if (spec_.kind != RingSpec::Kind::prod)
    throw std::invalid_argument("pair_second() needs a prod carrier");
  return Element(right_.get(), x.code() / left_->card_);
}

Element Ring::pair(Element l, Element r) const {
  if (spec_.kind != RingSpec::Kind::prod)
    throw std::invalid_argument("pair() needs a prod carrier");
  left_->require_mine(l);
  right_->require_mine(r);
  return Element(this, l.code() + left_->card_ * r.code());
}

const RingHandle& Ring::left_factor() const {
  if (spec_.kind != RingSpec::Kind::prod)
    throw std::invalid_argument("left_factor() needs a prod carrier");
  return left_;
}

const RingHandle& Ring::right_factor() const {
  if (spec_.kind != RingSpec::Kind::prod)
    throw std::invalid_argument("right_factor() needs a prod carrier");
  return right_;
}

Element operator+(Element x, Element y) { return x.ring().add(x, y); }
Element operator-(Element x, Element y) { return x.ring().sub(x, y); }
Element operator*(Element x, Element y) { return x.ring().mul(x, y); }
Element operator-(Element x) { return x.ring().neg(x); }

bool operator==(Element x, Element y) {
  if (&x.ring() != &y.ring())
    throw std::invalid_argument("mixed-ring operands");
  return x.code() == y.code();
}

bool operator!=(Element x, Element y) { return !(x == y); }

Element star(Element x) { return x.ring().star(x); }
Element pow(Element x, std::uint64_t m) { return x.ring().pow(x, m); }

std::optional<Element> left_invertible(Element x) {
  const Ring& r = x.ring();
  for (std::uint64_t t = 0; t < r.cardinality(); ++t) {
    Element cand = r.element(t);
    if (cand * x == r.one()) return cand;
  }
  return std::nullopt;
}

std::optional<Element> right_invertible(Element x) {
  const Ring& r = x.ring();
  for (std::uint64_t t = 0; t < r.cardinality(); ++t) {
    Element cand = r.element(t);
    if (x * cand == r.one()) return cand;
  }
  return std::nullopt;
}

std::optional<Element> invertible(Element x) {
  const Ring& r = x.ring();
  for (std::uint64_t t = 0; t < r.cardinality(); ++t) {
    Element cand = r.element(t);
    if (cand * x == r.one() && x * cand == r.one()) return cand;
  }
  return std::nullopt;
}

namespace {

Element parse_element_at(const Ring& ring, Cursor& c) {
  switch (ring.spec().kind) {
    case RingSpec::Kind::zmod: {
      bool negative = c.eat("-");
      std::uint64_t v = c.number() % ring.base_modulus();
      if (negative) v = (ring.base_modulus() - v) % ring.base_modulus();
      return ring.element(v);
    }
    case RingSpec::Kind::mat: {
      std::uint32_t k = ring.dim();
      std::vector<std::uint64_t> entries;
      entries.reserve(std::size_t(k) * k);
      if (!c.eat("[")) parse_fail("mat literal (expected [)", c.s);
      for (std::uint32_t r = 0; r < k; ++r) {
        if (r > 0 && !c.eat(",")) parse_fail("mat literal (expected ,)", c.s);
        if (!c.eat("[")) parse_fail("mat literal (expected [)", c.s);
        for (std::uint32_t j = 0; j < k; ++j) {
          if (j > 0 && !c.eat(",")) parse_fail("mat literal (expected ,)", c.s);
          bool negative = c.eat("-");
          std::uint64_t v = c.number() % ring.base_modulus();
          if (negative) v = (ring.base_modulus() - v) % ring.base_modulus();
          entries.push_back(v);
        }
        if (!c.eat("]")) parse_fail("mat literal (expected ])", c.s);
      }
      if (!c.eat("]")) parse_fail("mat literal (expected ])", c.s);
      return ring.from_entries(entries);
    }
    case RingSpec::Kind::prod: {
      if (!c.eat("(")) parse_fail("prod literal (expected ()", c.s);
      Element l = parse_element_at(*ring.left_factor(), c);
      if (!c.eat(";")) parse_fail("prod literal (expected ;)", c.s);
      Element r = parse_element_at(*ring.right_factor(), c);
      if (!c.eat(")")) parse_fail("prod literal (expected ))", c.s);
      return ring.pair(l, r);
    }
  }
  parse_fail("element literal", c.s);
}

}  // namespace

std::string format_element(Element x) {
  const Ring& ring = x.ring();
  switch (ring.spec().kind) {
    case RingSpec::Kind::zmod:
      return std::to_string(x.code());
    case RingSpec::Kind::mat: {
      std::string out = "[";
      for (std::uint32_t r = 0; r < ring.dim(); ++r) {
        out += (r == 0) ? "[" : ",[";
        for (std::uint32_t c = 0; c < ring.dim(); ++c) {
          if (c > 0) out += ",";
          out += std::to_string(ring.entry(x, r, c));
        }
        out += "]";
      }
      return out + "]";
    }
    case RingSpec::Kind::prod:
      return "(" + format_element(ring.pair_first(x)) + ";" +
             format_element(ring.pair_second(x)) + ")";
  }
  throw std::invalid_argument("malformed ring spec");
}

Element parse_element(const RingHandle& ring, std::string_view text) {
  Cursor c{text};
  Element e = parse_element_at(*ring, c);
  if (!c.done()) parse_fail("element literal (trailing input)", text);
  return e;
}

}  // namespace bcinv
