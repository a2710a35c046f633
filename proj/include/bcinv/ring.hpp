#pragma once

// Finite ring carriers with exact arithmetic, canonical element codes and a
// fixed involution per carrier:
//
//   zmod:<n>            residues mod n, identity involution
//   mat:<k>:zmod:<n>    k x k matrices over Z_n, transpose involution
//   prod:(<s>;<t>)      binary direct product, componentwise involution
//
// Every element of a carrier R is identified with a canonical code in
// [0, |R|).  The encoding is mixed-radix and little-endian:
//   zmod       code = residue
//   mat        row-major entries e_0..e_{k^2-1}, code = sum e_i * n^i
//              (so the identity matrix has code sum_j n^{j(k+1)})
//   prod       code = code_left + |L| * code_right
// Zero always has code 0.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcinv {

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

struct RingSpec {
  enum class Kind { zmod, mat, prod };

  Kind kind = Kind::zmod;
  std::uint64_t n = 0;  // modulus (zmod and mat base)
  std::uint32_t k = 0;  // matrix dimension (mat only)
  std::shared_ptr<const RingSpec> left, right;  // factors (prod only)

  static RingSpec zmod(std::uint64_t n);
  static RingSpec mat(std::uint32_t k, std::uint64_t n);
  static RingSpec prod(RingSpec l, RingSpec r);

  // Number of elements; throws std::invalid_argument on uint64 overflow.
  std::uint64_t cardinality() const;

  // Text grammar: zmod:<n> | mat:<k>:zmod:<n> | prod:(<spec>;<spec>)
  std::string to_string() const;
  static RingSpec parse(std::string_view text);
};

// A value of a ring, identified by its canonical code.  Elements are cheap
// to copy and remain valid while the RingHandle they came from is alive.
class Element {
 public:
  const Ring& ring() const { return *ring_; }
  std::uint64_t code() const { return code_; }

 private:
  friend class Ring;
  Element(const Ring* ring, std::uint64_t code) : ring_(ring), code_(code) {}
  const Ring* ring_;
  std::uint64_t code_;
};

// Immutable carrier.  Arithmetic is exact; small carriers are backed by
// precomputed operation tables.  Safe to share across threads.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static constexpr std::uint64_t kDefaultCardinalityCap = 10'000;

  const RingSpec& spec() const { return spec_; }
  std::uint64_t cardinality() const { return card_; }

  Element zero() const { return Element(this, 0); }
  Element one() const { return Element(this, one_code_); }
  Element element(std::uint64_t code) const;  // bounds-checked
  std::vector<Element> elements() const;      // all |R| elements, code order

  Element add(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element star(Element x) const;
  Element pow(Element x, std::uint64_t m) const;  // pow(x, 0) = one

  // Structured views.
  std::uint64_t residue(Element x) const;                     // zmod
  std::uint64_t entry(Element x, std::uint32_t r, std::uint32_t c) const;
  Element from_entries(const std::vector<std::uint64_t>& rm) const;  // mat
  Element pair_first(Element x) const;                        // prod
  Element pair_second(Element x) const;
  Element pair(Element l, Element r) const;
  const RingHandle& left_factor() const;                      // prod
  const RingHandle& right_factor() const;

  std::uint64_t base_modulus() const { return mod_; }  // zmod / mat
  std::uint32_t dim() const { return dim_; }           // mat

 private:
  friend RingHandle build_ring(const RingSpec&, std::uint64_t);
  explicit Ring(const RingSpec& spec, std::uint64_t cap);

  void require_mine(Element x) const;
  std::uint64_t add_code(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul_code(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg_code(std::uint64_t x) const;
  std::uint64_t star_code(std::uint64_t x) const;
  std::uint64_t add_formula(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul_formula(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg_formula(std::uint64_t x) const;
  std::uint64_t star_formula(std::uint64_t x) const;
  void decode_mat(std::uint64_t code, std::uint64_t* digits) const;
  std::uint64_t encode_mat(const std::uint64_t* digits) const;

  RingSpec spec_;
  std::uint64_t card_ = 0;
  std::uint64_t one_code_ = 0;
  std::uint64_t mod_ = 0;  // zmod modulus / mat base modulus
  std::uint32_t dim_ = 0;  // mat dimension
  RingHandle left_, right_;
  std::vector<std::uint64_t> powers_;  // n^0 .. n^{k^2} for mat digit access
  // Operation tables for small carriers (codes fit in uint32 well below the
  // table threshold).
  std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, star_tab_;
};

// Builds a carrier.  Throws std::invalid_argument for malformed specs,
// moduli < 2, dimensions < 1 and cardinalities above the cap.
RingHandle build_ring(const RingSpec& spec,
                      std::uint64_t cardinality_cap = Ring::kDefaultCardinalityCap);

// Operators require both operands from the same ring handle and throw
// std::invalid_argument otherwise.
Element operator+(Element x, Element y);
Element operator-(Element x, Element y);
Element operator*(Element x, Element y);
Element operator-(Element x);
bool operator==(Element x, Element y);
bool operator!=(Element x, Element y);
Element star(Element x);
Element pow(Element x, std::uint64_t m);

// Classical one-sided units: least-code t with t*x = 1 (resp. x*t = 1), or
// the two-sided inverse for invertible().
std::optional<Element> left_invertible(Element x);
std::optional<Element> right_invertible(Element x);
std::optional<Element> invertible(Element x);

// Element literal grammar: decimal integer (zmod, negatives reduced),
// [[r00,r01],[r10,r11]] row-major (mat), (<elt>;<elt>) (prod).
std::string format_element(Element x);
Element parse_element(const RingHandle& ring, std::string_view text);

}  // namespace bcinv
