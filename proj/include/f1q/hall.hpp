#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "f1q/representation.hpp"

namespace f1q {

// Finite integer combination of isomorphism classes, one witness per class.
class HallElement {
 public:
  struct Term {
    std::int64_t coeff = 0;
    Winding witness;
  };

  HallElement() = default;
  static HallElement basis(const Winding& m, std::int64_t coeff = 1);

  void add(const CanonicalKey& key, std::int64_t coeff, const Winding& witness);
  void add(const Winding& m, std::int64_t coeff = 1);
  void add(const HallElement& other, std::int64_t scale = 1);

  std::int64_t coeff(const CanonicalKey& key) const;
  std::int64_t coeff(const Winding& m) const;
  const std::map<CanonicalKey, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend HallElement operator+(HallElement a, const HallElement& b) {
    a.add(b, 1);
    return a;
  }
  friend HallElement operator-(HallElement a, const HallElement& b) {
    a.add(b, -1);
    return a;
  }
  // Equal coefficients on every key.
  friend bool operator==(const HallElement& a, const HallElement& b);

 private:
  std::map<CanonicalKey, Term> terms_;
};

class TensorElement {
 public:
  struct Term {
    std::int64_t coeff = 0;
    Winding left;
    Winding right;
  };
  using Key = std::pair<CanonicalKey, CanonicalKey>;

  void add(const Key& key, std::int64_t coeff, const Winding& left, const Winding& right);
  std::int64_t coeff(const Winding& left, const Winding& right) const;
  const std::map<Key, Term>& terms() const { return terms_; }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  std::map<Key, Term> terms_;
};

// Memo for products over one base; concurrent lookups, exclusive inserts.
class HallCache {
 public:
  std::optional<HallElement> find(const CanonicalKey& m, const CanonicalKey& n) const;
  void insert(const CanonicalKey& m, const CanonicalKey& n, HallElement value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<CanonicalKey, CanonicalKey>, HallElement> memo_;
};

// Extensions 0 -> n -> R -> m -> 0: arrows from color-sinks of m into
// color-sources of n, one class per isomorphism type (split one included).
std::vector<Winding> enumerate_extensions(const Winding& m, const Winding& n);

// Number of arrow-target-closed L <= r with L ~ n and r/L ~ m.
std::uint64_t subobject_count(const Winding& m, const Winding& n, const Winding& r);

HallElement hall_product(const Winding& m, const Winding& n, HallCache* cache = nullptr);
HallElement hall_product(const HallElement& x, const HallElement& y, HallCache* cache = nullptr);

// Counts short exact sequences directly and compares with
// subobject_count * |Aut m| * |Aut n|.
bool ses_count_check(const Winding& m, const Winding& n, const Winding& r);

TensorElement coproduct(const HallElement& e);
TensorElement tensor_product(const TensorElement& x, const TensorElement& y, HallCache* cache = nullptr);

HallElement commutator(const Winding& m, const Winding& n, HallCache* cache = nullptr);

// Sum over base arrows of one-arrow gluings s -> t minus t -> s.
HallElement glue_bracket(const Winding& s, const Winding& t);
// All one-arrow gluings from s to t, one term per added arrow.
HallElement one_arrow_gluings(const Winding& s, const Winding& t);

HallElement mod_p(const HallElement& e);
HallElement epsilon_phi(const HallElement& e, std::string_view arrow_id);
HallElement epsilon_phi(const HallElement& e, std::string_view arrow_id,
                        std::shared_ptr<const Quiver> reversed_base);

std::size_t count_nonsplit_ext(const Winding& s, const Winding& t);

struct GeneratorDecomposition {
  Winding t;        // remainder
  Winding t_prime;  // component of u
  std::string alpha_tilde;
  std::string beta_tilde;
  HallElement product;   // [t] . [t_prime]
  HallElement expected;  // [t_prime + t] + [t with alpha~] + [t with beta~] + [m]
  bool verified = false;
};
GeneratorDecomposition generator_decomposition(const Winding& m, HallCache* cache = nullptr);

}  // namespace f1q
