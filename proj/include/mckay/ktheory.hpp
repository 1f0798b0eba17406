#ifndef MCKAY_KTHEORY_HPP_
#define MCKAY_KTHEORY_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t, uint64_t
#include <map>      // for map
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "mckay/heights.hpp"     // for HeightFunction, FlipDirection
#include "mckay/mckaygraph.hpp"  // for IntMatrix
#include "mckay/molien.hpp"      // for HomDims

namespace mckay {

  // Integer combination of symbols [W_i (x) O(d)] in the free abelian group.
  class P1Class {
   public:
    using Key = std::pair<std::size_t, std::int64_t>;  // (irrep, twist)

    P1Class() = default;
    static P1Class symbol(std::size_t irrep, std::int64_t twist, std::int64_t coeff = 1);

    std::map<Key, std::int64_t> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    std::int64_t coeff(std::size_t irrep, std::int64_t twist) const;

    P1Class& operator+=(P1Class const& o);
    P1Class& operator-=(P1Class const& o);
    P1Class& operator*=(std::int64_t k);

    friend P1Class operator+(P1Class a, P1Class const& b) {
      return a += b;
    }
    friend P1Class operator-(P1Class a, P1Class const& b) {
      return a -= b;
    }
    friend P1Class operator*(std::int64_t k, P1Class a) {
      return a *= k;
    }
    P1Class operator-() const {
      return -1 * *this;
    }
    // Equality in the free group, not in K_0; see K0Lattice::equal.
    friend bool operator==(P1Class const&, P1Class const&) = default;

    // "W0(0) - 2 W1(-1)"
    std::string to_string() const;

   private:
    void                        add(Key const& k, std::int64_t c);
    std::map<Key, std::int64_t> _terms;
  };

  // Classes of the simples E_i^h of the heart attached to h.
  struct SimpleFamily {
    HeightFunction       height;
    std::vector<P1Class> classes;
  };

  struct TwistFlipEntry {
    std::size_t j;
    P1Class     twisted;    // T_{E_i}(E_j^h) from the form
    P1Class     recursion;  // E_j of the flipped height by the flip rule
    P1Class     duality;    // E_j of the flipped height solved from duality
    bool        ok;
  };

  struct TwistFlipReport {
    bool                        pass = true;
    std::size_t                 vertex = 0;
    FlipDirection               direction = FlipDirection::minus;
    std::vector<TwistFlipEntry> entries;
  };

  struct DualBasesReport {
    bool        pass = true;
    std::string witness;
  };

  // K_0 of equivariant sheaves on P^1, seen through the Euler pairing. Two
  // classes are equal when they pair identically against the probes
  // [F_k^p] and [F_k^p (x) O(2)].
  class K0Lattice {
   public:
    K0Lattice(HomDims const& homs, IntMatrix n, std::vector<int> parity);

    std::size_t rank() const noexcept {
      return _n.size();
    }
    IntMatrix const& graph() const noexcept {
      return _n;
    }
    HeightFunction parity_height() const;

    // chi(W_i(a), W_j(b)) = hom(i, j, b - a) - hom(j, i, a - b - 2),
    // extended bilinearly.
    std::int64_t euler_char(P1Class const& x, P1Class const& y) const;
    // chi(x, y) + chi(y, x)
    std::int64_t cartan_form(P1Class const& x, P1Class const& y) const;

    std::vector<std::int64_t> probe_vector(P1Class const& x) const;
    bool                      equal(P1Class const& x, P1Class const& y) const;

    // [F_i^h] = [W_i (x) O(h(i))]
    static P1Class f_class(HeightFunction const& h, std::size_t i);

    // Solves chi([F_k^h], X_i) = delta_ki over the symbols W_j(h(j)) and
    // W_j(h(j) - 2). PreconditionError if that window is too small.
    SimpleFamily dual_family(HeightFunction const& h) const;
    SimpleFamily parity_family() const;

    // Flip at a source (minus) or sink (plus) of f.height:
    // E_i -> -E_i, E_j -> E_j + n_ij E_i for neighbours, others fixed.
    SimpleFamily flip_family(SimpleFamily const& f, std::size_t i, FlipDirection dir) const;
    // Parity family pushed along flip_sequence(parity, h).
    SimpleFamily simple_family(HeightFunction const& h) const;

    // Coordinates chi([F_k^h], x) of x in the E^h basis; PreconditionError
    // if x is not their combination.
    std::vector<std::int64_t> coordinates(SimpleFamily const& f, P1Class const& x) const;

    // x - <E_i, x> E_i
    P1Class twist_class(std::size_t i, SimpleFamily const& f, P1Class const& x) const;

    // Twist at i against the family of the flipped height, at a source
    // (sigma^-) or a sink (sigma^+, where the inverse twist acts the same on
    // K_0).
    TwistFlipReport verify_twist_vs_flip(HeightFunction const& h, std::size_t i) const;

    DualBasesReport verify_dual_bases(HeightFunction const& h) const;

    // Row j holds the coordinates of to.classes[j] in the basis `from`.
    IntMatrix basis_change(SimpleFamily const& from, SimpleFamily const& to) const;

   private:
    void check_class(P1Class const& x) const;

    HomDims const&       _homs;
    IntMatrix            _n;
    std::vector<int>     _parity;
    std::vector<P1Class> _probes;
  };

  struct WeylCheck {
    std::string name;
    bool        pass;
    std::string witness;
  };

  struct WeylReport {
    bool                   pass = true;
    std::vector<WeylCheck> checks;
  };

  // Simple reflections of the root lattice with Cartan matrix 2 - n, acting on
  // coordinates: s_i(x) = x - (C x)_i e_i.
  IntMatrix simple_reflection(IntMatrix const& n, std::size_t i);

  // s_i^2 = 1, (s_i s_j)^3 = 1 on single edges, (s_i s_j)^2 = 1 off edges,
  // (s_i s_j)^k != 1 for k <= 12 on double edges, s_i delta = delta, and
  // the form is preserved under random words on random vectors.
  WeylReport weyl_checks(IntMatrix const&                 n,
                         std::vector<std::int64_t> const& delta,
                         std::uint64_t                    seed = 1);

  // +1 or -1 for unimodular integer matrices, 0 otherwise.
  std::int64_t unimodular_sign(IntMatrix const& m);

}  // namespace mckay

#endif  // MCKAY_KTHEORY_HPP_
