#include "mckay/chartab.hpp"

#include <algorithm>   // for sort, swap
#include <cstdlib>     // for getenv
#include <fstream>     // for ifstream, ofstream
#include <functional>  // for hash
#include <numeric>     // for lcm
#include <random>      // for mt19937_64
#include <sstream>     // for ostringstream
#include <thread>      // for this_thread

#include <unistd.h>  // for getpid

#include "mckay/error.hpp"
#include "mckay/serialize.hpp"
#include "mckay/version.hpp"

namespace mckay {

  ////////////////////////////////////////////////////////////////////////
  // Class constants
  ////////////////////////////////////////////////////////////////////////

  ClassConstants class_constants(MatrixGroup const& g) {
    std::size_t    r = g.num_classes();
    ClassConstants a(r, std::vector<std::vector<std::int64_t>>(
                            r, std::vector<std::int64_t>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t z = g.classes()[k].representative;
      for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t y = g.product(g.inverse(x), z);
        ++a[g.class_of(x)][g.class_of(y)][k];
      }
    }
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic mod p
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using u64    = std::uint64_t;
    using Vec    = std::vector<u64>;
    using ModMat = std::vector<Vec>;  // row-major

    u64 powmod(u64 b, u64 e, u64 p) {
      u64 r = 1;
      b %= p;
      for (; e > 0; e >>= 1, b = b * b % p) {
        if (e & 1) {
          r = r * b % p;
        }
      }
      return r;
    }

    u64 invmod(u64 a, u64 p) {
      if (a % p == 0) {
        throw InternalError("modular inverse of zero");
      }
      return powmod(a, p - 2, p);
    }

    u64 reduce(std::int64_t x, u64 p) {
      std::int64_t r = x % static_cast<std::int64_t>(p);
      return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }

    bool is_prime(u64 n) {
      if (n < 2) {
        return false;
      }
      for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    // In place; returns pivot columns.
    std::vector<std::size_t> rref_mod(ModMat& m, u64 p) {
      std::vector<std::size_t> pivots;
      std::size_t              rows = m.size();
      std::size_t              cols = rows == 0 ? 0 : m[0].size();
      std::size_t              row  = 0;
      for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) {
          ++piv;
        }
        if (piv == rows) {
          continue;
        }
        std::swap(m[piv], m[row]);
        u64 inv = invmod(m[row][col], p);
        for (auto& x : m[row]) {
          x = x * inv % p;
        }
        for (std::size_t r = 0; r < rows; ++r) {
          if (r == row || m[r][col] == 0) {
            continue;
          }
          u64 f = m[r][col];
          for (std::size_t c = col; c < cols; ++c) {
            m[r][c] = (m[r][c] + (p - f) * m[row][c]) % p;
          }
        }
        pivots.push_back(col);
        ++row;
      }
      return pivots;
    }

    // Basis of the kernel of m (rows x cols), as vectors of length cols.
    std::vector<Vec> nullspace_mod(ModMat m, u64 p) {
      std::size_t       cols   = m.empty() ? 0 : m[0].size();
      auto              pivots = rref_mod(m, p);
      std::vector<bool> is_pivot(cols, false);
      for (auto c : pivots) {
        is_pivot[c] = true;
      }
      std::vector<Vec> basis;
      for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
          continue;
        }
        Vec v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
          v[pivots[r]] = (p - m[r][f]) % p;
        }
        basis.push_back(std::move(v));
      }
      return basis;
    }

    struct SplitFailure {};

    // Common eigenvectors of the class matrices, one per irreducible
    // character.
    std::vector<Vec> split(std::vector<ModMat> const& mats,
                           u64                        p,
                           std::mt19937_64&           rng,
                           unsigned                   max_attempts) {
      std::size_t      r = mats[0].size();
      std::vector<Vec> id_basis(r, Vec(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        id_basis[i][i] = 1;
      }
      std::vector<std::vector<Vec>> pending{id_basis}, done;
      std::uniform_int_distribution<u64> coeff(0, p - 1);

      for (unsigned attempt = 0; !pending.empty(); ++attempt) {
        if (attempt >= max_attempts) {
          throw SplitFailure{};
        }
        std::vector<std::vector<Vec>> next;
        for (auto const& basis : pending) {
          std::size_t s = basis.size();
          // X = sum_j c_j M_j
          ModMat x(r, Vec(r, 0));
          for (auto const& m : mats) {
            u64 c = coeff(rng);
            for (std::size_t i = 0; i < r; ++i) {
              for (std::size_t j = 0; j < r; ++j) {
                x[i][j] = (x[i][j] + c * m[i][j]) % p;
              }
            }
          }
          // Restrict to the invariant subspace: X B = B Z; solve [B | X B].
          ModMat aug(r, Vec(2 * s, 0));
          for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = 0; c < s; ++c) {
              aug[i][c] = basis[c][i];
              u64 acc   = 0;
              for (std::size_t k = 0; k < r; ++k) {
                acc = (acc + x[i][k] * basis[c][k]) % p;
              }
              aug[i][s + c] = acc;
            }
          }
          auto pivots = rref_mod(aug, p);
          if (pivots.size() != s || pivots.back() >= s) {
            throw InternalError("class matrices do not preserve a subspace");
          }
          ModMat z(s, Vec(s));
          for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t c = 0; c < s; ++c) {
              z[i][c] = aug[i][s + c];
            }
          }
          std::size_t found = 0;
          for (u64 lambda = 0; lambda < p && found < s; ++lambda) {
            ModMat shifted = z;
            for (std::size_t i = 0; i < s; ++i) {
              shifted[i][i] = (shifted[i][i] + p - lambda) % p;
            }
            auto kernel = nullspace_mod(shifted, p);
            if (kernel.empty()) {
              continue;
            }
            found += kernel.size();
            std::vector<Vec> sub;
            for (auto const& w : kernel) {
              Vec v(r, 0);
              for (std::size_t c = 0; c < s; ++c) {
                for (std::size_t i = 0; i < r; ++i) {
                  v[i] = (v[i] + w[c] * basis[c][i]) % p;
                }
              }
              sub.push_back(std::move(v));
            }
            (sub.size() == 1 ? done : next).push_back(std::move(sub));
          }
          if (found != s) {
            // not diagonalizable over F_p, so p is unusable
            throw SplitFailure{};
          }
        }
        pending = std::move(next);
      }
      std::vector<Vec> out;
      for (auto& d : done) {
        out.push_back(std::move(d[0]));
      }
      return out;
    }

    struct RawCharacter {
      std::int64_t                           dim;
      std::vector<std::vector<std::int64_t>> m;  // m[k][j]
    };

    bool canonical_less(RawCharacter const& a, RawCharacter const& b) {
      if (a.dim != b.dim) {
        return a.dim < b.dim;
      }
      return a.m > b.m;
    }

    std::vector<RawCharacter> dixon_mod_p(MatrixGroup const&    g,
                                          ClassConstants const& a,
                                          u64                   p,
                                          std::mt19937_64&      rng,
                                          unsigned              max_attempts) {
      std::size_t r     = g.num_classes();
      std::size_t order = g.order();
      std::size_t e     = g.exponent();

      std::vector<ModMat> mats(r, ModMat(r, Vec(r)));
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          for (std::size_t l = 0; l < r; ++l) {
            mats[j][k][l] = reduce(a[j][k][l], p);
          }
        }
      }
      auto vectors = split(mats, p, rng, max_attempts);
      if (vectors.size() != r) {
        throw DefectError("found " + std::to_string(vectors.size())
                          + " characters for " + std::to_string(r)
                          + " classes");
      }

      // primitive e-th root of unity mod p
      u64 gen = 2;
      for (;; ++gen) {
        bool primitive = true;
        for (u64 q = 2, n = p - 1; q <= n; ++q) {
          if (n % q == 0) {
            if (powmod(gen, (p - 1) / q, p) == 1) {
              primitive = false;
              break;
            }
            while (n % q == 0) {
              n /= q;
            }
          }
        }
        if (primitive) {
          break;
        }
      }
      u64 z     = powmod(gen, (p - 1) / e, p);
      u64 z_inv = invmod(z, p);
      u64 e_inv = invmod(e, p);

      std::int64_t bound = 1;
      while (static_cast<std::size_t>((bound + 1) * (bound + 1)) <= order) {
        ++bound;
      }

      std::vector<RawCharacter> out;
      for (auto& v : vectors) {
        u64 s = invmod(v[0], p);
        for (auto& x : v) {
          x = x * s % p;
        }
        // d^2 = |G| / sum_k w_k w_k* / |C_k|
        u64 sum = 0;
        for (std::size_t k = 0; k < r; ++k) {
          sum = (sum
                 + v[k] * v[g.inverse_class(k)] % p
                       * invmod(g.class_size(k), p))
                % p;
        }
        u64          d2  = order % p * invmod(sum, p) % p;
        std::int64_t dim = 0;
        for (std::int64_t d = 1; d <= bound; ++d) {
          if (static_cast<u64>(d * d) % p == d2) {
            dim = d;
            break;
          }
        }
        if (dim == 0) {
          throw DefectError("no character degree d with d^2 = " + std::to_string(d2)
                            + " mod " + std::to_string(p));
        }
        Vec chi(r);
        for (std::size_t k = 0; k < r; ++k) {
          chi[k] = static_cast<u64>(dim) * v[k] % p
                   * invmod(g.class_size(k), p) % p;
        }
        RawCharacter rc{dim, {}};
        for (std::size_t k = 0; k < r; ++k) {
          std::vector<std::int64_t> m(e);
          for (std::size_t j = 0; j < e; ++j) {
            u64 acc = 0;
            u64 w   = powmod(z_inv, j, p);  // z^{-j}
            u64 wl  = 1;                    // z^{-jl}
            for (std::size_t l = 0; l < e; ++l) {
              acc = (acc + chi[g.class_power(k, static_cast<long>(l))] * wl) % p;
              wl  = wl * w % p;
            }
            u64 mj = acc * e_inv % p;
            if (mj > static_cast<u64>(dim)) {
              throw DefectError("eigenvalue multiplicity out of range for p = "
                                + std::to_string(p));
            }
            m[j] = static_cast<std::int64_t>(mj);
          }
          rc.m.push_back(std::move(m));
        }
        out.push_back(std::move(rc));
      }
      return out;
    }

    std::string fnv1a_hex(std::string const& s) {
      std::uint64_t h = 1469598103934665603ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      std::ostringstream os;
      os << std::hex << h;
      return os.str();
    }
  }  // namespace

  std::uint64_t dixon_prime(std::size_t order, std::size_t exponent,
                            unsigned skip) {
    for (u64 p = exponent + 1;; p += exponent) {
      if (p * p > 4 * order && is_prime(p)) {
        if (skip == 0) {
          return p;
        }
        --skip;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // CharacterTable
  ////////////////////////////////////////////////////////////////////////

  CycloNum CharacterTable::inner(std::vector<CycloNum> const& a,
                                 std::vector<CycloNum> const& b) const {
    CycloNum s;
    for (std::size_t k = 0; k < num_classes(); ++k) {
      s += CycloNum(static_cast<std::int64_t>(class_sizes[k])) * a[k].conj()
           * b[k];
    }
    return s * CycloNum(Rational(1, static_cast<std::int64_t>(group_order)));
  }

  bool operator==(CharacterTable const& x, CharacterTable const& y) {
    return x.group_order == y.group_order && x.class_sizes == y.class_sizes
           && x.chi == y.chi && x.dims == y.dims && x.trivial == y.trivial
           && x.defining == y.defining && x.defining_index == y.defining_index;
  }

  namespace {
    void fill_group_data(CharacterTable& t, MatrixGroup const& g) {
      t.group_order = g.order();
      t.exponent    = g.exponent();
      t.class_sizes.clear();
      t.inverse_class.clear();
      for (std::size_t k = 0; k < g.num_classes(); ++k) {
        t.class_sizes.push_back(g.class_size(k));
        t.inverse_class.push_back(g.inverse_class(k));
      }
      t.defining.clear();
      for (auto const& c : g.classes()) {
        t.defining.push_back(trace(g.element(c.representative)).lift(t.conductor));
      }
      t.defining_index.reset();
      for (std::size_t i = 0; i < t.chi.size(); ++i) {
        if (t.chi[i] == t.defining) {
          t.defining_index = i;
        }
      }
    }
  }  // namespace

  CharacterTable dixon_character_table(MatrixGroup const&  g,
                                       DixonOptions const& opts) {
    ClassConstants a = class_constants(g);
    std::size_t    e = g.exponent();
    for (unsigned skip = opts.prime_skip; skip < opts.prime_skip + 8; ++skip) {
      u64             p = dixon_prime(g.order(), e, skip);
      std::mt19937_64 rng(opts.seed + p);
      std::vector<RawCharacter> raw;
      try {
        raw = dixon_mod_p(g, a, p, rng, opts.max_attempts);
      } catch (SplitFailure const&) {
        continue;
      }
      std::sort(raw.begin(), raw.end(), canonical_less);
      auto trivial = std::find_if(raw.begin(), raw.end(), [](auto const& c) {
        return c.dim == 1
               && std::all_of(c.m.begin(), c.m.end(),
                              [](auto const& m) { return m[0] == 1; });
      });
      if (trivial == raw.end()) {
        throw DefectError("no trivial character found");
      }
      std::rotate(raw.begin(), trivial, trivial + 1);

      CharacterTable t;
      t.conductor = std::lcm(static_cast<unsigned>(e), g.conductor());
      t.prime     = p;
      t.seed      = opts.seed;
      for (auto const& c : raw) {
        std::vector<CycloNum> row;
        for (auto const& m : c.m) {
          std::vector<Rational> coeffs(m.begin(), m.end());
          row.push_back(CycloNum::from_exponents(static_cast<unsigned>(e), coeffs)
                            .lift(t.conductor));
        }
        t.chi.push_back(std::move(row));
        t.dims.push_back(c.dim);
      }
      fill_group_data(t, g);
      return t;
    }
    throw InternalError("eigenspace splitting failed for 8 primes starting at "
                        + std::to_string(dixon_prime(g.order(), e, opts.prime_skip)));
  }

  std::vector<std::int64_t> eigenvalue_multiplicities(CharacterTable const& t,
                                                      MatrixGroup const&    g,
                                                      std::size_t           i,
                                                      std::size_t           k) {
    std::size_t           e = g.exponent();
    unsigned              L = std::lcm(t.conductor, static_cast<unsigned>(e));
    std::vector<std::int64_t> m(e);
    for (std::size_t j = 0; j < e; ++j) {
      CycloNum acc;
      for (std::size_t l = 0; l < e; ++l) {
        acc += t.chi[i][g.class_power(k, static_cast<long>(l))]
               * CycloNum::zeta(L, -static_cast<std::int64_t>(j * l * (L / e)));
      }
      acc *= CycloNum(Rational(1, static_cast<std::int64_t>(e)));
      m[j] = acc.to_rational().to_int64();
    }
    return m;
  }

  std::optional<std::string> verify_character_table(CharacterTable const& t,
                                                    MatrixGroup const&    g) {
    std::size_t r = t.num_classes();
    if (t.num_irreps() != r || g.num_classes() != r) {
      return "number of irreducible characters " + std::to_string(t.num_irreps())
             + " differs from the number of classes " + std::to_string(r);
    }
    std::int64_t sum_sq = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (t.dims[i] < 1 || t.chi[i][0] != CycloNum(t.dims[i])) {
        return "character " + std::to_string(i) + " has chi(1) = "
               + t.chi[i][0].to_string() + " but degree "
               + std::to_string(t.dims[i]);
      }
      sum_sq += t.dims[i] * t.dims[i];
      for (std::size_t k = 0; k < r; ++k) {
        for (auto const& c : t.chi[i][k].coeffs()) {
          if (!c.is_integer()) {
            return "chi_" + std::to_string(i) + " on class " + std::to_string(k)
                   + " = " + t.chi[i][k].to_string()
                   + " is not an algebraic integer";
          }
        }
      }
    }
    if (sum_sq != static_cast<std::int64_t>(t.group_order)) {
      return "sum of squared degrees " + std::to_string(sum_sq) + " != |G| = "
             + std::to_string(t.group_order);
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (!t.chi[t.trivial][k].is_rational()
          || t.chi[t.trivial][k].to_rational() != Rational(1)) {
        return "trivial character is not 1 on class " + std::to_string(k);
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < r; ++j) {
        CycloNum ip = t.inner(t.chi[i], t.chi[j]);
        if (ip != CycloNum(i == j ? 1 : 0)) {
          return "row orthogonality fails for (" + std::to_string(i) + ", "
                 + std::to_string(j) + "): " + ip.to_string();
        }
      }
    }
    std::vector<std::vector<CycloNum>> conj(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) {
        conj[i].push_back(t.chi[i][k].conj());
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = k; l < r; ++l) {
        CycloNum s;
        for (std::size_t i = 0; i < r; ++i) {
          s += t.chi[i][k] * conj[i][l];
        }
        std::int64_t expected
            = k == l ? static_cast<std::int64_t>(g.centralizer_order(k)) : 0;
        if (s != CycloNum(expected)) {
          return "column orthogonality fails for classes (" + std::to_string(k)
                 + ", " + std::to_string(l) + "): " + s.to_string();
        }
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (t.defining[k] != trace(g.element(g.classes()[k].representative))) {
        return "defining character differs from the trace on class "
               + std::to_string(k);
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Disk cache
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::filesystem::path cache_file(std::filesystem::path const& dir,
                                     std::string const&           key) {
      return dir / ("chartab-" + fnv1a_hex(key) + ".json");
    }

    std::optional<CharacterTable> load_cached(std::filesystem::path const& file,
                                              std::string const&           key,
                                              MatrixGroup const&           g) {
      std::ifstream in(file);
      if (!in) {
        return std::nullopt;
      }
      try {
        json j = json::parse(in);
        if (j.at("key").get<std::string>() != key) {
          return std::nullopt;
        }
        CharacterTable t;
        t.conductor = j.at("conductor").get<unsigned>();
        t.prime     = j.at("prime").get<std::uint64_t>();
        t.seed      = j.at("seed").get<std::uint64_t>();
        t.trivial   = j.at("trivial").get<std::size_t>();
        t.dims      = j.at("dims").get<std::vector<std::int64_t>>();
        for (auto const& row : j.at("chi")) {
          std::vector<CycloNum> r;
          for (auto const& x : row) {
            r.push_back(cyclo_from_json(x).lift(t.conductor));
          }
          t.chi.push_back(std::move(r));
        }
        fill_group_data(t, g);
        if (verify_character_table(t, g)) {
          return std::nullopt;
        }
        return t;
      } catch (std::exception const&) {
        return std::nullopt;
      }
    }

    void store_cached(std::filesystem::path const& dir,
                      std::filesystem::path const& file,
                      std::string const&           key,
                      CharacterTable const&        t) {
      json chi = json::array();
      for (auto const& row : t.chi) {
        json r = json::array();
        for (auto const& x : row) {
          r.push_back(to_json(x));
        }
        chi.push_back(std::move(r));
      }
      json j{{"key", key},
             {"conductor", t.conductor},
             {"prime", t.prime},
             {"seed", t.seed},
             {"trivial", t.trivial},
             {"dims", t.dims},
             {"chi", std::move(chi)}};
      std::filesystem::create_directories(dir);
      auto tmp = file;
      tmp += ".tmp." + std::to_string(::getpid()) + "."
             + std::to_string(
                 std::hash<std::thread::id>{}(std::this_thread::get_id()));
      {
        std::ofstream out(tmp);
        out << j.dump(1) << '\n';
        if (!out) {
          throw ResourceError("cannot write cache file " + tmp.string());
        }
      }
      std::filesystem::rename(tmp, file);
    }
  }  // namespace

  CharacterTable
  character_table(MatrixGroup const&                          g,
                  std::optional<std::filesystem::path> const& cache_dir,
                  DixonOptions const&                         opts) {
    if (!cache_dir) {
      return dixon_character_table(g, opts);
    }
    std::string key = g.descriptor().to_string() + "|" + version + "|skip="
                      + std::to_string(opts.prime_skip);
    auto file = cache_file(*cache_dir, key);
    if (auto t = load_cached(file, key, g)) {
      return *t;
    }
    CharacterTable t = dixon_character_table(g, opts);
    store_cached(*cache_dir, file, key, t);
    return t;
  }

  std::optional<std::filesystem::path> cache_dir_from_env() {
    char const* v = std::getenv("MCKAY_CACHE_DIR");
    if (v == nullptr || *v == '\0') {
      return std::nullopt;
    }
    return std::filesystem::path(v);
  }

}  // namespace mckay
