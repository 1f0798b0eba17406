#include "mckay/acceptance.hpp"

#include <future>  // for async, promise, shared_future

#include "mckay/checks.hpp"
#include "mckay/error.hpp"

namespace mckay {

  std::shared_ptr<Instance const> InstancePool::get(std::string const& descriptor) {
    std::shared_future<std::shared_ptr<Instance const>> fut;
    std::promise<std::shared_ptr<Instance const>>       mine;
    bool                                                build = false;
    {
      std::lock_guard lock(_mutex);
      auto            it = _pending.find(descriptor);
      if (it == _pending.end()) {
        fut   = mine.get_future().share();
        build = true;
        _pending.emplace(descriptor, fut);
      } else {
        fut = it->second;
      }
    }
    if (build) {
      try {
        DixonOptions o;
        o.seed = _opts.seed;
        mine.set_value(make_instance(descriptor, _opts.cache_dir, o));
      } catch (...) {
        mine.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

  namespace {
    // Collects per-group checks under one criterion; witness maps each
    // group to its sub-check witnesses.
    struct Collector {
      Check out;

      Collector(std::string name, std::string ref) {
        out.name      = std::move(name);
        out.paper_ref = std::move(ref);
        out.witness   = json::object();
      }

      void add(std::string const& group, Check const& c) {
        out.pass = out.pass && c.pass;
        json& g  = out.witness[group];
        g[c.name] = c.pass ? c.witness : json{{"FAILED", c.witness}};
      }
    };

    std::vector<std::string> range(std::string const& prefix, unsigned lo, unsigned hi) {
      std::vector<std::string> v;
      for (unsigned k = lo; k <= hi; ++k) {
        v.push_back(prefix + std::to_string(k));
      }
      return v;
    }

    std::vector<std::string> built_groups() {
      auto g = range("cyclic:", 2, 12);
      for (auto const& s : range("bd:", 1, 6)) {
        g.push_back(s);
      }
      for (auto s : {"2T", "2O", "2I"}) {
        g.emplace_back(s);
      }
      return g;
    }

    std::vector<HeightFunction> heights_of(Instance const& inst) {
      return enumerate_heights(inst.graph, inst.require_parity(), 2);
    }

    Check c1(InstancePool& pool) {
      Collector c("c1-ade-classification",
                  "McKay graphs are affine ADE of the expected type with imaginary "
                  "root the dimension vector");
      for (auto const& g : built_groups()) {
        c.add(g, classification_check(*pool.get(g)));
      }
      return c.out;
    }

    Check c2(InstancePool& pool) {
      Collector c("c2-koszul-molien",
                  "S(t) E(-t) = Id as exact rational function matrices");
      auto      gs = range("cyclic:", 2, 6);
      for (auto s : {"bd:2", "bd:3", "2T"}) {
        gs.emplace_back(s);
      }
      for (auto const& g : gs) {
        c.add(g, molien_koszul_check(*pool.get(g)));
      }
      return c.out;
    }

    Check c3(InstancePool& pool) {
      Collector    c("c3-character-tables",
                     "orthogonality, sum of squared degrees, and independence of the "
                     "prime for every built group");
      DixonOptions o;
      o.seed = pool.options().seed;
      for (auto const& g : built_groups()) {
        c.add(g, chartab_check(*pool.get(g), o));
      }
      return c.out;
    }

    Check c4(InstancePool& pool) {
      Collector c("c4-kirillov",
                  "path counts in the height quiver equal hom dimensions for every "
                  "canonical height");
      for (auto g : {"cyclic:2", "cyclic:4", "bd:2"}) {
        auto inst = pool.get(g);
        c.add(g, kirillov_all_check(*inst, heights_of(*inst)));
      }
      return c.out;
    }

    Check c5(InstancePool& pool) {
      Collector c("c5-ext-vanishing",
                  "Ext^1 vanishing between the F_k for every canonical height, d <= 5");
      for (auto g : {"cyclic:4", "bd:2"}) {
        auto inst = pool.get(g);
        c.add(g, ext_all_check(*inst, heights_of(*inst), 5));
      }
      return c.out;
    }

    Check c6(InstancePool& pool) {
      Collector c("c6-preprojective-molien",
                  "preprojective Hilbert table equals hom dimensions through degree 6, "
                  "and so does graded_dim_Bh for every canonical height");
      for (auto g : {"cyclic:2", "cyclic:3", "cyclic:4", "bd:2"}) {
        auto inst = pool.get(g);
        auto hs   = inst->has_parity() ? heights_of(*inst) : std::vector<HeightFunction>{};
        c.add(g, hilbert_match_check(*inst, 6, hs));
      }
      return c.out;
    }

    Check c7(InstancePool& pool) {
      Collector c("c7-quadratic-duality",
                  "double dual is the identity and dual(Ext) is the preprojective "
                  "presentation on A_n~, n <= 4");
      for (auto const& g : range("cyclic:", 2, 5)) {
        c.add(g, duality_check(pool.get(g)->graph.n));
      }
      return c.out;
    }

    Check c8(InstancePool& pool) {
      Collector c("c8-bgp-reflections",
                  "100 seeded reflectable representations per orientation: dimension "
                  "vectors reflect and round trips are isomorphic");
      for (auto g : {"cyclic:4", "bd:2"}) {
        auto inst = pool.get(g);
        c.add(g, bgp_check(*inst, heights_of(*inst), 100, pool.options().seed));
      }
      return c.out;
    }

    Check c9(InstancePool& pool) {
      Collector c("c9-lattice",
                  "Cartan form, dual bases, twists versus flips, and Weyl group "
                  "relations on K_0");
      for (auto g : {"cyclic:2", "cyclic:4", "bd:2", "2T"}) {
        auto inst = pool.get(g);
        for (auto const& x : lattice_checks(*inst, heights_of(*inst), pool.options().seed)) {
          c.add(g, x);
        }
      }
      c.add("cyclic:3", weyl_check(*pool.get("cyclic:3"), pool.options().seed));
      return c.out;
    }
  }  // namespace

  std::vector<Criterion> acceptance_criteria() {
    return {{"c1-ade-classification", c1}, {"c2-koszul-molien", c2},
            {"c3-character-tables", c3},   {"c4-kirillov", c4},
            {"c5-ext-vanishing", c5},      {"c6-preprojective-molien", c6},
            {"c7-quadratic-duality", c7},  {"c8-bgp-reflections", c8},
            {"c9-lattice", c9}};
  }

  std::vector<Check> run_acceptance(AcceptanceOptions const& opts, bool parallel) {
    InstancePool pool(opts);
    auto         crit = acceptance_criteria();
    auto         safe = [&pool](Criterion const& c) {
      try {
        return c.run(pool);
      } catch (Error const& e) {
        return Check{c.name, "", false, json{{"error", e.what()}}};
      }
    };
    std::vector<Check> out;
    if (parallel) {
      std::vector<std::future<Check>> fs;
      for (auto const& c : crit) {
        fs.push_back(std::async(std::launch::async, safe, std::cref(c)));
      }
      for (auto& f : fs) {
        out.push_back(f.get());
      }
    } else {
      for (auto const& c : crit) {
        out.push_back(safe(c));
      }
    }
    sort_checks(out);
    return out;
  }

}  // namespace mckay
