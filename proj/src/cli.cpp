#include "mckay/cli.hpp"

#include <fstream>  // for ifstream
#include <map>      // for map
#include <ostream>  // for ostream

#include "CLI11.hpp"

#include "mckay/acceptance.hpp"
#include "mckay/bgp.hpp"
#include "mckay/checks.hpp"
#include "mckay/error.hpp"
#include "mckay/ktheory.hpp"
#include "mckay/molien.hpp"
#include "mckay/preproj.hpp"

namespace mckay {

  namespace {
    using Handler = void (*)(RunConfig const&, Instance const&, Report&);

    std::vector<HeightFunction> selected_heights(RunConfig const& c, Instance const& inst) {
      auto const& parity = inst.require_parity();
      if (c.height) {
        return {HeightFunction(inst.graph.n, parity, parse_height_literal(*c.height))};
      }
      return enumerate_heights(inst.graph, parity, c.window);
    }

    json int_matrix(IntMatrix const& m) {
      return json(m);
    }

    void cmd_group(RunConfig const&, Instance const& inst, Report& r) {
      auto const& g       = inst.group;
      json        classes = json::array();
      for (std::size_t k = 0; k < g.num_classes(); ++k) {
        classes.push_back({{"size", g.class_size(k)}, {"element_order", g.class_element_order(k)}});
      }
      r.data = {{"order", g.order()},
                {"exponent", g.exponent()},
                {"conductor", g.conductor()},
                {"contains_minus_identity", g.contains_minus_identity()},
                {"classes", classes}};
      r.checks.push_back(group_order_check(inst));
    }

    void cmd_chartab(RunConfig const& c, Instance const& inst, Report& r) {
      auto const& t   = inst.table;
      json        chi = json::array();
      for (auto const& row : t.chi) {
        json jr = json::array();
        for (auto const& x : row) {
          jr.push_back(to_json(x));
        }
        chi.push_back(jr);
      }
      r.data = {{"order", t.group_order},
                {"prime", t.prime},
                {"conductor", t.conductor},
                {"class_sizes", t.class_sizes},
                {"dims", t.dims},
                {"trivial", t.trivial},
                {"characters", chi}};
      DixonOptions o;
      o.seed = c.seed;
      r.checks.push_back(chartab_check(inst, o));
    }

    void cmd_graph(RunConfig const&, Instance const& inst, Report& r) {
      auto const& g  = inst.graph;
      auto const& cl = g.classification;
      r.data         = {{"type", cl.type ? json(cl.type->label()) : json(nullptr)},
                        {"vertices", g.num_vertices()},
                        {"affine_node", g.affine_node},
                        {"adjacency", int_matrix(g.n)},
                        {"delta", g.delta()},
                        {"dims", inst.table.dims},
                        {"parity", inst.has_parity() ? json(inst.parity) : json(nullptr)}};
      r.checks.push_back(classification_check(inst));
    }

    void cmd_molien(RunConfig const& c, Instance const& inst, Report& r) {
      auto m = molien_matrices(inst.table);
      json s = json::array(), e = json::array();
      for (std::size_t p = 0; p < m.size(); ++p) {
        json sr = json::array(), er = json::array();
        for (std::size_t q = 0; q < m.size(); ++q) {
          sr.push_back(to_json(m.S[p][q]));
          er.push_back(to_json(m.E[p][q]));
        }
        s.push_back(sr);
        e.push_back(er);
      }
      json homs = json::array();
      for (std::size_t d = 0; d <= c.max_degree; ++d) {
        IntMatrix h(m.size(), std::vector<std::int64_t>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m.size(); ++j) {
            h[i][j] = inst.homs(i, j, static_cast<std::int64_t>(d));
          }
        }
        homs.push_back(int_matrix(h));
      }
      r.data = {{"S", s}, {"E", e}, {"hom_dims", homs}};
      r.checks.push_back(molien_series_check(inst, c.max_degree));
    }

    void cmd_koszul(RunConfig const& c, Instance const& inst, Report& r) {
      r.checks.push_back(molien_koszul_check(inst));
      r.checks.push_back(presentation_koszul_check(inst.graph.n, c.max_degree));
    }

    void cmd_heights(RunConfig const& c, Instance const& inst, Report& r) {
      auto hs   = selected_heights(c, inst);
      json list = json::array();
      for (auto const& h : hs) {
        auto q = h.quiver();
        list.push_back({{"height", h.values()}, {"sinks", q.sinks()}, {"sources", q.sources()}});
      }
      r.data = {{"window", c.window}, {"count", hs.size()}, {"heights", list}};
      r.checks.push_back(flip_connectivity_check(inst, hs));
    }

    void cmd_paths(RunConfig const& c, Instance const& inst, Report& r) {
      json list = json::array();
      for (auto const& h : selected_heights(c, inst)) {
        list.push_back({{"height", h.to_string()}, {"paths", int_matrix(path_counts(h.quiver()))}});
      }
      r.data = {{"heights", list}};
    }

    void cmd_kirillov(RunConfig const& c, Instance const& inst, Report& r) {
      auto hs = selected_heights(c, inst);
      r.data  = {{"heights", hs.size()}};
      r.checks.push_back(kirillov_all_check(inst, hs));
    }

    void cmd_ext(RunConfig const& c, Instance const& inst, Report& r) {
      auto hs = selected_heights(c, inst);
      r.data  = {{"heights", hs.size()}, {"dmax", c.dmax}};
      r.checks.push_back(ext_all_check(inst, hs, c.dmax));
      r.checks.push_back(euler_all_check(inst, hs, c.dmax));
    }

    // Underlying multigraph of a representation's quiver, as a symmetric
    // adjacency matrix.
    IntMatrix underlying_graph(QuiverRep const& v) {
      std::size_t nv = v.num_vertices();
      IntMatrix   n(nv, std::vector<std::int64_t>(nv, 0));
      for (auto const& a : v.quiver().arrows) {
        n[a.from][a.to] += a.multiplicity;
        n[a.to][a.from] += a.multiplicity;
      }
      return n;
    }

    void reflect_file(RunConfig const& c, Instance const& inst, Report& r) {
      std::ifstream in(*c.rep);
      if (!in) {
        throw PreconditionError("cannot read " + c.rep->string());
      }
      json j;
      try {
        j = json::parse(in);
      } catch (json::exception const& e) {
        throw PreconditionError(std::string("bad representation JSON: ") + e.what());
      }
      auto v = quiver_rep_from_json(j);
      if (underlying_graph(v) != inst.graph.n) {
        throw PreconditionError("the representation's quiver is not an orientation of the "
                                "McKay graph of " + c.group);
      }
      if (!c.vertex) {
        throw PreconditionError("reflect --rep needs --vertex");
      }
      std::size_t i = *c.vertex;
      if (i >= v.num_vertices()) {
        throw PreconditionError("vertex out of range");
      }
      bool sink = v.is_sink(i);
      if (!sink && !v.is_source(i)) {
        throw PreconditionError("vertex " + std::to_string(i) + " is neither a sink nor a source");
      }
      if (c.dir && *c.dir != (sink ? "plus" : "minus")) {
        throw PreconditionError("--dir " + *c.dir + " does not match vertex "
                                + std::to_string(i));
      }
      if (!reflectable(v, i)) {
        throw PreconditionError("the representation has a simple summand at vertex "
                                + std::to_string(i));
      }
      auto                      w    = sink ? reflect_plus(v, i) : reflect_minus(v, i);
      auto                      back = sink ? reflect_minus(w, i) : reflect_plus(w, i);
      std::vector<std::int64_t> d(v.dims().begin(), v.dims().end());
      std::vector<std::int64_t> wd(w.dims().begin(), w.dims().end());
      auto                      want = dim_vector_reflect(d, i, inst.graph.n);
      r.data = {{"vertex", i}, {"direction", sink ? "plus" : "minus"}, {"reflected", to_json(w)}};
      r.checks.push_back({"bgp-dimension-vector",
                          "the reflected dimension vector is s_i of the original",
                          wd == want,
                          {{"dims", wd}, {"expected", want}}});
      r.checks.push_back({"bgp-round-trip",
                          "reflecting back gives an isomorphic representation",
                          find_isomorphism(v, back, c.seed).has_value(),
                          {{"round_trip", to_json(back)}}});
    }

    void cmd_reflect(RunConfig const& c, Instance const& inst, Report& r) {
      if (c.rep) {
        reflect_file(c, inst, r);
        return;
      }
      auto hs = selected_heights(c, inst);
      r.data  = {{"orientations", distinct_orientations(hs).size()}};
      r.checks.push_back(bgp_check(inst, hs, 100, c.seed));
    }

    void cmd_preproj(RunConfig const&, Instance const& inst, Report& r) {
      auto pre = preprojective_presentation(inst.graph.n);
      auto ext = ext_algebra_presentation(inst.graph.n);
      r.data   = {{"preprojective", to_json(pre)},
                  {"ext", to_json(ext)},
                  {"dual_of_ext", to_json(quadratic_dual(ext))}};
      r.checks.push_back(duality_check(inst.graph.n));
    }

    void cmd_hilbert(RunConfig const& c, Instance const& inst, Report& r) {
      auto hs = inst.has_parity() ? selected_heights(c, inst) : std::vector<HeightFunction>{};
      r.data  = {{"hilbert",
                  to_json(truncated_hilbert(preprojective_presentation(inst.graph.n),
                                            c.max_degree))}};
      r.checks.push_back(hilbert_match_check(inst, c.max_degree, hs));
      r.checks.push_back(presentation_koszul_check(inst.graph.n, c.max_degree));
    }

    void cmd_lattice(RunConfig const& c, Instance const& inst, Report& r) {
      auto      hs = selected_heights(c, inst);
      K0Lattice k(inst.homs, inst.graph.n, inst.parity);
      json      families = json::array();
      for (auto const& h : hs) {
        json cls = json::array();
        for (auto const& x : k.simple_family(h).classes) {
          cls.push_back(x.to_string());
        }
        families.push_back({{"height", h.to_string()}, {"simples", cls}});
      }
      r.data   = {{"families", families}};
      r.checks = lattice_checks(inst, hs, c.seed);
    }

    std::map<std::string, Handler> const& handlers() {
      static std::map<std::string, Handler> const h{
          {"group", cmd_group},
          {"chartab", cmd_chartab},
          {"graph", cmd_graph},
          {"molien", cmd_molien},
          {"koszul-check", cmd_koszul},
          {"heights", cmd_heights},
          {"paths", cmd_paths},
          {"kirillov-check", cmd_kirillov},
          {"ext-check", cmd_ext},
          {"reflect", cmd_reflect},
          {"preproj", cmd_preproj},
          {"hilbert-match", cmd_hilbert},
          {"lattice-check", cmd_lattice},
      };
      return h;
    }
  }  // namespace

  Report run(RunConfig const& c) {
    if (c.max_degree > max_degree_limit) {
      throw ResourceError("--max-degree " + std::to_string(c.max_degree) + " exceeds "
                          + std::to_string(max_degree_limit));
    }
    if (c.window > window_limit) {
      throw ResourceError("--window " + std::to_string(c.window) + " exceeds "
                          + std::to_string(window_limit));
    }
    Report r;
    r.command = c.command;
    if (c.command == "all") {
      r.checks = run_acceptance({c.cache_dir, c.seed});
      return r;
    }
    auto it = handlers().find(c.command);
    if (it == handlers().end()) {
      throw PreconditionError("unknown command '" + c.command + "'");
    }
    if (c.group.empty()) {
      throw PreconditionError(c.command + " needs a group descriptor");
    }
    // canonical spelling
    r.group = GroupDescriptor::parse(c.group).to_string();
    DixonOptions o;
    o.seed    = c.seed;
    auto inst = make_instance(r.group, c.cache_dir, o);
    it->second(c, *inst, r);
    return r;
  }

  int main_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig   c;
    std::string output = "json";
    std::string cache;
    std::string rep;
    std::size_t vertex = 0;
    std::string height, dir;

    CLI::App app{"Exact checks of the McKay correspondence for finite subgroups of SL2"};
    app.add_option("command", c.command, "group, chartab, graph, molien, koszul-check, heights, "
                                         "paths, kirillov-check, ext-check, reflect, preproj, "
                                         "hilbert-match, lattice-check, all")
        ->required();
    app.add_option("group", c.group, "cyclic:n, bd:n, 2T, 2O or 2I");
    app.add_option("--max-degree,-D", c.max_degree, "truncation degree");
    app.add_option("--window,-W", c.window, "height window");
    app.add_option("--dmax", c.dmax, "largest d for ext-check");
    auto* h_opt   = app.add_option("--height", height, "a single height, e.g. 0,1,2,1");
    auto* all_opt = app.add_flag("--all-heights", "every height in the window (default)");
    h_opt->excludes(all_opt);
    app.add_option("--seed", c.seed, "random seed");
    auto* cache_opt = app.add_option("--cache-dir", cache, "character table cache");
    app.add_option("--output", output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    auto* rep_opt    = app.add_option("--rep", rep, "representation JSON for reflect");
    auto* vertex_opt = app.add_option("--vertex", vertex, "vertex to reflect at");
    auto* dir_opt    = app.add_option("--dir", dir, "plus or minus")
                        ->check(CLI::IsMember({"plus", "minus"}));

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    c.output = output == "table" ? OutputMode::table : OutputMode::json;
    if (*h_opt) {
      c.height = height;
    }
    c.cache_dir = *cache_opt ? std::optional<std::filesystem::path>(cache) : cache_dir_from_env();
    if (*rep_opt) {
      c.rep = rep;
    }
    if (*vertex_opt) {
      c.vertex = vertex;
    }
    if (*dir_opt) {
      c.dir = dir;
    }

    try {
      Report r = run(c);
      if (c.output == OutputMode::json) {
        out << r.to_json().dump(2) << "\n";
      } else {
        out << r.to_table();
      }
      return r.pass() ? 0 : 1;
    } catch (PreconditionError const& e) {
      err << "precondition error: " << e.what() << "\n";
      return 2;
    } catch (ResourceError const& e) {
      err << "resource limit: " << e.what() << "\n";
      return 3;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }

}  // namespace mckay
