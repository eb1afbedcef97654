// braidvar: exact computations with positive braid words, braid varieties,
// Demazure weaves, and their cluster structures.

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidvar/chart_finder.hpp"
#include "braidvar/cluster.hpp"
#include "braidvar/parallel.hpp"

using namespace braidvar;

namespace {

BraidWord word_arg(const std::string& text, int n) {
  return n > 0 ? parse_braid_word(text, n) : parse_braid_word(text);
}

std::string weight_json(const std::vector<Weight>& ws) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& w : ws) j.push_back(w.entries);
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braid variety, weave, and cluster computations"};
  app.require_subcommand(1);

  int n_strands = 0;
  bool json_out = false, dot_out = false;
  uint64_t rng_seed = 0;
  int jobs = 1;
  int depth_limit = 12;
  app.add_option("--n", n_strands, "strand count (default: max letter + 1)");
  app.add_flag("--json", json_out, "JSON output");
  app.add_flag("--dot", dot_out, "DOT output");
  app.add_option("--rng-seed", rng_seed, "seed for sampling subcommands");
  app.add_option("--jobs", jobs, "worker threads for batch subcommands");
  app.add_option("--depth-limit", depth_limit, "mutation search depth");

  // demazure
  std::string dem_word;
  auto* dem = app.add_subcommand("demazure", "Demazure product of a word");
  dem->add_option("word", dem_word)->required();

  // weave
  std::string weave_word, weave_point, weave_lift;
  auto* weave_cmd = app.add_subcommand("weave", "build a complete weave; propagate or lift");
  weave_cmd->add_option("word", weave_word)->required();
  weave_cmd->add_option("--point", weave_point, "propagate this point");
  weave_cmd->add_option("--lift", weave_lift, "lift these nonzero chart values");

  // quiver
  std::string quiver_word;
  bool quiver_classify = false, quiver_aut = false;
  auto* quiver_cmd = app.add_subcommand("quiver", "amalgamation quiver of a word");
  quiver_cmd->add_option("word", quiver_word)->required();
  quiver_cmd->add_flag("--classify", quiver_classify, "finite-type mutation search");
  quiver_cmd->add_flag("--aut", quiver_aut, "cluster automorphism group");

  // membership
  std::string mem_word, mem_point;
  auto* mem = app.add_subcommand("membership", "braid variety / Bott-Samelson membership");
  mem->add_option("word", mem_word)->required();
  mem->add_option("--point", mem_point)->required();

  // weights
  std::string wt_word;
  auto* wt = app.add_subcommand("weights", "torus weights of the coordinates");
  wt->add_option("word", wt_word)->required();

  // stabilizer
  std::string st_word, st_point;
  auto* st = app.add_subcommand("stabilizer", "point stabilizer and freeness");
  st->add_option("word", st_word)->required();
  st->add_option("--point", st_point)->required();

  // loci
  std::string loci_kind, loci_arg1, loci_arg2;
  auto* loci_cmd = app.add_subcommand(
      "loci", "deep/stabilizer loci: xab A B | two-strand L | finite-type LBL N | "
              "bs-components WORD | braid-components WORD | positroid K N | positroid-data A B");
  loci_cmd->add_option("kind", loci_kind)->required();
  loci_cmd->add_option("arg1", loci_arg1);
  loci_cmd->add_option("arg2", loci_arg2);

  // chart-find
  int cf_a = 0, cf_b = 0, cf_batch = 0, cf_deep = 0;
  std::string cf_point;
  auto* cf = app.add_subcommand("chart-find", "chart search on X(a,b)");
  cf->add_option("a", cf_a)->required();
  cf->add_option("b", cf_b)->required();
  cf->add_option("--point", cf_point, "single point to locate");
  cf->add_option("--batch", cf_batch, "sample this many chart points and locate each");
  cf->add_option("--deep", cf_deep, "sample this many deep points and locate each");

  // sample
  std::string sample_kind, sample_arg1, sample_arg2;
  int sample_count = 1;
  auto* sample_cmd = app.add_subcommand("sample", "sample chart WORD | deep A B");
  sample_cmd->add_option("kind", sample_kind)->required();
  sample_cmd->add_option("arg1", sample_arg1);
  sample_cmd->add_option("arg2", sample_arg2);
  sample_cmd->add_option("--count", sample_count, "number of samples");

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*dem) {
      std::cout << demazure_product(word_arg(dem_word, n_strands)).str() << "\n";
    } else if (*weave_cmd) {
      BraidWord b = word_arg(weave_word, n_strands);
      Weave w = complete_weave(b);
      if (dot_out) {
        std::cout << w.to_dot();
      } else if (!weave_point.empty()) {
        auto trace = propagate(w, parse_point(weave_point));
        if (json_out) {
          nlohmann::json j;
          for (size_t l = 0; l < trace.words.size(); ++l) {
            j["layers"].push_back(
                {{"word", trace.words[l].str()}, {"values", RatPoint(trace.layers[l]).str()}});
          }
          j["s_vars"] = rat_list_to_string(trace.s_vars);
          std::cout << j.dump(2) << "\n";
        } else {
          for (size_t l = 0; l < trace.words.size(); ++l)
            std::cout << "[" << trace.words[l].str() << "]  " << RatPoint(trace.layers[l]).str()
                      << "\n";
          std::cout << "s-variables: " << rat_list_to_string(trace.s_vars) << "\n";
        }
      } else if (!weave_lift.empty()) {
        auto p = lift_through_weave(w, parse_rat_list(weave_lift));
        std::cout << p.str() << "\n";
      } else {
        std::cout << "top:    " << w.top.str() << "\n";
        std::cout << "bottom: " << w.bottom.str() << "\n";
        std::cout << w.serialize();
      }
    } else if (*quiver_cmd) {
      BraidWord b = word_arg(quiver_word, n_strands);
      auto q = amalgamation_quiver(b);
      if (dot_out) {
        std::cout << q.to_dot();
      } else if (quiver_classify) {
        auto label = finite_type_classify(q, depth_limit);
        std::cout << (label ? *label : std::string("not_finite_within_limit")) << "\n";
      } else if (quiver_aut) {
        auto g = aut_group(ExtExchangeMatrix::from_quiver(q));
        std::cout << "torus rank: " << g.torus_rank << "\n";
        std::cout << "torsion:";
        for (const auto& d : g.torsion) std::cout << " " << d;
        std::cout << "\n";
      } else {
        auto m = ExtExchangeMatrix::from_quiver(q);
        std::cout << "vertices: " << q.vertices << " (mutable " << q.mutable_count() << ")\n";
        std::cout << m.m.str();
      }
    } else if (*mem) {
      BraidWord b = word_arg(mem_word, n_strands);
      RatPoint p = parse_point(mem_point);
      bool in_x = in_braid_variety(b, p);
      bool in_bs = in_double_bs(b, p);
      if (json_out) {
        nlohmann::json j{{"in_braid_variety", in_x}, {"in_double_bs", in_bs}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "in X(beta): " << (in_x ? "true" : "false") << "\n";
        std::cout << "in BS(beta): " << (in_bs ? "true" : "false") << "\n";
      }
    } else if (*wt) {
      BraidWord b = word_arg(wt_word, n_strands);
      auto ws = coordinate_weights(b);
      if (json_out) {
        std::cout << weight_json(ws) << "\n";
      } else {
        for (size_t k = 0; k < ws.size(); ++k)
          std::cout << "z" << (k + 1) << ": " << ws[k].str() << "\n";
      }
    } else if (*st) {
      BraidWord b = word_arg(st_word, n_strands);
      RatPoint p = parse_point(st_point);
      auto w = point_stabilizer(b, p);
      bool free = is_free_point(b, p);
      if (json_out) {
        nlohmann::json j;
        for (const auto& blk : w.partition.blocks) j["partition"].push_back(blk);
        j["rank"] = w.rank;
        j["stabilizer_dim"] = w.stabilizer_dim;
        j["free"] = free;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "partition: " << w.partition.str() << "\n";
        std::cout << "weight span rank: " << w.rank << "\n";
        std::cout << "stabilizer dimension: " << w.stabilizer_dim << "\n";
        std::cout << "free: " << (free ? "true" : "false") << "\n";
      }
    } else if (*loci_cmd) {
      auto report_out = [&](const DeepLocusReport& r) {
        if (json_out) {
          std::cout << r.to_json() << "\n";
        } else if (r.empty) {
          std::cout << "deep locus: empty\n";
        } else {
          std::cout << "deep locus: " << r.components.size() << " component(s)"
                    << (r.smooth ? ", smooth" : ", not smooth")
                    << (r.irreducible ? ", irreducible" : ", not irreducible") << "\n";
          for (const auto& c : r.components)
            std::cout << "  " << c.dynkin << " with " << c.frozen_count
                      << " frozen, dimension " << c.dimension << "\n";
          for (const auto& s : r.intersections) std::cout << "  " << s << "\n";
        }
      };
      auto comps_out = [&](const std::vector<StabilizerComponent>& comps) {
        if (json_out) {
          std::cout << "[";
          for (size_t i = 0; i < comps.size(); ++i)
            std::cout << (i ? "," : "") << comps[i].to_json();
          std::cout << "]\n";
        } else {
          for (const auto& c : comps) {
            std::cout << c.partition.str() << "  dim " << c.dimension;
            if (c.empty) std::cout << "  (empty)";
            std::cout << "  sub-words:";
            for (const auto& w : c.sub_words) std::cout << " [" << w.str() << "]";
            std::cout << "\n";
          }
          if (comps.empty()) std::cout << "no components (free action)\n";
        }
      };
      if (loci_kind == "xab") {
        report_out(deep_locus_xab(std::stoi(loci_arg1), std::stoi(loci_arg2)));
      } else if (loci_kind == "two-strand") {
        report_out(deep_locus_two_strand(std::stoi(loci_arg1)));
      } else if (loci_kind == "finite-type") {
        report_out(deep_locus_finite_type(loci_arg1, std::stoi(loci_arg2)));
      } else if (loci_kind == "bs-components") {
        comps_out(stabilizer_components_bs(word_arg(loci_arg1, n_strands)));
      } else if (loci_kind == "braid-components") {
        comps_out(t_stabilizer_components_braid(word_arg(loci_arg1, n_strands)));
      } else if (loci_kind == "positroid") {
        bool empty = positroid_stabilizer_empty(std::stoi(loci_arg1), std::stoi(loci_arg2));
        std::cout << "stabilizer locus empty: " << (empty ? "true" : "false") << "\n";
      } else if (loci_kind == "positroid-data") {
        auto f = positroid_data_xab(std::stoi(loci_arg1), std::stoi(loci_arg2));
        for (size_t x = 0; x < f.size(); ++x)
          std::cout << "f(" << (x + 1) << ") = " << f[x] << "\n";
        std::cout << "juggling braid: " << positroid_juggling_braid(std::stoi(loci_arg1),
                                                                   std::stoi(loci_arg2)).str()
                  << "\n";
      } else {
        std::cerr << "unknown loci kind: " << loci_kind << "\n";
        return 2;
      }
    } else if (*cf) {
      auto locate = [&](const RatPoint& p) {
        auto w = find_chart(cf_a, cf_b, p);
        if (json_out && w.chart) return w.chart->to_json();
        if (w.chart)
          return std::string("chart certificate with ") +
                 std::to_string(w.chart->stages.size()) + " stages (verified " +
                 (verify_certificate(*w.chart) ? "true" : "false") + ")";
        nlohmann::json j;
        for (const auto& blk : w.stabilizer->partition.blocks) j["partition"].push_back(blk);
        j["stabilizer_dim"] = w.stabilizer->stabilizer_dim;
        return json_out ? j.dump() : ("stabilizer witness: " + w.stabilizer->partition.str());
      };
      if (!cf_point.empty()) {
        std::cout << locate(parse_point(cf_point)) << "\n";
      } else {
        auto word = beta_ab(cf_a, cf_b);
        int total = cf_batch + cf_deep;
        if (total == 0) {
          std::cerr << "need --point, --batch, or --deep\n";
          return 2;
        }
        auto results = parallel_map<std::string>(total, jobs, [&](std::size_t i) {
          RatPoint p = (static_cast<int>(i) < cf_batch)
                           ? sample_chart_point(word, rng_seed + i)
                           : sample_deep_point(cf_a, cf_b, rng_seed + i - cf_batch);
          return locate(p);
        });
        for (size_t i = 0; i < results.size(); ++i)
          std::cout << "[" << i << "] " << results[i] << "\n";
      }
    } else if (*sample_cmd) {
      if (sample_kind == "chart") {
        BraidWord b = word_arg(sample_arg1, n_strands);
        auto points = parallel_map<std::string>(sample_count, jobs, [&](std::size_t i) {
          return sample_chart_point(b, rng_seed + i).str();
        });
        for (const auto& p : points) std::cout << p << "\n";
      } else if (sample_kind == "deep") {
        int a = std::stoi(sample_arg1), b = std::stoi(sample_arg2);
        auto points = parallel_map<std::string>(sample_count, jobs, [&](std::size_t i) {
          return sample_deep_point(a, b, rng_seed + i).str();
        });
        for (const auto& p : points) std::cout << p << "\n";
      } else {
        std::cerr << "unknown sample kind: " << sample_kind << "\n";
        return 2;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
