#include "gpc/cli.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "gpc/autwitness.hpp"
#include "gpc/errors.hpp"
#include "gpc/oracle.hpp"
#include "gpc/polish.hpp"
#include "gpc/presentation.hpp"
#include "gpc/roots.hpp"
#include "gpc/structure.hpp"
#include "gpc/words.hpp"

namespace gpc::cli {

  namespace {

    // Thrown for unreadable files and similar usage problems.
    struct usage_error : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw usage_error("cannot read file \"" + path + "\"");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    GraphPtr load_graph(std::string const& path) {
      if (path.empty()) {
        throw usage_error("--graph is required");
      }
      try {
        return std::make_shared<ColoredGraph const>(
            parse_graph(read_file(path)));
      } catch (parse_error const& e) {
        throw parse_error(0, path + ": " + e.what());
      }
    }

    polish::ParsedSpec load_spec(std::string const& path, std::ostream& err) {
      if (path.empty()) {
        throw usage_error("--spec is required");
      }
      polish::ParsedSpec parsed;
      try {
        parsed = polish::parse_spec(read_file(path));
      } catch (parse_error const& e) {
        throw parse_error(0, path + ": " + e.what());
      }
      for (auto const& w : parsed.warnings) {
        err << "warning: " << w << '\n';
      }
      return parsed;
    }

    std::vector<std::string> split_names(std::string const& s) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : s) {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) {
            out.push_back(cur);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) {
        out.push_back(cur);
      }
      return out;
    }

    std::string format_syllables(ColoredGraph const&       g,
                                 std::set<Syllable> const& xs) {
      std::string out = "{";
      for (auto const& s : xs) {
        out += (out.size() > 1 ? ", " : "") + format_syllable(g, s);
      }
      return out + "}";
    }

    std::string format_profile(std::map<std::uint64_t, std::uint64_t> const& m) {
      std::string out;
      for (auto [order, count] : m) {
        out += (out.empty() ? "" : " ") + std::to_string(order) + ":"
               + std::to_string(count);
      }
      return out;
    }

    void print_verdict(std::ostream& out, polish::PolishVerdict const& v) {
      static char const labels[] = {'a', 'b', 'c', 'd'};
      for (std::size_t i = 0; i < 4; ++i) {
        auto const& c = v.conditions[i];
        out << "condition (" << labels[i] << ") "
            << (c.passed ? "holds: " : "violated: ") << c.witness << '\n';
      }
      if (!v.report) {
        return;
      }
      auto const& r = *v.report;
      out << "G1: countable part with " << r.countable_part.classes().size()
          << " class(es)";
      std::string names;
      for (auto const& c : r.countable_part.classes()) {
        names += (names.empty() ? "" : ", ") + c.name;
      }
      out << (names.empty() ? "" : ": " + names) << '\n';
      out << "G2: ";
      if (r.vector_space_summands.empty()) {
        out << "trivial";
      }
      bool first = true;
      for (auto const& s : r.vector_space_summands) {
        out << (first ? "" : " + ") << "Z_" << s.prime;
        if (s.exponent > 1) {
          out << "^" << s.exponent;
        }
        out << "^(" << s.multiplicity.to_string() << ")";
        first = false;
      }
      out << '\n';
      out << "realizable as automorphism group of a countable structure: "
          << (r.realizable_as_automorphism_group ? "yes" : "no") << '\n';
    }

    struct Options {
      std::string              graph_path;
      std::string              spec_path;
      std::vector<std::string> words;
      std::string              vertices;
      std::int64_t             exponent   = 0;
      std::uint64_t            prime      = 0;
      std::size_t              search_len = 0;
      std::int64_t             degree     = 2;
      std::size_t              max_len    = 12;
      std::int64_t             inf_bound  = 0;
      std::vector<std::string> pattern_vertices;
      std::uint64_t            p = 0;
      unsigned                 n = 0;
      unsigned                 k = 0;
      bool                     unmarked = false;
      std::uint64_t            seed     = 20170101;
      std::size_t              samples  = 2000;
      std::size_t              sample_len = 5;
    };

    int report_root_search(std::ostream& out, GroupElement const& h,
                           std::size_t max_len, std::int64_t inf_bound) {
      bool any = false;
      for (std::int64_t n : {2, 3}) {
        RootSearchOptions opts;
        opts.max_len = max_len;
        if (inf_bound > 0) {
          opts.infinite_exponent_bound = inf_bound;
        }
        auto r = brute_force_root_search(h, n, opts);
        out << "search n=" << n << " max_len=" << max_len << ": "
            << (r.root ? "FOUND " + r.root->to_string() : "absent") << '\n';
        any = any || r.root.has_value();
      }
      return any ? exit_negative : exit_ok;
    }

    void print_certificate(std::ostream& out, RootCertificate const& c) {
      auto const& G = c.element.graph();
      out << "certificate\n";
      out << "pattern: " << c.pattern << '\n';
      out << "g* = " << c.element.to_string() << '\n';
      out << "A = " << format_vertex_set(G, c.projection_set) << '\n';
      out << "p_A(g*) = " << c.projected_image.to_string() << '\n';
      if (c.projection_case) {
        out << "case: " << *c.projection_case << '\n';
      }
      if (c.alpha) {
        out << "alpha: " << *c.alpha << '\n';
      }
      for (auto const& [name, holds] : c.hypotheses) {
        out << "hypothesis " << name << ": " << (holds ? "holds" : "fails")
            << '\n';
      }
      out << "conclusion: " << c.conclusion << '\n';
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Word calculus and classifiers for graph products of cyclic "
                 "groups",
                 "gpc"};
    app.require_subcommand(1);
    Options o;

    auto graph_opt = [&](CLI::App* sub) {
      sub->add_option("--graph", o.graph_path, "graph file (.gpc)")
          ->required();
    };
    auto word_cmd = [&](char const* name, char const* help, int nwords) {
      auto* sub = app.add_subcommand(name, help);
      graph_opt(sub);
      sub->add_option("words", o.words, "inline word(s)")
          ->required()
          ->expected(nwords);
      return sub;
    };

    std::map<CLI::App*, std::function<int()>> handlers;

    auto with_graph = [&](auto&& body) {
      return [&, body]() {
        auto graph = load_graph(o.graph_path);
        return body(graph);
      };
    };
    auto elem = [&](GraphPtr const& g, std::size_t i) {
      return GroupElement::parse(g, o.words.at(i));
    };

    handlers[word_cmd("reduce", "reduce a word to a normal form", 1)]
        = with_graph([&](GraphPtr g) {
            out << format_word(*g, reduce(*g, parse_word(*g, o.words[0])))
                << '\n';
            return exit_ok;
          });
    handlers[word_cmd("canon", "canonical normal form", 1)]
        = with_graph([&](GraphPtr g) {
            out << elem(g, 0).to_string() << '\n';
            return exit_ok;
          });
    handlers[word_cmd("eq", "do two words spell the same element", 2)]
        = with_graph([&](GraphPtr g) {
            auto x = elem(g, 0), y = elem(g, 1);
            bool r = equal(x, y);
            out << (r ? "true" : "false") << '\n'
                << "canonical: " << x.to_string() << " | " << y.to_string()
                << '\n';
            return r ? exit_ok : exit_negative;
          });
    handlers[word_cmd("mul", "product of two elements", 2)]
        = with_graph([&](GraphPtr g) {
            out << multiply(elem(g, 0), elem(g, 1)).to_string() << '\n';
            return exit_ok;
          });
    handlers[word_cmd("inv", "inverse element", 1)]
        = with_graph([&](GraphPtr g) {
            out << invert(elem(g, 0)).to_string() << '\n';
            return exit_ok;
          });
    {
      auto* sub = app.add_subcommand("pow", "m-th power of an element");
      graph_opt(sub);
      sub->add_option("word", o.words, "inline word")->required()->expected(1);
      sub->add_option("--exp,-m", o.exponent, "exponent m")->required();
      handlers[sub] = with_graph([&](GraphPtr g) {
        out << power(elem(g, 0), o.exponent).to_string() << '\n';
        return exit_ok;
      });
    }
    {
      auto* sub = word_cmd("project", "retraction onto a vertex subset", 1);
      sub->add_option("--vertices", o.vertices,
                      "comma-separated vertex names")
          ->required();
      handlers[sub] = with_graph([&](GraphPtr g) {
        auto A = vertex_set(*g, split_names(o.vertices));
        out << project(elem(g, 0), A).to_string() << '\n';
        return exit_ok;
      });
    }
    handlers[word_cmd("support", "generators in the normal form", 1)]
        = with_graph([&](GraphPtr g) {
            out << format_vertex_set(*g, support(elem(g, 0))) << '\n';
            return exit_ok;
          });
    handlers[word_cmd("ends", "possible first and last syllables", 1)]
        = with_graph([&](GraphPtr g) {
            auto e = ends(elem(g, 0));
            out << "F = " << format_syllables(*g, e.first) << '\n'
                << "L = " << format_syllables(*g, e.last) << '\n'
                << "Lhat = " << format_syllables(*g, e.last_inverse) << '\n';
            return exit_ok;
          });
    handlers[word_cmd("cyclic", "is the element cyclically normal", 1)]
        = with_graph([&](GraphPtr g) {
            auto x = elem(g, 0);
            bool r = is_cyclically_normal(x);
            out << (r ? "true" : "false") << '\n'
                << "normal form: " << x.to_string() << '\n';
            return r ? exit_ok : exit_negative;
          });
    handlers[word_cmd("decompose",
                      "g = w1 w2 w3 w2' w1^-1 with verification report", 1)]
        = with_graph([&](GraphPtr g) {
            auto x     = elem(g, 0);
            auto d     = barkauskas_decompose(x);
            auto check = verify_decomposition(x, d);
            out << (check.ok() ? "verified" : "FAILED") << '\n'
                << "w1 = " << d.w1.to_string() << '\n'
                << "w2 = " << d.w2.to_string() << '\n'
                << "w3 = " << d.w3.to_string() << '\n'
                << "w2' = " << d.w2prime.to_string() << '\n';
            for (std::size_t i = 0; i < 5; ++i) {
              auto const& c = check.conditions[i];
              out << "condition (" << i + 1 << ") "
                  << (c.passed ? "pass" : "FAIL") << ": " << c.detail << '\n';
            }
            return check.ok() ? exit_ok : exit_negative;
          });
    {
      auto* sub = word_cmd("pow-support",
                           "check sp(g) within sp(g^p) for a large prime p", 1);
      sub->add_option("--prime", o.prime,
                      "prime p (default: least prime above all finite orders)");
      handlers[sub] = with_graph([&](GraphPtr g) {
        auto          x = elem(g, 0);
        std::uint64_t p = o.prime != 0 ? o.prime : least_valid_prime(*g);
        bool          r = power_support_check(x, p);
        auto direct     = power(x, static_cast<std::int64_t>(p));
        auto derived    = power_via_decomposition(x, p);
        bool agree      = derived.value == direct;
        out << (r ? "true" : "FALSIFIED") << '\n'
            << "p = " << p << '\n'
            << "g^p = " << direct.to_string() << '\n'
            << "sp(g) = " << format_vertex_set(*g, support(x)) << '\n'
            << "sp(g^p) = " << format_vertex_set(*g, support(direct)) << '\n'
            << "decomposition: " << to_string(derived.which) << ", "
            << (agree ? "agrees with" : "DISAGREES with") << " direct power\n";
        if (!r) {
          err << "power-support law falsified for " << x.to_string()
              << " and p = " << p << '\n';
        }
        return r && agree ? exit_ok : exit_negative;
      });
    }
    auto pattern_cmd = [&](char const* name, char const* help,
                           std::size_t nverts) {
      auto* sub = app.add_subcommand(name, help);
      graph_opt(sub);
      sub->add_option("--g", o.words, "the element g (default: identity)")
          ->expected(1);
      sub->add_option("vertices", o.pattern_vertices, "pattern vertices")
          ->required()
          ->expected(static_cast<int>(nverts));
      sub->add_option("--search-len", o.search_len,
                      "also run the bounded root search for n = 2, 3");
      return sub;
    };
    auto pattern_body = [&](GraphPtr g, int which) {
      auto x = o.words.empty() ? GroupElement::identity(g) : elem(g, 0);
      std::vector<VertexId> vs;
      for (auto const& name : o.pattern_vertices) {
        vs.push_back(g->id(name));
      }
      RootCertificate cert
          = which == 1 ? pattern1_no_root(x, vs[0], vs[1], vs[2], vs[3])
                       : pattern2_no_root(x, vs[0], vs[1], vs[2], vs[3], vs[4]);
      print_certificate(out, cert);
      if (o.search_len > 0) {
        return report_root_search(out, cert.element, o.search_len, 0);
      }
      return exit_ok;
    };
    handlers[pattern_cmd("root-pattern1",
                         "g a1^-1 a2 b1^-1 b2 has no n-th root", 4)]
        = with_graph([&](GraphPtr g) { return pattern_body(g, 1); });
    handlers[pattern_cmd("root-pattern2",
                         "g a^-1 b1^-1 b2 a b3^-1 b4 has no n-th root", 5)]
        = with_graph([&](GraphPtr g) { return pattern_body(g, 2); });
    {
      auto* sub = word_cmd("root-search", "bounded search for an n-th root", 1);
      sub->add_option("--n", o.degree, "root degree n >= 2")->required();
      sub->add_option("--max-len", o.max_len, "maximum syllables")->capture_default_str();
      sub->add_option("--inf-bound", o.inf_bound,
                      "|exponent| bound for infinite-order generators");
      handlers[sub] = with_graph([&](GraphPtr g) {
        RootSearchOptions opts;
        opts.max_len = o.max_len;
        if (o.inf_bound != 0) {
          opts.infinite_exponent_bound = o.inf_bound;
        }
        auto r = brute_force_root_search(elem(g, 0), o.degree, opts);
        if (r.root) {
          out << "found " << r.root->to_string() << '\n';
        } else {
          out << "absent\n";
        }
        out << "candidates visited: " << r.candidates_visited << '\n'
            << "infinite exponent bound: " << r.infinite_exponent_bound << '\n';
        if (!r.root) {
          out << "note: absence within max_len " << o.max_len
              << " is not a proof of non-existence\n";
        }
        return r.root ? exit_ok : exit_negative;
      });
    }
    {
      auto* sub = app.add_subcommand("polish-check",
                                     "Polish group topology conditions (a)-(d)");
      sub->add_option("--spec", o.spec_path, "spec file (.gps)")->required();
      handlers[sub] = [&]() {
        auto parsed = load_spec(o.spec_path, err);
        auto v      = polish::check_conditions(parsed.spec);
        out << (v.admits ? "admits" : "not-admitting") << '\n';
        print_verdict(out, v);
        return v.admits ? exit_ok : exit_negative;
      };
    }
    {
      auto* sub = app.add_subcommand("classify",
                                     "RAAG / RACG / general with verdict");
      sub->add_option("--spec", o.spec_path, "spec file (.gps)")->required();
      handlers[sub] = [&]() {
        auto parsed = load_spec(o.spec_path, err);
        auto c      = polish::classify_special(parsed.spec);
        out << polish::to_string(c.tag) << ' '
            << (c.verdict.admits ? "admits" : "not-admitting") << '\n';
        print_verdict(out, c.verdict);
        return c.verdict.admits ? exit_ok : exit_negative;
      };
    }
    {
      auto* sub = app.add_subcommand(
          "aut-witness", "automorphism group of k marked p^n-cycles");
      sub->add_option("p", o.p, "prime")->required();
      sub->add_option("n", o.n, "exponent")->required();
      sub->add_option("k", o.k, "copies")->required();
      sub->add_flag("--unmarked", o.unmarked,
                    "also report the unmarked control structure");
      handlers[sub] = [&]() {
        auto s  = aut::build_witness_structure(o.p, o.n, o.k);
        auto t  = aut::automorphism_group(s);
        bool ok = aut::verify_iso_to_direct_sum(t, o.p, o.n, o.k);
        out << (ok ? "verified" : "mismatch") << '\n'
            << "order " << t.order() << '\n'
            << "abelian " << (t.is_abelian() ? "yes" : "no") << '\n'
            << "order profile " << format_profile(t.order_profile()) << '\n'
            << "expected profile "
            << format_profile(aut::homocyclic_order_profile(o.p, o.n, o.k))
            << '\n';
        if (o.unmarked) {
          auto u = aut::automorphism_group(s.unmarked());
          out << "unmarked control order " << u.order() << '\n';
        }
        return ok ? exit_ok : exit_negative;
      };
    }
    {
      auto* sub = app.add_subcommand(
          "oracle-verify", "compare equality and reduction with the oracle");
      graph_opt(sub);
      sub->add_option("--words", o.words, "explicit words (all pairs checked)");
      sub->add_option("--samples", o.samples, "random pairs")->capture_default_str();
      sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
      sub->add_option("--max-len", o.sample_len, "random word length")->capture_default_str();
      handlers[sub] = with_graph([&](GraphPtr g) {
        std::vector<Word> ws;
        for (auto const& w : o.words) {
          ws.push_back(parse_word(*g, w));
        }
        std::size_t pairs = 0, disagreements = 0, non_confluent = 0;
        auto check_pair = [&](Word const& a, Word const& b) {
          ++pairs;
          bool lib = equal(GroupElement(g, a), GroupElement(g, b));
          if (lib != oracle::oracle_equal(*g, a, b)) {
            if (disagreements++ == 0) {
              out.flush();
              err << "disagreement on " << format_word(*g, a) << " vs "
                  << format_word(*g, b) << '\n';
            }
          }
        };
        auto check_confluence = [&](Word const& a) {
          auto rs = oracle::exhaustive_reduce(*g, a);
          auto cl = oracle::shuffle_closure(*g, *rs.begin());
          for (auto const& r : rs) {
            if (cl.count(r) == 0) {
              ++non_confluent;
              return;
            }
          }
        };
        if (!ws.empty()) {
          for (auto const& a : ws) {
            check_confluence(a);
            for (auto const& b : ws) {
              check_pair(a, b);
            }
          }
        } else if (g->size() > 0) {
          std::mt19937_64 rng(o.seed);
          auto            random_word = [&]() {
            Word        w;
            std::size_t len = std::uniform_int_distribution<std::size_t>(
                0, o.sample_len)(rng);
            while (w.size() < len) {
              auto v = std::uniform_int_distribution<VertexId>(
                  0, static_cast<VertexId>(g->size() - 1))(rng);
              auto const&  c = g->color(v);
              std::int64_t e
                  = c.is_finite()
                        ? std::uniform_int_distribution<std::int64_t>(
                              1, static_cast<std::int64_t>(c.order()) - 1)(rng)
                        : std::uniform_int_distribution<std::int64_t>(-2, 1)(
                              rng);
              if (c.is_infinite() && e >= 0) {
                ++e;
              }
              if (w.empty() || w.back().generator != v) {
                w.push_back({v, e});
              }
            }
            return w;
          };
          for (std::size_t i = 0; i < o.samples; ++i) {
            auto a = random_word();
            // half of the pairs are shuffles of a reduced form of a
            Word b;
            if (i % 2 == 0) {
              auto cl = oracle::shuffle_closure(
                  *g, *oracle::exhaustive_reduce(*g, a).begin());
              auto it = cl.begin();
              std::advance(it, std::uniform_int_distribution<std::size_t>(
                                   0, cl.size() - 1)(rng));
              b = *it;
            } else {
              b = random_word();
            }
            check_confluence(a);
            check_pair(a, b);
          }
        }
        bool ok = disagreements == 0 && non_confluent == 0;
        out << (ok ? "agree" : "disagree") << '\n'
            << "pairs checked: " << pairs << '\n'
            << "disagreements: " << disagreements << '\n'
            << "non-confluent reductions: " << non_confluent << '\n';
        return ok ? exit_ok : exit_negative;
      });
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_usage;
    }

    try {
      for (auto const& [sub, handler] : handlers) {
        if (sub->parsed()) {
          return handler();
        }
      }
      err << "error: no subcommand\n";
      return exit_usage;
    } catch (usage_error const& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    } catch (parse_error const& e) {
      err << "parse error: " << e.what() << '\n';
      return exit_usage;
    } catch (hypothesis_error const& e) {
      out << "rejected: " << e.hypothesis() << '\n';
      return exit_negative;
    } catch (internal_error const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_negative;
    } catch (std::exception const& e) {
      out << "error: " << e.what() << '\n';
      return exit_negative;
    }
  }

}  // namespace gpc::cli
