#include "app.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "invsg/checks.hpp"
#include "invsg/dfa.hpp"
#include "invsg/lambda_product.hpp"
#include "invsg/serialize.hpp"
#include "invsg/suite.hpp"
#include "invsg/syntactic.hpp"

#include "document.hpp"
#include "dot.hpp"

namespace invsg::cli {

  namespace {
    struct Options {
      bool          monoid = false;
      std::uint64_t seed   = kDefaultSeed;
      bool          seed_given = false;
      std::size_t   max_closure = kDefaultMaxClosure;
      bool          max_closure_given = false;
      std::size_t   trials      = 64;
      std::string   output;
      std::string   format = "json";
      std::string   input;
      bool          minimal = false;
      std::size_t   max_m   = 2;
      std::vector<Element> alt_generators;
    };

    // What a command produces: a JSON document or DOT text, and the exit
    // status to return once it has been written.
    struct Result {
      std::string text;
      int         status = 0;
    };

    class Context {
     public:
      Context(Options const& opts, std::istream& in) : _opts(opts), _in(in) {}

      InputDocument const& document() {
        if (!_doc) {
          std::string text;
          if (_opts.input.empty() || _opts.input == "-") {
            text.assign(std::istreambuf_iterator<char>(_in), {});
          } else {
            std::ifstream file(_opts.input, std::ios::binary);
            if (!file) {
              throw RejectedInput("cannot open " + _opts.input);
            }
            text.assign(std::istreambuf_iterator<char>(file), {});
          }
          _doc = parse_input(text);
        }
        return *_doc;
      }

      ProblemKind kind() {
        bool monoid = _opts.monoid || document().flags.monoid.value_or(false);
        return monoid ? ProblemKind::monoid : ProblemKind::semigroup;
      }

      std::uint64_t seed() {
        if (_opts.seed_given) {
          return _opts.seed;
        }
        return document().flags.seed.value_or(_opts.seed);
      }

      ClosureOptions closure_options() {
        ClosureOptions options;
        options.max_elements = _opts.max_closure_given
                                   ? _opts.max_closure
                                   : document().flags.max_closure.value_or(_opts.max_closure);
        return options;
      }

      FiniteInverseSemigroup semigroup() {
        auto const& payload = document().payload;
        if (std::holds_alternative<ActionPayload>(payload)) {
          throw RejectedInput("expected a semigroup document, got an action");
        }
        if (auto const* g = std::get_if<GeneratorsPayload>(&payload)) {
          return build_semigroup(*g, closure_options());
        }
        return build_semigroup(std::get<TablePayload>(payload), closure_options());
      }

      LambdaProduct product() {
        auto const* a = std::get_if<ActionPayload>(&document().payload);
        if (a == nullptr) {
          throw RejectedInput("expected an action document");
        }
        return lambda_product(build_action(*a, closure_options()), a->generators);
      }

     private:
      Options const&               _opts;
      std::istream&                _in;
      std::optional<InputDocument> _doc;
    };

    std::string dump(Json const& j) {
      return j.dump(2) + "\n";
    }

    Result emit_dfa(Options const& opts, Dfa const& d, Json json) {
      if (opts.format == "dot") {
        return {export_dot(d)};
      }
      return {dump(json)};
    }

    void require_json(Options const& opts, std::string const& command) {
      if (opts.format != "json") {
        throw RejectedInput("--format " + opts.format + " is not supported by " + command);
      }
    }

    Result closure(Options const& opts, Context& ctx) {
      require_json(opts, "closure");
      auto s   = ctx.semigroup();
      auto out = serialize(s);
      out["semilattice"] = s.is_semilattice();
      return {dump(out)};
    }

    Result idem_dfa(Options const& opts, Context& ctx) {
      auto s = ctx.semigroup();
      auto d = idempotent_problem_dfa(s, ctx.kind());
      if (opts.minimal) {
        d = minimize(d);
      }
      Json out        = serialize(d);
      out["case"]     = to_string(ctx.kind());
      out["minimal"]  = opts.minimal;
      return emit_dfa(opts, d, std::move(out));
    }

    Result syntactic(Options const& opts, Context& ctx) {
      auto s  = ctx.semigroup();
      auto d  = minimize(idempotent_problem_dfa(s, ctx.kind()));
      auto sa = syntactic_algebra(d);
      Json out;
      out["case"]           = to_string(ctx.kind());
      out["minimal_dfa"]    = serialize(d);
      out["algebra"]        = serialize(sa);
      out["group_language"] = is_group_language(sa);
      return emit_dfa(opts, d, std::move(out));
    }

    Result check(Options const& opts, Context& ctx, std::string const& which) {
      require_json(opts, "check");
      if (which == "bound" && std::holds_alternative<ActionPayload>(ctx.document().payload)) {
        auto product = ctx.product();
        auto const& target = product.action().target();
        auto sigma   = target.is_semilattice() ? free_semilattice_sigma() : constant_sigma(target.size());
        LocalFinitenessOptions options;
        options.trials = opts.trials;
        options.max_m  = opts.max_m;
        options.seed   = ctx.seed();
        auto report    = check_local_finiteness_bound(product, sigma, options);
        return {dump(serialize(report)), report.holds ? 0 : 2};
      }
      auto s    = ctx.semigroup();
      auto kind = ctx.kind();
      if (which == "lemma") {
        auto report = compute_syntactic_projection(s, kind);
        return {dump(serialize(report)), report.ok() ? 0 : 2};
      }
      if (which == "e-unitary") {
        return {dump(serialize(check_e_unitary_corollary(s, kind)))};
      }
      if (which == "generators") {
        std::vector<Element> alt = opts.alt_generators;
        if (alt.empty()) {
          for (Element x = 0; x < s.size(); ++x) {
            alt.push_back(x);
          }
        }
        return {dump(serialize(check_generator_invariance(s, s.generators(), alt, kind)))};
      }
      auto report = check_main_theorem_finite_direction(s, kind);
      if (which == "main") {
        return {dump(serialize(report))};
      }
      Json out;
      out["case"]       = to_string(kind);
      out["size"]       = report.size;
      out["generators"] = report.generators;
      out["n"]          = report.semigroup_part_size;
      out["bound"]      = report.bound ? Json(*report.bound) : Json(nullptr);
      out["holds"]      = report.holds;
      out["attained"]   = report.attained;
      return {dump(out)};
    }

    Result lambda(Options const& opts, Context& ctx) {
      require_json(opts, "lambda");
      return {dump(serialize(ctx.product()))};
    }

    Result suite(Options const& opts) {
      require_json(opts, "suite");
      SuiteOptions options;
      options.seed   = opts.seed;
      options.trials = opts.trials;
      auto report    = run_check_suite(options);
      return {dump(report), report["ok"].get<bool>() ? 0 : 2};
    }

    int write(Options const& opts, Result const& result, std::ostream& out) {
      if (opts.output.empty()) {
        out << result.text;
      } else {
        std::ofstream file(opts.output, std::ios::binary);
        if (!(file << result.text)) {
          throw RejectedInput("cannot write " + opts.output);
        }
      }
      return result.status;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite inverse semigroups, their idempotent problems and lambda-products", "invsg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Options opts;
    auto*   seed = app.add_option("--seed", opts.seed, "Random seed")->check(CLI::NonNegativeNumber);
    auto*   cap  = app.add_option("--max-closure", opts.max_closure, "Largest closure to enumerate")
                    ->check(CLI::PositiveNumber);
    app.add_flag("--monoid", opts.monoid, "Idempotent problem over the free monoid");
    app.add_option("--trials", opts.trials, "Random subsets per size when sampling")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", opts.output, "Write the result to this file");
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));
    for (auto* o : app.get_options()) {
      o->configurable(false);
    }
    app.fallthrough();

    auto with_input = [&](CLI::App* sub) {
      sub->add_option("input", opts.input, "Input document (standard input if absent or -)");
      return sub;
    };

    auto* closure_cmd = with_input(app.add_subcommand("closure", "Build a semigroup and report it"));
    auto* dfa_cmd     = with_input(app.add_subcommand("idem-dfa", "Automaton for the idempotent problem"));
    dfa_cmd->add_flag("--minimal", opts.minimal, "Minimize first");
    auto* syn_cmd = with_input(app.add_subcommand("syntactic", "Syntactic monoid of the idempotent problem"));
    auto* check_cmd = app.add_subcommand("check", "Run a verification report");
    check_cmd->require_subcommand(1);
    std::string which;
    for (auto const& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"lemma", "Syntactic projection is an idempotent-pure morphism with the greatest kernel"},
             {"e-unitary", "E-unitary iff the idempotent problem is a group language"},
             {"generators", "Syntactic semigroup does not depend on the generating set"},
             {"bound", "Size bound for a semigroup, or the local finiteness bound for an action"},
             {"main", "Finite automaton and size bound for a finite semigroup"}}) {
      auto* sub = with_input(check_cmd->add_subcommand(name, help));
      sub->callback([&which, name = name] { which = name; });
      if (name == "generators") {
        sub->add_option("--alt-generators", opts.alt_generators, "Second generating set (default: all elements)")
            ->delimiter(',');
      }
      if (name == "bound") {
        sub->add_option("--max-m", opts.max_m, "Largest subset size for an action")->check(CLI::PositiveNumber);
      }
    }
    auto* lambda_cmd = with_input(app.add_subcommand("lambda", "Build the lambda-product of an action"));
    auto* bound_cmd  = app.add_subcommand("bound", "Print n (2^(kn) - 1)");
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    bound_cmd->add_option("n", n)->required();
    bound_cmd->add_option("k", k)->required();
    auto* suite_cmd = app.add_subcommand("suite", "Run every check on the built-in corpus");

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    opts.seed_given        = seed->count() > 0;
    opts.max_closure_given = cap->count() > 0;

    try {
      Context ctx(opts, in);
      Result  result;
      if (closure_cmd->parsed()) {
        result = closure(opts, ctx);
      } else if (dfa_cmd->parsed()) {
        result = idem_dfa(opts, ctx);
      } else if (syn_cmd->parsed()) {
        result = syntactic(opts, ctx);
      } else if (check_cmd->parsed()) {
        result = check(opts, ctx, which);
      } else if (lambda_cmd->parsed()) {
        result = lambda(opts, ctx);
      } else if (bound_cmd->parsed()) {
        require_json(opts, "bound");
        result = {std::to_string(billhardt_bound(n, k)) + "\n"};
      } else if (suite_cmd->parsed()) {
        result = suite(opts);
      }
      return write(opts, result, out);
    } catch (RejectedInput const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    } catch (InvariantViolation const& e) {
      err << "invariant violation: " << e.what() << "\n";
      return 2;
    } catch (ResourceLimit const& e) {
      err << "resource limit: " << e.what() << "\n";
      return 3;
    } catch (std::bad_alloc const&) {
      err << "resource limit: out of memory\n";
      return 3;
    }
  }

}  // namespace invsg::cli
