// Command-line front end for the idem library.
//
// Exit codes: 0 value printed or all checks passed, 1 a check failed or an
// operation's precondition on its inputs does not hold, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "idem/idem.hpp"

namespace {

using namespace idem;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

FinVector read_vector(const std::string& path) {
  auto file = parse_file(path, [](std::istream& in) { return parse_vector_file(in); });
  if (file.vectors.empty()) throw ParseError(path + ": no vector found");
  return file.vectors.front();
}

std::vector<FinVector> read_vectors(const std::string& path) {
  auto file = parse_file(path, [](std::istream& in) { return parse_vector_file(in); });
  if (file.vectors.empty()) throw ParseError(path + ": no vector found");
  return file.vectors;
}

AlgebraElement read_function(const std::string& path) {
  auto fs = parse_file(path, [](std::istream& in) { return parse_function_file(in); });
  if (fs.empty()) throw ParseError(path + ": no function found");
  return fs.front();
}

std::vector<Extended> read_inline_scalars(const std::string& text) {
  return detail::parse_scalars(text, 1);
}

int print_report(const Report& r) {
  std::cout << r;
  std::cout << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? kOk : kFailed;
}

void print_completion(const CompletionResult& c, const FiniteIS& original) {
  write_poset(std::cout, c.completed);
  std::cout << "# embedding:";
  for (std::size_t i = 0; i < original.size(); ++i)
    std::cout << ' ' << original.label(i) << "->" << c.completed.label(c.embedding[i]);
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Idempotent linear algebra over max-plus: functionals, completions and property suites"};
  app.require_subcommand(1);

  std::function<int()> action;

  std::string x_path, y_path;
  auto* eval = app.add_subcommand("eval-star", "Evaluate x*(y) = inf{k : y <= k x}");
  eval->add_option("--x", x_path, "representer vector file")->required();
  eval->add_option("--y", y_path, "argument vector file")->required();
  eval->callback([&] {
    action = [&] {
      std::cout << to_string(star_eval(read_vector(x_path), read_vector(y_path))) << '\n';
      return kOk;
    };
  });

  std::string functional_path, probes_path;
  auto* recover = app.add_subcommand("recover", "Recover the representer of a functional from its values on unit vectors");
  auto* recover_x = recover->add_option("--x", x_path, "vector file; the functional probed is x*");
  recover->add_option("--functional", functional_path, "functional file")->excludes(recover_x);
  recover->add_option("--probes", probes_path, "vector file of extra probes to verify against");
  recover->callback([&] {
    action = [&] {
      if (x_path.empty() && functional_path.empty()) throw CLI::RequiredError("--x or --functional");
      FunctionalRep f = !x_path.empty() ? FunctionalRep(read_vector(x_path))
                                        : parse_file(functional_path, [](std::istream& in) { return parse_functional_file(in); });
      std::vector<FinVector> probes;
      if (!probes_path.empty()) probes = read_vectors(probes_path);
      write_functional(std::cout, FunctionalRep(recover_representer(f, f.dim(), probes)));
      return kOk;
    };
  });

  std::string basis_path, values_text;
  std::size_t ambient_dim = 0;
  auto* extend = app.add_subcommand("extend", "Extend a functional given on generators to the whole space");
  extend->add_option("--basis", basis_path, "vector file of generators")->required();
  extend->add_option("--values", values_text, "prescribed values, one per nonzero generator")->required();
  extend->add_option("--dim", ambient_dim, "ambient dimension (defaults to the generators' dimension)");
  extend->callback([&] {
    action = [&] {
      auto gens = read_vectors(basis_path);
      std::size_t dim = ambient_dim ? ambient_dim : gens.front().dim();
      auto f = extend_functional(SpanBasis<Extended>(gens, dim), read_inline_scalars(values_text), dim);
      write_functional(std::cout, f);
      return kOk;
    };
  });

  auto* separate = app.add_subcommand("separate", "Find a functional taking different values at two points");
  separate->add_option("--x", x_path, "vector file")->required();
  separate->add_option("--y", y_path, "vector file")->required();
  separate->callback([&] {
    action = [&] {
      auto x = read_vector(x_path), y = read_vector(y_path);
      auto f = separate_points(x, y);
      write_functional(std::cout, f);
      std::cout << "# f(x) = " << to_string(f(x)) << ", f(y) = " << to_string(f(y)) << '\n';
      return kOk;
    };
  });

  std::vector<std::string> functional_paths;
  auto* sup_f = app.add_subcommand("sup-functionals", "Pointwise sup of a family of functionals");
  sup_f->add_option("functionals", functional_paths, "functional files")->required();
  sup_f->callback([&] {
    action = [&] {
      std::vector<FunctionalRep> fs;
      for (const auto& p : functional_paths)
        fs.push_back(parse_file(p, [](std::istream& in) { return parse_functional_file(in); }));
      for (const auto& f : fs)
        if (f.dim() != fs.front().dim()) throw DimensionError("functionals of different dimension");
      write_functional(std::cout, pointwise_sup(fs));
      return kOk;
    };
  });

  std::string phi1_path, phi2_path;
  auto* product = app.add_subcommand("scalar-product", "Canonical scalar product <phi1, phi2> = sup(phi1 + phi2)");
  product->add_option("--phi1", phi1_path, "function file")->required();
  product->add_option("--phi2", phi2_path, "function file")->required();
  product->callback([&] {
    action = [&] {
      std::cout << to_string(scalar_product(read_function(phi1_path), read_function(phi2_path))) << '\n';
      return kOk;
    };
  });

  std::string weight_path;
  auto* integrate = app.add_subcommand("integrate", "Idempotent integral of phi, optionally against a weight");
  integrate->add_option("--phi", phi1_path, "function file")->required();
  integrate->add_option("--weight", weight_path, "function file (defaults to the unit function)");
  integrate->callback([&] {
    action = [&] {
      auto phi = read_function(phi1_path);
      auto v = weight_path.empty() ? idempotent_integral(phi) : idempotent_integral(phi, read_function(weight_path));
      std::cout << to_string(v) << '\n';
      return kOk;
    };
  });

  auto* prop4 = app.add_subcommand("prop4", "Check x*(y) = 1*(y x^-1) for invertible x");
  prop4->add_option("--x", x_path, "function file (all values finite)")->required();
  prop4->add_option("--y", y_path, "function file")->required();
  prop4->callback([&] {
    action = [&] {
      auto r = check_prop4(read_function(x_path), read_function(y_path));
      std::cout << "x*(y) = " << to_string(r.star_side) << '\n'
                << "1*(y x^-1) = " << to_string(r.unit_side) << '\n'
                << "result: " << (r.holds ? "PASS" : "FAIL") << '\n';
      return r.holds ? kOk : kFailed;
    };
  });

  std::string poset_path;
  auto poset_command = [&](const char* name, const char* help, CompletionResult (*complete)(const FiniteIS&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--poset", poset_path, "poset file")->required();
    cmd->callback([&, complete] {
      action = [&, complete] {
        auto s = parse_file(poset_path, [](std::istream& in) { return parse_poset(in); });
        print_completion(complete(s), s);
        return kOk;
      };
    });
  };
  poset_command("dm-complete", "Normal completion by cuts", dm_completion);
  poset_command("b-complete", "Completion of bounded subsets", b_completion);

  std::string semiring = "completed-max-plus", sample_text;
  auto* axioms = app.add_subcommand("check-axioms", "Check the idempotent semiring axioms of an instance");
  axioms->add_option("--semiring", semiring, "boolean | max-plus | completed-max-plus")
      ->check(CLI::IsMember({"boolean", "max-plus", "completed-max-plus"}));
  axioms->add_option("--sample", sample_text, "scalars to check over (real instances)");
  axioms->callback([&] {
    action = [&] {
      if (semiring == "boolean") return print_report(check_semiring_axioms(boolean_semifield()));
      std::vector<Extended> sample =
          sample_text.empty() ? std::vector<Extended>{Extended::bottom(), Extended{-1}, Extended{0}, Extended{2}}
                              : read_inline_scalars(sample_text);
      if (sample_text.empty() && semiring == "completed-max-plus") sample.push_back(Extended::top());
      auto d = semiring == "max-plus" ? max_plus() : completed_max_plus();
      return print_report(check_semiring_axioms(d, std::span<const Extended>(sample)));
    };
  });

  std::string vectors_path, scalars_text = "-inf -2 0 1 3";
  auto* alin = app.add_subcommand("check-alinear", "Check that x* preserves sups of all subsets and scalar multiples");
  alin->add_option("--x", x_path, "representer vector file")->required();
  alin->add_option("--vectors", vectors_path, "vector file of test vectors")->required();
  alin->add_option("--scalars", scalars_text, "scalars for the homogeneity check");
  alin->callback([&] {
    action = [&] {
      auto x = read_vector(x_path);
      auto tests = read_vectors(vectors_path);
      auto ks = read_inline_scalars(scalars_text);
      return print_report(check_a_linear([&](const FinVector& y) { return star_eval(x, y); },
                                         std::span<const FinVector>(tests), std::span<const Extended>(ks)));
    };
  });

  std::string graph_path;
  auto* graph = app.add_subcommand("check-graph", "Check that a sampled graph is closed under sups of its subsets");
  graph->add_option("--graph", graph_path, "graph file of 'input | output' lines")->required();
  graph->callback([&] {
    action = [&] {
      return print_report(graph_sup_closed(parse_file(graph_path, [](std::istream& in) { return parse_graph_file(in); })));
    };
  });

  SelftestOptions options;
  auto* self = app.add_subcommand("selftest", "Run every property suite and print a scoreboard");
  self->add_option("--seed", options.seed, "random seed");
  self->add_option("--dim", options.max_dim, "largest dimension drawn")->check(CLI::Range(1, 64));
  self->add_option("--samples", options.samples, "instances per suite")->check(CLI::Range(1, 1000000));
  self->callback([&] {
    action = [&] {
      auto board = run_selftest(options);
      write_scoreboard(std::cout, board, options);
      return board.passed() ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OrderError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
}
