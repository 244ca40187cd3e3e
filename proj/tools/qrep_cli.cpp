// Command-line front end: one subcommand per library operation plus the
// verify-paper pipeline. Exit codes: 0 success, 1 failed check or violated
// precondition, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrep/error.hpp"
#include "qrep/fixtures.hpp"
#include "qrep/functors.hpp"
#include "qrep/io.hpp"
#include "qrep/verify.hpp"

namespace {

using namespace qrep;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string quiver_file;
  std::string field;
  bool machine = false;
  std::string a, b, root, word, x, y, s, out, fixture;
  std::size_t vertex = 0;
  std::uint64_t budget = kDefaultSearchBudget;
};

// Collects human-readable lines and key=value pairs; prints one or the other.
class Output {
 public:
  explicit Output(bool machine) : machine_(machine) {}
  void line(const std::string& text) { human_.push_back(text); }
  void kv(const std::string& key, const std::string& value) { kv_.push_back(key + "=" + value); }
  void flush() const {
    for (const auto& l : machine_ ? kv_ : human_) std::cout << l << '\n';
  }

 private:
  bool machine_;
  std::vector<std::string> human_;
  std::vector<std::string> kv_;
};

std::shared_ptr<const Quiver> load_quiver(const Options& o) {
  if (o.quiver_file.empty()) throw CLI::RequiredError("--quiver");
  return std::make_shared<const Quiver>(parse_quiver(read_file(o.quiver_file)));
}

Representation load_rep(const Options& o, const std::string& path, const std::shared_ptr<const Quiver>& q,
                        const char* flag) {
  if (path.empty()) throw CLI::RequiredError(flag);
  auto rep = parse_representation(read_file(path), q);
  if (!o.field.empty()) {
    const Field f = Field::parse(o.field);
    if (f != rep.field()) rep = rep.change_field(f);
  }
  return rep;
}

DimVector vec(const std::string& text, const Quiver& q, const char* flag) {
  if (text.empty()) throw CLI::RequiredError(flag);
  return parse_dim_vector(text, q.vertex_count());
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_functor(Output& out, const Options& o, const FunctorResult& r) {
  const bool exact =
      std::all_of(r.witnesses.begin(), r.witnesses.end(), [](const ExactSequence& w) { return w.is_exact(); });
  out.line("output dims: " + r.output.dims().to_string());
  out.line("copies of S: " + std::to_string(r.multiplicity));
  out.line("dim End(output): " + std::to_string(end_dim(r.output)));
  out.line("witness sequences exact: " + yes(exact));
  out.line(format_representation(r.output));
  out.kv("dims", r.output.dims().to_string());
  out.kv("multiplicity", std::to_string(r.multiplicity));
  out.kv("end_dim", std::to_string(end_dim(r.output)));
  out.kv("exact", yes(exact));
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw Error("cannot write " + o.out);
    file << format_representation(r.output);
  }
}

int run(const std::string& command, const Options& o) {
  Output out(o.machine);
  int status = 0;

  if (command == "verify-paper") {
    const auto report = verify_paper(o.field.empty() ? Field::rationals() : Field::parse(o.field));
    std::cout << (o.machine ? report.to_key_values() : report.to_text());
    return report.passed() ? 0 : kExitCheckFailed;
  }
  if (command == "fixture") {
    if (o.fixture == "Q") std::cout << fixtures::quiver_text();
    else if (o.fixture == "X_alpha") std::cout << fixtures::x_alpha_text();
    else if (o.fixture == "X_beta1") std::cout << fixtures::x_beta1_text();
    else if (o.fixture == "X_gamma1") std::cout << fixtures::x_gamma1_text();
    else throw CLI::ValidationError("fixture", "unknown fixture '" + o.fixture + "'");
    return 0;
  }

  const auto q = load_quiver(o);
  if (command == "euler") {
    const auto a = vec(o.a, *q, "--a");
    const auto b = vec(o.b, *q, "--b");
    const auto e = euler_form(*q, a, b);
    const auto s = sym_form(*q, a, b);
    out.line("<a,b> = " + std::to_string(e));
    out.line("(a,b) = " + std::to_string(s));
    out.kv("euler", std::to_string(e));
    out.kv("sym", std::to_string(s));
  } else if (command == "reflect") {
    if (o.vertex < 1 || o.vertex > q->vertex_count()) throw CLI::ValidationError("--vertex", "out of range");
    const auto r = simple_reflection(*q, o.vertex - 1, vec(o.a, *q, "--a"));
    out.line(r.to_string());
    out.kv("result", r.to_string());
  } else if (command == "realroot") {
    const auto a = vec(o.a, *q, "--a");
    const bool real = is_positive_real_root(*q, a);
    out.line(std::string("(") + a.to_string() + ") is " + (real ? "" : "not ") + "a positive real root");
    out.kv("euler", std::to_string(euler_form(*q, a, a)));
    out.kv("real", yes(real));
  } else if (command == "word") {
    if (!o.word.empty()) {
      const auto r = apply_word(*q, parse_word(o.word, q->vertex_count()), vec(o.a, *q, "--a"));
      out.line(r.to_string());
      out.kv("result", r.to_string());
    } else {
      const auto w = reflection_word_for_root(*q, vec(o.root, *q, "--root"));
      out.line(w.to_string());
      out.kv("word", w.to_string());
      out.kv("length", std::to_string(w.length()));
    }
  } else if (command == "candidates") {
    const auto cands = reflection_candidates(*q, vec(o.root, *q, "--root"));
    for (std::size_t k = 0; k < cands.size(); ++k) {
      out.line(cands[k].to_string());
      out.kv("candidate." + std::to_string(k + 1), cands[k].to_string());
    }
    out.kv("count", std::to_string(cands.size()));
  } else if (command == "hom") {
    const auto x = load_rep(o, o.x, q, "--x");
    const auto y = load_rep(o, o.y, q, "--y");
    const auto basis = hom_basis(x, y);
    out.line("dim Hom(X,Y) = " + std::to_string(basis.dim()));
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
      std::string text = "  phi" + std::to_string(k + 1) + ":";
      for (std::size_t i = 0; i < basis.elements[k].size(); ++i) {
        text += " v" + std::to_string(i + 1) + "=" + basis.elements[k][i].to_string();
      }
      out.line(text);
    }
    out.kv("hom_dim", std::to_string(basis.dim()));
  } else if (command == "ext") {
    const auto x = load_rep(o, o.x, q, "--x");
    const auto y = load_rep(o, o.y, q, "--y");
    const auto basis = ext_cocycle_basis(x, y);
    const auto formula = ext_dim_formula(x, y);
    out.line("dim Ext^1(X,Y) = " + std::to_string(basis.dim()) + " (dim Hom - <,> gives " + std::to_string(formula) +
             ")");
    out.kv("ext_dim", std::to_string(basis.dim()));
    out.kv("ext_dim_formula", std::to_string(formula));
  } else if (command == "end") {
    const auto x = load_rep(o, o.x, q, "--x");
    const auto d = end_dim(x);
    out.line("dim End(X) = " + std::to_string(d));
    out.kv("end_dim", std::to_string(d));
  } else if (command == "indec") {
    const auto x = load_rep(o, o.x, q, "--x");
    std::string verdict;
    try {
      verdict = yes(is_indecomposable_fp(x, o.budget));
    } catch (const BudgetExceeded& e) {
      verdict = "undecided";
      out.line(e.what());
    }
    out.line("indecomposable: " + verdict);
    out.kv("indecomposable", verdict);
  } else if (command == "sigma" || command == "sigma-inv") {
    const auto s = load_rep(o, o.s, q, "--s");
    const auto x = load_rep(o, o.x, q, "--x");
    print_functor(out, o, command == "sigma" ? sigma(s, x) : sigma_inv(s, x));
  } else {
    throw CLI::ValidationError("command", "unknown subcommand " + command);
  }
  out.flush();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver representations over exact fields: forms, roots, Hom/Ext and universal extension functors"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--quiver", o.quiver_file, "quiver file")->check(CLI::ExistingFile);
  app.add_option("--field", o.field, "field: Q or F<p> (e.g. F2); converts loaded representations");
  app.add_flag("--machine", o.machine, "print key=value lines only");

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto* euler = add("euler", "Ringel form <a,b> and its symmetrization");
  euler->add_option("--a", o.a, "vector, e.g. e4 or 1,0,2")->required();
  euler->add_option("--b", o.b, "vector")->required();
  auto* reflect = add("reflect", "simple reflection s_i(a)");
  reflect->add_option("--vertex", o.vertex, "vertex i (1-based)")->required();
  reflect->add_option("--a", o.a, "vector")->required();
  auto* realroot = add("realroot", "positive real root test");
  realroot->add_option("--a", o.a, "vector")->required();
  auto* word = add("word", "apply a reflection word, or find a word for s_root");
  word->add_option("--word", o.word, "letters, e.g. \"s8 s7 s5\" or 8,7,5");
  word->add_option("--a", o.a, "vector the word acts on");
  word->add_option("--root", o.root, "positive real root");
  auto* cands = add("candidates", "real roots below a root pairing nonnegatively with it");
  cands->add_option("--root", o.root, "positive real root")->required();
  auto* hom = add("hom", "basis of Hom(X,Y)");
  hom->add_option("--x", o.x, "representation file")->required();
  hom->add_option("--y", o.y, "representation file")->required();
  auto* ext = add("ext", "dimension of Ext^1(X,Y), by cocycles and by the Euler form");
  ext->add_option("--x", o.x, "representation file")->required();
  ext->add_option("--y", o.y, "representation file")->required();
  auto* end = add("end", "dim End(X)");
  end->add_option("--x", o.x, "representation file")->required();
  auto* indec = add("indec", "indecomposability over F_p by idempotent search");
  indec->add_option("--x", o.x, "representation file")->required();
  indec->add_option("--budget", o.budget, "maximum number of endomorphisms to enumerate");
  for (const char* name : {"sigma", "sigma-inv"}) {
    auto* sub = add(name, std::string(name) == "sigma" ? "universal extension functor sigma_S(X)"
                                                         : "inverse functor sigma_S^-1(X)");
    sub->add_option("--s", o.s, "representation S")->required();
    sub->add_option("--x", o.x, "representation X")->required();
    sub->add_option("--out", o.out, "write the output representation here");
  }
  add("verify-paper", "re-derive the non-constructibility of X_alpha");
  auto* fixture = add("fixture", "print an embedded fixture file");
  fixture->add_option("name", o.fixture, "Q, X_alpha, X_beta1 or X_gamma1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShapeError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
