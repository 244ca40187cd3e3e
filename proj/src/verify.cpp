#include "qrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qrep/error.hpp"
#include "qrep/fixtures.hpp"
#include "qrep/functors.hpp"

namespace qrep {

namespace {

const DimVector kAlpha{1, 1, 1, 8, 12, 2, 7, 7};
const DimVector kBeta1{0, 0, 0, 1, 2, 0, 1, 1};
const DimVector kBeta2{0, 1, 1, 4, 7, 1, 4, 4};
const DimVector kBeta3{1, 0, 1, 4, 7, 1, 4, 4};
const DimVector kBeta4{1, 1, 0, 4, 7, 1, 4, 4};
const DimVector kGamma1{1, 1, 1, 3, 2, 2, 2, 2};
constexpr std::size_t kEndAlpha = 9;

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<DimVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "(" : " (") + v.to_string() + ")";
  return out.empty() ? "{}" : out;
}

// Locality of End over F_2 for a representation with integer entries.
bool local_over_f2(const Representation& x) { return is_indecomposable_fp(x.change_field(Field::prime(2))); }

class ReportBuilder {
 public:
  explicit ReportBuilder(Field field) { report_.field = field; }

  // Runs body, which fills in value and pass; any library error fails the
  // check and lands in the value.
  void check(std::string name, std::string expected, std::string provenance,
             const std::function<void(Check&)>& body) {
    Check c{std::move(name), "", std::move(expected), std::move(provenance), false};
    try {
      body(c);
    } catch (const Error& e) {
      c.value = std::string("error: ") + e.what();
      c.pass = false;
    }
    report_.checks.push_back(std::move(c));
  }

  void observe(std::string name, const std::function<std::string()>& body) {
    std::string value;
    try {
      value = body();
    } catch (const Error& e) {
      value = std::string("error: ") + e.what();
    }
    report_.observations.push_back({std::move(name), std::move(value)});
  }

  VerifyReport take() { return std::move(report_); }
  const VerifyReport& current() const { return report_; }

 private:
  VerifyReport report_;
};

}  // namespace

bool VerifyReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "verify-paper over " << field.name() << '\n';
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const auto& c = checks[k];
    os << (c.pass ? "[PASS] " : "[FAIL] ") << '(' << k + 1 << ") " << c.name << '\n';
    os << "       computed: " << c.value << '\n';
    os << "       expected: " << c.expected << "  [" << c.provenance << "]\n";
  }
  for (const auto& o : observations) os << "[NOTE] " << o.name << ": " << o.value << '\n';
  os << (passed() ? "RESULT: all checks passed\n" : "RESULT: some checks FAILED\n");
  return os.str();
}

std::string VerifyReport::to_key_values() const {
  std::ostringstream os;
  os << "field=" << field.name() << '\n';
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const auto& c = checks[k];
    const std::string prefix = "check." + std::to_string(k + 1) + ".";
    os << prefix << "name=" << c.name << '\n';
    os << prefix << "value=" << c.value << '\n';
    os << prefix << "expected=" << c.expected << '\n';
    os << prefix << "provenance=" << c.provenance << '\n';
    os << prefix << "pass=" << bool_text(c.pass) << '\n';
  }
  for (std::size_t k = 0; k < observations.size(); ++k) {
    const std::string prefix = "note." + std::to_string(k + 1) + ".";
    os << prefix << "name=" << observations[k].name << '\n';
    os << prefix << "value=" << observations[k].value << '\n';
  }
  os << "pass=" << bool_text(passed()) << '\n';
  return os.str();
}

FixtureSet FixtureSet::load(Field field) {
  return {fixtures::quiver(), fixtures::x_alpha(field), fixtures::x_beta1(field), fixtures::x_gamma1(field)};
}

VerifyReport verify_paper(Field field) { return verify_paper(FixtureSet::load(field)); }

VerifyReport verify_paper(const FixtureSet& fx) {
  const Quiver& q = *fx.quiver;
  const std::size_t n = q.vertex_count();
  ReportBuilder report(fx.x_alpha.field());

  DimVector alpha;
  report.check("alpha is the word s8 s7 s5 s4 s8 s7 s5 s8 s7 s5 s6 s4 s5 s4 s1 s2 s3 applied to e4", kAlpha.to_string(),
               "stated value of alpha", [&](Check& c) {
                 alpha = apply_word(q, fixtures::alpha_word(), DimVector::unit(n, fixtures::kAlphaWordSeed));
                 c.value = alpha.to_string();
                 c.pass = alpha == kAlpha;
               });

  report.check("alpha is a positive real root with <alpha,alpha> = 1", "<alpha,alpha>=1 real=true",
               "alpha lies in the Weyl orbit of a simple root", [&](Check& c) {
                 const auto form = euler_form(q, alpha, alpha);
                 const bool real = is_positive_real_root(q, alpha);
                 c.value = "<alpha,alpha>=" + std::to_string(form) + " real=" + bool_text(real);
                 c.pass = form == 1 && real;
               });

  report.check("X_alpha has dimension alpha, dim End(X_alpha) = 9 and End(X_alpha) is local",
               "dims=" + kAlpha.to_string() + " end=9 local_F2=true", "explicit X_alpha; End local of dimension 9",
               [&](Check& c) {
                 const auto& x = fx.x_alpha;
                 const std::size_t end = end_dim(x);
                 const bool local2 = local_over_f2(x);
                 c.value = "dims=" + x.dims().to_string() + " end=" + std::to_string(end) +
                           " local_F2=" + bool_text(local2);
                 c.pass = x.dims() == alpha && end == kEndAlpha && local2;
                 const Field f = x.field();
                 if (f.is_prime() && f.characteristic() != 2) {
                   try {
                     const bool local = is_indecomposable_fp(x);
                     c.value += " local_" + f.name() + "=" + bool_text(local);
                     c.pass = c.pass && local;
                   } catch (const BudgetExceeded&) {
                     c.value += " local_" + f.name() + "=undecided";
                   }
                 }
               });

  std::vector<DimVector> candidates;
  report.check("real roots beta < alpha with <alpha,beta> >= 0 and <beta,alpha> >= 0",
               join({kBeta1, kBeta2, kBeta3, kBeta4}), "the four candidates for a reflection", [&](Check& c) {
                 candidates = reflection_candidates(q, alpha);
                 c.value = join(candidates);
                 std::vector<DimVector> expected{kBeta1, kBeta2, kBeta3, kBeta4};
                 std::sort(expected.begin(), expected.end());
                 c.pass = candidates == expected;
               });

  report.check("<alpha,beta_i> = 0 = <beta_i,alpha> for i = 2,3,4, so only beta1 can move X_alpha",
               "b2=(0,0) b3=(0,0) b4=(0,0) b1=(3,2)", "pairings of the candidates with alpha", [&](Check& c) {
                 bool ok = true;
                 std::string value;
                 const std::vector<std::pair<std::string, DimVector>> named{
                     {"b2", kBeta2}, {"b3", kBeta3}, {"b4", kBeta4}, {"b1", kBeta1}};
                 for (const auto& [label, beta] : named) {
                   const auto left = euler_form(q, alpha, beta);
                   const auto right = euler_form(q, beta, alpha);
                   value += (value.empty() ? "" : " ") + label + "=(" + std::to_string(left) + "," +
                            std::to_string(right) + ")";
                   ok = ok && (label == "b1" ? (left != 0 || right != 0) : (left == 0 && right == 0));
                 }
                 // Every candidate must be one of the four named roots.
                 ok = ok && std::all_of(candidates.begin(), candidates.end(), [&](const DimVector& b) {
                        return b == kBeta1 || b == kBeta2 || b == kBeta3 || b == kBeta4;
                      });
                 c.value = value;
                 c.pass = ok;
               });

  DimVector gamma;
  report.check("beta1 is a real Schur root and dim sigma^-1(X_alpha) = alpha - (alpha,beta1) beta1 = gamma1",
               "real=true dims(X_beta1)=" + kBeta1.to_string() + " end=1 ext=0 gamma1=" + kGamma1.to_string(),
               "reflection of alpha along beta1", [&](Check& c) {
                 const bool real = is_positive_real_root(q, kBeta1);
                 const auto& s = fx.x_beta1;
                 const std::size_t end = end_dim(s);
                 const std::size_t ext = ext_cocycle_basis(s, s).dim();
                 gamma = reflected_dim(q, alpha, kBeta1);
                 c.value = "real=" + bool_text(real) + " dims(X_beta1)=" + s.dims().to_string() +
                           " end=" + std::to_string(end) + " ext=" + std::to_string(ext) + " gamma1=" + gamma.to_string();
                 c.pass = real && s.dims() == kBeta1 && end == 1 && ext == 0 && gamma == kGamma1;
               });

  std::size_t hom_b1_g1 = 0;
  report.check("Hom(X_beta1, X_gamma1) != 0, contradicting X_alpha in M^{X_beta1}_{X_beta1}",
               "dims(X_gamma1)=" + kGamma1.to_string() + " local_F2=true hom>=1",
               "nonzero map X_beta1 -> X_gamma1", [&](Check& c) {
                 const auto& g = fx.x_gamma1;
                 const bool local2 = local_over_f2(g);
                 hom_b1_g1 = hom_dim(fx.x_beta1, g);
                 c.value = "dims(X_gamma1)=" + g.dims().to_string() + " local_F2=" + bool_text(local2) +
                           " hom=" + std::to_string(hom_b1_g1);
                 c.pass = g.dims() == gamma && local2 && hom_b1_g1 >= 1;
               });

  report.check("no real Schur root beta satisfies both X_alpha in M^{X_beta}_{X_beta} and a nonzero Hom with X_alpha",
               "true", "nonexistence of a reflection for X_alpha", [&](Check& c) {
                 const auto& checks = report.current().checks;
                 const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
                 c.value = bool_text(all);
                 c.pass = all;
               });

  report.observe("dim Hom(X_beta1, X_gamma1)", [&] { return std::to_string(hom_b1_g1); });
  report.observe("membership of X_alpha for S = X_beta1", [&] {
    const auto m = membership(fx.x_beta1, fx.x_alpha);
    return "hom(X,S)=" + std::to_string(m.hom_xs_dim) + " hom(S,X)=" + std::to_string(m.hom_sx_dim) +
           " ext(S,X)=" + std::to_string(m.ext_sx_dim) + " ext(X,S)=" + std::to_string(m.ext_xs_dim);
  });
  report.observe("dim End sigma^-1(X_alpha) if X_alpha were a member", [&] {
    return std::to_string(
        predicted_end_dim(q, fx.x_alpha.dims(), kBeta1, static_cast<std::int64_t>(kEndAlpha), Direction::Inverse));
  });
  report.observe("direct sigma^-1_{X_beta1}(X_alpha)", [&] {
    const auto result = sigma_inv(fx.x_beta1, fx.x_alpha);
    const auto& out = result.output;
    const bool exact = std::all_of(result.witnesses.begin(), result.witnesses.end(),
                                   [](const ExactSequence& w) { return w.is_exact(); });
    return "dims=" + out.dims().to_string() + " equals_gamma1=" + bool_text(out.dims() == kGamma1) +
           " hom(S,out)=" + std::to_string(hom_dim(fx.x_beta1, out)) +
           " hom(out,S)=" + std::to_string(hom_dim(out, fx.x_beta1)) + " sequences_exact=" + bool_text(exact);
  });
  return report.take();
}

}  // namespace qrep
