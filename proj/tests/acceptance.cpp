// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// integer or set equalities; there are no tolerances to tune.
//
// usage: qrep_acceptance <path to qrep executable> <data directory>

#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "qrep/error.hpp"
#include "qrep/fixtures.hpp"
#include "qrep/functors.hpp"
#include "qrep/io.hpp"
#include "qrep/verify.hpp"
#include "random_reps.hpp"

using namespace qrep;

namespace {

const Field kQ = Field::rationals();
const Field kF2 = Field::prime(2);
const Field kF3 = Field::prime(3);
const DimVector kAlpha{1, 1, 1, 8, 12, 2, 7, 7};
const DimVector kBeta1{0, 0, 0, 1, 2, 0, 1, 1};
const DimVector kBeta2{0, 1, 1, 4, 7, 1, 4, 4};
const DimVector kBeta3{1, 0, 1, 4, 7, 1, 4, 4};
const DimVector kBeta4{1, 1, 0, 4, 7, 1, 4, 4};
const DimVector kGamma1{1, 1, 1, 3, 2, 2, 2, 2};

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << "  AC" << id << "  " << title << "  [" << out.detail << "]"
            << std::endl;
}

std::string join(const std::vector<DimVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "(" : " (") + v.to_string() + ")";
  return s.empty() ? "{}" : s;
}

int run_cli(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Representation flip(const Representation& x, std::size_t arrow, std::size_t r, std::size_t c) {
  auto maps = x.maps();
  auto& s = maps[arrow](r, c);
  s = s.is_zero() ? Scalar::one(x.field()) : Scalar::zero(x.field());
  return Representation(x.quiver_ptr(), x.field(), x.dims(), maps);
}

bool is_iso(const Representation& x, const Representation& y, const VertexMaps& phi) {
  if (!is_homomorphism(x, y, phi)) return false;
  return std::all_of(phi.begin(), phi.end(),
                     [](const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); });
}

template <typename F>
void parallel_for(std::size_t count, F body) {
  const std::size_t workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
  for (auto& t : pool) t.join();
}

Outcome mutation_sweep() {
  const auto pristine = FixtureSet::load(kQ);
  struct Flip {
    int fixture;
    std::size_t arrow, r, c;
  };
  std::vector<Flip> flips;
  const Representation* reps[] = {&pristine.x_alpha, &pristine.x_beta1, &pristine.x_gamma1};
  for (int which = 0; which < 3; ++which) {
    const auto& x = *reps[which];
    for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a) {
      for (std::size_t r = 0; r < x.map(a).rows(); ++r) {
        for (std::size_t c = 0; c < x.map(a).cols(); ++c) flips.push_back({which, a, r, c});
      }
    }
  }
  // 0: some check failed; 1: all checks pass but the flip is isomorphic to
  // the original (explicit isomorphism); 2: undetected and not shown isomorphic.
  std::vector<int> verdict(flips.size(), 2);
  parallel_for(flips.size(), [&](std::size_t k) {
    const auto& fl = flips[k];
    FixtureSet fx = pristine;
    Representation* slot[] = {&fx.x_alpha, &fx.x_beta1, &fx.x_gamma1};
    *slot[fl.fixture] = flip(*reps[fl.fixture], fl.arrow, fl.r, fl.c);
    if (!verify_paper(fx).passed()) {
      verdict[k] = 0;
      return;
    }
    const auto iso = find_isomorphism(*slot[fl.fixture], *reps[fl.fixture]);
    if (iso && is_iso(*slot[fl.fixture], *reps[fl.fixture], *iso)) verdict[k] = 1;
  });
  const auto failed = std::count(verdict.begin(), verdict.end(), 0);
  const auto isomorphic = std::count(verdict.begin(), verdict.end(), 1);
  const auto undetected = std::count(verdict.begin(), verdict.end(), 2);
  std::ostringstream os;
  os << flips.size() << " single-entry flips over Q: " << failed << " fail a check, " << isomorphic
     << " pass and are isomorphic to the unflipped fixture by an exhibited isomorphism, " << undetected
     << " pass without being isomorphic";
  return {failed > 0 && undetected == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: qrep_acceptance <qrep executable> <data directory>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];
  const auto q = fixtures::quiver();
  const auto k2 = std::make_shared<const Quiver>(parse_quiver(read_file(data + "/K2.qv")));

  criterion(1, "word applied to e4 reconstructs alpha", [&] {
    const auto a = apply_word(*q, fixtures::alpha_word(), DimVector::unit(8, fixtures::kAlphaWordSeed));
    return Outcome{a == kAlpha, "computed " + a.to_string() + ", expected " + kAlpha.to_string() + ", exact"};
  });

  criterion(2, "<alpha,alpha> = 1 and alpha is a positive real root", [&] {
    const auto form = euler_form(*q, kAlpha, kAlpha);
    const auto oracle_form = oracle::euler(*q, kAlpha.coords(), kAlpha.coords());
    const bool real = is_positive_real_root(*q, kAlpha);
    const bool in_orbit = oracle::real_roots_below(*q, kAlpha.coords()).count(kAlpha.coords()) == 1;
    return Outcome{form == 1 && oracle_form == 1 && real && in_orbit,
                   "form " + std::to_string(form) + " (Cartan oracle " + std::to_string(oracle_form) +
                       "), real " + (real ? "true" : "false") + " (orbit oracle " + (in_orbit ? "true" : "false") +
                       "), exact"};
  });

  criterion(3, "dim End(X_alpha) = 9 over Q, F2, F3", [&] {
    std::string detail;
    bool ok = true;
    for (const Field f : {kQ, kF2, kF3}) {
      const auto x = fixtures::x_alpha(f);
      const auto d = end_dim(x);
      const auto o = oracle::hom_dim(x, x);
      ok = ok && d == 9 && o == 9;
      detail += f.name() + "=" + std::to_string(d) + " (oracle " + std::to_string(o) + ") ";
    }
    return Outcome{ok, detail + "exact"};
  });

  criterion(4, "X_alpha over F2 is indecomposable by idempotent search", [&] {
    const auto x = fixtures::x_alpha(kF2);
    const bool local = is_indecomposable_fp(x);
    return Outcome{local, std::string("local ") + (local ? "true" : "false") + ", 2^" +
                              std::to_string(end_dim(x)) + " endomorphisms searched"};
  });

  criterion(5, "reflection candidates below alpha are exactly beta1..beta4", [&] {
    std::vector<DimVector> expected{kBeta1, kBeta2, kBeta3, kBeta4};
    std::sort(expected.begin(), expected.end());
    const auto got = reflection_candidates(*q, kAlpha);
    std::vector<DimVector> brute;
    for (const auto& v : oracle::candidates(*q, kAlpha.coords())) brute.emplace_back(v);
    std::sort(brute.begin(), brute.end());
    return Outcome{got == expected && brute == expected,
                   "computed " + join(got) + "; brute force " + join(brute) + "; exact set equality"};
  });

  criterion(6, "pairings of alpha with the candidates", [&] {
    bool ok = true;
    std::string detail;
    for (const auto& [name, b] : std::vector<std::pair<std::string, DimVector>>{
             {"beta2", kBeta2}, {"beta3", kBeta3}, {"beta4", kBeta4}, {"beta1", kBeta1}}) {
      const auto l = euler_form(*q, kAlpha, b);
      const auto r = euler_form(*q, b, kAlpha);
      const bool want = name == "beta1" ? (l == 3 && r == 2) : (l == 0 && r == 0);
      ok = ok && want && l == oracle::euler(*q, kAlpha.coords(), b.coords()) &&
           r == oracle::euler(*q, b.coords(), kAlpha.coords());
      detail += name + "=(" + std::to_string(l) + "," + std::to_string(r) + ") ";
    }
    return Outcome{ok, detail + "exact"};
  });

  criterion(7, "reflected_dim(alpha, beta1) = gamma1", [&] {
    const auto g = reflected_dim(*q, kAlpha, kBeta1);
    return Outcome{g == kGamma1, "computed " + g.to_string() + ", expected " + kGamma1.to_string() + ", exact"};
  });

  criterion(8, "Hom(X_beta1, X_gamma1) != 0 over Q and F2", [&] {
    bool ok = true;
    std::string detail;
    for (const Field f : {kQ, kF2}) {
      const auto d = hom_dim(fixtures::x_beta1(f), fixtures::x_gamma1(f));
      const auto o = oracle::hom_dim(fixtures::x_beta1(f), fixtures::x_gamma1(f));
      ok = ok && d >= 1 && d == o;
      detail += f.name() + "=" + std::to_string(d) + " (oracle " + std::to_string(o) + ") ";
    }
    return Outcome{ok, detail + ">= 1"};
  });

  criterion(9, "verify-paper exits 0 over Q, F2, F3; every fixture flip fails a check or is isomorphic", [&] {
    bool ok = true;
    std::string detail;
    for (const char* f : {"Q", "F2", "F3"}) {
      const int code = run_cli(cli + " verify-paper --field " + f);
      ok = ok && code == 0;
      detail += std::string(f) + " exit " + std::to_string(code) + "; ";
    }
    const auto sweep = mutation_sweep();
    return Outcome{ok && sweep.pass, detail + sweep.detail};
  });

  criterion(10, "|Ext cocycle basis| = dim Hom - <x,y> on random representations", [&] {
    std::mt19937_64 rng(1001);
    int instances = 0;
    int mismatches = 0;
    int fields[3] = {0, 0, 0};
    for (; instances < 300; ++instances) {
      const auto rq = gen::quiver(rng, 4, 4);
      const Field f = gen::field(rng);
      fields[f.is_rational() ? 2 : f.characteristic() == 2 ? 0 : 1]++;
      const auto x = gen::rep(rng, rq, f, 3);
      const auto y = gen::rep(rng, rq, f, 3);
      const auto ext = static_cast<std::int64_t>(ext_cocycle_basis(x, y).dim());
      const auto hom = static_cast<std::int64_t>(hom_dim(x, y));
      if (ext != hom - euler_form(*rq, x.dims(), y.dims())) ++mismatches;
    }
    return Outcome{mismatches == 0, std::to_string(instances) + " pairs (F2 " + std::to_string(fields[0]) + ", F5 " +
                                        std::to_string(fields[1]) + ", Q " + std::to_string(fields[2]) + "), " +
                                        std::to_string(mismatches) + " mismatches, exact"};
  });

  criterion(11, "functor contracts on random admissible pairs and the Kronecker anchor", [&] {
    const auto s1 = Representation::simple(k2, kQ, 0);
    const auto s2 = Representation::simple(k2, kQ, 1);
    const auto anchor = sigma(s2, s1);
    const bool anchor_ok = anchor.output.dims() == DimVector{1, 2} && end_dim(anchor.output) == 1;

    std::mt19937_64 rng(1102);
    int admissible = 0;
    int nontrivial = 0;
    int bad = 0;
    std::string first_bad;
    for (int trial = 0; trial < 4000 && admissible < 150; ++trial) {
      const auto rq = gen::acyclic_quiver(rng, 4, 4);
      const Field f = gen::field(rng);
      const auto s = gen::rep(rng, rq, f, 2);
      if (s.total_dim() == 0 || !is_exceptional(s)) continue;
      const auto x = gen::rep(rng, rq, f, 2);
      if (hom_dim(x, s) != 0 || hom_dim(s, x) != 0) continue;
      ++admissible;
      const auto out = sigma(s, x);
      if (out.multiplicity > 0) ++nontrivial;
      const auto& z = out.output;
      const bool dims_ok = z.dims() == reflected_dim(*rq, x.dims(), s.dims());
      const bool end_ok = static_cast<std::int64_t>(end_dim(z)) ==
                          predicted_end_dim(*rq, x.dims(), s.dims(), static_cast<std::int64_t>(end_dim(x)),
                                            Direction::Forward);
      const bool ext_ok = ext_cocycle_basis(s, z).dim() == 0 && ext_cocycle_basis(z, s).dim() == 0;
      const auto back = sigma_inv(s, z).output;
      const auto iso = back.dims() == x.dims() ? find_isomorphism(back, x) : std::nullopt;
      const bool round_ok = iso && is_iso(back, x, *iso);
      if (!(dims_ok && end_ok && ext_ok && round_ok)) {
        if (bad++ == 0) first_bad = f.name() + " s=" + s.dims().to_string() + " x=" + x.dims().to_string();
      }
    }
    std::string detail = "anchor dims " + anchor.output.dims().to_string() + " end " +
                         std::to_string(end_dim(anchor.output)) + "; " + std::to_string(admissible) +
                         " admissible pairs, " + std::to_string(nontrivial) + " with Ext, " + std::to_string(bad) +
                         " violations";
    if (bad > 0) detail += " (first: " + first_bad + ")";
    return Outcome{anchor_ok && bad == 0 && admissible >= 100 && nontrivial > 0, detail};
  });

  criterion(12, "Kronecker candidates below (1,2) are {(0,1)}", [&] {
    const auto got = reflection_candidates(*k2, DimVector{1, 2});
    return Outcome{got == std::vector<DimVector>{{0, 1}}, "computed " + join(got) + ", exact"};
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: " + std::to_string(failures) +
                                                                         " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
