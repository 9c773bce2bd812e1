#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starsep/fock.hpp"
#include "starsep/oracle.hpp"
#include "starsep/parse.hpp"
#include "starsep/verify.hpp"

namespace {

using namespace starsep;

Space space_from(const std::string& name, int dim) {
  if (dim < 1) throw error("--dim must be at least 1");
  if (name == "cpn") return cpn(dim);
  if (name == "chn") return chn(dim);
  throw error("--space must be cpn or chn");
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw error("cannot write " + out_path);
    out << doc.dump(2) << "\n";
  }
}

int cmd_star(const std::string& space_name, int dim, int order, long long L,
             const std::string& expr_f, const std::string& expr_g,
             const std::string& out_path) {
  Space s = space_from(space_name, dim);
  RingElem f = parse_expr(expr_f, s);
  RingElem g = parse_expr(expr_g, s);
  nlohmann::json doc;
  doc["space"] = space_name;
  doc["dim"] = dim;
  doc["f"] = expr_f;
  doc["g"] = expr_g;
  if (L > 0) {
    RingElem prod = star_exact_fock(f, g, L);
    doc["mode"] = "exact";
    doc["L"] = L;
    doc["result"] = prod.str();
    std::cout << "f * g at h = 1/" << L << ":\n  " << prod.str() << "\n";
  } else {
    HSeries left = star_trunc(f, g, order);
    HSeries right = star_trunc_right(f, g, order);
    bool consistent = true;
    for (int n = 0; n <= order; ++n)
      if (!(left[n] == right[n])) consistent = false;
    doc["mode"] = "trunc";
    doc["order"] = order;
    nlohmann::json arr = nlohmann::json::array();
    std::cout << "f * g mod h^" << order + 1 << ":\n";
    for (int n = 0; n <= order; ++n) {
      arr.push_back(left[n].str());
      std::cout << "  h^" << n << ": " << left[n].str() << "\n";
    }
    doc["orders"] = arr;
    doc["left_right_consistent"] = consistent;
    if (!consistent) {
      std::cerr << "error: left and right operator routes disagree\n";
      emit(doc, out_path);
      return 1;
    }
  }
  emit(doc, out_path);
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt,
               const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult res = run_suite(suite, opt);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(res.to_json(), out_path);
  for (auto& c : res.checks)
    std::cerr << (c.pass ? "pass" : "FAIL") << "  " << c.check
              << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
  // wall time goes to the console only; reports stay byte-deterministic
  std::cerr << "suite '" << suite << "': " << (res.pass() ? "pass" : "FAIL") << " ("
            << res.checks.size() << " checks, " << secs << " s)\n";
  return res.pass() ? 0 : 1;
}

int cmd_expand(const std::string& what, int m, int kind, int order,
               const std::string& space_name, const HypParams& hyp) {
  if (what == "alpha" || what == "beta") {
    RationalH f = what == "alpha" ? alpha(m) : beta(m);
    std::cout << what << "_" << m << "(h) = " << f.str() << "\n";
    auto t = f.taylor(order);
    std::cout << "series:";
    for (int n = 0; n <= order; ++n) std::cout << " " << rat_str(t[static_cast<size_t>(n)]);
    std::cout << "\n";
    return 0;
  }
  if (what == "c") {
    SpaceKind k = space_name == "chn" ? SpaceKind::CHN : SpaceKind::CPN;
    RationalH f = c_covariant(m, k);
    std::cout << "c_" << m << "(h) = " << f.str() << "\n";
    auto t = f.taylor(order);
    std::cout << "series:";
    for (int n = 0; n <= order; ++n) std::cout << " " << rat_str(t[static_cast<size_t>(n)]);
    std::cout << "\n";
    return 0;
  }
  if (what == "hyp" || what == "bordemann") {
    XSeries s = what == "hyp" ? hyp_expand(hyp, order) : bordemann_F(kind, order);
    for (int n = 0; n <= order; ++n)
      std::cout << "h^" << n << ": " << s[n].str("x") << "\n";
    return 0;
  }
  throw error("--what must be alpha, beta, c, hyp or bordemann");
}

int cmd_fock(const std::string& what, int dim, long long L, int size,
             const std::string& out_path) {
  nlohmann::json doc;
  if (what == "matrices") {
    MatrixRep rep = matrix_rep(L, dim, SpaceKind::CPN);
    doc["space"] = "cpn";
    doc["dim"] = dim;
    doc["L"] = L;
    nlohmann::json basis = nlohmann::json::array();
    for (auto& b : rep.basis) basis.push_back(b.str());
    doc["basis"] = basis;
    nlohmann::json mats;
    for (auto& [key, mat] : rep.mats) {
      std::string name;
      switch (key.first) {
        case Generator::Kind::Z: name = "z"; break;
        case Generator::Kind::DPhi: name = "dPhi"; break;
        case Generator::Kind::Zbar: name = "zb"; break;
        case Generator::Kind::DbarPhi: name = "dbPhi"; break;
      }
      name += "[" + std::to_string(key.second) + "]";
      nlohmann::json rows = nlohmann::json::array();
      for (auto& row : mat) {
        nlohmann::json r = nlohmann::json::array();
        for (auto& e : row) r.push_back(e.str());
        rows.push_back(r);
      }
      mats[name] = rows;
    }
    doc["matrices"] = mats;
    emit(doc, out_path);
    return 0;
  }
  if (what == "constants") {
    Space s = cpn(dim);
    nlohmann::json constants;
    for (auto& a : fock_basis(dim, size, size)) {
      for (auto& b : fock_basis(dim, size, size)) {
        FockVector prod = fock_mul(FockVector::basis(s, a), FockVector::basis(s, b));
        if (prod.is_zero()) continue;
        nlohmann::json entries = nlohmann::json::array();
        for (auto& [idx, c] : prod.coeffs)
          entries.push_back({idx.str(), rat_str(c.rational_part().as_constant())});
        constants[a.str() + "|" + b.str()] = entries;
      }
    }
    doc["space"] = "cpn";
    doc["dim"] = dim;
    doc["max_size"] = size;
    doc["constants"] = constants;
    emit(doc, out_path);
    return 0;
  }
  throw error("--what must be matrices or constants");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact star products with separation of variables on CP^N and CH^N"};
  app.require_subcommand(1);

  // star
  auto* star = app.add_subcommand("star", "compute f * g");
  std::string space_name = "cpn";
  int dim = 1, order = 2;
  long long L = 0;
  std::string expr_f, expr_g, out_path;
  star->add_option("--space", space_name, "cpn or chn");
  star->add_option("--dim", dim, "complex dimension N");
  star->add_option("--order", order, "truncation order K (trunc mode)");
  star->add_option("--L", L, "exact mode at h = 1/L (CP^N only)");
  star->add_option("--out", out_path, "write the JSON report to a file");
  star->add_option("f", expr_f, "left factor")->required();
  star->add_option("g", expr_g, "right factor")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyOptions vopt;
  std::string vout;
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--space", vopt.space, "cpn, chn or both");
  verify->add_option("--dim", vopt.dim, "complex dimension N");
  verify->add_option("--order", vopt.order, "truncation order");
  verify->add_option("--L", vopt.L, "exact-mode level");
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--count", vopt.count, "number of random samples");
  verify->add_option("--out", vout, "write the JSON report to a file");

  // expand
  auto* expand = app.add_subcommand("expand", "print closed forms and series");
  std::string what = "alpha";
  int em = 1, ekind = 1, eorder = 6;
  std::string espace = "cpn";
  HypParams hyp{1, 1, 1, -1, -1};
  expand->add_option("--what", what, "alpha | beta | c | hyp | bordemann");
  expand->add_option("--m", em, "index m (alpha/beta/c)");
  expand->add_option("--kind", ekind, "series kind (bordemann: 1 or 2)");
  expand->add_option("--order", eorder, "truncation order");
  expand->add_option("--space", espace, "cpn or chn (for c)");
  expand->add_option("--a", hyp.a, "2F1 parameter a");
  expand->add_option("--b", hyp.b, "2F1 parameter b");
  expand->add_option("--c0", hyp.c0, "2F1 third parameter: c0 + c1/h");
  expand->add_option("--c1", hyp.c1, "2F1 third parameter: c0 + c1/h");
  expand->add_option("--sign", hyp.arg_sign, "argument sign (+1 or -1)");

  // fock
  auto* fock = app.add_subcommand("fock", "Fock matrices and structure constants");
  std::string fwhat = "matrices";
  int fdim = 1, fsize = 2;
  long long fL = 2;
  std::string fout;
  fock->add_option("--what", fwhat, "matrices | constants");
  fock->add_option("--dim", fdim, "complex dimension N");
  fock->add_option("--L", fL, "level (h = 1/L)");
  fock->add_option("--size", fsize, "max index size for constants");
  fock->add_option("--out", fout, "write JSON to a file");

  // cache
  auto* cache = app.add_subcommand("cache", "structure-constant cache maintenance");
  std::string cop = "path";
  std::string cspace = "cpn";
  int cdim = 1, csize = 2;
  std::string chbar = "formal";
  cache->add_option("op", cop, "path | build | check")->required();
  cache->add_option("--space", cspace, "cpn or chn");
  cache->add_option("--dim", cdim, "complex dimension N");
  cache->add_option("--size", csize, "max index size");
  cache->add_option("--hbar", chbar, "h label (formal or 1/L)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (star->parsed()) return cmd_star(space_name, dim, order, L, expr_f, expr_g, out_path);
    if (verify->parsed()) return cmd_verify(suite, vopt, vout);
    if (expand->parsed()) return cmd_expand(what, em, ekind, eorder, espace, hyp);
    if (fock->parsed()) return cmd_fock(fwhat, fdim, fL, fsize, fout);
    if (cache->parsed()) {
      SpaceKind kind = cspace == "chn" ? starsep::SpaceKind::CHN : starsep::SpaceKind::CPN;
      if (cop == "path") {
        std::cout << structure_cache_path(kind, cdim, csize, chbar) << "\n";
        return 0;
      }
      if (cop == "build") {
        std::cout << write_structure_cache(kind, cdim, csize, chbar) << "\n";
        return 0;
      }
      if (cop == "check") {
        std::string why = check_structure_cache(structure_cache_path(kind, cdim, csize, chbar));
        if (why.empty()) {
          std::cout << "ok\n";
          return 0;
        }
        std::cerr << "cache check failed: " << why << "\n";
        return 1;
      }
      throw starsep::error("cache op must be path, build or check");
    }
  } catch (const starsep::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
