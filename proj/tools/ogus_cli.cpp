#include "ogus/cases.hpp"
#include "ogus/oracle.hpp"
#include "ogus/report_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace ogus;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2;

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int pick_rank(CaseId id, int m, int n) {
  if (id == CaseId::GL4_wedge2) return 4;
  if (m && n && m != n) throw Usage("give only one of --m and --n");
  int r = m ? m : n;
  if (!r) throw Usage("rank missing: pass --m or --n");
  return r;
}

Weight parse_lambda(const RootSystem& rs, const std::string& s, const std::string& basis) {
  const int d = rs.ambient_dim();
  if (s.size() >= 2 && s[0] == 'e' && s.find(',') == std::string::npos) {
    if (basis != "e") throw Usage("e_i shorthand is only meaningful in the e basis");
    int i = std::stoi(s.substr(1));
    if (i < 1 || i > d) throw Usage("e index out of range");
    return unit_weight(d, i);
  }
  std::vector<Q> coords;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) coords.emplace_back(std::stoll(tok));
    else coords.emplace_back(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
  }
  if (basis == "fund") {
    if (static_cast<int>(coords.size()) != rs.rank())
      throw Usage("expected " + std::to_string(rs.rank()) + " fundamental coordinates");
    std::vector<long long> c;
    for (const auto& q : coords) {
      if (q.denominator() != 1) throw Usage("fundamental coordinates must be integers");
      c.push_back(q.numerator());
    }
    return rs.from_fundamental(c);
  }
  if (static_cast<int>(coords.size()) != d)
    throw Usage("expected " + std::to_string(d) + " e-coordinates");
  return make_weight(coords);
}

void emit(const Report& r, const std::string& fmt) {
  if (fmt == "json") std::cout << emit_json(r) << "\n";
  else if (fmt == "csv") std::cout << emit_csv(r);
  else std::cout << emit_text(r);
}

// case-specific oracle comparisons for `strata --oracle`
CheckOutcome case_oracle(const CaseResult& res, unsigned long long seed) {
  const auto& s = res.spec;
  if (s.id == CaseId::GSp2n_wedge_dual) {
    if (s.rank > 3) return {true, "oracle skipped above n = 3"};
    return siegel_cross_check(s.rank, s.p, seed);
  }
  if (s.id == CaseId::GLn_wedge_dualsum) {
    if (s.rank > 4) return {true, "oracle skipped above n = 4"};
    for (const auto& r : res.strata) {
      int o = gl_plucker_order(s.rank, r.w);
      if (o != r.ord) {
        std::ostringstream os;
        os << "stratum " << word_string(r.word) << ": Pluecker order " << o << ", formula " << r.ord;
        return {false, os.str()};
      }
    }
    return {true, std::to_string(res.strata.size()) + " strata match the Pluecker expansion"};
  }
  return {true, "no matrix oracle for this case"};
}

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> lines;
  void add(const std::string& name, const CheckOutcome& c) {
    lines.push_back((c.ok ? "ok    " : "FAIL  ") + name + ": " + c.detail);
    ok = ok && c.ok;
  }
};

CheckOutcome case_suite(long long p, const FormulaOptions& opt) {
  for (CaseId id : all_cases()) {
    const int hi = std::min(max_rank(id), min_rank(id) + 3);
    for (int r = min_rank(id); r <= hi; ++r) {
      CaseResult res = run_case({id, r, p}, opt);
      for (const auto& s : res.strata) {
        if (!s.clp) continue;
        const bool minimal = s.length == 0;
        bool expect_eq = !(id == CaseId::Sp2n_std_Cn && minimal);
        if (*s.ogus_holds != expect_eq || !*s.ineq_holds) {
          std::ostringstream os;
          os << case_key(id) << " rank " << r << " stratum " << word_string(s.word) << ": ord "
             << s.ord << ", clp " << *s.clp;
          return {false, os.str()};
        }
      }
    }
  }
  return {true, "all cases, four ranks each"};
}

CheckOutcome closedness_sweep(CartanType t, int m) {
  RootSystem rs = RootSystem::build(t, m);
  auto fam = closedness_family(t, m);
  for (const auto& f : fam) {
    ClosureWitness c = condition_closed(rs, f.word);
    if (!c.closed) {
      std::ostringstream os;
      os << "(j, l) = (" << f.j << ", " << f.l << ") word " << word_string(f.word)
         << ": suffix from " << c.j << " not closed, " << root_string(c.alpha) << " + "
         << root_string(c.beta);
      return {false, os.str()};
    }
  }
  return {true, std::string(1, type_letter(t)) + std::to_string(m) + ": " +
                    std::to_string(fam.size()) + " family words closed"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hasse invariant vanishing orders and conjugate line positions on zip strata"};
  app.require_subcommand(1);

  std::string case_s, format = "text";
  int m = 0, n = 0;
  long long p = 3;
  bool oracle = false;
  unsigned long long seed = 1;
  auto* strata = app.add_subcommand("strata", "per-stratum report for one case");
  strata->add_option("--case", case_s, "case key")->required();
  strata->add_option("--m", m, "rank (SO, GSpin)");
  strata->add_option("--n", n, "rank (GL, GSp, Sp)");
  strata->add_option("--p", p, "prime");
  strata->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  strata->add_flag("--oracle", oracle, "also run the matrix oracle where one exists");
  strata->add_option("--seed", seed);

  bool v_closed = false, v_siegel = false, v_func = false, v_oracle = false, mutate = false;
  std::string type_s = "B";
  auto* verify = app.add_subcommand("verify", "run verification checks; all of them by default");
  verify->add_flag("--closedness", v_closed);
  verify->add_option("--type", type_s)->check(CLI::IsMember({"B", "D"}));
  verify->add_option("--m", m);
  verify->add_flag("--siegel", v_siegel);
  verify->add_option("--n", n);
  verify->add_flag("--functoriality", v_func);
  verify->add_flag("--oracle", v_oracle);
  verify->add_flag("--mutate", mutate, "perturb a formula constant; checks must then fail");
  verify->add_option("--p", p);
  verify->add_option("--seed", seed);

  std::string word_s, lambda_s = "e1", basis = "e", ord_type = "B";
  auto* ord = app.add_subcommand("ord", "vanishing order of the highest weight section on a cell");
  ord->add_option("--type", ord_type)->check(CLI::IsMember({"A", "B", "C", "D"}));
  ord->add_option("--m", m, "rank of the root system");
  ord->add_option("--lambda", lambda_s, "e1, or comma-separated coordinates");
  ord->add_option("--basis", basis)->check(CLI::IsMember({"e", "fund"}));
  ord->add_option("--word", word_s)->required();

  int w_length = -1;
  auto* clpc = app.add_subcommand("clp", "conjugate line position of the strata of a given length");
  clpc->add_option("--case", case_s)->required();
  clpc->add_option("--m", m);
  clpc->add_option("--n", n);
  clpc->add_option("--w-length", w_length)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*strata) {
      CaseId id = parse_case(case_s);
      CaseResult res = run_case({id, pick_rank(id, m, n), p});
      emit(to_report(res), format);
      if (oracle) {
        CheckOutcome c = case_oracle(res, seed);
        std::cerr << (c.ok ? "oracle ok: " : "oracle FAIL: ") << c.detail << "\n";
        if (!c.ok) return kVerifyFailed;
      }
      return kOk;
    }

    if (*verify) {
      FormulaOptions opt;
      if (mutate) opt.order_cap = 1;
      const bool all = !(v_closed || v_siegel || v_func || v_oracle);
      VerifyResult vr;
      if (all) vr.add("case suite", case_suite(p, opt));
      if (all || v_closed) {
        if (m) {
          vr.add("closedness", closedness_sweep(parse_type(type_s), m));
        } else {
          for (int k = 2; k <= 8; ++k) vr.add("closedness", closedness_sweep(CartanType::B, k));
          for (int k = 3; k <= 8; ++k) vr.add("closedness", closedness_sweep(CartanType::D, k));
        }
      }
      if (all || v_siegel) {
        if (n) {
          vr.add("siegel", siegel_cross_check(n, p, seed));
        } else {
          for (int k = 1; k <= 3; ++k) vr.add("siegel n=" + std::to_string(k), siegel_cross_check(k, p, seed));
        }
      }
      if (all || v_func) {
        vr.add("functoriality", functoriality_check_A3_D3(p));
        CheckOutcome neg = functoriality_check_A3_D3(p, true);
        vr.add("functoriality control", {!neg.ok, "mismatched map rejected: " + neg.detail});
      }
      if (all || v_oracle) {
        for (int k = 2; k <= 4; ++k)
          vr.add("GL(" + std::to_string(k) + ") oracle", gl_formula_vs_oracle(k, 2, opt, seed));
      }
      for (const auto& l : vr.lines) std::cout << l << "\n";
      return vr.ok ? kOk : kVerifyFailed;
    }

    if (*ord) {
      if (!m) throw Usage("--m is required");
      RootSystem rs = RootSystem::build(parse_type(ord_type), m);
      Weight lam = parse_lambda(rs, lambda_s, basis);
      Word w = parse_word(word_s);
      WordShape shape = classify_word(w);
      std::cout << ord_word(rs, lam, w) << "\n";
      std::cerr << "shape " << shape_name(shape.kind) << ", lambda " << weight_string(lam) << "\n";
      return kOk;
    }

    if (*clpc) {
      CaseId id = parse_case(case_s);
      CaseResult res = run_case({id, pick_rank(id, m, n), 3});
      bool any = false;
      for (const auto& s : res.strata) {
        if (s.length != w_length) continue;
        any = true;
        if (!s.clp) throw Usage("this case has no CY F-zip, clp is undefined");
        std::cout << *s.clp << "\t" << word_string(s.word) << "\n";
      }
      if (!any) throw Usage("no stratum of length " + std::to_string(w_length));
      return kOk;
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedWord& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
