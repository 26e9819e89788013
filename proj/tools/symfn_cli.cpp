// Command-line front end: evaluate L-series of the built-in symmetric
// function families, certify the closed-form constant table, classify
// characters, and run the zeta limit sweep.  Output is deterministic for a
// fixed invocation: identical flags produce identical bytes.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symfn/engine.hpp"
#include "symfn/exact_constants.hpp"
#include "symfn/serialize.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string family = "chi";
  int m = 2;
  int r = 3;
  std::string method;
  long prec = symfn::kDefaultPrecision;
  std::string tolerance = "1e-12";
  std::string format = "text";
  std::string schedule;
  int jobs = 1;
  std::string only;
  bool self_test_corrupt = false;
};

symfn::Family parse_family(const std::string& name) {
  if (name == "chi") return symfn::Family::chi;
  if (name == "f") return symfn::Family::f;
  throw std::invalid_argument("family must be chi or f");
}

symfn::SymmetricFunction build_family(symfn::Family family, int m) {
  return family == symfn::Family::chi ? symfn::make_chi_2m(m) : symfn::make_f_4m(m);
}

std::vector<int> parse_schedule(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (item.empty()) throw std::invalid_argument("schedule has an empty entry");
    size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("schedule entry is not an integer");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("schedule is empty");
  return out;
}

// ---------------------------------------------------------------- eval ----

int run_eval(const CommonOpts& opt) {
  const symfn::Family family = parse_family(opt.family);
  symfn::EvalRequest req{
      build_family(family, opt.m),          opt.r,
      symfn::method_from_name(opt.method),  static_cast<mpfr_prec_t>(opt.prec),
      symfn::BigReal::from_decimal(opt.tolerance, 96), opt.jobs};
  if (!(req.direct_tolerance > symfn::BigReal(0, 64))) {
    throw std::invalid_argument("tolerance must be positive");
  }
  symfn::LValue lv = symfn::evaluate(req);

  const int digits = symfn::decimal_digits_for(req.precision_bits);
  const symfn::GoldenConstantEntry* entry = symfn::find_constant(family, opt.m, opt.r);
  std::optional<std::string> residual;
  if (entry != nullptr) {
    symfn::BigReal exact = entry->constant.eval(req.precision_bits);
    residual = abs(lv.value.re - exact).decimal(3);
  }

  if (opt.format == "json") {
    ordered_json j = ordered_json::parse(symfn::to_json(lv, digits));
    j["function"] = ordered_json::parse(symfn::to_json(req.f));
    if (entry != nullptr) {
      j["constant_id"] = entry->id;
      j["residual"] = *residual;
    }
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "value_re,value_im,error_bound,method,terms_used,constant_id,residual\n";
    std::cout << lv.value.re.decimal(digits) << "," << lv.value.im.decimal(digits) << ","
              << lv.error_bound.decimal(3) << "," << symfn::method_name(lv.method) << ","
              << lv.terms_used << "," << (entry ? entry->id : "") << ","
              << (residual ? *residual : "") << "\n";
  } else {
    std::cout << "method       " << symfn::method_name(lv.method) << "\n";
    std::cout << "value_re     " << lv.value.re.decimal(digits) << "\n";
    std::cout << "value_im     " << lv.value.im.decimal(digits) << "\n";
    std::cout << "error_bound  " << lv.error_bound.decimal(3) << "\n";
    std::cout << "terms_used   " << lv.terms_used << "\n";
    if (entry != nullptr) {
      std::cout << "constant_id  " << entry->id << "\n";
      std::cout << "residual     " << *residual << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyRow {
  const symfn::GoldenConstantEntry* entry;
  std::string decimal_value;
  std::string residual;
  bool matched;
};

int run_verify(const CommonOpts& opt) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(opt.prec);
  const int digits = symfn::decimal_digits_for(prec);

  std::vector<VerifyRow> rows;
  bool all_matched = true;
  bool first = true;
  for (const symfn::GoldenConstantEntry& e : symfn::constant_table()) {
    if (!opt.only.empty() && e.id != opt.only) continue;
    symfn::LValue lv = symfn::l_half_sum(build_family(e.family, e.m), e.r, prec);
    symfn::BigReal exact = e.constant.eval(prec);
    symfn::BigReal computed = lv.value.re;
    if (opt.self_test_corrupt && first) {
      computed += symfn::BigReal::from_decimal("1e-5", 96);  // negative control
    }
    first = false;
    symfn::BigReal residual = abs(computed - exact);
    // Agreement threshold: engine bound plus the evaluation slack 2^(8-prec).
    const bool matched = residual <= lv.error_bound + symfn::BigReal::pow2(8 - prec, 96);
    all_matched = all_matched && matched;
    rows.push_back({&e, computed.decimal(digits), residual.decimal(3), matched});
  }
  if (!opt.only.empty() && rows.empty()) {
    throw std::invalid_argument("unknown constant id: '" + opt.only + "'");
  }

  // Quick invariant suite (skipped for single-entry reports).
  struct QuickCheck {
    std::string id;
    bool pass;
  };
  std::vector<QuickCheck> quick;
  if (opt.only.empty()) {
    const mpfr_prec_t qp = 128;
    symfn::BigReal qtol = symfn::BigReal::pow2(-96, 96);

    bool conj_ok = true;
    for (int r = 1; r <= 6 && conj_ok; ++r) {
      for (int num : {1, 3, 5}) {
        mpq_class x(num, 12);
        x.canonicalize();
        symfn::BigReal angle =
            mul_q(symfn::BigReal::pi(qp + 64) * 2, x);
        symfn::BigComplex t = symfn::BigComplex::unit(angle);
        symfn::BigComplex lhs = symfn::h_eval(r, t.conj(), qp);
        symfn::BigComplex rhs = symfn::h_eval(r, t, qp);
        if (r % 2 != 0) rhs = -rhs;
        if (!((lhs - rhs).abs() <= qtol * (rhs.abs() + 2))) conj_ok = false;
      }
    }
    quick.push_back({"inv.conjugation", conj_ok});

    bool split_ok = true;
    symfn::BigReal split_tol = symfn::BigReal::pow2(static_cast<long>(-prec / 2), 96);
    for (int m = 2; m <= 6; ++m) {
      if (!(symfn::split_identity_residual(m, 3, prec) <= split_tol)) split_ok = false;
    }
    quick.push_back({"inv.split_identity", split_ok});

    bool angle_ok = true;
    for (int k = 1; k <= 5; ++k) {
      mpq_class frac(k, 7);
      frac.canonicalize();
      symfn::BigReal pi = symfn::BigReal::pi(qp + 64);
      symfn::BigReal theta = mul_q(pi, frac);
      symfn::BigReal one(1, qp + 64);
      symfn::BigReal lhs = sin(theta) / pow_ui(one - cos(theta), 2) +
                           sin(pi - theta) / pow_ui(one - cos(pi - theta), 2);
      symfn::BigReal c2 = cos(theta * 2);
      symfn::BigReal rhs = sin(theta) * 4 * (c2 + 3) / pow_ui(one - c2, 2);
      if (!(abs(lhs - rhs) <= qtol * (abs(rhs) + 2))) angle_ok = false;
    }
    quick.push_back({"inv.double_angle", angle_ok});
  }
  const bool quick_ok =
      std::all_of(quick.begin(), quick.end(), [](const QuickCheck& q) { return q.pass; });

  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const VerifyRow& row : rows) {
      ordered_json j;
      j["id"] = row.entry->id;
      j["family"] = row.entry->family == symfn::Family::chi ? "chi" : "f";
      j["m"] = row.entry->m;
      j["r"] = row.entry->r;
      j["decimal_value"] = row.decimal_value;
      j["matched"] = row.matched;
      j["residual"] = row.residual;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "id,family,m,r,decimal_value,matched,residual\n";
    for (const VerifyRow& row : rows) {
      std::cout << row.entry->id << ","
                << (row.entry->family == symfn::Family::chi ? "chi" : "f") << "," << row.entry->m
                << "," << row.entry->r << "," << row.decimal_value << ","
                << (row.matched ? "true" : "false") << "," << row.residual << "\n";
    }
  } else {
    int matched_count = 0;
    for (const VerifyRow& row : rows) {
      if (row.matched) ++matched_count;
      std::printf("%-10s %-3s m=%-3d r=%d  value=%s  residual=%s  %s\n", row.entry->id.c_str(),
                  row.entry->family == symfn::Family::chi ? "chi" : "f", row.entry->m,
                  row.entry->r, row.decimal_value.c_str(), row.residual.c_str(),
                  row.matched ? "ok" : "MISMATCH");
    }
    for (const QuickCheck& q : quick) {
      std::printf("%-20s %s\n", q.id.c_str(), q.pass ? "ok" : "FAIL");
    }
    std::printf("%d/%zu constants matched%s\n", matched_count, rows.size(),
                quick.empty() ? "" : (quick_ok ? "; invariants ok" : "; INVARIANT FAILURES"));
  }

  if (!all_matched || !quick_ok) {
    for (const VerifyRow& row : rows) {
      if (!row.matched) std::cerr << "mismatch: " << row.entry->id << "\n";
    }
    for (const QuickCheck& q : quick) {
      if (!q.pass) std::cerr << "invariant failed: " << q.id << "\n";
    }
    return 1;
  }
  return 0;
}

// ------------------------------------------------------------ classify ----

int run_classify(const CommonOpts& opt) {
  const symfn::Family family = parse_family(opt.family);
  symfn::SymmetricFunction f = build_family(family, opt.m);
  symfn::CharacterVerdict verdict = symfn::classify_character(f);

  std::string witness_kind, witness_a, witness_b, witness_text;
  if (verdict.gcd_witness) {
    witness_kind = "gcd";
    witness_a = std::to_string(*verdict.gcd_witness);
    witness_text = "residue " + witness_a + " violates the gcd vanishing rule (value " +
                   f.extend(*verdict.gcd_witness).str() + ")";
  } else if (verdict.mult_witness) {
    auto [a, b] = *verdict.mult_witness;
    witness_kind = "pair";
    witness_a = std::to_string(a);
    witness_b = std::to_string(b);
    witness_text = "pair (" + witness_a + "," + witness_b + "): value(" +
                   std::to_string(a * b % f.modulus()) + ") = " + f.extend(a * b).str() +
                   " but value(" + witness_a + ")*value(" + witness_b + ") = " +
                   (f.extend(a) * f.extend(b)).str();
  }

  if (opt.format == "json") {
    ordered_json j;
    j["family"] = opt.family;
    j["m"] = opt.m;
    j["is_character"] = verdict.is_character;
    if (!verdict.is_character) {
      ordered_json w;
      w["kind"] = witness_kind;
      w["a"] = std::stol(witness_a);
      if (!witness_b.empty()) w["b"] = std::stol(witness_b);
      j["witness"] = std::move(w);
    }
    j["function"] = ordered_json::parse(symfn::to_json(f));
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "family,m,modulus,is_character,witness_kind,witness_a,witness_b\n";
    std::cout << opt.family << "," << opt.m << "," << f.modulus() << ","
              << (verdict.is_character ? "true" : "false") << "," << witness_kind << ","
              << witness_a << "," << witness_b << "\n";
  } else {
    std::cout << "family     " << opt.family << "\n";
    std::cout << "m          " << opt.m << "\n";
    std::cout << "modulus    " << f.modulus() << "\n";
    std::cout << "character  " << (verdict.is_character ? "yes" : "no") << "\n";
    if (!verdict.is_character) std::cout << "witness    " << witness_text << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ converge ----

int run_converge(const CommonOpts& opt) {
  const symfn::Family family = parse_family(opt.family);
  const std::vector<int> schedule = parse_schedule(opt.schedule);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(opt.prec);
  symfn::BigReal tol = symfn::BigReal::from_decimal(opt.tolerance, 96);
  if (!(tol > symfn::BigReal(0, 64))) throw std::invalid_argument("tolerance must be positive");

  symfn::LimitStudy study = symfn::zeta_limit_study(opt.r, schedule, family, prec, tol);
  const int digits = symfn::decimal_digits_for(prec);

  if (opt.format == "json") {
    ordered_json j;
    j["reference"] = study.reference.decimal(digits);
    ordered_json rows = ordered_json::array();
    for (const symfn::LimitRow& row : study.rows) {
      ordered_json rj;
      rj["m"] = row.m;
      rj["value"] = row.value.value.re.decimal(digits);
      rj["gap"] = row.gap.decimal(digits);
      rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "m,value,gap\n";
    for (const symfn::LimitRow& row : study.rows) {
      std::cout << row.m << "," << row.value.value.re.decimal(digits) << ","
                << row.gap.decimal(digits) << "\n";
    }
  } else {
    std::cout << "reference  " << study.reference.decimal(digits) << "\n";
    for (const symfn::LimitRow& row : study.rows) {
      std::printf("m=%-5d value=%s  gap=%s\n", row.m, row.value.value.re.decimal(digits).c_str(),
                  row.gap.decimal(digits).c_str());
    }
  }
  return 0;
}

void add_format_option(CLI::App* cmd, CommonOpts& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_prec_option(CLI::App* cmd, CommonOpts& opt) {
  cmd->add_option("--prec", opt.prec, "Working precision in bits")
      ->envname("SYMFN_PREC")
      ->check(CLI::Range(64L, 1L << 20))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-series of symmetric functions mod N at arbitrary precision"};
  app.require_subcommand(1);
  CommonOpts opt;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one L-series value");
  eval->add_option("--family", opt.family, "Function family")
      ->required()
      ->check(CLI::IsMember({"chi", "f"}));
  eval->add_option("--m", opt.m, "Family index m")->required();
  eval->add_option("--r", opt.r, "Series exponent r")->required();
  eval->add_option("--method", opt.method, "Evaluation method")
      ->required()
      ->check(CLI::IsMember({"theorem23", "half_sum", "trig3", "trig3_f", "trig5", "direct"}));
  eval->add_option("--tol", opt.tolerance, "Direct-summation tolerance")->capture_default_str();
  eval->add_option("--jobs", opt.jobs, "Worker threads for direct summation")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_prec_option(eval, opt);
  add_format_option(eval, opt);

  CLI::App* verify = app.add_subcommand("verify", "Certify the closed-form constant table");
  verify->add_option("--only", opt.only, "Check a single table id, e.g. L3.chi8");
  verify->add_flag("--self-test-corrupt", opt.self_test_corrupt)->group("");
  add_prec_option(verify, opt);
  add_format_option(verify, opt);

  CLI::App* classify = app.add_subcommand("classify", "Dirichlet-character check for a family member");
  classify->add_option("--family", opt.family, "Function family")
      ->required()
      ->check(CLI::IsMember({"chi", "f"}));
  classify->add_option("--m", opt.m, "Family index m")->required();
  add_format_option(classify, opt);

  CLI::App* converge = app.add_subcommand("converge", "Gap table against the zeta reference");
  converge->add_option("--r", opt.r, "Series exponent r (odd, >= 3)")->required();
  converge->add_option("--schedule", opt.schedule, "Ascending comma-separated m values")
      ->required();
  converge->add_option("--family", opt.family, "Function family")
      ->check(CLI::IsMember({"chi", "f"}))
      ->capture_default_str();
  converge->add_option("--tol", opt.tolerance, "Zeta reference tolerance")->capture_default_str();
  add_prec_option(converge, opt);
  add_format_option(converge, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(converge)) return run_converge(opt);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const symfn::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
