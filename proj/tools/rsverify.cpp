#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rsverify/characters.hpp"
#include "rsverify/coweights.hpp"
#include "rsverify/harness/report.hpp"
#include "rsverify/harness/suites.hpp"
#include "rsverify/oldforms.hpp"
#include "rsverify/rankin.hpp"
#include "rsverify/whittaker.hpp"

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::vector<rsv::Rational> parse_rationals(const std::string& s) {
  std::vector<rsv::Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(rsv::parse_rational(tok));
  }
  return out;
}

// Writes to --out when given, else stdout.
struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw rsv::domain_error("cannot open " + path);
    os = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Rankin-Selberg polynomial identities for SO(2n+1) x GL(r)"};
  app.require_subcommand(1);

  rsv::VerifyConfig cfg;
  std::string format = "text", out_path;
  bool timing = false;
  int n_single = 0;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(rsv::suite_names()));
  verify->add_option("--n", n_single, "restrict to this n");
  verify->add_option("--n-min", cfg.n_min);
  verify->add_option("--n-max", cfg.n_max);
  verify->add_option("--r", cfg.r, "restrict to this r (0 = all)");
  verify->add_option("--trunc", cfg.trunc, "Y-truncation order T");
  verify->add_option("--window", cfg.window, "stabilization window");
  verify->add_option("--trials", cfg.trials);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--mode", cfg.mode)->check(CLI::IsMember({"evaluation", "symbolic"}));
  verify->add_option("--max-level", cfg.max_level, "largest m - a for basis suites");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text", "csv"}));
  verify->add_option("--out", out_path);
  verify->add_flag("--timing", timing, "include elapsed_ms in JSON");

  std::string data_path, beta_str;
  int xi_n = 0, xi_r = 1, xi_T = -1, xi_window = 4, xi_m = 0;
  auto* xi_cmd = app.add_subcommand("xi", "compute Xi of Whittaker data");
  xi_cmd->add_option("--data", data_path, "WhittakerData JSON file")->required();
  xi_cmd->add_option("--n", xi_n, "must match the data when given");
  xi_cmd->add_option("--r", xi_r);
  xi_cmd->add_option("--trunc", xi_T, "default: support trace + 2nr + r(r-1) + window");
  xi_cmd->add_option("--window", xi_window);
  xi_cmd->add_option("--m", xi_m, "level label");
  xi_cmd->add_option("--beta", beta_str, "Satake parameters b1,b2,... for P_phi (default P_phi = 1)");
  xi_cmd->add_option("--out", out_path);

  std::string group = "gl", lambda_str;
  int char_r = 0;
  auto* chr = app.add_subcommand("char", "print a character");
  chr->add_option("--group", group)->check(CLI::IsMember({"gl", "sp", "so4", "orbit", "gl-whittaker"}));
  chr->add_option("--lambda", lambda_str, "comma-separated weight")->required();
  chr->add_option("--r", char_r);
  chr->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  chr->add_option("--out", out_path);

  int dims_n = 4, dims_max = 8;
  auto* dims = app.add_subcommand("dims", "dimension formula against enumeration (CSV)");
  dims->add_option("--n", dims_n, "largest n");
  dims->add_option("--max-level", dims_max, "largest m - a");
  dims->add_option("--out", out_path);

  int cmp_k = 2;
  auto* cmp = app.add_subcommand("compare-bases", "compare the two n = 2 oldform bases");
  cmp->add_option("--m-minus-a", cmp_k)->required();
  cmp->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  cmp->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(out_path);
    std::ostream& os = *out.os;

    if (*verify) {
      if (n_single) cfg.n_min = cfg.n_max = n_single;
      rsv::Report rep = rsv::run_suite(cfg);
      rsv::emit(rep, format, os, timing);
      return rep.all_pass() ? 0 : 1;
    }

    if (*xi_cmd) {
      std::ifstream in(data_path);
      if (!in) throw rsv::domain_error("cannot open " + data_path);
      rsv::WhittakerData d = rsv::whittaker_from_json(rsv::Json::parse(in));
      if (xi_n && xi_n != d.n()) throw rsv::structural_error("--n differs from the data");
      const int n = d.n();
      int T = xi_T >= 0 ? xi_T : rsv::default_truncation(d, n, xi_r, xi_window);
      rsv::Series P = rsv::Series::constant(rsv::SymLaurent::constant(xi_r, 1));
      if (!beta_str.empty()) P = rsv::p_phi_pi(rsv::SatakeParamsSO(parse_rationals(beta_str)), n, xi_r);
      rsv::XiResult x = rsv::xi(d, n, xi_r, T, xi_window, P, xi_m);
      rsv::Json j = rsv::Json::object();
      j["n"] = x.n;
      j["r"] = x.r;
      j["m"] = x.m;
      j["trunc"] = T;
      j["window"] = xi_window;
      j["stabilized"] = x.stabilized;
      j["detected_degree"] = x.detected_degree;
      j["poly"] = rsv::to_json(x.poly);
      j["poly_text"] = x.poly.to_string();
      j["series"] = rsv::to_json(x.series);
      os << j.dump(2) << "\n";
      return x.stabilized ? 0 : 2;
    }

    if (*chr) {
      rsv::Coweight l(parse_ints(lambda_str));
      int r = char_r ? char_r : l.size();
      rsv::SymLaurent s;
      if (group == "gl") s = rsv::schur(l, r);
      else if (group == "gl-whittaker") s = rsv::gl_whittaker(l, r);
      else if (group == "sp") s = rsv::sp_character(l);
      else if (group == "so4") s = rsv::so4_minuscule_character(l);
      else s = rsv::orbit_sum(l);
      if (group == "so4") {
        // S0 membership is reported rather than assumed.
        if (format == "json") os << rsv::Json{{"character", rsv::to_json(s)}, {"in_S0", s.is_in_S0()}}.dump() << "\n";
        else os << s.to_string() << "\nin S0: " << (s.is_in_S0() ? "yes" : "no") << "\n";
        return 0;
      }
      if (format == "json") os << rsv::to_json(s).dump() << "\n";
      else os << s.to_string() << "\n";
      return 0;
    }

    if (*dims) {
      rsv::Report rep;
      rep.suite = "dims";
      for (int n = 1; n <= dims_n; ++n)
        for (int k = 0; k <= dims_max; ++k) {
          rsv::CaseRecord c;
          long long f = rsv::dim_formula(n, k, 0), e = rsv::basis_cardinality(n, k, 0);
          c.params = {{"n", n}, {"m_minus_a", k}};
          c.values = {{"formula", f}, {"enumeration", e}, {"match", f == e}};
          c.pass = f == e;
          rep.cases.push_back(c);
        }
      os << "n,m_minus_a,formula,enumeration,match\n";
      for (const auto& c : rep.cases)
        os << c.params["n"] << "," << c.params["m_minus_a"] << "," << c.values["formula"] << ","
           << c.values["enumeration"] << "," << (c.pass ? "true" : "false") << "\n";
      return rep.all_pass() ? 0 : 1;
    }

    if (*cmp) {
      rsv::BasisComparison bc = rsv::compare_bases(cmp_k);
      if (format == "json") {
        rsv::Json j = rsv::Json::object();
        j["m_minus_a"] = bc.m_minus_a;
        auto list = [](const std::vector<rsv::SymLaurent>& v) {
          rsv::Json a = rsv::Json::array();
          for (const auto& p : v) a.push_back(rsv::to_json(p));
          return a;
        };
        j["rs_images"] = list(bc.rs_images);
        j["b_images"] = list(bc.b_images);
        j["rs_rank"] = bc.rs_rank;
        j["b_rank"] = bc.b_rank;
        j["joint_rank"] = bc.joint_rank;
        j["spans_equal"] = bc.spans_equal;
        j["sets_equal"] = bc.sets_equal;
        j["only_rs"] = list(bc.only_rs);
        j["only_b"] = list(bc.only_b);
        j["stand_in"] = bc.stand_in;
        os << j.dump(2) << "\n";
      } else {
        os << "m - a = " << bc.m_minus_a << (bc.stand_in ? " (stand-in Satake values)" : "") << "\n";
        os << "Roberts-Schmidt images (rank " << bc.rs_rank << "):\n";
        for (const auto& p : bc.rs_images) os << "  " << p.to_string() << "\n";
        os << "B images (rank " << bc.b_rank << "):\n";
        for (const auto& p : bc.b_images) os << "  " << p.to_string() << "\n";
        os << "spans equal: " << (bc.spans_equal ? "yes" : "no") << "; sets equal: " << (bc.sets_equal ? "yes" : "no")
           << "\n";
      }
      return bc.spans_equal ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  return 0;
}
