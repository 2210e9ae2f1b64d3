// Command-line surface: exact coupling tables, coupled-state expansions,
// and the verification sweeps.
#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbcg/cgc.hpp"
#include "sbcg/isb.hpp"
#include "sbcg/verify.hpp"

using namespace sbcg;
using ordered_json = nlohmann::ordered_json;

namespace {

bool all_digits(const std::string& s)
{
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// half-integers arrive as text ("2", "0.5", "-3/2") and are doubled exactly;
// no floating point is involved
int parse_half(const std::string& text)
{
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }
  auto bad = [&text]() -> long {
    throw std::invalid_argument("cannot read '" + text +
                                "' as an integer or half-integer");
  };
  long two = 0;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || (q != "1" && q != "2")) bad();
    two = std::stol(p) * (q == "1" ? 2 : 1);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (fp != "0" && fp != "5")) bad();
    two = 2 * std::stol(ip) + (fp == "5" ? 1 : 0);
  } else {
    if (!all_digits(s)) bad();
    two = 2 * std::stol(s);
  }
  return static_cast<int>(neg ? -two : two);
}

std::vector<int> parse_labels(const std::string& text)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!all_digits(tok))
      throw std::invalid_argument("labels must be comma-separated counts, got '" +
                                  text + "'");
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty label list");
  return out;
}

std::string render_half(int two)
{
  if (two % 2 == 0) return std::to_string(two / 2);
  return std::to_string(two) + "/2";
}

std::string join_labels(const std::vector<int>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// ---- table emission ----

struct TableRow {
  ordered_json coupling;
  std::vector<std::string> cells;  // label columns for csv
  SignedSqrtRational value;
};

void emit_rows(const std::vector<TableRow>& rows, const std::string& csv_header,
               const std::string& format, std::ostream& os)
{
  if (format == "csv") {
    os << csv_header << ",sign,num,den,decimal\n";
    for (const auto& r : rows) {
      for (const auto& c : r.cells) os << c << ',';
      os << r.value.sign() << ',' << numerator(r.value.radicand()).str() << ','
         << denominator(r.value.radicand()).str() << ',' << r.value.decimal()
         << '\n';
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["coupling"] = r.coupling;
    row["sign"] = r.value.sign();
    row["radicand"] = {{"num", numerator(r.value.radicand()).str()},
                       {"den", denominator(r.value.radicand()).str()}};
    row["decimal"] = r.value.decimal();
    arr.push_back(std::move(row));
  }
  os << arr.dump(2) << '\n';
}

int with_output(const std::string& path,
                const std::function<void(std::ostream&)>& write)
{
  if (path.empty()) {
    write(std::cout);
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  write(f);
  return 0;
}

int cmd_table_su2(int jmax, const std::string& format, const std::string& out)
{
  if (jmax < 0) throw std::invalid_argument("--jmax must be non-negative");
  std::vector<TableRow> rows;
  for (int tj1 = 0; tj1 <= 2 * jmax; ++tj1)
    for (int tj2 = 0; tj2 <= 2 * jmax; ++tj2)
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
          int tm = tm1 + tm2;
          // both bounds share the parity of tj1 + tj2, so stepping by 2 works
          int lo = std::max(std::abs(tj1 - tj2), std::abs(tm));
          for (int tj = lo; tj <= tj1 + tj2; tj += 2) {
            SU2Coupling c{tj1, tm1, tj2, tm2, tj};
            TableRow row;
            row.coupling = {{"two_j1", tj1}, {"two_m1", tm1}, {"two_j2", tj2},
                            {"two_m2", tm2}, {"two_j", tj}};
            row.cells = {std::to_string(tj1), std::to_string(tm1),
                         std::to_string(tj2), std::to_string(tm2),
                         std::to_string(tj)};
            row.value = cgc_su2(c);
            rows.push_back(std::move(row));
          }
        }
  return with_output(out, [&](std::ostream& os) {
    emit_rows(rows, "two_j1,two_m1,two_j2,two_m2,two_j", format, os);
  });
}

int cmd_table_sun(int N, const std::string& na_text, const std::string& nb_text,
                  int r, const std::string& format, const std::string& out)
{
  std::vector<int> na = parse_labels(na_text), nb = parse_labels(nb_text);
  SUNCoupling probe{N, na, nb, 0};
  validate(probe);
  for (int x : nbar(probe))
    if (x < 0)
      throw std::invalid_argument(
          "no conjugate reference state for these labels (nbar has a negative "
          "entry); the closed form does not apply");

  int ta = 0, tb = 0;
  for (int x : na) ta += x;
  for (int x : nb) tb += x;
  int rmax = std::min(ta, tb);
  if (r > rmax) throw std::invalid_argument("--r exceeds min(total_a, total_b)");

  std::vector<TableRow> rows;
  for (int rr = (r < 0 ? 0 : r); rr <= (r < 0 ? rmax : r); ++rr) {
    TableRow row;
    row.coupling = {{"N", N}, {"na", na}, {"nb", nb}, {"r", rr}};
    row.cells = {std::to_string(N), '"' + join_labels(na) + '"',
                 '"' + join_labels(nb) + '"', std::to_string(rr)};
    row.value = cgc_sun(SUNCoupling{N, na, nb, rr});
    rows.push_back(std::move(row));
  }
  return with_output(out, [&](std::ostream& os) {
    emit_rows(rows, "N,na,nb,r", format, os);
  });
}

// ---- coupled-state rendering ----

void print_expansion(const FockVector& state, const Rational& weight,
                     bool su2_labels, std::ostream& os)
{
  SignedSqrtRational root_w = sqrt_of(weight, 1);
  for (const auto& term : state.terms()) {
    const OccState& s = term.first;
    SignedSqrtRational amp = amplitude(s, state) / root_w;
    os << "  ";
    if (su2_labels) {
      os << "|m1=" << render_half(s.na[0] - s.na[1])
         << ", m2=" << render_half(s.nb[0] - s.nb[1]) << ">";
    } else {
      os << "|(" << join_labels(s.na) << ");(" << join_labels(s.nb) << ")>";
    }
    os << "  " << amp.render() << "  " << amp.decimal() << '\n';
  }
}

void print_norm_status(const RaiseNormStatus& n, std::ostream& os)
{
  os << "raise ratio |k+^r v|^2 / |v|^2: exact " << n.exact_ratio.str()
     << "; closed form on the reduced totals "
     << (n.reduced_matches ? "matches" : "differs") << " (" << n.reduced_reading.str()
     << "), on the raised labels " << (n.raised_matches ? "matches" : "differs")
     << " (" << n.raised_reading.str() << ")\n";
}

int cmd_state_su2(const std::string& j1, const std::string& m1,
                  const std::string& j2, const std::string& m2, int r)
{
  int tj1 = parse_half(j1), tm1 = parse_half(m1);
  int tj2 = parse_half(j2), tm2 = parse_half(m2);
  validate(SU2Coupling{tj1, tm1, tj2, tm2, tj1 + tj2});  // label sanity only
  if (r < 0 || r > std::min(tj1, tj2))
    throw std::invalid_argument("r outside 0..min(2j1, 2j2)");
  const int tm = tm1 + tm2;
  const int tj = tj1 + tj2 - 2 * r;
  if (std::abs(tm) > tj)
    throw std::invalid_argument("|m| exceeds the coupled j for this channel");

  // reduced labels: each pair contraction strips half a unit from both spins;
  // the magnetic split below r = 0 is canonical (first label topped out)
  const int tj1r = tj1 - r, tj2r = tj2 - r;
  int tm1r = (r == 0) ? tm1 : std::min(tj1r, tm + tj2r);
  int tm2r = tm - tm1r;

  OccState labels = make_state({(tj1r + tm1r) / 2, (tj1r - tm1r) / 2},
                               {(tj2r + tm2r) / 2, (tj2r - tm2r) / 2});
  CoupledState cs = build_coupled_state(labels, r, Flavor::Su2);

  std::cout << "channel r=" << r << " of j1=" << render_half(tj1) << " x j2="
            << render_half(tj2) << "  ->  j=" << render_half(tj)
            << ", m=" << render_half(tm) << '\n';
  if (r > 0)
    std::cout << "built from the reduced pair j1'=" << render_half(tj1r)
              << ", m1'=" << render_half(tm1r) << "; j2'=" << render_half(tj2r)
              << ", m2'=" << render_half(tm2r) << '\n';
  print_expansion(cs.state, cs.monomial_weight, true, std::cout);
  std::cout << "normalization: " << cs.normalization.render() << "  "
            << cs.normalization.decimal() << '\n';
  if (r > 0) print_norm_status(cs.norms, std::cout);
  return 0;
}

int cmd_state_sun(int N, const std::string& na_text, const std::string& nb_text, int r)
{
  std::vector<int> na = parse_labels(na_text), nb = parse_labels(nb_text);
  validate(SUNCoupling{N, na, nb, std::max(r, 0)});
  if (r < 0) throw std::invalid_argument("--r must be non-negative");

  CoupledState cs = build_coupled_state(make_state(na, nb), r, Flavor::SuN);
  std::cout << "channel r=" << r << " of na=(" << join_labels(na) << ") x nb=("
            << join_labels(nb) << "), N=" << N << '\n';
  print_expansion(cs.state, cs.monomial_weight, false, std::cout);
  std::cout << "normalization: " << cs.normalization.render() << "  "
            << cs.normalization.decimal() << '\n';
  if (r > 0) print_norm_status(cs.norms, std::cout);
  return 0;
}

// ---- verification runs ----

int cmd_verify(const std::string& suite, int max_total, int jmax, bool reduce_only)
{
  VerifyOptions opt;
  if (max_total > 0) {
    opt.max_total = max_total;
    opt.oracle_total = max_total;
    opt.sun_route_total = std::min(opt.sun_route_total, max_total);
    opt.commutator_total = std::min(opt.commutator_total, max_total);
  }
  if (jmax >= 0) {
    opt.two_jmax_routes = 2 * jmax;
    opt.two_jmax_racah = 2 * jmax;
    opt.two_jmax_reduce = 2 * jmax;
  }

  std::vector<SuiteResult> results;
  if (suite == "all") results = verify_all(opt);
  else if (suite == "algebra") results = {verify_algebra(opt)};
  else if (suite == "projector") results = {verify_projector(opt)};
  else if (suite == "cgc") results = {verify_cgc(opt)};
  else if (suite == "isb") results = {verify_isb(opt)};
  else if (suite == "oracle") results = {verify_oracle(opt)};

  bool ok = true;
  long shown = 0;
  for (const auto& sr : results) {
    for (const auto& c : sr.checks) {
      if (reduce_only && sr.suite == "cgc" &&
          c.name.find("reduces") == std::string::npos)
        continue;
      ++shown;
      ok = ok && c.pass;
      std::cout << (c.pass ? "PASS" : "FAIL") << ' ' << sr.suite << ": " << c.name
                << " [" << c.cases << " cases]";
      if (!c.note.empty()) std::cout << "  -- " << c.note;
      std::cout << '\n';
    }
  }
  std::cout << (ok ? "all " : "FAILURES among ") << shown << " checks\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact coupled-representation engine"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "emit an exact coefficient table");
  table->require_subcommand(1);
  int t_jmax = 0;
  std::string t_format = "json", t_out;
  auto* tsu2 = table->add_subcommand("su2", "two-mode couplings up to --jmax");
  tsu2->add_option("--jmax", t_jmax, "largest j1, j2 (integer)")->required();
  tsu2->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv"}));
  tsu2->add_option("--out", t_out, "write to a file instead of stdout");

  int n_modes = 0, t_r = -1;
  std::string t_na, t_nb;
  auto* tsun = table->add_subcommand("sun", "N-mode channel coefficients");
  tsun->add_option("--N", n_modes)->required()->check(CLI::Range(2, 64));
  tsun->add_option("--na", t_na, "a-family labels, e.g. 1,0,0")->required();
  tsun->add_option("--nb", t_nb, "b-family labels")->required();
  tsun->add_option("--r", t_r, "single channel (default: all)");
  tsun->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv"}));
  tsun->add_option("--out", t_out);

  // state
  auto* state = app.add_subcommand("state", "expand a coupled state");
  state->require_subcommand(1);
  std::string s_j1, s_m1, s_j2, s_m2;
  int s_r = 0;
  auto* ssu2 = state->add_subcommand("su2", "two-mode coupled state");
  ssu2->add_option("--j1", s_j1)->required();
  ssu2->add_option("--m1", s_m1)->required();
  ssu2->add_option("--j2", s_j2)->required();
  ssu2->add_option("--m2", s_m2)->required();
  ssu2->add_option("--r", s_r, "pair contractions (default 0)");

  int s_N = 0, s_rn = 0;
  std::string s_na, s_nb;
  auto* ssun = state->add_subcommand("sun", "N-mode coupled state");
  ssun->add_option("--N", s_N)->required()->check(CLI::Range(2, 64));
  ssun->add_option("--na", s_na)->required();
  ssun->add_option("--nb", s_nb)->required();
  ssun->add_option("--r", s_rn, "trace contractions (default 0)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity sweeps");
  std::string v_suite;
  int v_total = 0, v_jmax = -1;
  bool v_reduce = false;
  verify->add_option("suite", v_suite)
      ->required()
      ->check(CLI::IsMember({"algebra", "projector", "cgc", "isb", "oracle", "all"}));
  verify->add_option("--max-total", v_total, "total quanta bound for state sweeps");
  verify->add_option("--jmax", v_jmax, "j1, j2 bound for coefficient sweeps");
  verify->add_flag("--reduce-n2", v_reduce,
                   "show only the two-mode reduction check of the cgc suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tsu2->parsed()) return cmd_table_su2(t_jmax, t_format, t_out);
    if (tsun->parsed()) return cmd_table_sun(n_modes, t_na, t_nb, t_r, t_format, t_out);
    if (ssu2->parsed()) return cmd_state_su2(s_j1, s_m1, s_j2, s_m2, s_r);
    if (ssun->parsed()) return cmd_state_sun(s_N, s_na, s_nb, s_rn);
    if (verify->parsed()) return cmd_verify(v_suite, v_total, v_jmax, v_reduce);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
