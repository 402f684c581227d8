#include "sms3/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "sms3/cg.hpp"
#include "sms3/core.hpp"
#include "sms3/enumeration.hpp"
#include "sms3/error.hpp"
#include "sms3/group.hpp"
#include "sms3/json_io.hpp"
#include "sms3/poset.hpp"
#include "sms3/verify.hpp"

namespace sms3 {

namespace {

std::vector<Int> parse_int_list(const std::string& text, char sep) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(int_from_decimal(item));
  return out;
}

// One payload in any accepted form: sextuple list, matrix rows, cg indices,
// inline JSON, or a JSON file.
struct InputOptions {
  std::string a_list;
  std::string square_rows;
  std::string cg_list;
  std::string payload;
  std::string in_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a_list, "sextuple a1,a2,a3,a4,a5,a6");
    cmd->add_option("--square", square_rows, "matrix rows r1;r2;r3 with comma-separated entries");
    cmd->add_option("--cg", cg_list, "tensor-product indices m,n,k,i,j");
    cmd->add_option("--payload", payload, "inline JSON payload");
    cmd->add_option("--in", in_file, "path of a JSON payload file");
  }

  json to_json_payload() const {
    int given = !a_list.empty() + !square_rows.empty() + !cg_list.empty() +
                !payload.empty() + !in_file.empty();
    if (given != 1)
      raise("UsageError", "provide exactly one of --a, --square, --cg, --payload, --in");
    if (!a_list.empty()) {
      const std::vector<Int> values = parse_int_list(a_list, ',');
      if (values.size() != 6) raise("UsageError", "--a needs six comma-separated integers");
      json coeffs = json::array();
      for (const Int& v : values) coeffs.push_back(int_to_json(v));
      return json{{"a", coeffs}};
    }
    if (!square_rows.empty()) {
      json rows = json::array();
      std::istringstream in(square_rows);
      std::string row;
      while (std::getline(in, row, ';')) {
        json entries = json::array();
        for (const Int& v : parse_int_list(row, ',')) entries.push_back(int_to_json(v));
        rows.push_back(entries);
      }
      if (rows.size() != 3) raise("UsageError", "--square needs three ';'-separated rows");
      return json{{"matrix", rows}};
    }
    if (!cg_list.empty()) {
      const std::vector<Int> values = parse_int_list(cg_list, ',');
      if (values.size() != 5) raise("UsageError", "--cg needs five comma-separated integers");
      return json{{"m", int_to_json(values[0])}, {"n", int_to_json(values[1])},
                  {"k", int_to_json(values[2])}, {"i", int_to_json(values[3])},
                  {"j", int_to_json(values[4])}};
    }
    std::string text = payload;
    if (!in_file.empty()) {
      std::ifstream file(in_file);
      if (!file) raise("UsageError", "cannot open '" + in_file + "'");
      std::ostringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) raise("UsageError", "payload is not valid JSON");
    return parsed;
  }

  SemiMagicSquare square() const { return payload_to_square(to_json_payload()); }
  Vec6 sextuple() const { return to_sextuple(square()); }
};

std::string rectangle_lines(const Vec6& a) {
  std::ostringstream out;
  out << a(0) << " " << a(1) << " " << a(2) << "\n"
      << a(3) << " " << a(4) << " " << a(5) << "\n";
  return out.str();
}

std::string convolution_line(const ConvolutionReport& report) {
  std::ostringstream out;
  out << report.total << " = ";
  for (size_t i = 0; i < report.breakdown.size(); ++i) {
    const ConvolutionTerm& term = report.breakdown[i];
    if (i) out << " + ";
    out << term.orbit_size << "·" << term.v << "·" << term.v_dual;
  }
  return out.str();
}

void print_identity(std::ostream& out, const ReggeIdentity& id) {
  out << "# g: slots " << cycle_notation(id.g.slots) << ", R=" << one_line(id.g.row)
      << " C=" << one_line(id.g.col) << " T=" << (id.g.transpose ? 1 : 0) << "\n";
  out << id.rendered << "\n";
  out << "# check: " << id.left_multinomial << " * " << id.c_source << " = "
      << (id.sign < 0 ? "-" : "+") << id.right_multinomial << " * " << id.c_target
      << " = " << id.left_multinomial * id.c_source << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tools for 3x3 semi-magic squares: representations, the order-72 "
               "symmetry group, lattice-path counts, the bounded graded poset, and "
               "un-normalized Clebsch-Gordan coefficients"};
  app.require_subcommand(1);

  std::string out_file;
  app.add_option("--out", out_file, "write output to a file instead of stdout");

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  InputOptions input;

  auto* convert = app.add_subcommand("convert", "print a payload as matrix, sextuple, and cg index");
  input.attach(convert);

  auto* reduce_cmd = app.add_subcommand("reduce", "split off the largest multiple of the all-ones square");
  input.attach(reduce_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "complement within the bound: sJ - M");
  long dual_s = 0;
  dual_cmd->add_option("--s", dual_s, "entry bound s")->required();
  input.attach(dual_cmd);

  auto* v_cmd = app.add_subcommand("v", "path number from the zero square");
  input.attach(v_cmd);

  auto* poly_cmd = app.add_subcommand("poly", "path polynomial coefficients");
  input.attach(poly_cmd);

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit under the symmetry group");
  input.attach(orbit_cmd);

  auto* poset_cmd = app.add_subcommand("poset", "build the bounded poset");
  long poset_s = 0;
  bool poset_dot = false, poset_json_flag = false;
  std::string poset_labels = "rectangle";
  poset_cmd->add_option("--s", poset_s, "entry bound s")->required();
  poset_cmd->add_flag("--dot", poset_dot, "emit a DOT digraph");
  poset_cmd->add_flag("--json", poset_json_flag, "emit the full JSON dump");
  poset_cmd->add_option("--labels", poset_labels, "DOT node labels")
      ->check(CLI::IsMember({"matrix", "rectangle", "path-number"}));

  auto* convolve_cmd = app.add_subcommand("convolve", "rank convolution against the dual");
  long convolve_s = 0, convolve_k = -1;
  convolve_cmd->add_option("--s", convolve_s, "entry bound s")->required();
  convolve_cmd->add_option("--k", convolve_k, "single rank (default: all ranks)");

  auto* sequences_cmd = app.add_subcommand("sequences", "Franel numbers and p(s) = v(sJ)");
  long sequences_max = 0;
  bool sequences_check = false;
  sequences_cmd->add_option("--max", sequences_max, "largest s")->required();
  sequences_cmd->add_flag("--check", sequences_check, "append recurrence check rows");

  auto* rowsum_cmd = app.add_subcommand("rowsum", "sum of path numbers across one rank");
  long rowsum_t = 0;
  rowsum_cmd->add_option("--t", rowsum_t, "rank t")->required();

  auto* cg_cmd = app.add_subcommand("cg", "un-normalized Clebsch-Gordan coefficient");
  input.attach(cg_cmd);

  auto* reciprocity_cmd = app.add_subcommand("reciprocity", "alternating coefficient sum against its closed form");
  input.attach(reciprocity_cmd);

  auto* regge_cmd = app.add_subcommand("regge", "symmetry identities for the coefficient");
  std::string regge_g;
  bool regge_all = false;
  regge_cmd->add_option("--g", regge_g, "group element: \"(14)(25)(36)\" or R=321,C=123,T=0");
  regge_cmd->add_flag("--all", regge_all, "all 72 identities");
  input.attach(regge_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "core, group, enumeration, poset, cg, or all");

  std::vector<const char*> argv;
  argv.push_back("sms3");
  for (const std::string& a : args) argv.push_back(a.c_str());

  int exit_code = 0;
  std::ostringstream buffer;
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      raise("UsageError", e.what());
    }

    const bool json_mode = format == "json";

    if (app.got_subcommand(convert)) {
      const SemiMagicSquare m = input.square();
      json result = square_to_json(m);
      result["a"] = sextuple_to_json(to_sextuple(m))["a"];
      result["cg"] = cg_to_json(cg_from_square(m));
      buffer << result.dump(2) << "\n";
    } else if (app.got_subcommand(reduce_cmd)) {
      buffer << decomposition_to_json(reduce(input.sextuple())).dump(2) << "\n";
    } else if (app.got_subcommand(dual_cmd)) {
      const Vec6 d = dual(input.sextuple(), Int(dual_s));
      if (json_mode)
        buffer << sextuple_to_json(d).dump(2) << "\n";
      else
        buffer << rectangle_lines(d);
    } else if (app.got_subcommand(v_cmd)) {
      buffer << path_number(input.sextuple()) << "\n";
    } else if (app.got_subcommand(poly_cmd)) {
      const Vec6 a = input.sextuple();
      const PathPolynomial poly = path_polynomial(a);
      if (json_mode) {
        json coeffs = json::array();
        for (const Int& c : poly.coeffs) coeffs.push_back(to_decimal(c));
        const SeriesParameters series = hypergeometric_parameters(a);
        json upper = json::array(), lower = json::array();
        for (const Int& u : series.upper) upper.push_back(int_to_json(u));
        for (const Int& l : series.lower) lower.push_back(int_to_json(l));
        buffer << json{{"rho", int_to_json(poly.rho)},
                       {"coeffs", coeffs},
                       {"series", json{{"upper", upper}, {"lower", lower}, {"argument", "-z"}}}}
                      .dump(2)
               << "\n";
      } else {
        for (size_t i = 0; i < poly.coeffs.size(); ++i)
          buffer << (i ? " " : "") << poly.coeffs[i];
        buffer << "\n";
      }
    } else if (app.got_subcommand(orbit_cmd)) {
      const OrbitReport report = orbit(input.sextuple());
      if (json_mode)
        buffer << orbit_to_json(report).dump(2) << "\n";
      else {
        buffer << "representative:\n" << rectangle_lines(report.representative);
        buffer << "size=" << report.size << "\n";
        buffer << "stabilizer_order=" << report.stabilizer_order << " ("
               << stabilizer_label(report.orbit_class) << ")\n";
        buffer << "class=" << orbit_class_name(report.orbit_class) << "\n";
      }
    } else if (app.got_subcommand(poset_cmd)) {
      const GradedPoset p = build(static_cast<int>(poset_s));
      if (poset_dot) {
        DotLabel labels = DotLabel::rectangle;
        if (poset_labels == "matrix") labels = DotLabel::matrix;
        if (poset_labels == "path-number") labels = DotLabel::path_number;
        buffer << export_dot(p, labels);
      } else if (poset_json_flag || json_mode) {
        buffer << poset_to_json(p).dump(2) << "\n";
      } else {
        buffer << "elements=" << p.element_count() << "\n" << "levels:";
        for (int k = 0; k < p.rank_count(); ++k) buffer << " " << p.level(k).size();
        buffer << "\n" << "v(top)=" << p.path_number_of(p.top()) << "\n";
      }
    } else if (app.got_subcommand(convolve_cmd)) {
      const GradedPoset p = build(static_cast<int>(convolve_s));
      std::vector<int> ranks;
      if (convolve_k >= 0)
        ranks.push_back(static_cast<int>(convolve_k));
      else
        for (int k = 0; k < p.rank_count(); ++k) ranks.push_back(k);
      if (json_mode) {
        json reports = json::array();
        for (int k : ranks) reports.push_back(convolution_to_json(vandermonde_check(p, k)));
        buffer << json{{"s", p.s()}, {"reports", reports}}.dump(2) << "\n";
      } else {
        for (int k : ranks) {
          if (convolve_k < 0) buffer << "k=" << k << ": ";
          buffer << convolution_line(vandermonde_check(p, k)) << "\n";
        }
      }
    } else if (app.got_subcommand(sequences_cmd)) {
      if (sequences_max < 0) raise("UsageError", "--max must be non-negative");
      buffer << "s,franel,p\n";
      for (long s = 0; s <= sequences_max; ++s)
        buffer << s << "," << franel(s) << "," << p_of_s(s) << "\n";
      if (sequences_check && sequences_max >= 2) {
        for (long s = 1; s < sequences_max; ++s)
          if (!franel_recurrence_check(s))
            raise("UsageError", "Franel recurrence failed at s = " + std::to_string(s));
        for (long s = 1; s < sequences_max; ++s)
          if (!p_recurrence_check(s))
            raise("UsageError", "p recurrence failed at s = " + std::to_string(s));
        buffer << "franel_recurrence,s=1.." << sequences_max - 1 << ",ok\n";
        buffer << "p_recurrence,s=1.." << sequences_max - 1 << ",ok\n";
      }
    } else if (app.got_subcommand(rowsum_cmd)) {
      if (rowsum_t < 0) raise("UsageError", "--t must be non-negative");
      const auto [expected, total] = row_sum_check(static_cast<unsigned>(rowsum_t));
      buffer << "t,power6,total\n";
      buffer << rowsum_t << "," << expected << "," << total << "\n";
    } else if (app.got_subcommand(cg_cmd)) {
      buffer << cg_coefficient(input.square()) << "\n";
    } else if (app.got_subcommand(reciprocity_cmd)) {
      const ReciprocityReport report = reciprocity_check(input.sextuple());
      if (json_mode)
        buffer << json{{"lhs", to_decimal(report.lhs)},
                       {"rhs", to_decimal(report.rhs)},
                       {"v", to_decimal(report.v)},
                       {"equal", report.lhs == report.rhs}}
                      .dump(2)
               << "\n";
      else
        buffer << "lhs=" << report.lhs << "\nrhs=" << report.rhs << "\nv=" << report.v
               << "\nequal=" << (report.lhs == report.rhs ? "true" : "false") << "\n";
    } else if (app.got_subcommand(regge_cmd)) {
      if (regge_all == !regge_g.empty())
        raise("UsageError", "provide exactly one of --g or --all");
      const Vec6 a = input.sextuple();
      std::vector<ReggeIdentity> identities;
      if (regge_all)
        identities = regge_orbit_table(a);
      else
        identities.push_back(regge_identity(element_from_spec(regge_g), a));
      if (json_mode) {
        json list = json::array();
        for (const ReggeIdentity& id : identities) list.push_back(identity_to_json(id));
        buffer << (regge_all ? list.dump(2) : list[0].dump(2)) << "\n";
      } else {
        for (size_t i = 0; i < identities.size(); ++i) {
          if (i) buffer << "\n";
          print_identity(buffer, identities[i]);
        }
      }
    } else if (app.got_subcommand(verify_cmd)) {
      const std::vector<CheckResult> results = verify_suite(suite);
      int passed = 0;
      for (const CheckResult& r : results) {
        if (r.ok) {
          ++passed;
          buffer << "ok - " << r.name << "\n";
        } else {
          buffer << "FAIL - " << r.name << ": " << r.detail << "\n";
        }
      }
      buffer << "passed " << passed << "/" << results.size() << "\n";
      if (passed != static_cast<int>(results.size())) exit_code = 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.name() == "UsageError" ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return 1;
  }

  if (!out_file.empty()) {
    std::ofstream file(out_file);
    if (!file) {
      err << "error: UsageError: cannot write '" << out_file << "'\n";
      return 2;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return exit_code;
}

}  // namespace sms3
