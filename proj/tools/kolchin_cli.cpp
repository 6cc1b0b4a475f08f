// kolchin: exact Kolchin dimension polynomials of exponent sets, their
// minimizing coefficients and Macaulay constants, and the Sit order.
//
// Exit codes: 0 success, 1 malformed input, 2 internal cross-check
// failure, 3 resource guard (enumeration budget / subset blowup).

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <kolchin/diffdim.hpp>
#include <kolchin/errors.hpp>
#include <kolchin/lattice.hpp>
#include <kolchin/macaulay.hpp>
#include <kolchin/numpoly.hpp>

using json = nlohmann::ordered_json;
using namespace kolchin;

namespace {

std::int64_t parse_i64(const std::string& token, const char* what) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + token + "'");
  }
  if (pos != token.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + token + "'");
  return value;
}

Int parse_big(const std::string& token) {
  std::string digits = token;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad integer literal: '" + token + "'");
  Int value(digits);
  return negative ? Int(-value) : value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_space(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
  std::vector<Int> out;
  for (const std::string& token : split(strip_space(text), ',')) {
    if (token.empty())
      throw std::invalid_argument(std::string("empty entry in ") + what);
    out.push_back(parse_big(token));
  }
  return out;
}

// Polynomial literal: standard coefficients, highest index first
// ("a_d,...,a_0").
NumPoly parse_poly(const std::string& text) {
  return NumPoly::from_standard(parse_int_list(text, "polynomial literal"));
}

// Inline set literal: "m=2; rows=(1,2),(2,1)". "rows=" or a missing rows
// key denotes the empty set.
ExponentSet parse_inline_set(const std::string& text) {
  std::int64_t m = -1;
  std::vector<Point> rows;
  for (const std::string& part : split(strip_space(text), ';')) {
    if (part.empty()) continue;
    if (part.rfind("m=", 0) == 0) {
      m = parse_i64(part.substr(2), "dimension");
    } else if (part.rfind("rows=", 0) == 0) {
      const std::string body = part.substr(5);
      std::size_t pos = 0;
      while (pos < body.size()) {
        if (body[pos] != '(')
          throw std::invalid_argument("expected '(' in rows literal");
        const std::size_t close = body.find(')', pos);
        if (close == std::string::npos)
          throw std::invalid_argument("unbalanced '(' in rows literal");
        Point row;
        for (const std::string& token : split(body.substr(pos + 1, close - pos - 1), ','))
          row.push_back(parse_i64(token, "exponent"));
        rows.push_back(std::move(row));
        pos = close + 1;
        if (pos < body.size()) {
          if (body[pos] != ',')
            throw std::invalid_argument("expected ',' between rows");
          ++pos;
        }
      }
    } else {
      throw std::invalid_argument("unrecognized key in inline set: '" + part + "'");
    }
  }
  if (m < 1) throw std::invalid_argument("inline set needs m=<dimension >= 1>");
  return ExponentSet(m, std::move(rows));
}

// File format: {"m": int, "sets": [[[int, ...], ...], ...]}; a single
// exponent set is the one-element case.
DifferentialSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j = json::parse(in);
  if (!j.is_object() || !j.contains("m") || !j.contains("sets"))
    throw std::invalid_argument("input must be {\"m\": int, \"sets\": [...]}");
  if (!j["m"].is_number_integer())
    throw std::invalid_argument("\"m\" must be an integer");
  const std::int64_t m = j["m"].get<std::int64_t>();
  if (m < 1) throw std::invalid_argument("\"m\" must be at least 1");
  if (!j["sets"].is_array() || j["sets"].empty())
    throw std::invalid_argument("\"sets\" must be a non-empty array");
  std::vector<ExponentSet> sets;
  for (const json& js : j["sets"]) {
    if (!js.is_array()) throw std::invalid_argument("each set must be an array of rows");
    std::vector<Point> rows;
    for (const json& jr : js) {
      if (!jr.is_array()) throw std::invalid_argument("each row must be an array");
      Point row;
      for (const json& je : jr) {
        if (!je.is_number_integer())
          throw std::invalid_argument("exponents must be integers");
        row.push_back(je.get<std::int64_t>());
      }
      rows.push_back(std::move(row));
    }
    sets.emplace_back(m, std::move(rows));
  }
  return DifferentialSystem(m, std::move(sets));
}

struct InputFlags {
  std::string inline_text;
  std::string file_path;
};

DifferentialSystem load_input(const InputFlags& in) {
  if (!in.inline_text.empty() && !in.file_path.empty())
    throw std::invalid_argument("--inline and --file are mutually exclusive");
  if (!in.inline_text.empty()) {
    ExponentSet E = parse_inline_set(in.inline_text);
    const std::int64_t m = E.m;
    return DifferentialSystem(m, {std::move(E)});
  }
  if (!in.file_path.empty()) return load_system_file(in.file_path);
  throw std::invalid_argument("one of --inline or --file is required");
}

ExponentSet load_single_set(const InputFlags& in) {
  DifferentialSystem sys = load_input(in);
  if (sys.sets.size() != 1)
    throw std::invalid_argument("this command expects a single exponent set");
  return sys.sets.front();
}

std::vector<std::string> to_strings(const std::vector<Int>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Int& v : values) out.push_back(v.str());
  return out;
}

std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out;
}

std::vector<std::string> constant_labels(std::size_t count, bool zero_based) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t idx = zero_based ? count - 1 - i : count - i;
    out.push_back("c_" + std::to_string(idx));
  }
  return out;
}

// All integers that can outgrow 64 bits are emitted as decimal strings.
json poly_json(const NumPoly& w) {
  const MinimizingCoeffs b = minimizing_coefficients(w);
  const MacaulayConstants c = macaulay_constants(b);
  json j;
  j["polynomial"] = w.str();
  j["degree"] = w.degree();
  j["standard"] = to_strings(w.standard());
  j["minimizing"] = to_strings(b.b);
  j["macaulay"] = {{"values", to_strings(c.c)},
                   {"original_labels", constant_labels(c.c.size(), false)},
                   {"zero_based_labels", constant_labels(c.c.size(), true)}};
  j["kolchin"] = is_kolchin(w);
  return j;
}

void print_poly_text(std::ostream& os, const NumPoly& w) {
  const MinimizingCoeffs b = minimizing_coefficients(w);
  const MacaulayConstants c = macaulay_constants(b);
  const std::size_t d1 = c.c.size();
  os << "polynomial:  " << w.str() << "\n";
  os << "degree:      " << w.degree() << "\n";
  os << "standard coefficients (a_" << w.degree() << "..a_0):  " << join(w.standard())
     << "\n";
  os << "minimizing coefficients (b_" << w.degree() << "..b_0): " << join(b.b) << "\n";
  os << "Macaulay constants (c_" << d1 << "..c_1):      " << join(c.c) << "\n";
  os << "Macaulay constants, zero-based (c_" << d1 - 1 << "..c_0): " << join(c.c)
     << "\n";
  os << "in W (Kolchin dimension polynomial): " << (is_kolchin(w) ? "yes" : "no")
     << "\n";
}

struct MethodSelection {
  std::vector<Method> methods;
  std::vector<std::string> names;
};

MethodSelection select_methods(const std::string& flag) {
  if (flag == "interp") return {{Method::interpolation}, {"interpolation"}};
  if (flag == "rec") return {{Method::recursion}, {"recursion"}};
  if (flag == "ie") return {{Method::inclusion_exclusion}, {"inclusion_exclusion"}};
  if (flag == "all")
    return {{Method::interpolation, Method::recursion, Method::inclusion_exclusion},
            {"interpolation", "recursion", "inclusion_exclusion"}};
  throw std::invalid_argument("unknown method: '" + flag + "'");
}

std::int64_t default_budget_from_env() {
  if (const char* env = std::getenv("KOLCHIN_BUDGET")) {
    try {
      return parse_i64(env, "KOLCHIN_BUDGET");
    } catch (const std::invalid_argument&) {
      // fall through to the built-in default
    }
  }
  return kDefaultBudget;
}

int run_dimpoly(const InputFlags& in, const std::string& method_flag,
                const std::string& format, std::int64_t budget) {
  const DifferentialSystem sys = load_input(in);
  const MethodSelection sel = select_methods(method_flag);
  std::vector<NumPoly> members;
  for (const ExponentSet& E : sys.sets) {
    NumPoly first;
    for (std::size_t k = 0; k < sel.methods.size(); ++k) {
      const NumPoly w = dimension_polynomial(sel.methods[k], E, budget);
      if (k == 0) {
        first = w;
      } else if (w != first) {
        throw CrossCheckError("method disagreement: " + sel.names[k] + " returned " +
                              w.str() + " but " + sel.names[0] + " returned " +
                              first.str());
      }
    }
    members.push_back(first);
  }
  NumPoly total;
  for (const NumPoly& w : members) total = total + w;

  if (format == "json") {
    json j = poly_json(total);
    j["m"] = sys.m;
    j["methods"] = sel.names;
    j["method_agreement"] = true;
    if (members.size() > 1) {
      json parts = json::array();
      for (const NumPoly& w : members) parts.push_back(w.str());
      j["members"] = parts;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    print_poly_text(std::cout, total);
    if (members.size() > 1) {
      std::cout << "member polynomials:\n";
      for (const NumPoly& w : members) std::cout << "  " << w.str() << "\n";
    }
    std::cout << "methods agree: yes (";
    for (std::size_t i = 0; i < sel.names.size(); ++i)
      std::cout << (i ? ", " : "") << sel.names[i];
    std::cout << ")\n";
  }
  return 0;
}

int run_minimize(const std::string& poly, const std::string& format) {
  const NumPoly w = parse_poly(poly);
  if (format == "json") {
    std::cout << poly_json(w).dump(2) << "\n";
  } else {
    print_poly_text(std::cout, w);
  }
  return 0;
}

int run_reconstruct(const std::string& constants, const std::string& format) {
  const MacaulayConstants c{parse_int_list(constants, "constants literal")};
  const NumPoly w = reconstruct(c);
  if (format == "json") {
    std::cout << poly_json(w).dump(2) << "\n";
  } else {
    print_poly_text(std::cout, w);
  }
  return 0;
}

int run_is_kolchin(const std::string& poly, const std::string& format) {
  const NumPoly w = parse_poly(poly);
  const MinimizingCoeffs b = minimizing_coefficients(w);
  const bool in_w = is_kolchin(w);
  if (format == "json") {
    json j;
    j["polynomial"] = w.str();
    j["kolchin"] = in_w;
    j["minimizing"] = to_strings(b.b);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (in_w ? "yes" : "no") << "  (minimizing coefficients: " << join(b.b)
              << ")\n";
  }
  return 0;
}

int run_compare(const std::string& left, const std::string& right,
                const std::string& format) {
  const NumPoly p = parse_poly(left);
  const NumPoly q = parse_poly(right);
  const auto ord = sit_compare(p, q);
  const char* name = ord < 0 ? "Less" : ord > 0 ? "Greater" : "Equal";
  if (format == "json") {
    json j;
    j["left"] = p.str();
    j["right"] = q.str();
    j["order"] = name;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << name << "\n";
  }
  return 0;
}

int run_oracle(const InputFlags& in, std::int64_t s_max, const std::string& format,
               std::int64_t budget) {
  const ExponentSet E = load_single_set(in);
  if (s_max < 0) throw std::invalid_argument("--s-max must be non-negative");
  const NumPoly w = dimension_polynomial(E, budget);
  const std::int64_t bound = stabilization_bound(E);
  json rows = json::array();
  for (std::int64_t s = 0; s <= s_max; ++s) {
    const Int count = count_free_points(E, s, budget);
    const Int value = w(Int(s));
    json r;
    r["s"] = s;
    r["count"] = count.str();
    r["eval"] = value.str();
    r["agree"] = count == value;
    rows.push_back(std::move(r));
  }
  if (format == "json") {
    json j;
    j["m"] = E.m;
    j["polynomial"] = w.str();
    j["stabilization_bound"] = bound;
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "polynomial: " << w.str() << "\n";
    std::cout << "stabilization bound: " << bound << "\n";
    std::cout << "s\tcount\teval\tagree\n";
    for (const json& r : rows)
      std::cout << r["s"].get<std::int64_t>() << "\t" << r["count"].get<std::string>()
                << "\t" << r["eval"].get<std::string>() << "\t"
                << (r["agree"].get<bool>() ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_example(const std::string& name, std::int64_t m, std::int64_t k,
                const std::string& format) {
  ExponentSet E;
  if (name == "triangular") {
    E = triangular_family(m);
  } else if (name == "triangular-alt") {
    E = triangular_family_alt(m);
  } else if (name == "unbounded") {
    E = unbounded_constants_family(k);
  } else {
    throw std::invalid_argument(
        "unknown example '" + name +
        "' (available: triangular, triangular-alt, unbounded)");
  }
  if (format == "json") {
    json rows = json::array();
    for (const Point& r : E.rows) rows.push_back(r);
    json j;
    j["m"] = E.m;
    j["sets"] = json::array({rows});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m=" << E.m << "; rows=";
    for (std::size_t i = 0; i < E.rows.size(); ++i) {
      std::cout << (i ? "," : "") << "(";
      for (std::size_t kk = 0; kk < E.rows[i].size(); ++kk)
        std::cout << (kk ? "," : "") << E.rows[i][kk];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_report(std::int64_t m_max, const std::string& format, std::int64_t budget) {
  const CoefficientReport report = standard_coefficient_report(m_max, budget);
  bool identities_ok = true;
  bool any_claim_mismatch = false;
  for (const ReportRow& row : report.rows) {
    identities_ok = identities_ok && row.identity_ok;
    if (row.claimed_standard &&
        !(row.standard_matches_claim && row.minimizing_matches_claim))
      any_claim_mismatch = true;
  }
  if (format == "json") {
    json rows = json::array();
    for (const ReportRow& row : report.rows) {
      json r;
      r["m"] = row.m;
      r["polynomial"] = row.omega.str();
      r["standard"] = to_strings(row.standard);
      r["minimizing"] = to_strings(row.minimizing.b);
      r["macaulay"] = to_strings(row.constants.c);
      r["identity_ok"] = row.identity_ok;
      r["alt_polynomial"] = row.omega_alt.str();
      if (row.claimed_standard) {
        r["claimed_standard"] = to_strings(*row.claimed_standard);
        r["claimed_minimizing"] = to_strings(*row.claimed_minimizing);
        r["standard_matches_claim"] = row.standard_matches_claim;
        r["minimizing_matches_claim"] = row.minimizing_matches_claim;
      }
      rows.push_back(std::move(r));
    }
    json j;
    j["rows"] = rows;
    j["identities_ok"] = identities_ok;
    j["claims_reproduced"] = !any_claim_mismatch;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "triangular family (2 on the diagonal, 1 below): computed "
                 "invariants vs claimed closed forms\n\n";
    for (const ReportRow& row : report.rows) {
      std::cout << "m = " << row.m << "\n";
      std::cout << "  polynomial:                " << row.omega.str() << "\n";
      std::cout << "  standard (a_" << row.m - 1 << "..a_0):        "
                << join(row.standard) << "\n";
      std::cout << "  minimizing (b_" << row.m - 1 << "..b_0):      "
                << join(row.minimizing.b) << "\n";
      std::cout << "  Macaulay (c_" << row.m << "..c_1):         "
                << join(row.constants.c) << "\n";
      std::cout << "  alt family polynomial:     " << row.omega_alt.str() << "\n";
      if (row.m >= 2)
        std::cout << "  identity a_0 = a_0' - a_1': "
                  << (row.identity_ok ? "holds" : "VIOLATED") << "\n";
      if (row.claimed_standard) {
        std::cout << "  claimed standard:          " << join(*row.claimed_standard)
                  << (row.standard_matches_claim ? "  (matches)" : "  (MISMATCH)")
                  << "\n";
        std::cout << "  claimed minimizing:        " << join(*row.claimed_minimizing)
                  << (row.minimizing_matches_claim ? "  (matches)" : "  (MISMATCH)")
                  << "\n";
      }
    }
    std::cout << "\ncoefficient recursion identity: "
              << (identities_ok ? "holds for every m" : "VIOLATED") << "\n";
    std::cout << "claimed closed forms reproduced: "
              << (any_claim_mismatch ? "no (see MISMATCH rows above)" : "yes") << "\n";
  }
  return identities_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Kolchin dimension polynomials of exponent sets, minimizing "
      "coefficients, Macaulay constants, and the Sit order"};
  app.require_subcommand(1);

  std::string format = "text";
  std::int64_t budget = default_budget_from_env();
  const auto add_common = [&](CLI::App* cmd, bool with_budget) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    if (with_budget)
      cmd->add_option("--budget", budget,
                      "Enumeration budget for the counting oracle (env KOLCHIN_BUDGET)")
          ->capture_default_str();
  };

  InputFlags dim_in;
  std::string dim_method = "all";
  CLI::App* dimpoly = app.add_subcommand(
      "dimpoly", "Dimension polynomial of an exponent set or system");
  dimpoly->add_option("--inline", dim_in.inline_text,
                      "Inline set, e.g. \"m=2; rows=(1,2),(2,1)\"");
  dimpoly->add_option("--file", dim_in.file_path, "JSON input file");
  dimpoly->add_option("--method", dim_method, "Algorithm selection")
      ->check(CLI::IsMember({"interp", "rec", "ie", "all"}))
      ->capture_default_str();

  std::string min_poly;
  CLI::App* minimize = app.add_subcommand(
      "minimize", "Minimizing coefficients of a polynomial literal");
  minimize->add_option("--poly", min_poly, "Standard coefficients a_d,...,a_0")
      ->required();

  std::string mac_poly;
  CLI::App* macaulay = app.add_subcommand(
      "macaulay", "Macaulay constants of a polynomial literal");
  macaulay->add_option("--poly", mac_poly, "Standard coefficients a_d,...,a_0")
      ->required();

  std::string rec_constants;
  CLI::App* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Polynomial from Macaulay constants c_{d+1},...,c_1");
  reconstruct_cmd->add_option("--constants", rec_constants, "c_{d+1},...,c_1")
      ->required();

  std::string kol_poly;
  CLI::App* iskolchin = app.add_subcommand(
      "is-kolchin", "Whether a polynomial is a Kolchin dimension polynomial");
  iskolchin->add_option("--poly", kol_poly, "Standard coefficients a_d,...,a_0")
      ->required();

  std::string cmp_left, cmp_right;
  CLI::App* compare = app.add_subcommand("compare", "Sit order of two polynomials");
  compare->add_option("--left", cmp_left, "Standard coefficients a_d,...,a_0")
      ->required();
  compare->add_option("--right", cmp_right, "Standard coefficients a_d,...,a_0")
      ->required();

  InputFlags oracle_in;
  std::int64_t s_max = 10;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Counting oracle vs polynomial, tabulated for s = 0..s-max");
  oracle->add_option("--inline", oracle_in.inline_text, "Inline set");
  oracle->add_option("--file", oracle_in.file_path, "JSON input file");
  oracle->add_option("--s-max", s_max, "Last s to tabulate")->capture_default_str();

  std::string ex_name;
  std::int64_t ex_m = 2, ex_k = 2;
  CLI::App* example = app.add_subcommand(
      "example", "Emit a built-in family as an input file");
  example->add_option("--name", ex_name, "triangular | triangular-alt | unbounded")
      ->required();
  example->add_option("--m", ex_m, "Dimension (triangular families)")
      ->capture_default_str();
  example->add_option("--k", ex_k, "Parameter of the unbounded family (k >= 2)")
      ->capture_default_str();

  std::int64_t m_max = 6;
  CLI::App* report = app.add_subcommand(
      "report", "Standard-coefficient report for the triangular family");
  report->add_option("--m-max", m_max, "Largest dimension")->capture_default_str();

  add_common(dimpoly, true);
  add_common(minimize, false);
  add_common(macaulay, false);
  add_common(reconstruct_cmd, false);
  add_common(iskolchin, false);
  add_common(compare, false);
  add_common(oracle, true);
  add_common(example, false);
  add_common(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (dimpoly->parsed()) return run_dimpoly(dim_in, dim_method, format, budget);
    if (minimize->parsed()) return run_minimize(min_poly, format);
    if (macaulay->parsed()) return run_minimize(mac_poly, format);
    if (reconstruct_cmd->parsed()) return run_reconstruct(rec_constants, format);
    if (iskolchin->parsed()) return run_is_kolchin(kol_poly, format);
    if (compare->parsed()) return run_compare(cmp_left, cmp_right, format);
    if (oracle->parsed()) return run_oracle(oracle_in, s_max, format, budget);
    if (example->parsed()) return run_example(ex_name, ex_m, ex_k, format);
    if (report->parsed()) return run_report(m_max, format, budget);
  } catch (const CrossCheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
