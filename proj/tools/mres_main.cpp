// Copyright 2026 The mres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mres: resultants of homogeneous polynomial systems from the command line.
//
//   mres resultant [FILE] [--t T] [--format json|text] [--normalize-sign on|off]
//                         [--max-symbolic-size N] [--timing]
//   mres matrix    [FILE] [--t T]
//   mres bezoutian [FILE] [--t T]
//   mres gcp       [FILE] [--t T] [--perturbed]
//   mres sizes     [FILE] [--degrees D1,D2,...] [--table]
//   mres verify    [CRITERION ...] [--symbolic-work N]
//
// FILE is a JSON system document; "-" or no FILE reads stdin.
// Exit codes: 0 ok, 1 usage or parse error, 2 degenerate specialization,
// 3 internal error or failed verification.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mres/io.hpp"
#include "mres/macaulay.hpp"
#include "mres/verify.hpp"

namespace {

using mres::io::Json;

enum Exit { kOk = 0, kUsage = 1, kDegenerate = 2, kInternal = 3 };

struct Flags {
  std::string input = "-";
  std::optional<int> t;
  std::string format = "json";
  std::string normalize = "on";
  std::int64_t max_symbolic_size = 16;
  bool timing = false;
  bool perturbed = false;
  bool table = false;
  std::vector<int> degrees;
  std::vector<int> criteria;
  std::size_t symbolic_work = mres::verify::VerifyOptions{}.symbolic_work;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw mres::ParseError("", "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

mres::ResultantOptions resultant_options(const Flags& f) {
  mres::ResultantOptions o;
  o.normalize_sign = f.normalize == "on";
  o.max_symbolic_size = f.max_symbolic_size;
  return o;
}

int chosen_t(const Flags& f, const mres::io::InputDocument& doc) {
  if (f.t) return *f.t;
  if (doc.t) return *doc.t;
  return mres::minimal_t(doc.degrees);
}

// Header shared by every system command.
Json envelope(const std::string& command, const mres::io::InputDocument& doc, const Flags& f,
              const mres::ParamSpace* names) {
  Json j;
  j["command"] = command;
  j["degrees"] = doc.degrees.degrees();
  j["mode"] = mres::io::mode_name(doc.mode);
  j["sign_normalization"] =
      f.normalize == "on" ? "Res(X1^d1, ..., Xn^dn) = 1" : "off";
  if (names) j["parameters"] = names->names();
  return j;
}

std::string labels_text(const Json& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : " ") + l.get<std::string>();
  return s;
}

// Renders a result document as "key: value" lines.
void print_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_text(value, out, prefix + key + ".");
    } else if (value.is_array() && !value.empty() && value[0].is_array()) {
      out << prefix << key << ":\n";
      for (const auto& row : value) {
        std::string line;
        for (const auto& x : row) line += (line.empty() ? "" : "\t") + (x.is_string() ? x.get<std::string>() : x.dump());
        out << "  " << line << "\n";
      }
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      out << prefix << key << ":\n";
      for (const auto& row : value) out << "  " << row.dump() << "\n";
    } else if (value.is_array() && !value.empty() && value[0].is_string()) {
      out << prefix << key << ": " << labels_text(value) << "\n";
    } else {
      out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

template <class C>
Json resultant_json(const mres::ResultantValue<C>& r, const mres::ParamSpace* names) {
  using mres::io::scalar_text;
  Json j;
  j["value"] = scalar_text(r.value, names);
  j["t"] = r.t;
  j["route"] = r.route;
  j["sign"] = r.sign;
  j["det_m"] = scalar_text(r.det_m, names);
  j["det_e"] = scalar_text(r.det_e, names);
  j["poly_order"] = r.poly_order;
  j["var_order"] = r.var_order;
  j["attempts"] = r.attempts;
  return j;
}

template <class C>
Json cmd_resultant(const mres::PolySystem<C>& sys, const mres::io::InputDocument& doc, const Flags& f,
                   const mres::ParamSpace* names) {
  Json j = envelope("resultant", doc, f, names);
  const auto opt = resultant_options(f);
  mres::ResultantValue<C> r;
  if constexpr (std::is_same_v<C, mres::ParamPoly>) {
    r = mres::resultant_generic(sys, chosen_t(f, doc), opt);
    r.attempts = 1;
  } else {
    std::optional<int> t = f.t ? f.t : doc.t;
    r = mres::resultant_specialized(sys, t, opt);
  }
  j["t"] = r.t;
  j["result"] = resultant_json(r, names);
  return j;
}

template <class C>
Json cmd_matrix(const mres::PolySystem<C>& sys, const mres::io::InputDocument& doc, const Flags& f,
                const mres::ParamSpace* names) {
  Json j = envelope("matrix", doc, f, names);
  const int t = chosen_t(f, doc);
  if (t < 0) throw mres::InvalidArgument("degree t must be nonnegative");
  auto a = mres::build_assembly(sys, t);
  j["t"] = t;
  Json m = mres::io::matrix_to_json(a.matrix, names);
  auto labels = [](const std::vector<mres::Label>& v) {
    Json out = Json::array();
    for (const auto& l : v) out.push_back(l.to_string());
    return out;
  };
  m["extraneous"] = {{"rows", labels(a.e_rows)},
                     {"cols", labels(a.e_cols)},
                     {"dual_rows", labels(a.e_dual_rows)},
                     {"dual_cols", labels(a.e_dual_cols)}};
  j["result"] = std::move(m);
  return j;
}

template <class C>
Json cmd_bezoutian(const mres::PolySystem<C>& sys, const mres::io::InputDocument& doc, const Flags& f,
                   const mres::ParamSpace* names) {
  Json j = envelope("bezoutian", doc, f, names);
  const int n = sys.n();
  auto bez = mres::bezoutian(sys);
  auto vars = mres::io::variable_names(n, true);
  Json r;
  r["variables"] = vars;
  if constexpr (std::is_same_v<C, mres::ParamPoly>)
    r["text"] = mres::io::to_text(bez, vars, *names);
  else
    r["text"] = mres::io::to_text(bez, vars);
  r["terms"] = mres::io::poly_to_json(bez, names);
  if (f.t || doc.t) {
    const int t = chosen_t(f, doc);
    j["t"] = t;
    Json slices = Json::array();
    auto xvars = mres::io::variable_names(n, false);
    for (const auto& [g, p] : mres::delta_slices(bez, sys.degrees(), t)) {
      // Slices are polynomials in X only; drop the Y slots.
      std::vector<std::pair<mres::ExpVec, C>> terms;
      for (std::size_t k = 0; k < p.size(); ++k) {
        auto e = p.exponents(k);
        e.resize(static_cast<std::size_t>(n));
        terms.emplace_back(e, p.coeff(k));
      }
      auto q = mres::MPoly<C>::from_terms(n, std::move(terms));
      Json s;
      s["gamma"] = g;
      if constexpr (std::is_same_v<C, mres::ParamPoly>)
        s["text"] = mres::io::to_text(q, xvars, *names);
      else
        s["text"] = mres::io::to_text(q, xvars);
      slices.push_back(std::move(s));
    }
    r["slices"] = std::move(slices);
  }
  j["result"] = std::move(r);
  return j;
}

template <class C>
Json cmd_gcp(const mres::PolySystem<C>& sys, const mres::io::InputDocument& doc, const Flags& f,
             const mres::ParamSpace* names) {
  Json j = envelope("gcp", doc, f, names);
  const int t = chosen_t(f, doc);
  j["t"] = t;
  auto coeffs_json = [&](const auto& c) {
    Json r;
    Json list = Json::array();
    std::size_t low = c.size();
    for (std::size_t k = 0; k < c.size(); ++k) {
      list.push_back(mres::io::scalar_text(c[k], names));
      if (low == c.size() && !mres::is_zero(c[k])) low = k;
    }
    r["coefficients"] = std::move(list);
    if (low < c.size()) {
      r["lowest_degree"] = low;
      r["lowest_coefficient"] = mres::io::scalar_text(c[low], names);
    }
    return r;
  };
  Json r = coeffs_json(mres::gcp(sys, t));
  if (f.perturbed) {
    if constexpr (std::is_same_v<C, mres::Integer>)
      r["perturbed"] = coeffs_json(mres::perturbed_resultant(sys, t));
    else
      throw mres::ScalarKindMismatch("--perturbed requires integer mode");
  }
  j["result"] = std::move(r);
  return j;
}

Json cmd_sizes(const Flags& f, const std::optional<mres::io::InputDocument>& doc) {
  std::vector<std::vector<int>> systems;
  if (f.table)
    for (const auto& row : mres::verify::reference_size_table()) systems.push_back(row.degrees);
  if (!f.degrees.empty()) systems.push_back(f.degrees);
  if (doc) systems.push_back(doc->degrees.degrees());
  Json j;
  j["command"] = "sizes";
  Json rows = Json::array();
  for (const auto& d : systems) {
    mres::DegreeSystem ds(d);
    auto s = mres::size_summary(ds);
    Json row;
    row["degrees"] = d;
    row["critical_degree"] = s.critical;
    row["t"] = s.minimal_t;
    row["min_size"] = s.min_size;
    row["classical_size"] = s.classical_size;
    rows.push_back(std::move(row));
  }
  j["result"] = {{"rows", std::move(rows)}};
  return j;
}

void print_sizes_text(const Json& j, std::ostream& out) {
  out << "degrees\tt\tmin_size\tclassical_size\n";
  for (const auto& row : j["result"]["rows"]) {
    std::string d;
    for (const auto& x : row["degrees"]) d += (d.empty() ? "" : ",") + x.dump();
    out << "(" << d << ")\t" << row["t"].dump() << "\t" << row["min_size"].dump() << "\t"
        << row["classical_size"].dump() << "\n";
  }
}

template <class Fn>
Json dispatch(const mres::io::InputDocument& doc, Fn&& fn) {
  switch (doc.mode) {
    case mres::io::Mode::Generic: {
      mres::ParamSpace names;
      auto sys = mres::io::parametric_system(doc, &names);
      return fn(sys, &names);
    }
    case mres::io::Mode::Integer:
      return fn(mres::io::integer_system(doc), nullptr);
    case mres::io::Mode::Rational:
      return fn(mres::io::rational_system(doc), nullptr);
  }
  throw mres::Error("internal: unknown mode");
}

void add_common(CLI::App* sub, Flags& f, bool system_input) {
  if (system_input) sub->add_option("input", f.input, "JSON system document, - for stdin");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--timing", f.timing, "Report elapsed time");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resultants of homogeneous polynomial systems"};
  app.require_subcommand(1);
  Flags f;

  std::vector<CLI::App*> system_cmds;
  auto* res = app.add_subcommand("resultant", "Resultant by the quotient formula");
  auto* mat = app.add_subcommand("matrix", "The matrix M_t with its labels and extraneous factor");
  auto* bez = app.add_subcommand("bezoutian", "The Bezoutian, and its slices at --t");
  auto* gcp = app.add_subcommand("gcp", "Generalized characteristic polynomial C_t(s)");
  for (auto* sub : {res, mat, bez, gcp}) {
    add_common(sub, f, true);
    sub->add_option("--t", f.t, "Degree t")->check(CLI::NonNegativeNumber);
    system_cmds.push_back(sub);
  }
  res->add_option("--normalize-sign", f.normalize, "Normalize so that Res(X1^d1, ..., Xn^dn) = 1")
      ->check(CLI::IsMember({"on", "off"}));
  res->add_option("--max-symbolic-size", f.max_symbolic_size, "Largest symbolic matrix size")
      ->check(CLI::PositiveNumber);
  gcp->add_flag("--perturbed", f.perturbed, "Also compute det M_t(f - s e) / det E_t(f - s e)");

  auto* sizes = app.add_subcommand("sizes", "Minimal and classical matrix sizes");
  add_common(sizes, f, false);
  sizes->add_option("input", f.input, "JSON system document");
  sizes->add_option("--degrees", f.degrees, "Degrees d1,...,dn")->delimiter(',');
  sizes->add_flag("--table", f.table, "Include the reference size table");

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  add_common(verify, f, false);
  verify->add_option("criteria", f.criteria, "Criterion numbers, all when omitted")
      ->check(CLI::Range(1, mres::verify::kCriterionCount));
  verify->add_option("--symbolic-work", f.symbolic_work, "Coefficient-operation budget per symbolic determinant in exhaustive checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Json out;
    int code = kOk;
    if (verify->parsed()) {
      mres::verify::VerifyOptions opt;
      opt.symbolic_work = f.symbolic_work;
      std::vector<int> ids = f.criteria;
      if (ids.empty())
        for (int i = 1; i <= mres::verify::kCriterionCount; ++i) ids.push_back(i);
      out["command"] = "verify";
      Json results = Json::array();
      for (int id : ids) {
        auto r = mres::verify::run_criterion(id, opt);
        if (f.format == "text") std::cout << mres::verify::format_result(r) << std::endl;
        results.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass) code = kInternal;
      }
      out["result"] = {{"criteria", std::move(results)}, {"pass", code == kOk}};
      if (f.format == "json") std::cout << out.dump(2) << "\n";
      return code;
    }

    if (sizes->parsed()) {
      std::optional<mres::io::InputDocument> doc;
      if (sizes->count("input") || (f.degrees.empty() && !f.table))
        doc = mres::io::parse_input(read_input(f.input));
      out = cmd_sizes(f, doc);
    } else {
      auto doc = mres::io::parse_input(read_input(f.input));
      auto run = [&](auto&& cmd) {
        return dispatch(doc, [&](const auto& sys, const mres::ParamSpace* names) {
          return cmd(sys, doc, f, names);
        });
      };
      if (res->parsed())
        out = run([](const auto& s, const auto& d, const auto& fl, const auto* n) { return cmd_resultant(s, d, fl, n); });
      else if (mat->parsed())
        out = run([](const auto& s, const auto& d, const auto& fl, const auto* n) { return cmd_matrix(s, d, fl, n); });
      else if (bez->parsed())
        out = run([](const auto& s, const auto& d, const auto& fl, const auto* n) { return cmd_bezoutian(s, d, fl, n); });
      else
        out = run([](const auto& s, const auto& d, const auto& fl, const auto* n) { return cmd_gcp(s, d, fl, n); });
    }
    if (f.timing)
      out["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (f.format == "json")
      std::cout << out.dump(2) << "\n";
    else if (sizes->parsed())
      print_sizes_text(out, std::cout);
    else
      print_text(out, std::cout);
    return code;
  } catch (const mres::ParseError& e) {
    std::cerr << "mres: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const mres::DegenerateSpecialization& e) {
    std::cerr << "mres: degenerate specialization: " << e.what() << "\n";
    return kDegenerate;
  } catch (const mres::InvalidArgument& e) {
    std::cerr << "mres: invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const mres::SymbolicBudgetExceeded& e) {
    std::cerr << "mres: " << e.what() << " (raise --max-symbolic-size)\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "mres: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
