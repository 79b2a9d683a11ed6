// Command-line front end: nine subcommands covering decomposition,
// plethysm, relation construction, kernel membership, minimality,
// regularity, Hilbert functions, generator export, and the degree-3 shape
// search.  Every run is deterministic given its flags; randomized probes
// demand an explicit seed.
#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minors/json_io.hpp"
#include "minors/regbounds.hpp"
#include "minors/relations.hpp"
#include "minors/shape_relations.hpp"
#include "minors/symfunc.hpp"
#include "minors/verify.hpp"
#include "minors/xpoly.hpp"

namespace minors {
namespace cli {

namespace detail {

// "4,1,1" -> partition {4,1,1}
inline Partition parse_partition(const std::string& text) {
  Partition out;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ','))
    out.push_back(std::stoi(piece));
  return out;
}

// "1,2:1,3:2,3" -> {{1,2},{1,3},{2,3}}
inline IndexSegment parse_segment(const std::string& text) {
  IndexSegment out;
  std::stringstream stream(text);
  std::string group;
  while (std::getline(stream, group, ':'))
    out.push_back(parse_partition(group));
  return out;
}

// Space-joined partition parts for CSV cells (no commas inside a cell).
inline std::string csv_shape(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i)
    out += (i ? " " : "") + std::to_string(p[i]);
  return out;
}

struct RelationFlags {
  std::string kind;
  int t = 0, u = 0, v = 0;
  std::string rows, cols;
  bool mirrored = false;
  bool has_u = false, has_v = false;
};

// Builds the requested relation; every precondition failure surfaces as a
// domain rejection.
inline MinorPolynomial build_relation(const RelationFlags& f) {
  MinorPolynomial q;
  if (f.kind == "f") {
    require(f.has_u && f.has_v, "kind f needs --u and --v");
    q = quadratic_relation(f.t, f.u, f.v);
  } else if (f.kind == "g") {
    require(f.has_u, "kind g needs --u");
    q = even_cubic(f.t, f.u);
  } else if (f.kind == "h") {
    require(f.has_u, "kind h needs --u");
    q = odd_cubic(f.t, f.u);
  } else {
    require(!f.rows.empty() && !f.cols.empty(),
            "kind det needs --rows and --cols");
    q = determinantal_relation(f.t, parse_segment(f.rows),
                               parse_segment(f.cols));
  }
  if (f.mirrored) {
    q = mirror(q);
    if (f.kind != "det") q = normalize_poly(q);  // families stay normalized
  }
  return q;
}

// Bi-shape of a family member, for the JSON payload.
inline BiShape relation_bishape(const RelationFlags& f) {
  if (f.kind == "f") return quadratic_bishape(f.t, f.u, f.v);
  if (f.kind == "g") return even_cubic_bishape(f.t, f.u);
  if (f.kind == "h") return odd_cubic_bishape(f.t, f.u);
  return BiShape{segment_shape(parse_segment(f.rows)),
                 segment_shape(parse_segment(f.cols))};
}

}  // namespace detail

// Runs one invocation.  Exit codes: 0 success, 2 domain rejection (a named
// precondition failed), 1 internal error, 64 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact decomposition and relation calculator for the minors "
               "of a generic matrix"};
  app.require_subcommand(1);

  int t = 0, m = 0, n = 0, d = 0, dmax = 0, degmax = 3;
  std::string format = "text";
  std::string mu_text, row_text, col_text;
  detail::RelationFlags rel;
  std::string method = "exact";
  int trials = 4;
  std::uint64_t seed = 0;
  bool has_seed = false, confirm_large = false, check_brute = false;
  int cap = 256;
  SearchBudget budget;

  auto* decompose =
      app.add_subcommand("decompose", "graded piece of the minor algebra");
  decompose->add_option("--t", t)->required();
  decompose->add_option("--m", m)->required();
  decompose->add_option("--n", n)->required();
  decompose->add_option("--d", d)->required();
  decompose->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* plethysm = app.add_subcommand(
      "plethysm", "Schur functor of the t-th exterior power, expanded");
  plethysm->add_option("--mu", mu_text, "partition, e.g. 3,1")->required();
  plethysm->add_option("--t", t)->required();
  plethysm->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* relation =
      app.add_subcommand("relation", "construct a relation polynomial");
  relation->add_option("--kind", rel.kind)
      ->required()
      ->check(CLI::IsMember({"f", "g", "h", "det"}));
  relation->add_option("--t", rel.t)->required();
  auto* u_opt = relation->add_option("--u", rel.u);
  auto* v_opt = relation->add_option("--v", rel.v);
  relation->add_option("--rows", rel.rows, "segment, e.g. 1,2:1,3:2,3");
  relation->add_option("--cols", rel.cols, "segment, e.g. 1,2:1,3:1,4");
  relation->add_flag("--mirror", rel.mirrored, "transpose the matrix roles");
  relation->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify =
      app.add_subcommand("verify", "test kernel membership of a relation");
  verify->add_option("--kind", rel.kind)
      ->required()
      ->check(CLI::IsMember({"f", "g", "h", "det"}));
  verify->add_option("--t", rel.t)->required();
  auto* vu_opt = verify->add_option("--u", rel.u);
  auto* vv_opt = verify->add_option("--v", rel.v);
  verify->add_option("--rows", rel.rows);
  verify->add_option("--cols", rel.cols);
  verify->add_flag("--mirror", rel.mirrored);
  verify->add_option("--m", m)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--method", method)
      ->check(CLI::IsMember({"exact", "probe"}));
  verify->add_option("--trials", trials);
  auto* seed_opt = verify->add_option("--seed", seed);
  verify->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* minimality = app.add_subcommand(
      "minimality", "decide whether a kernel bi-shape is a minimal generator");
  minimality->add_option("--t", t)->required();
  minimality->add_option("--row", row_text, "row shape, e.g. 6,2")->required();
  minimality->add_option("--col", col_text, "column shape, e.g. 7,1")
      ->required();
  minimality->add_option("--max-derivations", budget.max_derivations);
  minimality->add_option("--max-tableaux", budget.max_tableaux_per_side);
  minimality->add_option("--exhaustive-degree", budget.exhaustive_max_degree);
  minimality->add_option("--exhaustive-boxes", budget.exhaustive_max_boxes);
  minimality->add_option("--order-seed", budget.order_seed);
  minimality->add_flag("--confirm-large", confirm_large);
  minimality->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* regularity_cmd =
      app.add_subcommand("regularity", "Castelnuovo-Mumford regularity");
  regularity_cmd->add_option("--t", t)->required();
  regularity_cmd->add_option("--m", m)->required();
  regularity_cmd->add_option("--n", n)->required();
  std::string reg_format = "json";
  regularity_cmd->add_option("--format", reg_format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
  hilbert->add_option("--t", t)->required();
  hilbert->add_option("--m", m)->required();
  hilbert->add_option("--n", n)->required();
  hilbert->add_option("--dmax", dmax)->required();
  std::string hil_format = "csv";
  hilbert->add_option("--format", hil_format)
      ->check(CLI::IsMember({"text", "json", "csv"}));
  hilbert->add_flag("--check-brute", check_brute,
                    "cross-check each value against the expansion rank");
  hilbert->add_option("--cap", cap, "monomial cap for the brute oracle");
  hilbert->add_flag("--confirm-large", confirm_large);

  auto* export_cmd = app.add_subcommand(
      "export", "write the family generators inside a format");
  export_cmd->add_option("--t", t)->required();
  export_cmd->add_option("--m", m)->required();
  export_cmd->add_option("--n", n)->required();
  export_cmd->add_option("--degmax", degmax);

  auto* tshape = app.add_subcommand(
      "tshape", "degree-d bi-shapes certified by predecessor combinatorics");
  tshape->add_option("--t", t)->required();
  tshape->add_option("--d", d)->required();
  tshape->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  argv.push_back("tminors");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 64;
  }

  rel.has_u = u_opt->count() > 0 || vu_opt->count() > 0;
  rel.has_v = v_opt->count() > 0 || vv_opt->count() > 0;
  has_seed = seed_opt->count() > 0;

  try {
    if (decompose->parsed()) {
      const SchurExpansion expansion = decompose_minor_algebra(t, m, n, d);
      if (format == "json") {
        Json summands = Json::array();
        for (const auto& [shape, mult] : expansion)
          summands.push_back({{"shape", partition_to_json(shape)},
                              {"dim_row", int_to_json(dim_schur(shape, m))},
                              {"dim_col", int_to_json(dim_schur(shape, n))}});
        out << Json{{"t", t},
                    {"m", m},
                    {"n", n},
                    {"d", d},
                    {"summands", summands},
                    {"dimension", int_to_json(hilbert_At(t, m, n, d))}}
                   .dump()
            << "\n";
      } else if (format == "csv") {
        out << "shape,dim_row,dim_col\n";
        for (const auto& [shape, mult] : expansion)
          out << detail::csv_shape(shape) << "," << dim_schur(shape, m).str()
              << "," << dim_schur(shape, n).str() << "\n";
      } else {
        for (const auto& [shape, mult] : expansion)
          out << partition_to_string(shape) << ": "
              << dim_schur(shape, m).str() << " x "
              << dim_schur(shape, n).str() << "\n";
        out << "dimension " << hilbert_At(t, m, n, d).str() << "\n";
      }
    } else if (plethysm->parsed()) {
      const Partition mu = detail::parse_partition(mu_text);
      const SchurExpansion expansion = plethysm_exterior(mu, t);
      if (format == "json") {
        out << Json{{"mu", partition_to_json(mu)},
                    {"t", t},
                    {"expansion", expansion_to_json(expansion)}}
                   .dump()
            << "\n";
      } else if (format == "csv") {
        out << "shape,mult\n";
        for (const auto& [shape, mult] : expansion)
          out << detail::csv_shape(shape) << "," << mult.str() << "\n";
      } else {
        for (const auto& [shape, mult] : expansion)
          out << partition_to_string(shape) << ": " << mult.str() << "\n";
      }
    } else if (relation->parsed()) {
      const MinorPolynomial q = detail::build_relation(rel);
      if (format == "json") {
        BiShape b = detail::relation_bishape(rel);
        if (rel.mirrored) std::swap(b.row, b.col);
        Json payload = poly_to_json(q);
        payload["kind"] = rel.kind;
        payload["t"] = rel.t;
        payload["bishape"] = bishape_to_json(b);
        out << payload.dump() << "\n";
      } else {
        out << poly_to_text(q) << "\n";
      }
    } else if (verify->parsed()) {
      const MinorPolynomial q = detail::build_relation(rel);
      bool verdict = false;
      if (method == "probe") {
        require(has_seed, "--method probe needs an explicit --seed");
        require(trials >= 1, "need --trials >= 1");
        verdict = random_probe(q, m, n, trials, seed);
      } else {
        verdict = is_relation(q, m, n);
      }
      if (format == "json") {
        Json payload{{"is_relation", verdict},
                     {"method", method},
                     {"m", m},
                     {"n", n}};
        if (method == "probe") {
          payload["trials"] = trials;
          payload["seed"] = seed;
        }
        out << payload.dump() << "\n";
      } else {
        out << (verdict ? "true" : "false") << "\n";
      }
    } else if (minimality->parsed()) {
      if (budget.exhaustive_max_degree > 4 || budget.exhaustive_max_boxes > 8)
        require(confirm_large,
                "the exhaustive span beyond degree 4 or 8 boxes enumerates "
                "weight slices with factorial growth; rerun with "
                "--confirm-large");
      const BiShape b{detail::parse_partition(row_text),
                      detail::parse_partition(col_text)};
      const MinimalityVerdict verdict = minimality_check(b, t, budget);
      if (format == "json") {
        out << verdict_to_json(verdict).dump() << "\n";
      } else {
        out << "bishape " << bishape_to_string(verdict.bishape) << "\n"
            << "degree " << verdict.degree << "\n"
            << "status " << verdict.status << "\n"
            << "rank " << verdict.rank_found << " of " << verdict.rank_needed
            << "\n";
        for (const std::string& w : verdict.witnesses)
          out << "witness: " << w << "\n";
      }
    } else if (regularity_cmd->parsed()) {
      const RegularityCase r = regularity(t, m, n);
      if (reg_format == "json") {
        out << regularity_to_json(r).dump() << "\n";
      } else {
        out << "case " << to_string(r.case_tag) << "\n";
        if (r.k0.has_value()) out << "k0 " << *r.k0 << "\n";
        if (r.value.has_value()) out << "reg " << *r.value << "\n";
      }
    } else if (hilbert->parsed()) {
      std::vector<Int> values, brute;
      for (int deg = 0; deg <= dmax; ++deg) {
        values.push_back(hilbert_At(t, m, n, deg));
        if (check_brute) {
          if (!confirm_large && t <= std::min(m, n)) {
            // Cost estimate before committing to the expansion rank.
            Int symbols = 1;
            for (int i = 0; i < t; ++i)
              symbols = symbols * (m - i) / (i + 1);
            Int symbols_n = 1;
            for (int i = 0; i < t; ++i)
              symbols_n = symbols_n * (n - i) / (i + 1);
            symbols *= symbols_n;
            Int count = 1;
            for (int i = 1; i <= deg; ++i)
              count = count * (symbols + deg - i) / i;
            require(count <= cap,
                    "degree " + std::to_string(deg) + " needs " + count.str() +
                        " monomials, beyond the cap " + std::to_string(cap) +
                        "; rerun with --confirm-large");
          }
          brute.push_back(Int(brute_dim_At(
              t, m, n, deg,
              confirm_large ? std::numeric_limits<int>::max() : cap)));
          if (brute.back() != values.back())
            throw std::runtime_error(
                "expansion rank disagrees with the decomposition at degree " +
                std::to_string(deg));
        }
      }
      if (hil_format == "json") {
        Json table = Json::array();
        for (int deg = 0; deg <= dmax; ++deg) {
          Json entry{{"d", deg}, {"dim", int_to_json(values[deg])}};
          if (check_brute) entry["brute"] = int_to_json(brute[deg]);
          table.push_back(entry);
        }
        out << Json{{"t", t}, {"m", m}, {"n", n}, {"values", table}}.dump()
            << "\n";
      } else if (hil_format == "csv") {
        out << (check_brute ? "d,dim,brute\n" : "d,dim\n");
        for (int deg = 0; deg <= dmax; ++deg) {
          out << deg << "," << values[deg].str();
          if (check_brute) out << "," << brute[deg].str();
          out << "\n";
        }
      } else {
        for (int deg = 0; deg <= dmax; ++deg)
          out << deg << " " << values[deg].str() << "\n";
      }
    } else if (export_cmd->parsed()) {
      out << export_generators(t, m, n, degmax);
    } else if (tshape->parsed()) {
      const std::vector<BiShape> shapes = classify_tshape(t, d);
      if (format == "json") {
        Json list = Json::array();
        for (const BiShape& b : shapes) list.push_back(bishape_to_json(b));
        out << Json{{"t", t}, {"d", d}, {"shapes", list}}.dump() << "\n";
      } else {
        for (const BiShape& b : shapes) out << bishape_to_string(b) << "\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "domain rejection: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli
}  // namespace minors
