// Command-line front end: every computation as reproducible table
// generation.  Identical invocations print byte-identical output.
//
// Exit codes: 0 success, 1 usage error, 2 out-of-theorem-scope input,
// 3 verification failure.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

#include "alcomb/json_io.hpp"

using namespace alcomb;

namespace {

enum class Format { plain, json, csv };

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw CLI::ValidationError("--format must be plain, json or csv");
}

struct CommonArgs {
  std::string weight_text;
  int n = 0;
  Int c = 0;
  bool quantum = false;
  std::string format = "plain";
};

void add_format(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "plain, json or csv")
      ->default_val("plain");
}

Weight resolve_weight(CommonArgs& args) {
  Weight w = parse_weight(args.weight_text);
  if (args.n == 0) args.n = w.size();
  if (args.n != w.size())
    throw std::invalid_argument("--n does not match the weight length");
  return w;
}

Context make_context(const CommonArgs& args) {
  return Context(args.n, args.c,
                 args.quantum ? Mode::quantum : Mode::classical);
}

std::string csv_weight(const Weight& w) {
  return "\"" + format_weight(w) + "\"";
}

int run_dim(CommonArgs args, const std::string& family_name,
            bool with_block) {
  Weight lam = resolve_weight(args);
  Context ctx = make_context(args);
  Family family = family_from_string(family_name);
  DimReport rep = dim_report(family, lam, ctx);
  Format fmt = parse_format(args.format);

  if (!with_block) {
    switch (fmt) {
      case Format::json:
        std::cout << json(rep).dump() << "\n";
        break;
      case Format::csv:
        std::cout << "family,weight,invariant,value,status\n"
                  << family_name << "," << csv_weight(lam) << ","
                  << rep.invariant << "," << rep.value << ","
                  << to_string(rep.status) << "\n";
        break;
      case Format::plain:
        std::cout << rep.invariant << "(" << family_name << "("
                  << format_weight(lam) << ")) = " << rep.value << " ["
                  << to_string(rep.status) << "]\n";
        break;
    }
    return 0;
  }

  auto table = block_dimension_table(lam, ctx);
  switch (fmt) {
    case Format::json: {
      json doc{{"dim", rep}, {"block", table}};
      std::cout << doc.dump() << "\n";
      break;
    }
    case Format::csv:
      std::cout << "mu,inj_L,proj_L,inj_delta,proj_nabla,inj_nabla,"
                   "proj_delta,status\n";
      for (const auto& row : table) {
        if (row.out_of_scope) {
          std::cout << csv_weight(row.mu) << ",,,,,,,out_of_scope\n";
        } else {
          std::cout << csv_weight(row.mu) << "," << row.inj_L << ","
                    << row.proj_L << "," << row.inj_delta << ","
                    << row.proj_nabla << "," << row.inj_nabla << ","
                    << row.proj_delta << ","
                    << (row.quantum_caveat ? "caveat_quantum" : "exact")
                    << "\n";
        }
      }
      break;
    case Format::plain:
      std::cout << rep.invariant << "(" << family_name << "("
                << format_weight(lam) << ")) = " << rep.value << " ["
                << to_string(rep.status) << "]\n";
      for (const auto& row : table) {
        if (row.out_of_scope) {
          std::cout << "  mu=" << format_weight_parens(row.mu)
                    << "  out of scope (singular)\n";
        } else {
          std::cout << "  mu=" << format_weight_parens(row.mu)
                    << "  inj_L=" << row.inj_L
                    << "  inj_nabla=" << row.inj_nabla
                    << (row.quantum_caveat ? "  [caveat_quantum]" : "")
                    << "\n";
        }
      }
      break;
  }
  return 0;
}

void print_schur_row(const SchurDimResult& res, Format fmt, bool header) {
  switch (fmt) {
    case Format::json:
      std::cout << json(res).dump() << "\n";
      break;
    case Format::csv:
      if (header) std::cout << "n,r,c,mode,wfd,glob,status,witness\n";
      std::cout << res.n << "," << res.r << "," << res.c << ","
                << to_string(res.mode) << "," << res.wfd << "," << res.glob
                << "," << to_string(res.status) << ","
                << (res.witness ? csv_weight(*res.witness) : std::string())
                << "\n";
      break;
    case Format::plain:
      std::cout << "S(" << res.n << "," << res.r << ") c=" << res.c
                << " mode=" << to_string(res.mode) << ": wfd " << res.wfd
                << ", glob " << res.glob << " [" << to_string(res.status)
                << "]";
      if (res.witness)
        std::cout << " witness " << format_weight_parens(*res.witness);
      std::cout << "\n";
      break;
  }
}

int run_schur(const CommonArgs& args, Int r, Int sweep) {
  Context ctx = make_context(args);
  Format fmt = parse_format(args.format);
  if (sweep >= 0) {
    for (Int k = 0; k <= sweep; ++k)
      print_schur_row(wfd_schur(ctx, k), fmt, k == 0);
  } else {
    print_schur_row(wfd_schur(ctx, r), fmt, true);
  }
  return 0;
}

int run_verify_lengths(const CommonArgs& args, Int dmax) {
  Context ctx = make_context(args);
  Format fmt = parse_format(args.format);
  if (dmax < 0) throw std::invalid_argument("--dmax must be >= 0");
  // Translation-reduced representatives: last coordinate 0.  Any dominant
  // weight is such a representative shifted by a multiple of (1,...,1),
  // which changes none of the quantities below; a representative with
  // d <= dmax has first coordinate at most (dmax+1)*c.
  Int cap = (dmax + 1) * ctx.c;
  bool all_ok = true;
  Int tested = 0;
  std::vector<Int> cur(static_cast<std::size_t>(ctx.n), 0);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == ctx.n - 1) {  // last coordinate stays 0
      Weight lam{cur};
      if (!is_regular(lam, ctx)) return;
      if (d_closed_form(lam, ctx) > dmax) return;
      VerificationReport rep = verify_length_equalities(lam, ctx);
      ++tested;
      all_ok = all_ok && rep.ok;
      if (fmt == Format::json) {
        std::cout << json(rep).dump() << "\n";
      } else if (fmt == Format::csv) {
        if (tested == 1) std::cout << "weight,expected,observed,ok\n";
        std::cout << csv_weight(lam) << "," << rep.expected << ","
                  << rep.observed << "," << (rep.ok ? "true" : "false")
                  << "\n";
      } else {
        std::cout << (rep.ok ? "ok   " : "FAIL ") << rep.subject;
        if (rep.witness)
          std::cout << "  witness " << format_chain(*rep.witness);
        std::cout << "\n";
      }
      return;
    }
    Int upper = pos == 0 ? cap : cur[static_cast<std::size_t>(pos - 1)];
    for (Int v = 0; v <= upper; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      walk(pos + 1);
    }
  };
  walk(0);
  if (fmt == Format::plain)
    std::cout << (all_ok ? "all ok" : "FAILURES") << " (" << tested
              << " weights)\n";
  return all_ok ? 0 : 3;
}

int run_verify_linkage(CommonArgs args, Int radius) {
  Weight lam = resolve_weight(args);
  Context ctx = make_context(args);
  VerificationReport rep = verify_orbit_linkage(lam, ctx, radius);
  Format fmt = parse_format(args.format);
  if (fmt == Format::json)
    std::cout << json(rep).dump() << "\n";
  else
    std::cout << (rep.ok ? "ok   " : "FAIL ") << rep.subject << ": "
              << rep.observed << "/" << rep.expected
              << " criterion weights generated\n";
  return rep.ok ? 0 : 3;
}

int run_verify_pieri(const CommonArgs& args, Int m, Int j) {
  Context ctx = make_context(args);
  PieriReport rep = verify_pieri_ses(m, j, ctx);
  Format fmt = parse_format(args.format);
  if (fmt == Format::json) {
    std::cout << json(rep).dump() << "\n";
  } else {
    std::cout << (rep.ok ? "ok   " : "FAIL ") << "h_" << (m * ctx.c - j)
              << "*e_" << j << " in " << ctx.n << " vars = ";
    bool first = true;
    for (const auto& [w, mult] : rep.constituents) {
      if (!first) std::cout << " + ";
      if (mult != 1) std::cout << mult << "*";
      std::cout << "s" << format_weight_parens(w);
      first = false;
    }
    std::cout << "\n";
  }
  return rep.ok ? 0 : 3;
}

int run_orbit(CommonArgs args) {
  Weight lam = resolve_weight(args);
  Context ctx = make_context(args);
  SaturatedSet pi = saturated_set(lam, ctx);
  Format fmt = parse_format(args.format);
  if (fmt == Format::json) {
    std::cout << json(pi).dump() << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "weight,d\n";
    for (const auto& w : pi.members)
      std::cout << csv_weight(w) << "," << d_separating_count(w, ctx) << "\n";
  } else {
    std::cout << "Pi" << format_weight_parens(lam) << " = {";
    for (std::size_t k = 0; k < pi.members.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << format_weight_parens(pi.members[k]);
    }
    std::cout << "}\n";
  }
  return 0;
}

int run_chain(CommonArgs args, const std::string& domain_name) {
  Weight lam = resolve_weight(args);
  Context ctx = make_context(args);
  Domain dom = domain_name == "Xplus" ? Domain::Xplus : Domain::X;
  Chain ch = maximal_chain(lam, ctx, dom);
  Format fmt = parse_format(args.format);
  if (fmt == Format::json) {
    std::cout << json(ch).dump() << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "position,weight\n";
    for (std::size_t k = 0; k < ch.weights.size(); ++k)
      std::cout << k << "," << csv_weight(ch.weights[k]) << "\n";
  } else {
    std::cout << format_chain(ch) << "\n";
  }
  return 0;
}

int run_table_odims(const std::string& type, Int rank, Int lw,
                    const std::string& format) {
  if (type != "A")
    throw std::invalid_argument("only type A is supported");
  if (rank < 1) throw std::invalid_argument("--rank must be >= 1");
  Int num_pos_roots = rank * (rank + 1) / 2;
  Format fmt = parse_format(format);
  Int lw_lo = lw >= 0 ? lw : 0;
  Int lw_hi = lw >= 0 ? lw : num_pos_roots;
  if (fmt == Format::csv)
    std::cout << "N,l_w,gfd_verma,proj_verma,proj_simple_upper,glob_O\n";
  json rows = json::array();
  for (Int w = lw_lo; w <= lw_hi; ++w) {
    CategoryODims d = category_O_dims(num_pos_roots, w);
    if (fmt == Format::csv) {
      std::cout << num_pos_roots << "," << w << "," << d.gfd_verma << ","
                << d.proj_verma << "," << d.proj_simple_upper << ","
                << d.glob_O << "\n";
    } else if (fmt == Format::plain) {
      std::cout << "l_w=" << w << ": gfd_verma " << d.gfd_verma
                << ", proj_verma " << d.proj_verma << ", proj_simple <= "
                << d.proj_simple_upper << "\n";
    } else {
      json row = d;
      row["l_w"] = w;
      rows.push_back(row);
    }
  }
  if (fmt == Format::json) {
    json doc{{"type", type},
             {"rank", rank},
             {"num_pos_roots", num_pos_roots},
             {"glob_O", 2 * num_pos_roots},
             {"rows", rows}};
    std::cout << doc.dump() << "\n";
  } else if (fmt == Format::plain) {
    std::cout << "glob " << 2 * num_pos_roots << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove combinatorics of the affine Weyl group of GL_n: "
               "filtration dimensions, Ext degrees and block tables of "
               "Schur algebras"};
  app.require_subcommand(1);

  CommonArgs dim_args, schur_args, len_args, link_args, pieri_args,
      orbit_args, chain_args;

  // dim
  auto* dim = app.add_subcommand("dim", "wfd/gfd of one module");
  std::string dim_family;
  bool dim_block = false;
  dim->add_option("family", dim_family, "nabla, delta or simple")
      ->required();
  dim->add_option("--weight", dim_args.weight_text)->required();
  dim->add_option("--n", dim_args.n);
  dim->add_option("--c", dim_args.c)->required();
  dim->add_flag("--quantum", dim_args.quantum);
  dim->add_flag("--block", dim_block, "also print the block table");
  add_format(dim, dim_args);

  // schur
  auto* schur = app.add_subcommand("schur", "dimensions of S(n,r)");
  Int schur_r = -1, schur_sweep = -1;
  schur->add_option("--n", schur_args.n)->required();
  schur->add_option("--r", schur_r);
  schur->add_option("--c", schur_args.c)->required();
  schur->add_flag("--quantum", schur_args.quantum);
  schur->add_option("--sweep", schur_sweep, "emit rows for r = 0..RMAX");
  add_format(schur, schur_args);

  // verify
  auto* verify = app.add_subcommand("verify", "brute-force cross-checks");
  verify->require_subcommand(1);
  auto* lengths = verify->add_subcommand(
      "lengths", "chain lengths against the closed form");
  Int len_dmax = 4;
  lengths->add_option("--n", len_args.n)->required();
  lengths->add_option("--c", len_args.c)->required();
  lengths->add_option("--dmax", len_dmax);
  lengths->add_flag("--quantum", len_args.quantum);
  add_format(lengths, len_args);

  auto* linkage =
      verify->add_subcommand("linkage", "residue criterion against orbits");
  Int link_radius = 8;
  linkage->add_option("--weight", link_args.weight_text)->required();
  linkage->add_option("--n", link_args.n);
  linkage->add_option("--c", link_args.c)->required();
  linkage->add_option("--radius", link_radius);
  linkage->add_flag("--quantum", link_args.quantum);
  add_format(linkage, link_args);

  auto* pieri = verify->add_subcommand("pieri", "hook character identity");
  Int pieri_m = 1, pieri_j = 1;
  pieri->add_option("--m", pieri_m)->required();
  pieri->add_option("--j", pieri_j)->required();
  pieri->add_option("--n", pieri_args.n)->required();
  pieri->add_option("--c", pieri_args.c)->required();
  pieri->add_flag("--quantum", pieri_args.quantum);
  add_format(pieri, pieri_args);

  // orbit
  auto* orbit = app.add_subcommand("orbit", "saturated set below a weight");
  orbit->add_option("--weight", orbit_args.weight_text)->required();
  orbit->add_option("--n", orbit_args.n);
  orbit->add_option("--c", orbit_args.c)->required();
  orbit->add_flag("--quantum", orbit_args.quantum);
  add_format(orbit, orbit_args);

  // chain
  auto* chain = app.add_subcommand("chain", "a maximal chain below a weight");
  std::string chain_domain = "X";
  chain->add_option("--weight", chain_args.weight_text)->required();
  chain->add_option("--n", chain_args.n);
  chain->add_option("--c", chain_args.c)->required();
  chain->add_option("--domain", chain_domain, "X or Xplus")
      ->default_val("X");
  chain->add_flag("--quantum", chain_args.quantum);
  add_format(chain, chain_args);

  // table o-dims
  auto* table = app.add_subcommand("table", "corollary tables");
  table->require_subcommand(1);
  auto* odims = table->add_subcommand("o-dims", "category O dimensions");
  std::string odims_type = "A";
  Int odims_rank = 1, odims_lw = -1;
  std::string odims_format = "plain";
  odims->add_option("--type", odims_type)->default_val("A");
  odims->add_option("--rank", odims_rank)->required();
  odims->add_option("--lw", odims_lw, "single row instead of the full table");
  odims->add_option("--format", odims_format)->default_val("plain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*dim) return run_dim(dim_args, dim_family, dim_block);
    if (*schur) {
      if (schur_sweep < 0 && schur_r < 0)
        throw std::invalid_argument("need --r or --sweep");
      return run_schur(schur_args, schur_r, schur_sweep);
    }
    if (*lengths) return run_verify_lengths(len_args, len_dmax);
    if (*linkage) return run_verify_linkage(link_args, link_radius);
    if (*pieri) return run_verify_pieri(pieri_args, pieri_m, pieri_j);
    if (*orbit) return run_orbit(orbit_args);
    if (*chain) return run_chain(chain_args, chain_domain);
    if (*odims)
      return run_table_odims(odims_type, odims_rank, odims_lw, odims_format);
  } catch (const ScopeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
