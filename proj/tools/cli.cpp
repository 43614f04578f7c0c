#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "enriques/errors.hpp"

namespace enriques::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument is inline JSON when it starts with '{' or '['; otherwise it
// names a file holding JSON.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) {
      throw UsageError("cannot read JSON file '" + arg + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

PicClass load_class(const std::string& arg) { return io::parse_pic_class(load_json(arg)); }
NumClass load_num_class(const std::string& arg) { return io::parse_num_class(load_json(arg)); }
MukaiVector load_mukai(const std::string& arg) { return io::parse_mukai(load_json(arg)); }

Integer parse_integer_arg(const std::string& s) {
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << pad("k", 4) << " | " << pad("dim M", 9) << " | " << pad("min c2", 7) << " | "
      << pad("min c1^2", 8) << "\n";
  out << std::string(4, '-') << "-+-" << std::string(9, '-') << "-+-" << std::string(7, '-')
      << "-+-" << std::string(8, '-') << "\n";
  for (const TableRow& r : rows) {
    out << pad(std::to_string(r.k), 4) << " | "
        << pad(io::encode(r)["dim"].get<std::string>(), 9) << " | "
        << pad(r.min_c2.get_str(), 7) << " | " << pad(r.min_c1_squared.get_str(), 8) << "\n";
  }
  return out.str();
}

std::string render_sweep(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << pad("k", 4) << " | " << pad("H^2 range", 11) << " | " << pad("cases", 5) << " | "
      << pad("pass", 4) << " | min margins (s=1, s=2, s=3)\n";
  for (const SweepRow& r : rows) {
    out << pad(std::to_string(r.k), 4) << " | "
        << pad(r.min_h2.get_str() + ".." + r.max_h2.get_str(), 11) << " | "
        << pad(r.cases.get_str(), 5) << " | " << pad(r.all_pass ? "yes" : "no", 4) << " | ";
    if (r.cases > 0) {
      out << to_string(r.min_margins[0]) << ", " << to_string(r.min_margins[1]) << ", "
          << to_string(r.min_margins[2]);
    } else {
      out << "-";
    }
    out << "\n";
  }
  return out.str();
}

CommandResult ok(Json payload, std::string text = {}) {
  return CommandResult{"ok", std::move(payload), std::move(text), kOk};
}

CommandResult failure(const std::string& status, const std::string& message, int code) {
  return CommandResult{status, Json{{"status", status}, {"error", message}}, {}, code};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Exact lattice and moduli arithmetic on an unnodal Enriques surface", "enriques"};
  app.require_subcommand(1);
  std::string seed;
  app.add_option("--seed", seed, "Accepted for compatibility; every command is deterministic");

  // Each subcommand fills `action`; it runs after a successful parse.
  std::function<CommandResult()> action;

  auto* pair_cmd = app.add_subcommand("pair", "Intersection number of two classes");
  std::string class_a, class_b;
  pair_cmd->add_option("a", class_a)->required();
  pair_cmd->add_option("b", class_b)->required();
  pair_cmd->callback([&] {
    action = [&] {
      return ok(Json{{"pair", io::encode(pair(load_class(class_a), load_class(class_b)))}});
    };
  });

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic r + c1^2/2 - c2");
  std::string rank_s, c1_s, c2_s;
  chi_cmd->add_option("--rank", rank_s)->required();
  chi_cmd->add_option("--c1", c1_s)->required();
  chi_cmd->add_option("--c2", c2_s)->required();
  chi_cmd->callback([&] {
    action = [&] {
      return ok(Json{{"chi", io::encode(euler_chi(parse_integer_arg(rank_s), load_class(c1_s),
                                                  parse_integer_arg(c2_s)))}});
    };
  });

  auto* mukai_cmd = app.add_subcommand("mukai", "Mukai vector arithmetic");
  mukai_cmd->require_subcommand(1);
  std::string mv, mw;
  auto* mpair = mukai_cmd->add_subcommand("pair", "Mukai pairing (v, w)");
  mpair->add_option("v", mv)->required();
  mpair->add_option("w", mw)->required();
  mpair->callback([&] {
    action = [&] { return ok(Json{{"pair", io::encode(mukai_pair(load_mukai(mv), load_mukai(mw)))}}); };
  });
  auto* mchi = mukai_cmd->add_subcommand("chi", "Euler pairing chi(v, w) = -(v, w)");
  mchi->add_option("v", mv)->required();
  mchi->add_option("w", mw)->required();
  mchi->callback([&] {
    action = [&] { return ok(Json{{"chi", io::encode(Integer(-mukai_pair(load_mukai(mv), load_mukai(mw))))}}); };
  });
  auto* mtwist = mukai_cmd->add_subcommand("twist", "v e^D");
  mtwist->add_option("v", mv)->required();
  mtwist->add_option("D", mw)->required();
  mtwist->callback([&] {
    action = [&] { return ok(io::encode(twist(load_mukai(mv), load_class(mw)))); };
  });
  auto* mdec = mukai_cmd->add_subcommand("decompose", "v = m v0 with v0 primitive");
  mdec->add_option("v", mv)->required();
  mdec->callback([&] {
    action = [&] { return ok(io::encode(primitive_decompose(load_mukai(mv)))); };
  });

  auto* phi_cmd = app.add_subcommand("phi", "phi(D) and a witness half-pencil");
  std::string phi_arg;
  phi_cmd->add_option("D", phi_arg)->required();
  phi_cmd->callback([&] { action = [&] { return ok(io::encode(phi(load_num_class(phi_arg)))); }; });

  auto* pencil_cmd = app.add_subcommand("pencil", "Isotropic F with E.F = 1");
  std::string pencil_arg;
  pencil_cmd->add_option("E", pencil_arg)->required();
  pencil_cmd->callback([&] {
    action = [&] {
      const NumClass e = load_num_class(pencil_arg);
      return ok(Json{{"E", io::encode(e)}, {"F", io::encode(companion_pencil(e))}});
    };
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "Normalise (c1, c2) of a rank 2 or 4 sheaf");
  int reduce_rank = 4;
  reduce_cmd->add_option("--rank", reduce_rank)->check(CLI::IsMember({2, 4}));
  reduce_cmd->add_option("--c1", c1_s)->required();
  reduce_cmd->add_option("--c2", c2_s)->required();
  reduce_cmd->callback([&] {
    action = [&] {
      const PicClass c1 = load_class(c1_s);
      const Integer c2 = parse_integer_arg(c2_s);
      return ok(io::encode(reduce_rank == 4 ? reduce_rank4(c1, c2) : reduce_rank2(c1, c2)));
    };
  });

  auto* table_cmd = app.add_subcommand("table", "Rank 4 dimension table for k = 1..-5");
  bool pretty = false;
  table_cmd->add_flag("--pretty", pretty, "Render as a text table");
  table_cmd->callback([&] {
    action = [&] {
      const std::vector<TableRow> rows = constraint_table();
      Json payload = Json::array();
      for (const TableRow& r : rows) {
        payload.push_back(io::encode(r));
      }
      return ok(payload, pretty ? render_table(rows) : std::string());
    };
  });

  std::string h_arg, v_arg;
  std::string radius_s = "3";
  bool genericize_flag = false;
  auto* walls_cmd = app.add_subcommand("walls", "Walls for v through the polarization H");
  walls_cmd->add_option("--H", h_arg)->required();
  walls_cmd->add_option("--v", v_arg)->required();
  walls_cmd->add_flag("--genericize", genericize_flag, "Also search a nearby generic H");
  walls_cmd->add_option("--radius", radius_s, "Perturbation radius for --genericize");
  walls_cmd->callback([&] {
    action = [&] {
      const NumClass h = load_num_class(h_arg);
      const MukaiVector v = load_mukai(v_arg);
      Json payload = io::encode(walls_through(h, v));
      if (genericize_flag) {
        payload["genericH"] = io::encode(find_generic_near(h, v, parse_integer_arg(radius_s)));
      }
      return ok(payload);
    };
  });

  auto* gen_cmd = app.add_subcommand("genericize", "A generic polarization near H");
  gen_cmd->add_option("--H", h_arg)->required();
  gen_cmd->add_option("--v", v_arg)->required();
  gen_cmd->add_option("--radius", radius_s);
  gen_cmd->callback([&] {
    action = [&] {
      const NumClass h = load_num_class(h_arg);
      const MukaiVector v = load_mukai(v_arg);
      const NumClass g = find_generic_near(h, v, parse_integer_arg(radius_s));
      return ok(Json{{"H", io::encode(h)},
                     {"genericH", io::encode(g)},
                     {"generic", is_generic(g, v)}});
    };
  });

  auto* moduli_cmd = app.add_subcommand("moduli", "Existence, dimension and semistable locus");
  moduli_cmd->add_option("--v", v_arg)->required();
  moduli_cmd->callback([&] {
    action = [&] {
      const MukaiVector v = load_mukai(v_arg);
      const ModuliProfile p = moduli_profile(v);
      Json payload = io::encode(p);
      const bool odd = mpz_odd_p(v.rank().get_mpz_t()) != 0;
      if (p.m == 1 && (!odd || mukai_square(v) >= -1)) {
        payload["hodge"] = io::encode(hodge_dispatch(v));
      }
      return ok(payload);
    };
  });

  auto* hilb_cmd = app.add_subcommand("hilb-hodge", "Hodge polynomial of Y^[n]");
  int hilb_n = 0;
  hilb_cmd->add_option("--n", hilb_n)->required();
  hilb_cmd->callback([&] { action = [&] { return ok(io::encode(hilbert_scheme_hodge(hilb_n))); }; });

  auto* cb_cmd = app.add_subcommand("cb-check", "Feasibility certificate for (H^2, k)");
  std::string h2_s;
  int cb_k = 0;
  cb_cmd->add_option("--h2", h2_s)->required();
  cb_cmd->add_option("--k", cb_k)->required();
  cb_cmd->callback([&] { action = [&] { return ok(io::encode(cb_check(parse_integer_arg(h2_s), cb_k))); }; });

  auto* sweep_cmd = app.add_subcommand("cb-sweep", "Certificates for every k and even H^2");
  std::string max_h2_s = "200";
  sweep_cmd->add_option("--max-h2", max_h2_s);
  sweep_cmd->add_flag("--pretty", pretty, "Render as a text table");
  sweep_cmd->callback([&] {
    action = [&] {
      const std::vector<SweepRow> rows = cb_sweep(parse_integer_arg(max_h2_s));
      Json payload = Json::array();
      for (const SweepRow& r : rows) {
        payload.push_back(io::encode(r));
      }
      return ok(payload, pretty ? render_sweep(rows) : std::string());
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    return CommandResult{"ok", Json::object(), app.help(), kOk};
  } catch (const CLI::CallForAllHelp&) {
    return CommandResult{"ok", Json::object(), app.help("", CLI::AppFormatMode::All), kOk};
  } catch (const CLI::ParseError& e) {
    return failure("usage-error", e.what(), kUsage);
  }

  try {
    return action();
  } catch (const UsageError& e) {
    return failure("usage-error", e.what(), kUsage);
  } catch (const PreconditionError& e) {
    return failure("precondition-violation", e.what(), kPrecondition);
  } catch (const SearchFailure& e) {
    return failure("not-found", e.what(), kSearchFailure);
  } catch (const std::exception& e) {
    return failure("internal-error", e.what(), kInternal);
  }
}

std::string render(const CommandResult& result) {
  if (!result.text.empty()) {
    return result.text;
  }
  return result.payload.dump(2) + "\n";
}

}  // namespace enriques::cli
