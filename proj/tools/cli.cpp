#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zerosum/class_group.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/parse.hpp"
#include "zerosum/quadfield.hpp"
#include "zerosum/sumset.hpp"
#include "zerosum/verifier.hpp"

namespace zerosum::cli {

namespace {

using nlohmann::ordered_json;

/// Parsed and validated command line.
struct RunConfig {
  std::string command;
  std::string group;
  std::string seq;
  std::int64_t d = 0;
  std::string ideals;
  bool json = false;
  unsigned shards = 0;
  std::string statement = "all";
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n_max;
  std::size_t k_max = 6;
  std::optional<std::uint64_t> budget;
  bool no_orbit = false;
  bool no_timing = false;
};

ordered_json mz_json(const MzValue& v) {
  return v.is_finite() ? ordered_json(v.value()) : ordered_json("infinity");
}

ordered_json elements_json(const ZSequence& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : s.entries()) arr.push_back(format_element(g));
  return arr;
}

std::string join_plus(const ZSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '+';
    out += format_element(s.entries()[i]);
  }
  return out;
}

int cmd_mz(const RunConfig& cfg, std::ostream& out) {
  const auto group = parse_group(cfg.group);
  const auto seq = parse_sequence(group, cfg.seq);
  const auto result = mz(seq);
  const auto supp = support_size(seq);
  if (cfg.json) {
    ordered_json j;
    j["command"] = "mz";
    j["group"] = group.to_string();
    j["sequence"] = elements_json(seq);
    j["mz"] = mz_json(result.value);
    j["witness"] = result.witness ? elements_json(*result.witness) : ordered_json(nullptr);
    j["supp"] = supp;
    j["zero_sum_free"] = result.value.is_infinite();
    out << j.dump() << '\n';
  } else {
    out << "group: " << group.to_string() << '\n'
        << "sequence: " << format_sequence(seq) << '\n'
        << "mz: " << result.value.to_string() << '\n';
    if (result.witness) {
      out << "witness: " << join_plus(*result.witness) << "=0\n";
    } else {
      out << "witness: none (zero-sum free)\n";
    }
    out << "supp: " << supp << '\n';
  }
  return kExitOk;
}

int cmd_sigma(const RunConfig& cfg, std::ostream& out) {
  const auto group = parse_group(cfg.group);
  const auto seq = parse_sequence(group, cfg.seq);
  const auto sigma = sumset(seq);
  const auto entries = sigma.entries();
  if (cfg.json) {
    ordered_json j;
    j["command"] = "sigma";
    j["group"] = group.to_string();
    j["sequence"] = elements_json(seq);
    j["size"] = sigma.size();
    auto& arr = j["sigma"] = ordered_json::array();
    for (const auto& [g, len] : entries) {
      arr.push_back({{"element", format_element(g)}, {"min_length", len}});
    }
    out << j.dump() << '\n';
  } else {
    out << "sigma: {";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out << (i ? "," : "") << format_element(entries[i].first);
    }
    out << "}\nsize: " << sigma.size() << "\nmin_length:";
    for (const auto& [g, len] : entries) out << ' ' << format_element(g) << ':' << len;
    out << '\n';
  }
  return kExitOk;
}

int cmd_supp(const RunConfig& cfg, std::ostream& out) {
  const auto group = parse_group(cfg.group);
  const auto seq = parse_sequence(group, cfg.seq);
  const auto supp = support_size(seq);
  if (cfg.json) {
    out << ordered_json{{"command", "supp"}, {"group", group.to_string()},
                        {"sequence", elements_json(seq)}, {"supp", supp}}
               .dump()
        << '\n';
  } else {
    out << "supp: " << supp << '\n';
  }
  return kExitOk;
}

int cmd_davenport(const RunConfig& cfg, std::ostream& out) {
  const auto group = parse_group(cfg.group);
  DavenportOptions opts;
  opts.shards = cfg.shards;
  if (cfg.budget) opts.max_nodes = *cfg.budget;
  const auto result = davenport(group, opts);
  if (cfg.json) {
    ordered_json j;
    j["command"] = "davenport";
    j["group"] = group.to_string();
    j["order"] = group.order();
    j["cyclic"] = group.is_cyclic();
    j["davenport"] = result.value;
    j["witness"] = elements_json(result.witness);
    out << j.dump() << '\n';
  } else {
    out << "D(" << group.to_string() << ") = " << result.value << '\n'
        << "|G| = " << group.order() << (group.is_cyclic() ? " (cyclic)" : " (non-cyclic)") << '\n'
        << "zero-sum-free witness of length " << result.witness.size() << ": "
        << format_sequence(result.witness) << '\n';
  }
  return kExitOk;
}

void print_report_text(const verify::VerificationReport& r, std::ostream& out, bool timing) {
  out << (r.passed() ? "PASS " : "FAIL ") << r.statement_id;
  for (const auto& [k, v] : r.parameters) {
    out << ' ' << k << '=';
    std::visit([&](const auto& x) { out << x; }, v);
  }
  out << " instances=" << r.instances_checked << " raw=" << r.raw_instances
      << (r.orbit_reduced ? " orbit-reduced" : "") << " violations=" << r.violation_count;
  if (timing) out << " (" << r.elapsed.count() << " ms)";
  out << '\n';
  for (const auto& [label, list] : r.values) {
    if (label == "realized_s") {
      out << "  realized s:";
      for (auto s : list) out << ' ' << s;
      out << '\n';
    }
  }
  for (const auto& v : r.violations) {
    out << "  violation [" << v.check << "] " << v.sequence << ": observed " << v.observed
        << ", expected " << v.expected << '\n';
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  verify::VerifyOptions opts;
  opts.shards = cfg.shards;
  opts.orbit_reduction = !cfg.no_orbit;
  if (cfg.budget) opts.budget = *cfg.budget;

  std::vector<verify::VerificationReport> reports;
  if (cfg.statement == "all") {
    verify::SuiteOptions suite;
    suite.n_max = cfg.n_max.value_or(cfg.n.value_or(suite.n_max));
    suite.k_max = cfg.k_max;
    reports = verify::verify_all(suite, opts);
  } else {
    std::optional<AbelianGroup> group;
    if (!cfg.group.empty()) group = parse_group(cfg.group);
    if (cfg.n_max) {
      for (std::int64_t n = 1; n <= *cfg.n_max; ++n) {
        try {
          reports.push_back(verify::verify_statement(cfg.statement, n, opts, nullptr, cfg.k_max));
        } catch (const DomainError&) {
          // statement undefined for this small n
        }
      }
    } else {
      std::int64_t n = cfg.n.value_or(group ? group->order() : 6);
      reports.push_back(verify::verify_statement(cfg.statement, n, opts,
                                                 group ? &*group : nullptr, cfg.k_max));
    }
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (cfg.json) {
    verify::JsonOptions jopts;
    jopts.include_timing = !cfg.no_timing;
    out << verify::to_json(reports, jopts) << '\n';
  } else {
    for (const auto& r : reports) print_report_text(r, out, !cfg.no_timing);
    out << (passed ? "all " + std::to_string(reports.size()) + " reports passed"
                   : "violations found")
        << '\n';
  }
  return passed ? kExitOk : kExitViolations;
}

std::string form_string(const quad::BinaryForm& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

std::string structure_string(const quad::ClassGroup& cg) {
  if (cg.structure().empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < cg.structure().size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(cg.structure()[i]);
  }
  return out;
}

int cmd_class_group(const RunConfig& cfg, std::ostream& out) {
  const quad::QuadOrder order(cfg.d);
  const quad::ClassGroup cg(order);
  if (cfg.json) {
    ordered_json j;
    j["command"] = "quad-class-group";
    j["d"] = order.d();
    j["discriminant"] = order.discriminant();
    j["h"] = cg.order_h();
    j["structure"] = cg.structure();
    j["cyclic"] = cg.is_cyclic();
    auto& forms = j["forms"] = ordered_json::array();
    for (std::size_t i = 0; i < cg.element_reps().size(); ++i) {
      const auto& f = cg.element_reps()[i];
      ordered_json e{{"a", f.a}, {"b", f.b}, {"c", f.c}, {"order", cg.element_order(i)}};
      if (cg.is_cyclic()) e["log"] = cg.discrete_log(i);
      forms.push_back(e);
    }
    j["generator"] = cg.generator_index() ? ordered_json(form_string(cg.element_reps()[*cg.generator_index()]))
                                          : ordered_json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "K = Q(sqrt(-" << order.d() << ")), D = " << order.discriminant() << '\n'
        << "h = " << cg.order_h() << '\n'
        << "structure: " << structure_string(cg) << (cg.is_cyclic() ? " (cyclic)" : "") << '\n';
    if (cg.generator_index()) {
      out << "generator: " << form_string(cg.element_reps()[*cg.generator_index()]) << '\n';
    }
    out << "reduced forms:\n";
    for (std::size_t i = 0; i < cg.element_reps().size(); ++i) {
      out << "  " << form_string(cg.element_reps()[i]) << " order " << cg.element_order(i);
      if (cg.is_cyclic()) out << " = g^" << cg.discrete_log(i);
      out << '\n';
    }
  }
  return kExitOk;
}

std::vector<quad::QuadIdeal> parse_ideals(const quad::QuadOrder& order, const std::string& text) {
  std::vector<quad::QuadIdeal> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("ideal must be 'a,b'", item);
    std::int64_t a = 0, b = 0;
    try {
      a = parse_integer(item.substr(0, comma));
      b = parse_integer(item.substr(comma + 1));
    } catch (const ParseError&) {
      throw ParseError("ideal must be 'a,b'", item);
    }
    const quad::QuadElement gens[] = {{a, 0}, {b, 1}};
    out.push_back(quad::ideal_from_generators(order, gens));
  }
  if (out.empty()) throw ParseError("no ideals given", text);
  return out;
}

ordered_json ideal_json(const quad::QuadOrder& order, const quad::QuadIdeal& i) {
  return {{"hnf", {{"a", i.a}, {"b", i.b}, {"scale", i.scale}}},
          {"generators", quad::format_ideal(order, i)},
          {"norm", quad::ideal_norm(i)}};
}

int cmd_ideal(const RunConfig& cfg, std::ostream& out) {
  const quad::QuadOrder order(cfg.d);
  const auto ideals = parse_ideals(order, cfg.ideals);
  const quad::ClassGroup cg(order);
  auto class_of = [&](const quad::QuadIdeal& i) -> ordered_json {
    const auto idx = quad::ideal_class_index(cg, order, i);
    if (cg.is_cyclic()) return cg.discrete_log(idx);
    return form_string(cg.element_reps()[idx]);
  };
  quad::QuadIdeal product = quad::unit_ideal(order);
  for (const auto& i : ideals) product = quad::ideal_mul(order, product, i);
  const auto generator = quad::is_principal(order, product);

  if (cfg.json) {
    ordered_json j;
    j["command"] = "quad-ideal";
    j["d"] = order.d();
    auto& arr = j["ideals"] = ordered_json::array();
    for (const auto& i : ideals) {
      auto e = ideal_json(order, i);
      e["class"] = class_of(i);
      arr.push_back(e);
    }
    auto p = ideal_json(order, product);
    p["class"] = class_of(product);
    p["principal"] = generator.has_value();
    if (generator) p["generator"] = order.format(*generator);
    j["product"] = p;
    out << j.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      const auto& i = ideals[k];
      out << "I" << k + 1 << " = " << quad::format_ideal(order, i) << "  HNF(a=" << i.a
          << ", b=" << i.b << ", scale=" << i.scale << ")  norm " << quad::ideal_norm(i)
          << "  class " << class_of(i).dump() << '\n';
    }
    out << "product = " << quad::format_ideal(order, product) << "  HNF(a=" << product.a
        << ", b=" << product.b << ", scale=" << product.scale << ")  norm "
        << quad::ideal_norm(product) << "  class " << class_of(product).dump() << '\n';
    if (generator) {
      out << "principal, generated by " << order.format(*generator) << '\n';
    } else {
      out << "not principal\n";
    }
  }
  return kExitOk;
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
  const quad::QuadOrder order(cfg.d);
  const auto ideals = parse_ideals(order, cfg.ideals);
  const auto r = quad::find_short_principal_product(order, ideals);
  const bool ok = r.within_bound && r.irreducible.value_or(true);
  std::vector<std::string> assoc;
  for (const auto& a : quad::associates(order, r.generator)) assoc.push_back(order.format(a));

  if (cfg.json) {
    ordered_json j;
    j["command"] = "quad-demo51";
    j["d"] = order.d();
    j["h"] = r.n;
    j["classes"] = r.classes;
    j["support"] = r.support;
    j["bound"] = r.bound;
    j["mz"] = mz_json(r.mz);
    j["subset"] = r.indices;
    j["subset_size"] = r.indices.size();
    j["within_bound"] = r.within_bound;
    j["product"] = ideal_json(order, r.product);
    j["generator"] = order.format(r.generator);
    j["generator_coords"] = {r.generator.x, r.generator.y};
    j["associates"] = assoc;
    j["irreducible"] = r.irreducible ? ordered_json(*r.irreducible) : ordered_json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "K = Q(sqrt(-" << order.d() << ")), Cl(K) = Z" << r.n << '\n' << "classes:";
    for (auto c : r.classes) out << ' ' << c;
    out << "\nsupport s = " << r.support << ", bound n-s+1 = " << r.bound << '\n'
        << "shortest zero-sum of classes: length " << r.mz.to_string() << ", ideals {";
    for (std::size_t i = 0; i < r.indices.size(); ++i) out << (i ? "," : "") << r.indices[i] + 1;
    out << "}\n"
        << "subset size " << r.indices.size() << (r.within_bound ? " <= " : " > ") << r.bound
        << '\n'
        << "product = " << quad::format_ideal(order, r.product) << ", norm "
        << quad::ideal_norm(r.product) << '\n'
        << "generator: " << order.format(r.generator) << " (associates:";
    for (const auto& a : assoc) out << ' ' << a;
    out << ")\n"
        << "irreducible: "
        << (r.irreducible ? (*r.irreducible ? "yes" : "no") : "n/a (unit ideal)") << '\n';
  }
  return ok ? kExitOk : kExitViolations;
}

std::optional<std::uint64_t> budget_from_env() {
  const char* env = std::getenv("ZEROSUM_BUDGET");
  if (!env || !*env) return std::nullopt;
  const auto v = parse_integer(env);
  if (v <= 0) throw ParseError("ZEROSUM_BUDGET must be positive", env);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact zero-sum combinatorics in finite abelian groups", "zerosum"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "Emit one JSON document"); };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "Group, e.g. Z6 or Z2xZ4")->required();
    sub->add_option("--seq", cfg.seq, "Comma-separated elements, e.g. 2,2,3 or (1,0),(0,1)")
        ->required();
    add_json(sub);
  };
  auto add_shards = [&](CLI::App* sub) {
    sub->add_option("--shards", cfg.shards, "Worker threads (default: hardware concurrency)");
    sub->add_option("--budget", cfg.budget, "Instance/node cap (overrides ZEROSUM_BUDGET)");
  };

  add_seq(app.add_subcommand("mz", "Shortest nonempty zero-sum subsequence"));
  add_seq(app.add_subcommand("sigma", "Set of nonempty subsequence sums"));
  add_seq(app.add_subcommand("supp", "Number of distinct elements"));

  auto* dav = app.add_subcommand("davenport", "Davenport constant by exhaustive search");
  dav->add_option("--group", cfg.group, "Group, e.g. Z2xZ4")->required();
  add_shards(dav);
  add_json(dav);

  auto* ver = app.add_subcommand("verify", "Exhaustively verify the zero-sum statements");
  ver->add_option("statement", cfg.statement, "Statement id or 'all'")
      ->check(CLI::IsMember([] {
        auto ids = verify::statement_ids();
        ids.push_back("all");
        return ids;
      }()));
  auto* n_opt = ver->add_option("--n", cfg.n, "Size parameter n");
  ver->add_option("--n-max", cfg.n_max, "Run every n up to this value")->excludes(n_opt);
  ver->add_option("--group", cfg.group, "Group for sumset-lemmas");
  ver->add_option("--k-max", cfg.k_max, "Longest sequence for sumset-lemmas");
  ver->add_flag("--no-orbit", cfg.no_orbit, "Enumerate raw multisets instead of unit orbits");
  ver->add_flag("--no-timing", cfg.no_timing, "Omit elapsed times from the output");
  add_shards(ver);
  add_json(ver);

  auto add_quad = [&](CLI::App* sub, bool ideals) {
    sub->add_option("-d", cfg.d, "K = Q(sqrt(-d)), d squarefree")->required();
    if (ideals) {
      sub->add_option("--ideals", cfg.ideals, "Ideals 'a,b' = <a, b+omega>, separated by ';'")
          ->required();
    }
    add_json(sub);
  };
  add_quad(app.add_subcommand("quad-class-group", "Class group of Q(sqrt(-d))"), false);
  add_quad(app.add_subcommand("quad-ideal", "HNF, norm, class and principality of ideals"), true);
  add_quad(app.add_subcommand("quad-demo51",
                              "Short principal product generated by an irreducible element"),
           true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (!cfg.budget) cfg.budget = budget_from_env();
    if (cfg.shards == 0) cfg.shards = std::max(1u, std::thread::hardware_concurrency());
    if (cfg.command == "mz") return cmd_mz(cfg, out);
    if (cfg.command == "sigma") return cmd_sigma(cfg, out);
    if (cfg.command == "supp") return cmd_supp(cfg, out);
    if (cfg.command == "davenport") return cmd_davenport(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "quad-class-group") return cmd_class_group(cfg, out);
    if (cfg.command == "quad-ideal") return cmd_ideal(cfg, out);
    if (cfg.command == "quad-demo51") return cmd_demo(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: unknown command " << cfg.command << '\n';
  return kExitUsage;
}

}  // namespace zerosum::cli
