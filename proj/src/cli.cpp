#include "torikit/cli.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "torikit/cone.hpp"
#include "torikit/picard.hpp"
#include "torikit/rings.hpp"
#include "torikit/stratification.hpp"

namespace torikit::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"validate", Command::Validate}, {"orbits", Command::Orbits}, {"betti", Command::Betti},
    {"ring", Command::Ring},         {"picard", Command::Picard}, {"hilbert", Command::Hilbert},
    {"certify", Command::Certify},
};

Report number(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Report numbers(std::span<const Integer> v) {
  Report a = Report::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

Report ray_set(const RaySet& s) {
  Report a = Report::array();
  for (std::size_t r : s) a.push_back(r);
  return a;
}

std::string join(const Report& array, const std::string& sep, const std::string& prefix = "") {
  std::string s;
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (i) s += sep;
    s += prefix + (array[i].is_string() ? array[i].get<std::string>() : array[i].dump());
  }
  return s;
}

std::string group_string(const Report& group) {
  std::string s;
  const auto rank = group["rank"].get<std::size_t>();
  if (rank == 1) s = "Z";
  if (rank > 1) s = "Z^" + std::to_string(rank);
  for (const auto& t : group["torsion"]) s += (s.empty() ? "Z/" : " + Z/") + (t.is_string() ? t.get<std::string>() : t.dump());
  return s.empty() ? "0" : s;
}

std::string vector_string(const Report& v) { return "(" + join(v, ",") + ")"; }
std::string set_string(const Report& v) { return "{" + join(v, ",") + "}"; }

std::string exponent_string(const Exponent& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

Report fan_summary(const Fan& f) {
  return Report{{"rank", f.rank()}, {"rays", f.rays().size()}, {"cones", f.cones().size()}};
}

Report family_json(const Fan& f, const CharacterFamily& family) {
  Report a = Report::array();
  for (std::size_t i = 0; i < family.cones.size(); ++i)
    a.push_back(Report{{"cone", ray_set(f.cone(family.cones[i]).rays())},
                       {"character", numbers(family.characters[i].coords())}});
  return a;
}

}  // namespace

// ------------------------------------------------------------- arguments

RunConfig parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Invariants of toric varieties from rational polyhedral fans", "torikit"};
  std::string command;
  RunConfig config;
  long max_degree = 20;
  std::string format = "text";
  long cone = -1;
  bool ordinary = false, equivariant = false;

  app.add_option("command", command, "validate | orbits | betti | ring | picard | hilbert | certify")->required();
  app.add_option("fanfile", config.input, "fan file")->required();
  app.add_option("--max-degree", max_degree, "largest cohomological degree reported (even, default 20)");
  auto* ord = app.add_flag("--ordinary", ordinary, "betti: ordinary Betti numbers (complete fans)");
  auto* eq = app.add_flag("--equivariant", equivariant, "betti: equivariant Betti numbers (default)");
  ord->excludes(eq);
  app.add_option("--format", format, "text | json");
  app.add_option("--cone", cone, "hilbert: only this cone (index in the orbit table)");
  app.add_flag("-v,--verbose", config.verbose, "report parse warnings and the fan summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto it = kCommands.find(command);
  if (it == kCommands.end()) throw UsageError("unknown command '" + command + "'");
  config.command = it->second;
  if (max_degree < 0 || max_degree % 2 != 0) throw UsageError("--max-degree must be even and nonnegative");
  config.max_degree = static_cast<unsigned>(max_degree);
  if (format == "text")
    config.format = OutputFormat::Text;
  else if (format == "json")
    config.format = OutputFormat::Json;
  else
    throw UsageError("--format must be 'text' or 'json'");
  config.mode = ordinary ? BettiMode::Ordinary : BettiMode::Equivariant;
  if (cone < -1) throw UsageError("--cone must be a nonnegative index");
  if (cone >= 0) config.cone = static_cast<std::size_t>(cone);
  return config;
}

// -------------------------------------------------------------- commands

CommandResult cmd_validate(const Fan& f, const RunConfig&) {
  const ValidationReport v = validate_fan(f);
  Report r{{"command", "validate"}, {"fan", fan_summary(f)}, {"valid", v.valid()}};
  Report violations = Report::array();
  for (const auto& x : v.violations) {
    Report cones = Report::array({ray_set(x.first)});
    if (!x.second.empty() || x.kind == Violation::Kind::BadIntersection || x.kind == Violation::Kind::MissingFace)
      cones.push_back(ray_set(x.second));
    violations.push_back(Report{{"kind", to_string(x.kind)}, {"cones", cones}, {"message", x.message}});
  }
  r["violations"] = violations;
  r["smooth"] = is_smooth_fan(f);
  if (v.valid()) {
    const CompletenessReport c = completeness(f);
    r["complete"] = c.complete;
    r["completeness_note"] = c.note;
  } else {
    r["complete"] = nullptr;
    r["completeness_note"] = "";
  }
  return {v.valid() ? 0 : 1, r};
}

CommandResult cmd_orbits(const Fan& f, const RunConfig&) {
  const OrbitTable table = orbit_table(f);
  Report orbits = Report::array();
  for (const auto& o : table.orbits)
    orbits.push_back(Report{{"label", o.label},
                            {"cone", ray_set(f.cone(o.cone).rays())},
                            {"codim", o.codim},
                            {"stabilizer", Report{{"rank", o.stabilizer.rank()}, {"torsion", numbers(o.stabilizer.torsion())}}},
                            {"divisors", ray_set(o.divisors)}});
  return {0, Report{{"command", "orbits"}, {"fan", fan_summary(f)}, {"orbits", orbits}}};
}

CommandResult cmd_betti(const Fan& f, const RunConfig& config) {
  if (config.mode == BettiMode::Ordinary) {
    const IntVector p = ordinary_poincare_polynomial(f);
    IntVector betti(2 * f.rank() + 1, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) betti[i] = p[i];
    return {0, Report{{"command", "betti"}, {"mode", "ordinary"}, {"polynomial", polynomial_to_string(p)}, {"betti", numbers(betti)}}};
  }
  const PoincareSeries s = equivariant_poincare_series(f);
  return {0, Report{{"command", "betti"},
                    {"mode", "equivariant"},
                    {"series", s.to_string()},
                    {"numerator", numbers(s.numerator())},
                    {"denominator_exponent", s.denominator_exponent()},
                    {"betti", numbers(s.coefficients(config.max_degree))}}};
}

CommandResult cmd_ring(const Fan& f, const RunConfig& config) {
  const SRPresentation p = sr_presentation(f);
  Report relations = Report::array();
  for (const auto& rel : p.relations) relations.push_back(ray_set(rel));
  Report counts = Report::array();
  for (unsigned d = 0; d <= config.max_degree; d += 2)
    counts.push_back(Report{{"degree", d}, {"rank", number(face_monomial_count(f, d))}});

  Report r{{"command", "ring"},
           {"presentation", p.to_string()},
           {"generators", p.generators},
           {"relations", relations},
           {"equivariant_ranks", counts}};
  const CompletenessReport c = completeness(f);
  if (!c.complete) {
    r["ordinary_cohomology"] = nullptr;
    r["note"] = "ordinary cohomology not computed: fan not complete: " + c.note;
    return {0, r};
  }
  const unsigned top = std::min<unsigned>(config.max_degree, 2 * static_cast<unsigned>(f.rank()));
  Report pieces = Report::array();
  bool torsion_seen = false;
  for (const auto& piece : ordinary_cohomology(f, top).pieces) {
    Report basis = Report::array();
    for (const auto& e : piece.basis) basis.push_back(exponent_string(e));
    torsion_seen = torsion_seen || !piece.torsion.empty();
    pieces.push_back(Report{{"degree", piece.degree}, {"rank", piece.rank}, {"torsion", numbers(piece.torsion)}, {"basis", basis}});
  }
  r["ordinary_cohomology"] = pieces;
  r["note"] = torsion_seen ? "noteworthy: torsion in the quotient presentation" : "";
  return {0, r};
}

CommandResult cmd_picard(const Fan& f, const RunConfig&) {
  const PicardReport p = picard(f);
  Report basis = Report::array();
  for (const auto& fam : p.equivariant_basis) basis.push_back(family_json(f, fam));
  return {0, Report{{"command", "picard"},
                    {"ordinary", Report{{"rank", p.ordinary->rank}, {"torsion", numbers(p.ordinary->torsion)}}},
                    {"equivariant", Report{{"rank", p.equivariant.rank}, {"torsion", numbers(p.equivariant.torsion)}, {"basis", basis}}}}};
}

CommandResult cmd_hilbert(const Fan& f, const RunConfig& config) {
  std::vector<std::size_t> which;
  if (config.cone) {
    if (*config.cone >= f.cones().size())
      throw UsageError("--cone " + std::to_string(*config.cone) + " out of range (fan has " +
                       std::to_string(f.cones().size()) + " cones)");
    which.push_back(*config.cone);
  } else {
    for (std::size_t i = 0; i < f.cones().size(); ++i) which.push_back(i);
  }
  Report cones = Report::array();
  for (std::size_t i : which) {
    const Cone& sigma = f.cone(i);
    Report dual = Report::array(), basis = Report::array();
    for (const auto& g : dual_cone(sigma).generators) dual.push_back(numbers(g.coords()));
    for (const auto& h : hilbert_basis(sigma)) basis.push_back(numbers(h.coords()));
    cones.push_back(Report{{"index", i}, {"cone", ray_set(sigma.rays())}, {"smooth", is_smooth(sigma)},
                           {"dual_generators", dual}, {"hilbert_basis", basis}});
  }
  return {0, Report{{"command", "hilbert"}, {"cones", cones}}};
}

CommandResult cmd_certify(const Fan& f, const RunConfig& config) {
  const Stratification s = stratify(f);
  const PerfectionCertificate cert = certify_perfection(s);
  Report perf_failures = Report::array();
  for (const auto& x : cert.failures)
    perf_failures.push_back(Report{{"cone", ray_set(f.cone(x.cone).rays())}, {"ray", x.ray}, {"message", x.message}});

  // E_k restricted to its own orbit is the product of the normal weights.
  const StanleyReisnerRing ring(f);
  const RestrictionMap res(f);
  Report euler_failures = Report::array();
  for (const auto& st : s.strata) {
    Polynomial product = Polynomial::constant(res.target_variables(st.cone), 1);
    for (const auto& w : st.normal_weights) product = product * Polynomial::linear(w.value.free);
    if (!(res.restrict(ring.monomial(st.euler_monomial), st.cone) == product))
      euler_failures.push_back(ray_set(f.cone(st.cone).rays()));
  }

  const InjectivityReport inj = check_restriction_injectivity(f, config.max_degree);
  Report degrees = Report::array();
  for (const auto& d : inj.degrees)
    degrees.push_back(Report{{"degree", d.degree}, {"source_rank", d.source_rank}, {"image_rank", d.image_rank}, {"injective", d.injective()}});

  const bool ok = cert.certified() && euler_failures.empty() && inj.injective();
  return {ok ? 0 : 1,
          Report{{"command", "certify"},
                 {"strata", cert.strata},
                 {"perfection", Report{{"certified", cert.certified()}, {"weights", cert.weights}, {"failures", perf_failures}}},
                 {"euler_classes", Report{{"ok", euler_failures.empty()}, {"failures", euler_failures}}},
                 {"injectivity", Report{{"injective", inj.injective()}, {"degrees", degrees}}},
                 {"certified", ok}}};
}

// ------------------------------------------------------------- rendering

std::string render_text(const Report& r) {
  std::ostringstream out;
  const std::string command = r["command"].get<std::string>();
  if (command == "validate") {
    const auto& fan = r["fan"];
    out << "fan: rank " << fan["rank"] << ", " << fan["rays"] << " rays, " << fan["cones"] << " cones\n";
    for (const auto& v : r["violations"]) out << "  " << v["message"].get<std::string>() << "\n";
    if (!r["valid"].get<bool>()) {
      out << "invalid: " << r["violations"].size() << " violation(s)\n";
    } else {
      out << "valid, " << (r["smooth"].get<bool>() ? "smooth" : "not smooth") << ", "
          << (r["complete"].get<bool>() ? "complete" : "not complete");
      if (!r["complete"].get<bool>()) out << " (" << r["completeness_note"].get<std::string>() << ")";
      out << "\n";
    }
  } else if (command == "orbits") {
    out << r["orbits"].size() << " orbits\n";
    for (const auto& o : r["orbits"]) {
      std::string divisors = o["divisors"].empty() ? "none" : join(o["divisors"], " ", "D");
      out << "  " << o["label"].get<std::string>() << "  codim " << o["codim"] << "  X(T_sigma) = "
          << group_string(o["stabilizer"]) << "  divisors: " << divisors << "\n";
    }
  } else if (command == "betti") {
    if (r["mode"] == "ordinary") {
      out << join(r["betti"], ", ") << "\n";
      out << "P(t) = " << r["polynomial"].get<std::string>() << "\n";
    } else {
      out << join(r["betti"], ", ") << "\n";
      out << "P_T(t) = " << r["series"].get<std::string>() << "\n";
    }
  } else if (command == "ring") {
    out << "H*_T = " << r["presentation"].get<std::string>() << "\n";
    std::string ranks;
    for (const auto& c : r["equivariant_ranks"]) ranks += (ranks.empty() ? "" : ", ") + c["rank"].dump();
    out << "equivariant ranks (degrees 0, 2, ...): " << ranks << "\n";
    if (r["ordinary_cohomology"].is_null()) {
      out << r["note"].get<std::string>() << "\n";
    } else {
      for (const auto& p : r["ordinary_cohomology"]) {
        out << "H^" << p["degree"] << " = " << group_string(p);
        if (!p["basis"].empty()) out << "  basis: " << join(p["basis"], ", ");
        out << "\n";
      }
      if (!r["note"].get<std::string>().empty()) out << r["note"].get<std::string>() << "\n";
    }
  } else if (command == "picard") {
    const auto& ord = r["ordinary"];
    const auto& eq = r["equivariant"];
    auto torsion = [](const Report& g) { return g["torsion"].empty() ? std::string("none") : join(g["torsion"], ", "); };
    out << "Pic rank " << ord["rank"] << ", torsion " << torsion(ord) << "; Pic_T rank " << eq["rank"];
    if (!eq["torsion"].empty()) out << ", torsion " << torsion(eq);
    out << "\n";
    std::size_t i = 0;
    for (const auto& fam : eq["basis"]) {
      out << "  generator " << i++ << ":";
      for (const auto& entry : fam)
        out << " " << set_string(entry["cone"]) << "->" << vector_string(entry["character"]);
      out << "\n";
    }
  } else if (command == "hilbert") {
    for (const auto& c : r["cones"]) {
      out << "cone " << c["index"] << " " << set_string(c["cone"]) << (c["smooth"].get<bool>() ? " (smooth)" : " (singular)") << "\n";
      std::string basis;
      for (const auto& h : c["hilbert_basis"]) basis += (basis.empty() ? "" : " ") + vector_string(h);
      out << "  hilbert basis: " << (basis.empty() ? "none" : basis) << "\n";
    }
  } else if (command == "certify") {
    const auto& perf = r["perfection"];
    out << "perfection: " << r["strata"] << " strata, " << perf["weights"] << " normal weights, "
        << (perf["certified"].get<bool>() ? "all nonzero" : "FAILED") << "\n";
    for (const auto& x : perf["failures"]) out << "  " << x["message"].get<std::string>() << "\n";
    const auto& euler = r["euler_classes"];
    out << "euler classes: " << (euler["ok"].get<bool>() ? "restrict to the product of normal weights" : "MISMATCH") << "\n";
    const auto& inj = r["injectivity"];
    const auto& degs = inj["degrees"];
    out << "restriction to orbits: " << (inj["injective"].get<bool>() ? "injective" : "NOT injective")
        << " in degrees 0.." << (degs.empty() ? 0 : degs.back()["degree"].get<unsigned>()) << "\n";
    for (const auto& d : degs)
      if (!d["injective"].get<bool>())
        out << "  degree " << d["degree"] << ": rank " << d["image_rank"] << " < " << d["source_rank"] << "\n";
    out << (r["certified"].get<bool>() ? "certified" : "not certified") << "\n";
  }
  return out.str();
}

// ----------------------------------------------------------------- driver

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ParsedFan parsed;
  try {
    parsed = load_fan(config.input);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << config.input << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << config.input << ": " << e.what() << "\n";
    return 2;
  }
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  const Fan& f = parsed.fan;
  if (config.verbose)
    err << "fan: rank " << f.rank() << ", " << f.rays().size() << " rays, " << f.cones().size() << " cones\n";

  CommandResult result;
  try {
    if (config.command != Command::Validate) {
      const ValidationReport v = validate_fan(f);
      if (!v.valid()) throw PreconditionError("fan not valid: " + v.violations.front().message);
    }
    switch (config.command) {
      case Command::Validate: result = cmd_validate(f, config); break;
      case Command::Orbits: result = cmd_orbits(f, config); break;
      case Command::Betti: result = cmd_betti(f, config); break;
      case Command::Ring: result = cmd_ring(f, config); break;
      case Command::Picard: result = cmd_picard(f, config); break;
      case Command::Hilbert: result = cmd_hilbert(f, config); break;
      case Command::Certify: result = cmd_certify(f, config); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (config.format == OutputFormat::Json)
    out << result.report.dump(2) << "\n";
  else
    out << render_text(result.report);
  return result.exit_code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_command_line(argc, argv);
  } catch (const UsageError& e) {
    if (e.help()) {
      out << e.what();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return run(config, out, err);
}

}  // namespace torikit::cli
