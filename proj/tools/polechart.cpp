#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <polechart/chart.hpp>
#include <polechart/io.hpp>

namespace pc = polechart;
using pc::io::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kInfeasible = 3, kDomain = 4, kNotInClass = 5 };

struct Options {
  std::string problem, x, k2, multi_index, format = "machine";
};

json chain_to_json(const pc::InvariantChain& c) {
  json a = json::array();
  for (const auto& p : c) a.push_back(p.str());
  return a;
}

bool is_matrix(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_array()) return false;
  return true;
}

void print_pretty(const json& v, const std::string& indent, std::ostream& os) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& val = it.value();
    if (val.is_object()) {
      os << indent << it.key() << ":\n";
      print_pretty(val, indent + "  ", os);
    } else if (is_matrix(val)) {
      std::size_t width = 1;
      for (const auto& row : val)
        for (const auto& e : row) width = std::max(width, e.is_string() ? e.get<std::string>().size() : e.dump().size());
      os << indent << it.key() << ":\n";
      for (const auto& row : val) {
        os << indent << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) {
          std::string s = row[j].is_string() ? row[j].get<std::string>() : row[j].dump();
          os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
      }
    } else if (val.is_array()) {
      os << indent << it.key() << ": (";
      for (std::size_t j = 0; j < val.size(); ++j)
        os << (j ? ", " : "") << (val[j].is_string() ? val[j].get<std::string>() : val[j].dump());
      os << ")\n";
    } else {
      os << indent << it.key() << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
  }
}

void emit(const json& doc, const Options& opt) {
  if (opt.format == "pretty") print_pretty(doc, "", std::cout);
  else std::cout << doc.dump() << "\n";
}

json echo(const pc::io::ProblemFile& pf, const std::string& command) {
  json doc = pc::io::problem_to_json(pf);
  doc["command"] = command;
  return doc;
}

pc::io::ProblemFile load(const Options& opt) {
  auto pf = pc::io::load_problem(opt.problem);
  if (!opt.multi_index.empty()) pf.multi_index = pc::parse_multi_index(opt.multi_index);
  if (!opt.x.empty()) pf.x = pc::io::parse_vector(opt.x);
  if (!opt.k2.empty()) {
    auto text = pc::io::read_file(opt.k2);
    pf.k2 = pc::io::matrix_from_json(pc::io::parse_json_text(text, opt.k2), "K2");
  }
  return pf;
}

json report_json(const pc::FeasibilityReport& rep, const pc::SpectralData& sd) {
  json r = json::object();
  r["controllability_indices"] = rep.k;
  r["r"] = rep.r;
  r["invariant_polynomials"] = chain_to_json(rep.chain);
  auto verdict = [](const std::optional<std::size_t>& v) {
    json j = {{"holds", !v.has_value()}};
    if (v) j["violated_prefix"] = *v;
    return j;
  };
  r["rosenbrock"] = verdict(rep.rosenbrock);
  r["weyr_union"] = pc::weyr_union(sd);
  r["weyr_dual"] = verdict(rep.weyr_dual);
  r["observability_set_nonempty"] = rep.nonempty;
  r["centralizer_dimension"] = rep.centralizer_dim;
  r["dimension"] = rep.dimension();
  return r;
}

int cmd_check(const Options& opt) {
  auto pf = load(opt);
  auto rep = pc::analyze(pf.problem);
  json doc = echo(pf, "check");
  doc["status"] = rep.feasible() ? "ok" : "infeasible";
  doc["result"] = report_json(rep, pf.problem.target);
  emit(doc, opt);
  return rep.feasible() ? kOk : kInfeasible;
}

int cmd_canon(const Options& opt) {
  auto pf = load(opt);
  auto bd = pc::brunovsky(pf.problem.F, pf.problem.G);
  auto [fp, gp] = pc::apply(bd.t, pf.problem.F, pf.problem.G);
  if (!(fp == bd.Fp && gp == bd.Gp)) throw std::logic_error("feedback transform check failed");
  json doc = echo(pf, "canon");
  doc["status"] = "ok";
  doc["result"] = {{"controllability_indices", bd.k},
                   {"r", bd.r},
                   {"Fp", pc::io::matrix_to_json(bd.Fp)},
                   {"Gp", pc::io::matrix_to_json(bd.Gp)},
                   {"P", pc::io::matrix_to_json(bd.t.P)},
                   {"Q", pc::io::matrix_to_json(bd.t.Q)},
                   {"R", pc::io::matrix_to_json(bd.t.R)}};
  emit(doc, opt);
  return kOk;
}

int cmd_weyr(const Options& opt) {
  auto pf = load(opt);
  const auto& sd = pf.problem.target;
  json blocks = json::array();
  for (const auto& b : pc::spectral_blocks(sd)) {
    json e = {{"kind", b.is_complex ? "complex" : "real"}, {"segre", b.segre}, {"weyr", b.weyr}};
    if (b.is_complex) {
      e["re"] = pc::to_string(b.re);
      e["im"] = pc::to_string(b.im);
    } else {
      e["value"] = pc::to_string(b.re);
    }
    blocks.push_back(e);
  }
  auto chain = pc::invariant_chain(sd);
  json doc = echo(pf, "weyr");
  doc["status"] = "ok";
  doc["result"] = {{"blocks", blocks},
                   {"A", pc::io::matrix_to_json(pc::spectral_matrix(sd))},
                   {"invariant_polynomials", chain_to_json(chain)},
                   {"centralizer_dimension", pc::centralizer_dimension(sd)}};
  emit(doc, opt);
  return kOk;
}

pc::Chart make_chart(const pc::io::ProblemFile& pf) { return pc::Chart(pf.problem, pf.multi_index); }

pc::RatMatrix k2_of(const pc::io::ProblemFile& pf, const pc::Chart& ch) {
  if (pf.k2) return *pf.k2;
  return pc::RatMatrix(ch.m() - ch.rank_g(), ch.n());
}

int cmd_chart(const Options& opt) {
  auto pf = load(opt);
  pc::Chart ch = make_chart(pf);
  pf.multi_index = ch.multi_index();
  json doc = echo(pf, "chart");
  json r = {{"multi_index", pc::to_string(ch.multi_index())},
            {"coordinates", ch.coordinate_count()},
            {"k2_shape", {ch.m() - ch.rank_g(), ch.n()}},
            {"dimension", ch.dimension()},
            {"A", pc::io::matrix_to_json(ch.spectral())}};
  int code = kOk;
  if (pf.x) {
    auto p = ch.observability(*pf.x);
    r["P_x"] = pc::io::matrix_to_json(p);
    bool inside = pc::is_invertible(p);
    r["in_domain"] = inside;
    if (!inside) code = kDomain;
  }
  doc["status"] = code == kOk ? "ok" : "domain_violation";
  doc["result"] = r;
  emit(doc, opt);
  return code;
}

int cmd_synthesize(const Options& opt) {
  auto pf = load(opt);
  pc::Chart ch = make_chart(pf);
  if (!pf.x) throw pc::ParseError("synthesize needs coordinates (--x or field 'x')");
  auto k2 = k2_of(pf, ch);
  auto k = ch.synthesize(*pf.x, k2);
  pf.multi_index = ch.multi_index();
  pf.k2 = k2;
  pf.gain = k;
  json doc = echo(pf, "synthesize");
  bool ok = ch.in_class(k);
  doc["status"] = ok ? "ok" : "not_in_class";
  doc["result"] = {{"in_class", ok},
                   {"closed_loop_invariant_polynomials",
                    chain_to_json(pc::invariant_polynomials(pf.problem.F + pf.problem.G * k))}};
  emit(doc, opt);
  return ok ? kOk : kInternal;
}

int cmd_coords(const Options& opt) {
  auto pf = load(opt);
  pc::Chart ch = make_chart(pf);
  if (!pf.gain) throw pc::ParseError("coords needs a field 'gain'");
  auto pt = ch.coordinates(*pf.gain);
  pf.multi_index = ch.multi_index();
  pf.x = pt.x;
  pf.k2 = pt.k2;
  json doc = echo(pf, "coords");
  doc["status"] = "ok";
  doc["result"] = {{"coordinates", pt.x.size()}};
  emit(doc, opt);
  return kOk;
}

int cmd_verify(const Options& opt) {
  auto pf = load(opt);
  if (!pf.gain) throw pc::ParseError("verify needs a field 'gain'");
  const auto& k = *pf.gain;
  if (k.rows() != pf.problem.G.cols() || k.cols() != pf.problem.F.rows())
    throw pc::ParseError("gain must be m x n");
  auto target = pc::invariant_chain(pf.problem.target);
  auto got = pc::invariant_polynomials(pf.problem.F + pf.problem.G * k);
  bool ok = got == target;
  json doc = echo(pf, "verify");
  doc["status"] = ok ? "ok" : "not_in_class";
  doc["result"] = {{"in_class", ok},
                   {"closed_loop_invariant_polynomials", chain_to_json(got)},
                   {"target_invariant_polynomials", chain_to_json(target)}};
  emit(doc, opt);
  return ok ? kOk : kNotInClass;
}

int report_error(const Options& opt, const std::string& kind, const std::string& msg, int code) {
  json doc = {{"status", kind}, {"message", msg}};
  if (opt.format == "pretty") std::cerr << kind << ": " << msg << "\n";
  else std::cout << doc.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pole placement charts: feedback gains assigning prescribed invariant polynomials"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", opt.problem, "problem document (JSON)")->required();
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"pretty", "machine"}));
    sub->add_option("--multi-index", opt.multi_index, "chart multi-index, e.g. 2;2,1|1");
  };
  struct Cmd {
    const char* name;
    const char* help;
    int (*fn)(const Options&);
    bool coords;
  };
  const std::vector<Cmd> cmds{
      {"check", "controllability indices and feasibility", cmd_check, false},
      {"canon", "p-Brunovsky form and feedback transform", cmd_canon, false},
      {"weyr", "Weyr form of the target and its centralizer dimension", cmd_weyr, false},
      {"chart", "chart layout; with --x, the observability matrix P_x", cmd_chart, true},
      {"synthesize", "gain K from chart coordinates", cmd_synthesize, true},
      {"coords", "chart coordinates of the gain in the document", cmd_coords, false},
      {"verify", "check that the gain assigns the target invariant polynomials", cmd_verify, false},
  };
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    if (c.coords) {
      sub->add_option("--x", opt.x, "comma-separated rational coordinates");
      sub->add_option("--k2", opt.k2, "JSON file with the K2 block");
    }
    subs.emplace_back(sub, &c);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }
  try {
    for (auto& [sub, c] : subs)
      if (sub->parsed()) return c->fn(opt);
  } catch (const pc::ParseError& e) {
    return report_error(opt, "parse_error", e.what(), kParse);
  } catch (const pc::Infeasible& e) {
    return report_error(opt, "infeasible", e.what(), kInfeasible);
  } catch (const pc::Uncontrollable& e) {
    return report_error(opt, "infeasible", e.what(), kInfeasible);
  } catch (const pc::DomainViolation& e) {
    return report_error(opt, "domain_violation", e.what(), kDomain);
  } catch (const pc::NotInClass& e) {
    return report_error(opt, "not_in_class", e.what(), kNotInClass);
  } catch (const std::invalid_argument& e) {
    return report_error(opt, "parse_error", e.what(), kParse);
  } catch (const std::exception& e) {
    return report_error(opt, "internal_error", e.what(), kInternal);
  }
  return kInternal;
}
