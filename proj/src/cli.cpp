#include "f1q/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "f1q/coverings.hpp"
#include "f1q/enumeration.hpp"
#include "f1q/error.hpp"
#include "f1q/gradings.hpp"
#include "f1q/growth.hpp"
#include "f1q/hall.hpp"
#include "f1q/io.hpp"

namespace f1q {

namespace {

struct Options {
  std::string format = "json";
  unsigned jobs = 1;
  bool seedless = false;
  std::string file;
  std::string file_b;
  std::size_t max = 0;
  bool recursion = false;
  std::size_t dim = 0;
  std::string from, to;
  std::string dimvec;
  bool require_certificate = false;
  std::size_t budget = 16;
  std::string op;
  bool mod_p_flag = false;
  std::string arrow;
  std::size_t copies = 1;
  std::string arrows;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::shared_ptr<const Quiver> load_quiver(const std::string& path) {
  return std::make_shared<const Quiver>(parse_quiver(read_file(path)));
}

Winding load_winding(const std::string& path) { return parse_winding(read_file(path)); }

Json grading_json(const Grading& g) {
  Json j = Json::object();
  for (const auto& [id, v] : g) j[id] = v;
  return j;
}

Json sequence_json(const NiceSequence& seq) {
  Json j = Json::array();
  for (const auto& g : seq) j.push_back(grading_json(g));
  return j;
}

Json recursion_json(const LinearRecursion& r) {
  Json j;
  j["coeffs"] = r.coeffs;
  j["valid_from"] = r.valid_from;
  const auto p = char_polynomial(r);
  j["char_poly"] = p.to_string();
  try {
    j["dominant_root"] = dominant_root(p);
  } catch (const Error&) {
    j["dominant_root"] = nullptr;
  }
  return j;
}

Json hall_json(const HallElement& e) {
  Json terms = Json::array();
  for (const auto& [key, term] : e.terms()) {
    Json t;
    t["coeff"] = term.coeff;
    t["key"] = key.hex();
    t["witness"] = winding_to_json(term.witness);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

void print_text(const Json& j, std::ostream& out) {
  if (j.is_object()) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << std::string(width - it.key().size() + 2, ' ');
      out << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
    }
  } else if (j.is_array()) {
    for (const auto& x : j) out << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
  } else {
    out << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format == "text") print_text(j, out);
  else out << j.dump(2) << "\n";
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.file);
  const auto shape = classify_shape(*q);
  const auto nil = classify_nil(*q);
  Json j;
  j["shape"] = std::string(to_string(shape.shape));
  j["betti"] = shape.betti;
  j["class"] = std::string(to_string(nil));
  j["representative"] = std::string(representative_name(nil));
  emit(j, o, out);
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.file);
  EnumerationOptions eo;
  eo.jobs = std::max(1u, o.jobs);
  eo.max_dimension = std::max(eo.max_dimension, o.max);
  NilpotentEnumerator e(q, eo);
  Json j = Json::object();
  for (std::size_t n = 1; n <= o.max; ++n) j[std::to_string(n)] = e.count(n);
  if (o.recursion) j["recursion"] = recursion_json(ni_recursion(*q));
  emit(j, o, out);
  return kExitOk;
}

int cmd_list(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.file);
  EnumerationOptions eo;
  eo.jobs = std::max(1u, o.jobs);
  eo.max_dimension = std::max(eo.max_dimension, o.dim);
  Json j = Json::array();
  for (const auto& c : enumerate_nilpotent_indecomposables(q, o.dim, eo)) {
    Json item;
    item["key"] = c.key.hex();
    item["winding"] = winding_to_json(c.witness);
    j.push_back(std::move(item));
  }
  emit(j, o, out);
  return kExitOk;
}

int cmd_growth(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.file);
  if (o.from.empty() != o.to.empty()) throw CLI::ValidationError("--from and --to go together");
  const LinearRecursion r = o.from.empty() ? ni_recursion(*q) : compose_cycle_recursion(*q, o.from, o.to);
  emit(recursion_json(r), o, out);
  return kExitOk;
}

int cmd_euler(const Options& o, std::ostream& out) {
  const Winding m = load_winding(o.file);
  DimensionVector d;
  for (const auto& s : split_csv(o.dimvec)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      d.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidArgument, "bad dimension vector entry '" + s + "'");
    }
  }
  SearchBudget budget;
  budget.max_length = o.budget;
  Json j;
  try {
    const EulerResult r = euler_characteristic(m, d, budget);
    j["value"] = r.value;
    j["certified"] = true;
    j["sequence"] = sequence_json(r.certificate);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoCertificate) throw;
    j["value"] = grassmannian_point_count(m, d);
    j["certified"] = false;
    j["sequence"] = nullptr;
    emit(j, o, out);
    return o.require_certificate ? kExitUncertified : kExitOk;
  }
  emit(j, o, out);
  return kExitOk;
}

int cmd_nice_seq(const Options& o, std::ostream& out) {
  const Winding m = load_winding(o.file);
  SearchBudget budget;
  budget.max_length = o.budget;
  auto seq = find_distinguishing_sequence(m, budget);
  Json j;
  if (!seq) {
    j["result"] = "failure";
    emit(j, o, out);
    return kExitBudget;
  }
  j["result"] = "success";
  j["sequence"] = sequence_json(*seq);
  emit(j, o, out);
  return kExitOk;
}

int cmd_hall(const Options& o, std::ostream& out) {
  const Winding a = load_winding(o.file);
  const Winding b = load_winding(o.file_b);
  HallElement e = o.op == "product" ? hall_product(a, b) : commutator(a, b);
  if (o.mod_p_flag) e = mod_p(e);
  emit(hall_json(e), o, out);
  return kExitOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
  GammaEConfig cfg;
  cfg.base = load_quiver(o.file);
  cfg.e = o.arrow;
  cfg.copies = o.copies;
  const Winding w = build_gamma_e(cfg);
  Json j = winding_to_json(w);
  j["grading"] = grading_json(gamma_e_grading(w, cfg));
  emit(j, o, out);
  return kExitOk;
}

int cmd_contract(const Options& o, std::ostream& out) {
  const Winding w = load_winding(o.file);
  const auto list = split_csv(o.arrows);
  const Contraction c = contract(w, {list.begin(), list.end()});
  Json j;
  j["map"] = winding_to_json(c.map);
  j["is_winding"] = c.is_winding;
  emit(j, o, out);
  return kExitOk;
}

int cmd_reverse(const Options& o, std::ostream& out) {
  const Json in = parse_json(read_file(o.file));
  if (in.is_object() && in.contains("base")) {
    emit(winding_to_json(reverse_rep(winding_from_json(in), o.arrow)), o, out);
  } else {
    emit(quiver_to_json(reverse_arrow(quiver_from_json(in), o.arrow)), o, out);
  }
  return kExitOk;
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    case ErrorCode::kNoCertificate:
      return kExitUncertified;
    default:
      return kExitInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of representations of quivers over the field with one element", "f1q"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  app.add_flag("--seedless", o.seedless, "Deterministic output (always on)");

  auto* classify = app.add_subcommand("classify", "Shape and nilpotent growth class of a quiver");
  classify->add_option("FILE", o.file)->required();

  auto* count = app.add_subcommand("count", "Counts of nilpotent indecomposables by dimension");
  count->add_option("--max", o.max)->required()->check(CLI::Range(1, 64));
  count->add_flag("--recursion", o.recursion);
  count->add_option("FILE", o.file)->required();

  auto* list = app.add_subcommand("list", "Nilpotent indecomposables of one dimension");
  list->add_option("--dim", o.dim)->required()->check(CLI::Range(1, 64));
  list->add_option("FILE", o.file)->required();

  auto* growth = app.add_subcommand("growth", "Linear recursion for the counts");
  growth->add_option("--from", o.from);
  growth->add_option("--to", o.to);
  growth->add_option("FILE", o.file)->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a quiver Grassmannian");
  euler->add_option("--dimvec", o.dimvec)->required();
  euler->add_flag("--require-certificate", o.require_certificate);
  euler->add_option("--budget", o.budget)->check(CLI::Range(1, 1024));
  euler->add_option("FILE", o.file)->required();

  auto* nice = app.add_subcommand("nice-seq", "Nice sequence distinguishing vertices");
  nice->add_option("--budget", o.budget)->check(CLI::Range(1, 1024));
  nice->add_option("FILE", o.file)->required();

  auto* hall = app.add_subcommand("hall", "Hall product or commutator of two representations");
  hall->add_option("--op", o.op)->required()->check(CLI::IsMember({"product", "bracket"}));
  hall->add_flag("--mod-p", o.mod_p_flag);
  hall->add_option("FILE_A", o.file)->required();
  hall->add_option("FILE_B", o.file_b)->required();

  auto* cover = app.add_subcommand("cover", "Chain copies of a quiver along one arrow");
  cover->add_option("--arrow", o.arrow)->required();
  cover->add_option("--copies", o.copies)->required()->check(CLI::Range(1, 1 << 16));
  cover->add_option("FILE", o.file)->required();

  auto* contract_cmd = app.add_subcommand("contract", "Contract the arrows over the given colors");
  contract_cmd->add_option("--arrows", o.arrows)->required();
  contract_cmd->add_option("FILE", o.file)->required();

  auto* reverse = app.add_subcommand("reverse", "Reverse one arrow of a quiver or winding");
  reverse->add_option("--arrow", o.arrow)->required();
  reverse->add_option("FILE", o.file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*count) return cmd_count(o, out);
    if (*list) return cmd_list(o, out);
    if (*growth) return cmd_growth(o, out);
    if (*euler) return cmd_euler(o, out);
    if (*nice) return cmd_nice_seq(o, out);
    if (*hall) return cmd_hall(o, out);
    if (*cover) return cmd_cover(o, out);
    if (*contract_cmd) return cmd_contract(o, out);
    if (*reverse) return cmd_reverse(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace f1q
