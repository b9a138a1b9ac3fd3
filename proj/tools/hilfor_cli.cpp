// Command-line front end. Every verb is a thin adapter over the library;
// all real work and all invariants live there.
//
// Exit codes: 0 success, 1 validation or parse failure, 2 certification
// counterexample or example-suite mismatch, 3 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hilfor/algebra.hpp"
#include "hilfor/census.hpp"
#include "hilfor/coproduct.hpp"
#include "hilfor/envelope.hpp"
#include "hilfor/error.hpp"
#include "hilfor/examples.hpp"
#include "hilfor/filters.hpp"
#include "hilfor/forest.hpp"
#include "hilfor/product.hpp"
#include "hilfor/textio.hpp"

using namespace hilfor;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// First keyword of a file decides whether it holds an algebra or a forest.
bool file_is_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "algebra") return true;
    if (tok == "forest") return false;
    break;
  }
  throw ParseError(1, "expected 'algebra' or 'forest'");
}

struct Options {
  std::string out;
  std::string dot;
  std::string format = "text";
  int cap_n = -1;
  bool close_base = false;
  bool certify = false;
  bool with_zero = false;
  int base_highlight = -1;
  std::vector<std::string> inputs;
  std::string kind;
};

void print_certification(const Certification& cert, const Options& opt) {
  std::string text;
  if (opt.format == "text")
    for (const std::string& line : cert.log) text += line + '\n';
  text += std::string("certificate=") + (cert.ok ? "ok" : "counterexample") +
          '\n';
  text += "cones=" + std::to_string(cert.cones) + '\n';
  text += "mediators=" + std::to_string(cert.mediators) + '\n';
  if (!cert.ok) text += "counterexample=" + cert.counterexample + '\n';
  write_text(opt.out, text);
}

int cmd_validate(const Options& opt) {
  std::string text = read_file(opt.inputs[0]);
  ValidationReport report;
  std::string name;
  if (file_is_algebra(text)) {
    ParsedAlgebra p = parse_algebra_file(text, /*validate=*/false);
    name = p.name;
    report = validate_algebra(p.alg);
  } else {
    ParsedForest p = parse_forest_file(text, /*validate=*/false);
    name = p.name;
    report = validate_forest_space(p.space);
  }
  std::string out = name + ":\n";
  for (const std::string& line : report.checks) out += "  " + line + '\n';
  out += report.valid ? "valid\n" : "invalid: " + report.failure + '\n';
  write_text(opt.out, out);
  return report.valid ? 0 : 1;
}

int cmd_order(const Options& opt) {
  ParsedAlgebra p = parse_algebra_file(read_file(opt.inputs[0]));
  Poset ord = natural_order(p.alg);
  std::string out = "order of " + p.name + ": " + std::to_string(ord.n) +
                    " elements\n";
  for (auto [a, b] : ord.cover_pairs())
    out += p.alg.label(a) + " < " + p.alg.label(b) + '\n';
  write_text(opt.out, out);
  if (!opt.dot.empty())
    write_text(opt.dot, export_dot(p.alg, p.name + "_order"));
  return 0;
}

int cmd_spectrum(const Options& opt) {
  ParsedAlgebra p = parse_algebra_file(read_file(opt.inputs[0]));
  Spectrum spec = spectrum(p.alg);
  std::string out = "spectrum of " + p.name + ": " +
                    std::to_string(spec.points.size()) + " points\n";
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    out += "point p" + std::to_string(i) + " = {";
    for (int e : spec.points[i].members()) out += ' ' + p.alg.label(e);
    out += " }\n";
  }
  for (auto [a, b] : spec.order.cover_pairs())
    out += "p" + std::to_string(a) + " < p" + std::to_string(b) + '\n';
  write_text(opt.out, out);
  if (!opt.dot.empty()) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < spec.points.size(); ++i)
      labels.push_back("p" + std::to_string(i));
    write_text(opt.dot, export_dot(spec.order, labels, p.name + "_spectrum"));
  }
  return 0;
}

int cmd_dual(const Options& opt) {
  ParsedAlgebra p = parse_algebra_file(read_file(opt.inputs[0]));
  DualSpace ds = dual_space(p.alg);
  write_text(opt.out, serialize_forest(ds.forest, p.name + "_dual"));
  if (!opt.dot.empty())
    write_text(opt.dot, export_dot(ds.forest, p.name + "_dual"));
  return 0;
}

int cmd_algebra_of(const Options& opt) {
  ParsedForest p = parse_forest_file(read_file(opt.inputs[0]));
  Algebra a = algebra_of(p.space);
  write_text(opt.out, serialize_algebra(a, p.name + "_algebra"));
  if (!opt.dot.empty())
    write_text(opt.dot, export_dot(a, p.name + "_algebra"));
  return 0;
}

int cmd_star(const Options& opt) {
  ParsedAlgebra p = parse_algebra_file(read_file(opt.inputs[0]));
  Envelope env = godel_envelope(p.alg);
  write_text(opt.out, serialize_godel(env.star, p.name + "_star"));
  if (!opt.dot.empty())
    write_text(opt.dot, export_dot(env.star.alg, p.name + "_star"));
  return 0;
}

int cmd_tensor(const Options& opt) {
  ParsedForest x = parse_forest_file(read_file(opt.inputs[0]));
  ParsedForest y = parse_forest_file(read_file(opt.inputs[1]));
  if (opt.certify) {
    Certification cert = certify_product_universal(
        x.space, y.space, opt.cap_n >= 0 ? opt.cap_n : 4);
    print_certification(cert, opt);
    return cert.ok ? 0 : 2;
  }
  ProductSpace ps = product_space(x.space, y.space, opt.close_base);
  std::string text = serialize_forest(ps.forest, x.name + "_x_" + y.name);
  for (const std::string& line : ps.audit.audit_log)
    text += "# audit: " + line + '\n';
  write_text(opt.out, text);
  if (!opt.dot.empty())
    write_text(opt.dot, export_dot(ps.forest, x.name + "_x_" + y.name,
                                   opt.base_highlight));
  return 0;
}

int cmd_coprod(const Options& opt, bool bounded) {
  ParsedAlgebra h = parse_algebra_file(read_file(opt.inputs[0]));
  ParsedAlgebra g = parse_algebra_file(read_file(opt.inputs[1]));
  if (opt.certify) {
    int cap = opt.cap_n >= 0 ? opt.cap_n : (bounded ? 6 : 5);
    Certification cert = certify_coproduct_universal(h.alg, g.alg, cap);
    print_certification(cert, opt);
    return cert.ok ? 0 : 2;
  }
  std::string name = h.name + "_plus_" + g.name;
  std::string text;
  Algebra result;
  bool have_result = false;
  std::vector<std::string> log;
  if (bounded) {
    CoproductData cd = coproduct_bounded(h.alg, g.alg);
    log = cd.log;
    if (!cd.materialized)
      throw ResourceError("coproduct universe of " +
                          std::to_string(cd.view.n()) +
                          " elements exceeds the materialization cap");
    result = cd.result;
    have_result = true;
  } else {
    UnboundedCoproduct uc = coproduct_unbounded(h.alg, g.alg);
    log = uc.base.log;
    if (!uc.materialized)
      throw ResourceError("coproduct universe of " +
                          std::to_string(uc.members.size()) +
                          " elements exceeds the materialization cap");
    result = uc.result;
    have_result = true;
  }
  text = serialize_algebra(result, name);
  for (const std::string& line : log) text += "# audit: " + line + '\n';
  write_text(opt.out, text);
  if (!opt.dot.empty() && have_result)
    write_text(opt.dot, export_dot(result, name));
  return 0;
}

int cmd_enum(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.kind = opt.kind;
  std::string detail;
  if (opt.kind == "hbases") {
    ParsedForest p = parse_forest_file(read_file(opt.inputs[0]));
    auto families = enumerate_hbases(p.space.order);
    report.parameter = p.space.nodes();
    report.count = (long long)families.size();
    for (std::size_t i = 0; i < families.size(); ++i) {
      HForest fs;
      fs.order = p.space.order;
      fs.base = families[i];
      fs.labels = p.space.labels;
      detail += "# family " + std::to_string(i) + ": " +
                std::to_string(families[i].size()) + " sets\n";
      detail += serialize_forest(fs, p.name + "_b" + std::to_string(i));
    }
  } else {
    int n = std::stoi(opt.inputs[0]);
    report.parameter = n;
    if (opt.kind == "forests") {
      auto forests = enumerate_forests(n);
      report.count = (long long)forests.size();
      for (std::size_t i = 0; i < forests.size(); ++i) {
        detail += "forest " + std::to_string(i) + ":";
        auto covers = forests[i].cover_pairs();
        if (covers.empty()) detail += " (no covers)";
        for (auto [a, b] : covers)
          detail += ' ' + std::to_string(a) + '<' + std::to_string(b);
        detail += '\n';
      }
    } else if (opt.kind == "algebras") {
      auto algebras = enumerate_bph_algebras(n);
      report.count = (long long)algebras.size();
      for (std::size_t i = 0; i < algebras.size(); ++i)
        detail += serialize_algebra(algebras[i],
                                    "bp" + std::to_string(i)) + '\n';
    } else if (opt.kind == "phil") {
      auto algebras = enumerate_phil_algebras(n);
      report.count = (long long)algebras.size();
      for (std::size_t i = 0; i < algebras.size(); ++i)
        detail += serialize_algebra(algebras[i],
                                    "p" + std::to_string(i)) + '\n';
    } else if (opt.kind == "godel") {
      auto algebras = enumerate_godel_algebras(n);
      report.count = (long long)algebras.size();
      for (std::size_t i = 0; i < algebras.size(); ++i)
        detail += serialize_godel(algebras[i],
                                  "g" + std::to_string(i)) + '\n';
    } else {
      throw InputError("unknown enumeration kind '" + opt.kind + "'");
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::string text;
  if (opt.format == "text") text += detail;
  text += "kind=" + report.kind + '\n';
  text += "parameter=" + std::to_string(report.parameter) + '\n';
  text += "count=" + std::to_string(report.count) + '\n';
  text += "seconds=" + std::to_string(report.seconds) + '\n';
  write_text(opt.out, text);
  return 0;
}

int cmd_certify(const Options& opt) {
  Certification cert;
  if (opt.kind == "product") {
    ParsedForest x = parse_forest_file(read_file(opt.inputs[0]));
    ParsedForest y = parse_forest_file(read_file(opt.inputs[1]));
    cert = certify_product_universal(x.space, y.space,
                                     opt.cap_n >= 0 ? opt.cap_n : 4);
  } else if (opt.kind == "coproduct") {
    ParsedAlgebra h = parse_algebra_file(read_file(opt.inputs[0]));
    ParsedAlgebra g = parse_algebra_file(read_file(opt.inputs[1]));
    int cap = opt.cap_n >= 0 ? opt.cap_n : (h.alg.bounded() ? 6 : 5);
    cert = certify_coproduct_universal(h.alg, g.alg, cap);
  } else {
    throw InputError("unknown certification kind '" + opt.kind + "'");
  }
  print_certification(cert, opt);
  return cert.ok ? 0 : 2;
}

int cmd_oracle_free(const Options& opt) {
  int k = std::stoi(opt.inputs[0]);
  Algebra free = free_algebra_oracle(k, opt.cap_n >= 0 ? opt.cap_n : 6,
                                     opt.with_zero);
  std::string name = "free" + std::to_string(k) +
                     (opt.with_zero ? "_bounded" : "");
  write_text(opt.out, serialize_algebra(free, name));
  if (!opt.dot.empty()) write_text(opt.dot, export_dot(free, name));
  return 0;
}

int cmd_dot(const Options& opt) {
  std::string text = read_file(opt.inputs[0]);
  std::string rendered;
  if (file_is_algebra(text)) {
    ParsedAlgebra p = parse_algebra_file(text);
    rendered = export_dot(p.alg, p.name);
  } else {
    ParsedForest p = parse_forest_file(text);
    rendered = export_dot(p.space, p.name, opt.base_highlight);
  }
  write_text(opt.out, rendered);
  return 0;
}

int cmd_examples(const Options& opt) {
  ExampleReport report = run_example_suite();
  std::string text;
  for (const std::string& line : report.lines) text += line + '\n';
  text += report.ok ? "examples: PASS\n" : "examples: FAIL\n";
  write_text(opt.out, text);
  return report.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite prelinear implication algebras and their dual "
               "forests"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, int n_inputs,
                        const char* input_name) {
    if (n_inputs > 0)
      sub->add_option(input_name, opt.inputs)
          ->required()
          ->expected(n_inputs);
    sub->add_option("--out", opt.out, "write the primary output here");
    sub->add_option("--format", opt.format, "text or summary")
        ->check(CLI::IsMember({"text", "summary"}));
    return sub;
  };
  auto add_dot_flag = [&](CLI::App* sub) {
    sub->add_option("--dot", opt.dot, "also write a DOT rendering here");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap-n", opt.cap_n, "size cap for the operation");
  };

  CLI::App* validate = add_common(
      app.add_subcommand("validate", "check a file against the axioms"),
      1, "file");
  CLI::App* order = add_common(
      app.add_subcommand("order", "natural order of an algebra"), 1, "file");
  add_dot_flag(order);
  CLI::App* spectrum_cmd = add_common(
      app.add_subcommand("spectrum", "irreducible filters and their order"),
      1, "file");
  add_dot_flag(spectrum_cmd);
  CLI::App* dual = add_common(
      app.add_subcommand("dual", "dual forest space of a bounded prelinear "
                                 "algebra"),
      1, "file");
  add_dot_flag(dual);
  CLI::App* algebra_of_cmd = add_common(
      app.add_subcommand("algebra-of", "downset algebra of a forest space"),
      1, "file");
  add_dot_flag(algebra_of_cmd);
  CLI::App* star = add_common(
      app.add_subcommand("star", "free prelinear Heyting extension"), 1,
      "file");
  add_dot_flag(star);

  CLI::App* tensor = add_common(
      app.add_subcommand("tensor", "product of two forest spaces"), 2,
      "files");
  add_dot_flag(tensor);
  add_cap(tensor);
  tensor->add_flag("--close-base", opt.close_base,
                   "saturate the product family when the audit finds gaps");
  tensor->add_flag("--certify", opt.certify,
                   "certify the universal property instead of printing the "
                   "product");
  tensor->add_option("--base", opt.base_highlight,
                     "base set to highlight in the DOT output");

  CLI::App* coprod0 = add_common(
      app.add_subcommand("coprod0", "coproduct of two bounded algebras"), 2,
      "files");
  add_dot_flag(coprod0);
  add_cap(coprod0);
  coprod0->add_flag("--certify", opt.certify,
                    "certify the universal property");
  CLI::App* coprod = add_common(
      app.add_subcommand("coprod", "coproduct of two algebras without "
                                   "bottom"),
      2, "files");
  add_dot_flag(coprod);
  add_cap(coprod);
  coprod->add_flag("--certify", opt.certify,
                   "certify the universal property");

  CLI::App* enum_cmd =
      app.add_subcommand("enum", "enumerate small objects up to iso");
  enum_cmd
      ->add_option("kind", opt.kind,
                   "forests | algebras | phil | godel | hbases")
      ->required();
  add_common(enum_cmd, 1, "argument");
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "exhaustive universal-property check");
  certify_cmd->add_option("kind", opt.kind, "product | coproduct")
      ->required();
  add_common(certify_cmd, 2, "files");
  add_cap(certify_cmd);

  CLI::App* oracle = add_common(
      app.add_subcommand("oracle-free", "free algebra over k generators by "
                                        "chain-valuation closure"),
      1, "generators");
  add_dot_flag(oracle);
  add_cap(oracle);
  oracle->add_flag("--with-zero", opt.with_zero,
                   "build the bounded variant");

  CLI::App* dot = add_common(
      app.add_subcommand("dot", "DOT rendering of a file"), 1, "file");
  dot->add_option("--base", opt.base_highlight,
                  "base set to highlight (forest files)");

  CLI::App* examples = add_common(
      app.add_subcommand("examples", "reproduce the worked coproduct "
                                     "examples"),
      0, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(order)) return cmd_order(opt);
    if (app.got_subcommand(spectrum_cmd)) return cmd_spectrum(opt);
    if (app.got_subcommand(dual)) return cmd_dual(opt);
    if (app.got_subcommand(algebra_of_cmd)) return cmd_algebra_of(opt);
    if (app.got_subcommand(star)) return cmd_star(opt);
    if (app.got_subcommand(tensor)) return cmd_tensor(opt);
    if (app.got_subcommand(coprod0)) return cmd_coprod(opt, true);
    if (app.got_subcommand(coprod)) return cmd_coprod(opt, false);
    if (app.got_subcommand(enum_cmd)) return cmd_enum(opt);
    if (app.got_subcommand(certify_cmd)) return cmd_certify(opt);
    if (app.got_subcommand(oracle)) return cmd_oracle_free(opt);
    if (app.got_subcommand(dot)) return cmd_dot(opt);
    if (app.got_subcommand(examples)) return cmd_examples(opt);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
