#include "qkp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "qkp/grassmannian.hpp"
#include "qkp/verify.hpp"

namespace qkp {

namespace {

using json = nlohmann::ordered_json;

ParabolicSubset parse_nodes(const std::string& text, int rank) {
  std::vector<int> nodes;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (tok.empty()) throw ParseError("empty node in --J list");
    int node = 0;
    try {
      size_t used = 0;
      node = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad node '" + tok + "' in --J list");
    }
    if (node < 1 || node > rank) throw ParseError("node " + tok + " out of range in --J list");
    nodes.push_back(node - 1);
  }
  return ParabolicSubset(std::move(nodes), rank);
}

bool color_enabled() {
  const char* c = std::getenv("QKP_COLOR");
  return c != nullptr && std::string(c) == "1";
}

std::string mark(bool ok) {
  if (!color_enabled()) return ok ? "ok" : "FAIL";
  return ok ? "\x1b[32mok\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

json int_vec(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_int(c, "coordinate"));
  return out;
}

}  // namespace

json root_info_doc(const RootSystem& rs) {
  json doc;
  doc["type"] = rs.type().to_string();
  doc["rank"] = rs.rank();
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(to_int(rs.cartan(i, j), "cartan entry"));
    cartan.push_back(std::move(row));
  }
  doc["cartan_matrix"] = cartan;
  json roots = json::array();
  for (const auto& root : rs.positive_roots()) {
    json entry;
    entry["root"] = int_vec(root.root);
    entry["coroot"] = int_vec(root.coroot.coords);
    entry["weight"] = int_vec(root.weight.coords);
    roots.push_back(std::move(entry));
  }
  doc["positive_roots"] = roots;
  const auto& theta = rs.theta();
  json th;
  th["root"] = int_vec(theta.root);
  th["coroot"] = int_vec(theta.coroot.coords);
  th["weight"] = int_vec(theta.weight.coords);
  doc["theta"] = th;
  json pair = json::array();
  for (int i = 0; i < rs.rank(); ++i)
    pair.push_back(to_int(rs.pairing_simple_root(theta.coroot, i), "pairing"));
  doc["theta_vee"] = json{{"coroot", int_vec(theta.coroot.coords)},
                          {"simple_root_pairings", pair}};
  return doc;
}

namespace {

void print_root_info(const RootSystem& rs, std::ostream& out) {
  out << "type " << rs.type().to_string() << "\n";
  out << "rank " << rs.rank() << "\n";
  out << "cartan matrix (rows = simple roots in fundamental-weight coordinates):\n";
  for (int i = 0; i < rs.rank(); ++i) {
    out << " ";
    for (int j = 0; j < rs.rank(); ++j) out << " " << rs.cartan(i, j).get_str();
    out << "\n";
  }
  out << "positive roots (root / coroot / weight coordinates):\n";
  for (const auto& root : rs.positive_roots())
    out << "  " << CorootVec(root.root).to_string() << " / " << root.coroot.to_string()
        << " / " << root.weight.to_string() << "\n";
  const auto& theta = rs.theta();
  out << "theta " << CorootVec(theta.root).to_string() << " / " << theta.coroot.to_string()
      << " / " << theta.weight.to_string() << "\n";
  out << "theta^vee " << theta.coroot.to_string() << " with simple-root pairings [";
  for (int i = 0; i < rs.rank(); ++i)
    out << (i ? "," : "") << rs.pairing_simple_root(theta.coroot, i).get_str();
  out << "]\n";
}

QKRing build_ring(const CartanType& type, const ParabolicSubset& J,
                  const std::string& chevalley_path) {
  if (!chevalley_path.empty()) {
    std::ifstream in(chevalley_path);
    if (!in) throw ParseError("cannot open chevalley file '" + chevalley_path + "'");
    json doc = json::parse(in, nullptr, true, true);
    QKRing base = QKRing::from_chevalley_json(doc);
    if (!(base.space()->rs->type() == type))
      throw ParseError("chevalley file is for type " + base.space()->rs->type().to_string() +
                       ", not " + type.to_string());
    if (base.space()->J == J) return base;
    if (!base.space()->J.is_subset_of(J))
      throw ParseError("chevalley file parabolic is not contained in --J");
    return QKRing::quotient_ring(base, J);
  }
  if (type == CartanType('A', 2)) return QKRing::build_a2(J);
  throw UnsupportedError("no builtin star table for type " + type.to_string() +
                         "; supply --chevalley");
}

int report_failures(const std::vector<SuiteReport>& reports, const std::string& format,
                    std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (format == "doc") {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(r.to_json());
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << "suite " << r.suite << ": " << r.checks << " checks, " << r.failures.size()
          << " failures " << mark(r.ok()) << "\n";
      for (const auto& note : r.notes) out << "  " << note << "\n";
    }
    if (!ok) {
      json doc = json::array();
      for (const auto& r : reports)
        if (!r.ok()) doc.push_back(r.to_json());
      out << doc.dump(2) << "\n";
    }
  }
  return ok ? 0 : 1;
}

struct Options {
  std::string type = "A2";
  std::string nodes;
  std::string element, denom, by, lhs, rhs;
  std::string suite = "all";
  std::string out_path, chevalley;
  std::string format = "pretty";
  uint64_t seed = 0;
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact quantum K-theory of flag manifolds: products, parabolic quotients, "
               "and the localized affine-Grassmannian dictionary"};
  app.name("qkp");
  app.require_subcommand(1);
  Options opt;
  int action = -1;
  enum {
    kRootInfo,
    kWeylProject,
    kWeylLength,
    kQkProduct,
    kQkTable,
    kQkVerify,
    kGrPeterson,
    kGrTranslate
  };

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "pretty|doc")
        ->check(CLI::IsMember({"pretty", "doc"}));
  };

  CLI::App* root = app.add_subcommand("root", "root system data");
  CLI::App* root_info = root->add_subcommand("info", "print Cartan data");
  root_info->add_option("--type", opt.type, "Cartan type, e.g. A2")->required();
  add_format(root_info);
  root_info->callback([&] { action = kRootInfo; });

  CLI::App* weyl = app.add_subcommand("weyl", "finite and affine Weyl group elements");
  CLI::App* weyl_project = weyl->add_subcommand("project", "parabolic projection [w]_J");
  weyl_project->add_option("--type", opt.type, "Cartan type, e.g. A2")->required();
  weyl_project->add_option("--J", opt.nodes, "comma list of nodes, empty for none");
  weyl_project->add_option("--element", opt.element, "element word, e.g. s1*s2*t[-1,0]")->required();
  add_format(weyl_project);
  weyl_project->callback([&] { action = kWeylProject; });
  CLI::App* weyl_length = weyl->add_subcommand("length", "affine length");
  weyl_length->add_option("--type", opt.type, "Cartan type, e.g. B2")->required();
  weyl_length->add_option("--element", opt.element, "element word")->required();
  add_format(weyl_length);
  weyl_length->callback([&] { action = kWeylLength; });

  CLI::App* qk = app.add_subcommand("qk", "quantum K-ring products and tables");
  CLI::App* qk_product = qk->add_subcommand("product", "star product of two Schubert classes");
  qk_product->add_option("--type", opt.type, "Cartan type (builtin tables: A2)")->required();
  qk_product->add_option("--J", opt.nodes, "parabolic nodes, comma separated; empty for the full flag manifold");
  qk_product->add_option("--lhs", opt.lhs, "left factor, a finite Weyl word")->required();
  qk_product->add_option("--rhs", opt.rhs, "right factor, a finite Weyl word")->required();
  qk_product->add_option("--chevalley", opt.chevalley, "external divisor data file");
  add_format(qk_product);
  qk_product->callback([&] { action = kQkProduct; });
  CLI::App* qk_table = qk->add_subcommand("table", "full multiplication table");
  qk_table->add_option("--type", opt.type, "Cartan type (builtin tables: A2)")->required();
  qk_table->add_option("--J", opt.nodes, "parabolic nodes, comma separated");
  qk_table->add_option("--out", opt.out_path, "write the table document to this path");
  qk_table->add_option("--chevalley", opt.chevalley, "external divisor data file");
  add_format(qk_table);
  qk_table->callback([&] { action = kQkTable; });
  CLI::App* qk_verify = qk->add_subcommand("verify", "run verification suites");
  qk_verify->add_option("--suite", opt.suite, "golden|ring|quotient|all")
      ->check(CLI::IsMember({"golden", "ring", "quotient", "all"}));
  qk_verify->add_option("--seed", opt.seed, "seed for randomized property suites");
  add_format(qk_verify);
  qk_verify->callback([&] { action = kQkVerify; });

  CLI::App* gr = app.add_subcommand("gr", "affine Grassmannian (Pontryagin) side");
  CLI::App* gr_peterson = gr->add_subcommand("peterson", "image under the localized dictionary");
  gr_peterson->add_option("--type", opt.type, "Cartan type (default A2)");
  gr_peterson->add_option("--element", opt.element, "affine word for the numerator index")
      ->required();
  gr_peterson->add_option("--denom", opt.denom, "denominator translation t[c1,...,cr]")
      ->required();
  gr_peterson->add_option("--J", opt.nodes, "compose with the quotient onto qK(G/P_J)");
  add_format(gr_peterson);
  gr_peterson->callback([&] { action = kGrPeterson; });
  CLI::App* gr_translate = gr->add_subcommand("translate", "Pontryagin product with a translation class");
  gr_translate->add_option("--type", opt.type, "Cartan type (default A2)");
  gr_translate->add_option("--element", opt.element, "affine word for the class index")->required();
  gr_translate->add_option("--by", opt.by, "strictly antidominant translation t[c1,...,cr]")
      ->required();
  add_format(gr_translate);
  gr_translate->callback([&] { action = kGrTranslate; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    CartanType type = CartanType::parse(opt.type);
    auto rs = RootSystem::make(type);
    switch (action) {
      case kRootInfo: {
        if (opt.format == "doc")
          out << root_info_doc(*rs).dump(2) << "\n";
        else
          print_root_info(*rs, out);
        return 0;
      }
      case kWeylProject: {
        ParabolicSubset J = parse_nodes(opt.nodes, rs->rank());
        AffineWeylElt w = parse_affine_word(rs, opt.element);
        AffineWeylElt image = project_affine(w, J);
        if (opt.format == "doc")
          out << json{{"element", image.to_string()}}.dump(2) << "\n";
        else
          out << image.to_string() << "\n";
        return 0;
      }
      case kWeylLength: {
        AffineWeylElt w = parse_affine_word(rs, opt.element);
        Int len = w.length();
        if (opt.format == "doc") {
          json doc;
          doc["element"] = w.to_string();
          if (len.fits_slong_p())
            doc["length"] = len.get_si();
          else
            doc["length"] = len.get_str();
          out << doc.dump(2) << "\n";
        } else {
          out << len.get_str() << "\n";
        }
        return 0;
      }
      case kQkProduct: {
        ParabolicSubset J = parse_nodes(opt.nodes, rs->rank());
        QKRing ring = build_ring(type, J, opt.chevalley);
        const auto& space = ring.space();
        int u = space->coset->rep_id(parse_finite_word(rs, opt.lhs));
        int v = space->coset->rep_id(parse_finite_word(rs, opt.rhs));
        KClass prod = ring.star(KClass::basis_class(space, u), KClass::basis_class(space, v));
        if (opt.format == "doc")
          out << prod.to_json().dump(2) << "\n";
        else
          out << prod.render() << "\n";
        return 0;
      }
      case kQkTable: {
        ParabolicSubset J = parse_nodes(opt.nodes, rs->rank());
        QKRing ring = build_ring(type, J, opt.chevalley);
        json doc = ring.table_to_json();
        if (!opt.out_path.empty()) {
          std::ofstream file(opt.out_path);
          file << doc.dump(2) << "\n";
          file.flush();
          if (!file) throw ParseError("cannot write table to '" + opt.out_path + "'");
          return 0;
        }
        if (opt.format == "doc") {
          out << doc.dump(2) << "\n";
        } else {
          const auto& space = ring.space();
          for (int u = 0; u < space->dim(); ++u)
            for (int v = 0; v < space->dim(); ++v)
              out << space->coset->rep(u).to_word_string() << " * "
                  << space->coset->rep(v).to_word_string() << " = "
                  << ring.table().product(u, v).render() << "\n";
        }
        return 0;
      }
      case kQkVerify: {
        std::vector<SuiteReport> reports;
        if (opt.suite == "golden" || opt.suite == "all") reports.push_back(verify_golden());
        if (opt.suite == "ring" || opt.suite == "all") reports.push_back(verify_ring_axioms());
        if (opt.suite == "quotient" || opt.suite == "all")
          reports.push_back(verify_quotients(opt.seed));
        return report_failures(reports, opt.format, out);
      }
      case kGrPeterson: {
        ParabolicSubset J = parse_nodes(opt.nodes, rs->rank());
        AffineWeylElt w = parse_affine_word(rs, opt.element);
        AffineWeylElt denom = parse_affine_word(rs, opt.denom);
        if (!denom.is_translation())
          throw ParseError("--denom must be a pure translation t[c1,...,cr]");
        LocalizedGrClass x(GrClass::basis_class(rs, w), {denom.translation()});
        KClass image = eta_J(x, J);
        if (opt.format == "doc")
          out << image.to_json().dump(2) << "\n";
        else
          out << image.render() << "\n";
        return 0;
      }
      case kGrTranslate: {
        AffineWeylElt w = parse_affine_word(rs, opt.element);
        AffineWeylElt by = parse_affine_word(rs, opt.by);
        if (!by.is_translation())
          throw ParseError("--by must be a pure translation t[c1,...,cr]");
        GrClass image = pontryagin_translate(GrClass::basis_class(rs, w), by.translation());
        if (opt.format == "doc") {
          json terms = json::array();
          for (const auto& [elt, coeff] : image.sorted_terms())
            terms.push_back(json{{"coeff", coeff.render()}, {"affine", elt.to_string()}});
          out << json{{"terms", terms}}.dump(2) << "\n";
        } else {
          out << image.render() << "\n";
        }
        return 0;
      }
    }
    err << "no action\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const InconsistentDataError& e) {
    json report{{"invariant", "consistent chevalley data"}, {"witness", e.what()}};
    out << report.dump(2) << "\n";
    return 1;
  } catch (const TheoremViolationError& e) {
    json report{{"invariant", "quotient well-definedness"}, {"witness", e.what()}};
    out << report.dump(2) << "\n";
    return 1;
  } catch (const NonpolynomialError& e) {
    json report{{"invariant", "products clear denominators"}, {"witness", e.what()}};
    out << report.dump(2) << "\n";
    return 1;
  } catch (const ReconstructionError& e) {
    json report{{"invariant", "operator reconstruction within the degree cap"},
                {"witness", e.what()}};
    out << report.dump(2) << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qkp
