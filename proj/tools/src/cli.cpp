#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dblcat/dblfunctor.hpp"
#include "dblcat/error.hpp"
#include "dblcat/examples.hpp"
#include "dblcat/json_io.hpp"

namespace dblcat::cli {

namespace {

constexpr std::uint32_t kDefaultBound = 4;

std::uint32_t default_bound() {
  if (const char* env = std::getenv("DBLCAT_BOUND")) {
    try {
      return static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("DBLCAT_BOUND is not a number: ") + env);
    }
  }
  return kDefaultBound;
}

struct Options {
  std::string format = "text";
  std::optional<std::uint32_t> bound;

  std::string path;
  std::string level;
  bool fail_fast = false;

  std::string name;
  std::string poset;
  std::string monad = "powerset";
  std::uint32_t exceptions = 1;
  std::optional<std::uint32_t> size;
  std::optional<std::uint32_t> finset;
  std::string maps;
  std::string emit;

  std::vector<std::uint32_t> ids;
  std::string kind = "hor";
};

std::string witness_text(const std::vector<std::uint32_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

int print_verdict(std::ostream& out, const Options& o, std::string_view question, const Verdict& v) {
  if (o.format == "json") {
    out << verdict_to_json(question, v);
  } else {
    out << question << ": " << (v.holds ? "yes" : "no") << '\n';
    if (!v.holds) {
      out << "  failing clause: " << v.clause << '\n';
      out << "  witness: [" << witness_text(v.witness) << "]\n";
      if (!v.detail.empty()) out << "  " << v.detail << '\n';
    }
  }
  return v.holds ? 0 : 1;
}

int print_report(std::ostream& out, const Options& o, const LawReport& r) {
  if (o.format == "json") {
    out << report_to_json(r);
  } else {
    out << r.to_text();
  }
  return r.empty() ? 0 : 1;
}

int cmd_validate(const Options& o, std::ostream& out) {
  std::optional<Level> level;
  if (!o.level.empty()) level = level_from_string(o.level);
  const Document doc = load_document(o.path, level);
  LawReport r;
  switch (doc.level) {
    case Level::category:
      r = validate_category(*doc.category);
      break;
    case Level::twosided:
      r = validate_category(*doc.category);
      r.merge(validate_twosided(*doc.twosided));
      break;
    case Level::dbl:
      r = validate_double_category(*doc.dbl, {o.fail_fast});
      break;
  }
  return print_report(out, o, r);
}

std::unique_ptr<Monad> make_monad(const Options& o) {
  if (o.monad == "identity") return std::make_unique<IdentityMonad>();
  if (o.monad == "powerset") return std::make_unique<PowersetMonad>();
  if (o.monad == "exception") return std::make_unique<ExceptionMonad>(o.exceptions);
  throw Error(ErrorKind::ParseError, "unknown monad '" + o.monad + "'");
}

MapClass map_class(const Options& o, MapClass fallback) {
  if (o.maps.empty()) return fallback;
  auto cls = map_class_from_string(o.maps);
  if (!cls) throw Error(ErrorKind::ParseError, "unknown map class '" + o.maps + "'");
  return *cls;
}

DoubleCategory build_example(const Options& o, std::uint32_t bound) {
  const bool use_poset = !o.poset.empty();
  if (use_poset && o.finset) throw Error(ErrorKind::ParseError, "give either --poset or --finset, not both");
  if (o.name == "squares") {
    if (o.finset) return square_double_cat(finset_skeleton(*o.finset, bound, map_class(o, MapClass::all)).category_ptr());
    return square_double_cat(named_poset(use_poset ? o.poset : "chain3"));
  }
  if (o.name == "kleisli") {
    const auto monad = make_monad(o);
    const FinSetCategory c = finset_skeleton(o.size.value_or(o.finset.value_or(2)), bound, map_class(o, MapClass::all));
    return kleisli_double_cat(c, *monad);
  }
  if (o.name == "spans") {
    if (use_poset) {
      auto p = named_poset(o.poset);
      return spans_double_cat(p, search_pullbacks(*p));
    }
    const FinSetCategory c = finset_skeleton(o.finset.value_or(o.size.value_or(2)), bound, map_class(o, MapClass::injective));
    return spans_double_cat(c.category_ptr(), finset_pullbacks(c));
  }
  if (o.name == "cospans") {
    if (use_poset) {
      auto p = named_poset(o.poset);
      return structured_cospans_double_cat(identity_functor(p), search_pushouts(*p));
    }
    const FinSetCategory c = finset_skeleton(o.finset.value_or(o.size.value_or(2)), bound, map_class(o, MapClass::surjective));
    return structured_cospans_double_cat(identity_functor(c.category_ptr()), finset_pushouts(c));
  }
  if (o.name == "lenses") {
    return lenses_double_cat(finset_skeleton(o.size.value_or(o.finset.value_or(2)), bound, map_class(o, MapClass::all)));
  }
  throw Error(ErrorKind::ParseError, "unknown example '" + o.name + "' (expected squares, kleisli, spans, cospans or lenses)");
}

int cmd_example(const Options& o, std::uint32_t bound, std::ostream& out) {
  const DoubleCategory d = build_example(o, bound);
  if (!o.emit.empty()) {
    std::ofstream f(o.emit, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + o.emit);
    f << to_json(d);
  }
  if (o.format == "json" && o.emit.empty()) {
    out << to_json(d);
  } else {
    out << o.name << ": " << d.vertical().object_count() << " objects, " << d.vertical().morphism_count()
        << " vertical morphisms, " << d.horizontal_count() << " horizontal morphisms, " << d.square_count()
        << " squares\n";
    if (!o.emit.empty()) out << "written to " << o.emit << '\n';
  }
  return 0;
}

int cmd_check_functor(const Options& o, std::ostream& out) {
  const LaxDoubleFunctor f = load_functor(o.path);
  LawReport r = validate_lax_functor(f);
  if (!r.empty()) {
    if (o.format != "json") out << "not a lax double functor\n";
    return print_report(out, o, r);
  }
  if (o.format != "json") out << "strong: " << (is_strong(f) ? "yes" : "no") << '\n';
  return print_verdict(out, o, "adjoint equivalence", is_adjoint_equivalence(f));
}

int cmd_univalence(const Options& o, std::ostream& out) {
  const Document doc = load_document(o.path, Level::dbl);
  return print_verdict(out, o, "univalent", check_univalent_double(*doc.dbl));
}

int cmd_compose(const Options& o, std::ostream& out) {
  const Document doc = load_document(o.path, Level::dbl);
  const DoubleCategory& d = *doc.dbl;
  if (o.ids.empty()) throw Error(ErrorKind::ParseError, "compose needs at least one id");
  std::uint32_t acc = o.ids.front();
  for (std::size_t i = 1; i < o.ids.size(); ++i) {
    const std::uint32_t next = o.ids[i];
    if (o.kind == "hor") {
      acc = hcomp(d, DispObjId{acc}, DispObjId{next}).v;
    } else if (o.kind == "hsq") {
      acc = hcomp_sq(d, DispMorId{acc}, DispMorId{next}).v;
    } else {
      if (acc >= d.square_count() || next >= d.square_count()) {
        throw Error(ErrorKind::IndexOutOfRange, "square id outside the table");
      }
      acc = vcomp_sq(d, DispMorId{acc}, DispMorId{next}).v;
    }
  }
  if (o.kind == "hor") {
    if (acc >= d.horizontal_count()) throw Error(ErrorKind::IndexOutOfRange, "horizontal id outside the table");
    const auto& h = d.squares().object(DispObjId{acc});
    out << "horizontal " << acc << ": " << h.x1.v << " -o " << h.x2.v << '\n';
  } else {
    if (acc >= d.square_count()) throw Error(ErrorKind::IndexOutOfRange, "square id outside the table");
    const auto& s = d.squares().morphism(DispMorId{acc});
    out << "square " << acc << ": top " << s.src.v << ", bottom " << s.tgt.v << ", left " << s.f1.v << ", right "
        << s.f2.v << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo double categories over finite carriers: validation, examples and decision procedures"};
  app.require_subcommand(1);
  Options o;
  std::uint32_t bound_flag = 0;
  auto* bound_opt = app.add_option("--bound", bound_flag, "Largest finite-set carrier (default 4, or DBLCAT_BOUND)");
  const auto formats = CLI::IsMember({"text", "json"});
  app.add_option("--format", o.format, "Output format")->check(formats);

  auto* validate = app.add_subcommand("validate", "Run the law suite on a JSON file");
  validate->add_option("path", o.path, "Input file")->required();
  validate->add_option("--level", o.level, "category, twosided or double (default: inferred)")
      ->check(CLI::IsMember({"category", "twosided", "double"}));
  validate->add_flag("--fail-fast", o.fail_fast, "Stop after the first failing layer");
  validate->add_option("--format", o.format, "Output format")->check(formats);

  auto* example = app.add_subcommand("example", "Build one of the example double categories");
  example->add_option("name", o.name, "squares, kleisli, spans, cospans or lenses")->required();
  example->add_option("--poset", o.poset, "Named poset: chain3, poset4, meet5, join5");
  example->add_option("--monad", o.monad, "identity, powerset or exception")
      ->check(CLI::IsMember({"identity", "powerset", "exception"}));
  example->add_option("--exceptions", o.exceptions, "Number of exceptions for the exception monad");
  example->add_option("--size", o.size, "Largest finite set");
  example->add_option("--finset", o.finset, "Use finite sets up to this size as carrier");
  example->add_option("--maps", o.maps, "Map class: all, injective, surjective, bijective, monotone");
  example->add_option("--emit", o.emit, "Write the tabular JSON form to this path");
  example->add_option("--format", o.format, "Output format")->check(formats);

  auto* functor = app.add_subcommand("check-functor", "Validate a lax double functor and decide adjoint equivalence");
  functor->add_option("path", o.path, "Functor file")->required();
  functor->add_option("--format", o.format, "Output format")->check(formats);

  auto* univalence = app.add_subcommand("univalence", "Decide univalence of a double category");
  univalence->add_option("path", o.path, "Input file")->required();
  univalence->add_option("--format", o.format, "Output format")->check(formats);

  auto* compose = app.add_subcommand("compose", "Compose horizontal morphisms or squares by id");
  compose->add_option("path", o.path, "Input file")->required();
  compose->add_option("ids", o.ids, "Ids to compose left to right")->required();
  compose->add_option("--kind", o.kind, "hor (horizontal morphisms), hsq or vsq (squares)")
      ->check(CLI::IsMember({"hor", "hsq", "vsq"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const std::uint32_t bound = *bound_opt ? bound_flag : default_bound();
    if (*validate) return cmd_validate(o, out);
    if (*example) return cmd_example(o, bound, out);
    if (*functor) return cmd_check_functor(o, out);
    if (*univalence) return cmd_univalence(o, out);
    if (*compose) return cmd_compose(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NotComposable ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dblcat::cli
