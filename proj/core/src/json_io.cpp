#include "dblcat/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dblcat/error.hpp"
#include "json.hpp"

namespace dblcat {

using nlohmann::json;

std::string_view to_string(Level level) {
  switch (level) {
    case Level::category:
      return "category";
    case Level::twosided:
      return "twosided";
    case Level::dbl:
      return "double";
  }
  return "?";
}

std::optional<Level> level_from_string(std::string_view name) {
  if (name == "category") return Level::category;
  if (name == "twosided") return Level::twosided;
  if (name == "double") return Level::dbl;
  return std::nullopt;
}

namespace {

const std::set<std::string> kCategoryKeys{"schema", "objects", "morphisms", "id", "comp"};
const std::set<std::string> kTwoSidedKeys{"disp_objects", "disp_morphisms", "disp_id", "disp_comp"};
const std::set<std::string> kDoubleKeys{"hid_obj", "hid_sq", "hcomp_obj", "hcomp_sq", "lunitor", "runitor", "associator"};
const std::set<std::string> kFunctorKeys{"schema",      "dom",         "cod",           "on_obj",         "on_mor",
                                         "on_disp_obj", "on_disp_mor", "id_comparison", "comp_comparison"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

const json& key(const json& obj, const std::string& name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, "missing key \"" + name + "\"");
  return *it;
}

std::uint32_t uint(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(where, "expected a nonnegative integer");
  }
  const auto x = v.get<std::uint64_t>();
  if (x >= kNone) fail(where, "integer too large");
  return static_cast<std::uint32_t>(x);
}

const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

void check_fields(const json& entry, const std::vector<std::string>& fields, const std::string& where) {
  if (!entry.is_object()) fail(where, "expected an object");
  for (const auto& [k, _] : entry.items()) {
    if (std::find(fields.begin(), fields.end(), k) == fields.end()) fail(where, "unknown key \"" + k + "\"");
  }
  for (const auto& f : fields) key(entry, f, where);
}

// Each entry has exactly the given fields, all nonnegative integers.
std::vector<std::vector<std::uint32_t>> records(const json& obj, const std::string& name,
                                                const std::vector<std::string>& fields) {
  std::vector<std::vector<std::uint32_t>> out;
  const json& arr = array(key(obj, name, "document"), name);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    check_fields(arr[i], fields, where);
    std::vector<std::uint32_t> row;
    for (const auto& f : fields) row.push_back(uint(arr[i][f], where + "." + f));
    out.push_back(std::move(row));
  }
  return out;
}

template <class Id>
std::vector<Id> id_list(const json& obj, const std::string& name) {
  std::vector<Id> out;
  const json& arr = array(key(obj, name, "document"), name);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(Id{uint(arr[i], name + "[" + std::to_string(i) + "]")});
  return out;
}

void check_schema(const json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  const json& s = key(doc, "schema", "document");
  if (!s.is_string() || s.get<std::string>() != kSchema) fail("schema", "expected \"" + std::string(kSchema) + "\"");
}

std::shared_ptr<const FinCategory> read_category(const json& doc) {
  const std::uint32_t n = uint(key(doc, "objects", "document"), "objects");
  std::vector<Arrow> mors;
  for (const auto& r : records(doc, "morphisms", {"src", "tgt"})) mors.push_back({ObjId{r[0]}, ObjId{r[1]}});
  std::vector<CompEntry> comp;
  for (const auto& r : records(doc, "comp", {"f", "g", "fg"})) comp.push_back({MorId{r[0]}, MorId{r[1]}, MorId{r[2]}});
  return std::make_shared<const FinCategory>(n, std::move(mors), id_list<MorId>(doc, "id"), std::move(comp));
}

std::shared_ptr<const TwoSidedDispCat> read_twosided(const json& doc, const CategoryPtr& base) {
  std::vector<DispObject> objects;
  for (const auto& r : records(doc, "disp_objects", {"x1", "x2", "count"})) {
    for (std::uint32_t i = 0; i < r[2]; ++i) objects.push_back({ObjId{r[0]}, ObjId{r[1]}});
  }
  std::vector<DispMorphism> mors;
  for (const auto& r : records(doc, "disp_morphisms", {"f1", "f2", "src", "tgt", "count"})) {
    for (std::uint32_t i = 0; i < r[4]; ++i) mors.push_back({MorId{r[0]}, MorId{r[1]}, DispObjId{r[2]}, DispObjId{r[3]}});
  }
  std::vector<DispCompEntry> comp;
  for (const auto& r : records(doc, "disp_comp", {"f", "g", "fg"})) {
    comp.push_back({DispMorId{r[0]}, DispMorId{r[1]}, DispMorId{r[2]}});
  }
  return std::make_shared<const TwoSidedDispCat>(base, base, std::move(objects), std::move(mors),
                                                 id_list<DispMorId>(doc, "disp_id"), std::move(comp));
}

std::vector<UnitorEntry> unitors(const json& doc, const std::string& name) {
  std::vector<UnitorEntry> out;
  for (const auto& r : records(doc, name, {"h", "sq", "inv"})) out.push_back({DispObjId{r[0]}, {DispMorId{r[1]}, DispMorId{r[2]}}});
  return out;
}

DoublePtr read_double(const json& doc, TwoSidedPtr squares) {
  DoubleTables t;
  t.hid_obj = id_list<DispObjId>(doc, "hid_obj");
  t.hid_sq = id_list<DispMorId>(doc, "hid_sq");
  for (const auto& r : records(doc, "hcomp_obj", {"h", "k", "hk"})) {
    t.hcomp_obj.push_back({DispObjId{r[0]}, DispObjId{r[1]}, DispObjId{r[2]}});
  }
  for (const auto& r : records(doc, "hcomp_sq", {"s", "t", "st"})) {
    t.hcomp_sq.push_back({DispMorId{r[0]}, DispMorId{r[1]}, DispMorId{r[2]}});
  }
  t.lunitor = unitors(doc, "lunitor");
  t.runitor = unitors(doc, "runitor");
  for (const auto& r : records(doc, "associator", {"h1", "h2", "h3", "sq", "inv"})) {
    t.associator.push_back({DispObjId{r[0]}, DispObjId{r[1]}, DispObjId{r[2]}, {DispMorId{r[3]}, DispMorId{r[4]}}});
  }
  return std::make_shared<const DoubleCategory>(std::move(squares), std::move(t));
}

bool has_any(const json& doc, const std::set<std::string>& keys) {
  for (const auto& k : keys) {
    if (doc.contains(k)) return true;
  }
  return false;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Document parse_document(std::string_view text, std::optional<Level> level) {
  const json doc = parse_text(text);
  check_schema(doc);
  for (const auto& [k, _] : doc.items()) {
    if (!kCategoryKeys.count(k) && !kTwoSidedKeys.count(k) && !kDoubleKeys.count(k)) {
      fail("document", "unknown key \"" + k + "\"");
    }
  }
  if (!level) {
    level = has_any(doc, kDoubleKeys) ? Level::dbl : has_any(doc, kTwoSidedKeys) ? Level::twosided : Level::category;
  }
  Document out;
  out.level = *level;
  out.category = read_category(doc);
  if (*level == Level::category) return out;
  out.twosided = read_twosided(doc, out.category);
  if (*level == Level::twosided) return out;
  out.dbl = read_double(doc, out.twosided);
  return out;
}

Document load_document(const std::filesystem::path& path, std::optional<Level> level) {
  return parse_document(read_file(path), level);
}

namespace {

json category_json(const FinCategory& c) {
  json doc;
  doc["schema"] = kSchema;
  doc["objects"] = c.object_count();
  json mors = json::array();
  for (const auto& a : c.morphisms()) mors.push_back({{"src", a.src.v}, {"tgt", a.tgt.v}});
  doc["morphisms"] = std::move(mors);
  json ids = json::array();
  for (auto i : c.identities()) ids.push_back(i.v);
  doc["id"] = std::move(ids);
  json comp = json::array();
  for (const auto& e : c.comp_entries()) comp.push_back({{"f", e.f.v}, {"g", e.g.v}, {"fg", e.fg.v}});
  doc["comp"] = std::move(comp);
  return doc;
}

void add_twosided(json& doc, const TwoSidedDispCat& d) {
  json objs = json::array();
  for (std::size_t i = 0; i < d.objects().size();) {
    std::size_t j = i;
    while (j < d.objects().size() && d.objects()[j] == d.objects()[i]) ++j;
    objs.push_back({{"x1", d.objects()[i].x1.v}, {"x2", d.objects()[i].x2.v}, {"count", j - i}});
    i = j;
  }
  doc["disp_objects"] = std::move(objs);
  json mors = json::array();
  for (std::size_t i = 0; i < d.morphisms().size();) {
    std::size_t j = i;
    while (j < d.morphisms().size() && d.morphisms()[j] == d.morphisms()[i]) ++j;
    const auto& m = d.morphisms()[i];
    mors.push_back({{"f1", m.f1.v}, {"f2", m.f2.v}, {"src", m.src.v}, {"tgt", m.tgt.v}, {"count", j - i}});
    i = j;
  }
  doc["disp_morphisms"] = std::move(mors);
  json ids = json::array();
  for (auto i : d.identities()) ids.push_back(i.v);
  doc["disp_id"] = std::move(ids);
  json comp = json::array();
  for (const auto& e : d.comp_entries()) comp.push_back({{"f", e.f.v}, {"g", e.g.v}, {"fg", e.fg.v}});
  doc["disp_comp"] = std::move(comp);
}

json unitor_json(const std::vector<UnitorEntry>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({{"h", e.h.v}, {"sq", e.cell.sq.v}, {"inv", e.cell.inv.v}});
  return out;
}

}  // namespace

std::string to_json(const FinCategory& c) { return category_json(c).dump() + "\n"; }

std::string to_json(const TwoSidedDispCat& d) {
  json doc = category_json(d.base1());
  add_twosided(doc, d);
  return doc.dump() + "\n";
}

std::string to_json(const DoubleCategory& D) {
  json doc = category_json(D.vertical());
  add_twosided(doc, D.squares());
  const DoubleTables& t = D.tables();
  json hid = json::array();
  for (auto h : t.hid_obj) hid.push_back(h.v);
  doc["hid_obj"] = std::move(hid);
  json hsq = json::array();
  for (auto s : t.hid_sq) hsq.push_back(s.v);
  doc["hid_sq"] = std::move(hsq);
  json hc = json::array();
  for (const auto& e : t.hcomp_obj) hc.push_back({{"h", e.h.v}, {"k", e.k.v}, {"hk", e.hk.v}});
  doc["hcomp_obj"] = std::move(hc);
  json hs = json::array();
  for (const auto& e : t.hcomp_sq) hs.push_back({{"s", e.s.v}, {"t", e.t.v}, {"st", e.st.v}});
  doc["hcomp_sq"] = std::move(hs);
  doc["lunitor"] = unitor_json(t.lunitor);
  doc["runitor"] = unitor_json(t.runitor);
  json as = json::array();
  for (const auto& e : t.associator) {
    as.push_back({{"h1", e.h1.v}, {"h2", e.h2.v}, {"h3", e.h3.v}, {"sq", e.cell.sq.v}, {"inv", e.cell.inv.v}});
  }
  doc["associator"] = std::move(as);
  return doc.dump() + "\n";
}

LaxDoubleFunctor parse_functor(std::string_view text, const std::filesystem::path& base_dir) {
  const json doc = parse_text(text);
  check_schema(doc);
  for (const auto& [k, _] : doc.items()) {
    if (!kFunctorKeys.count(k)) fail("document", "unknown key \"" + k + "\"");
  }
  auto path_of = [&](const std::string& name) {
    const json& v = key(doc, name, "document");
    if (!v.is_string()) fail(name, "expected a path string");
    std::filesystem::path p = v.get<std::string>();
    return p.is_absolute() ? p : base_dir / p;
  };
  Document dom = load_document(path_of("dom"), Level::dbl);
  Document cod = load_document(path_of("cod"), Level::dbl);
  std::vector<MorId> on_mor = id_list<MorId>(doc, "on_mor");
  FinFunctor v{dom.category, cod.category, id_list<ObjId>(doc, "on_obj"), std::move(on_mor)};
  std::vector<ComparisonEntry> cc;
  for (const auto& r : records(doc, "comp_comparison", {"h", "k", "sq"})) {
    cc.push_back({DispObjId{r[0]}, DispObjId{r[1]}, DispMorId{r[2]}});
  }
  return LaxDoubleFunctor(dom.dbl, cod.dbl, std::move(v), id_list<DispObjId>(doc, "on_disp_obj"),
                          id_list<DispMorId>(doc, "on_disp_mor"), id_list<DispMorId>(doc, "id_comparison"),
                          std::move(cc));
}

LaxDoubleFunctor load_functor(const std::filesystem::path& path) {
  return parse_functor(read_file(path), path.parent_path());
}

std::string to_json(const LaxDoubleFunctor& f, const std::string& dom_path, const std::string& cod_path) {
  json doc;
  doc["schema"] = kSchema;
  doc["dom"] = dom_path;
  doc["cod"] = cod_path;
  json a = json::array();
  for (auto x : f.vertical().on_obj) a.push_back(x.v);
  doc["on_obj"] = std::move(a);
  json b = json::array();
  for (auto m : f.vertical().on_mor) b.push_back(m.v);
  doc["on_mor"] = std::move(b);
  json c = json::array();
  for (auto h : f.on_hor()) c.push_back(h.v);
  doc["on_disp_obj"] = std::move(c);
  json d = json::array();
  for (auto s : f.on_sq()) d.push_back(s.v);
  doc["on_disp_mor"] = std::move(d);
  json e = json::array();
  for (auto s : f.id_comparison()) e.push_back(s.v);
  doc["id_comparison"] = std::move(e);
  json cc = json::array();
  for (const auto& x : f.comp_comparison()) cc.push_back({{"h", x.h.v}, {"k", x.k.v}, {"sq", x.sq.v}});
  doc["comp_comparison"] = std::move(cc);
  return doc.dump() + "\n";
}

std::string report_to_json(const LawReport& r) {
  json doc;
  doc["schema"] = kSchema;
  doc["ok"] = r.empty();
  doc["failures"] = r.failure_count();
  json laws = json::array();
  for (const auto& t : r.tallies()) {
    laws.push_back({{"law", t.name}, {"checked", t.checked}, {"failed", t.failed}, {"skipped", t.skipped}});
  }
  doc["laws"] = std::move(laws);
  json vs = json::array();
  for (const auto& v : r.sorted_violations()) {
    vs.push_back({{"law", v.law},
                  {"witness", v.witness},
                  {"kind", v.kind == FailureKind::Boundary ? "boundary" : "law"},
                  {"detail", v.detail}});
  }
  doc["violations"] = std::move(vs);
  return doc.dump(2) + "\n";
}

std::string verdict_to_json(std::string_view subject, const Verdict& v) {
  json doc;
  doc["schema"] = kSchema;
  doc["question"] = subject;
  doc["holds"] = v.holds;
  if (!v.holds) {
    doc["clause"] = v.clause;
    doc["witness"] = v.witness;
    doc["detail"] = v.detail;
  }
  return doc.dump(2) + "\n";
}

}  // namespace dblcat
