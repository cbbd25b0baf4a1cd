#include "pbr/json_io.hpp"

#include <limits>

namespace pbr {

Json json_int(const Int &v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

std::vector<std::string> subgroup_generator_strings(const Subgroup &h) {
  const Group &g = *h.parent();
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(h.parent());
  for (int e : h.elems()) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    std::vector<int> seed = gens;
    span = subgroup_closure(h.parent(), seed);
    if (span.order() == h.order()) break;
  }
  std::vector<std::string> out;
  for (int e : gens) out.push_back(g.element(e).cycle_string());
  if (out.empty()) out.push_back("()");
  return out;
}

Json json_group(const GroupPtr &g) {
  Json j;
  j["spec"] = g->spec().empty() ? Json(nullptr) : Json(g->spec());
  j["order"] = g->order();
  j["degree"] = g->degree();
  return j;
}

Json json_lattice(const SubgroupLattice &lattice) {
  Json subs = Json::array();
  for (int i = 0; i < lattice.subgroup_count(); ++i) {
    const Subgroup &h = lattice.subgroup(i);
    Json s;
    s["id"] = i;
    s["order"] = h.order();
    s["index"] = h.index();
    s["normal"] = lattice.subgroup_is_normal(i);
    s["class"] = lattice.class_of_subgroup(i);
    s["generators"] = subgroup_generator_strings(h);
    subs.push_back(std::move(s));
  }
  Json classes = Json::array();
  for (int c = 0; c < lattice.class_count(); ++c) {
    Json k;
    k["id"] = c;
    k["label"] = class_label(lattice, c);
    k["order"] = lattice.class_order(c);
    k["size"] = lattice.class_size(c);
    k["normal"] = lattice.class_is_normal(c);
    k["members"] = lattice.class_members(c);
    classes.push_back(std::move(k));
  }
  Json j;
  j["subgroups"] = std::move(subs);
  j["classes"] = std::move(classes);
  return j;
}

Json json_collection(const Collection &d, const std::string &spec) {
  const SubgroupLattice &lat = *d.lattice();
  Json classes = Json::array();
  for (int c : d.class_ids()) {
    Json k;
    k["id"] = c;
    k["label"] = class_label(lat, c);
    k["order"] = lat.class_order(c);
    k["size"] = lat.class_size(c);
    k["normal"] = lat.class_is_normal(c);
    classes.push_back(std::move(k));
  }
  Json j;
  j["spec"] = spec.empty() ? Json(nullptr) : Json(spec);
  j["is_collection"] = d.is_collection();
  j["classes"] = std::move(classes);
  return j;
}

Json json_mark_matrix(const MarkMatrix &m) {
  const SubgroupLattice &lat = *m.family.lattice();
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(json_int(m.entries[i][j]));
    rows.push_back(std::move(row));
  }
  Json classes = Json::array();
  for (int c : m.family.class_ids()) {
    Json k;
    k["label"] = class_label(lat, c);
    k["order"] = lat.class_order(c);
    k["size"] = lat.class_size(c);
    k["normal"] = lat.class_is_normal(c);
    k["generators"] = subgroup_generator_strings(lat.class_rep(c));
    classes.push_back(std::move(k));
  }
  Json j;
  j["classes"] = std::move(classes);
  j["rows"] = std::move(rows);
  j["det"] = json_int(m.det());
  return j;
}

Json json_element(const BurnsideElement &x) {
  Json coeffs = Json::array();
  for (const Int &c : x.coeffs) coeffs.push_back(json_int(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  j["display"] = x.to_string();
  return j;
}

Json json_unit_group(const UnitGroup &u) {
  const SubgroupLattice &lat = *u.family.lattice();
  Json j;
  j["order"] = json_int(u.order());
  j["rank"] = static_cast<int>(u.generators.size());
  Json labels = Json::array();
  for (int c : u.family.class_ids()) labels.push_back(class_label(lat, c));
  j["basis"] = std::move(labels);
  Json gens = Json::array();
  for (const BurnsideElement &g : u.generators) gens.push_back(json_element(g));
  j["generators"] = std::move(gens);
  Json units = Json::array();
  for (const BurnsideElement &x : u.all_units) units.push_back(json_element(x));
  j["units"] = std::move(units);
  return j;
}

Json json_ring_iso(const RingIso &iso) {
  const SubgroupLattice &slat = *iso.source.lattice();
  const SubgroupLattice &tlat = *iso.target.lattice();
  Json pairs = Json::array();
  for (int i = 0; i < iso.source.size(); ++i) {
    Json p;
    p["source"] = class_label(slat, iso.source.class_ids()[i]);
    p["target"] = class_label(tlat, iso.target.class_ids()[iso.class_map[i]]);
    pairs.push_back(std::move(p));
  }
  Json j;
  j["verified"] = iso.verified;
  j["classes"] = iso.source.size();
  j["class_map"] = std::move(pairs);
  return j;
}

Json json_fw_map(const FWMap &map) {
  Json j;
  j["cyclic_order"] = map.cyclic_source->order();
  j["source_classes"] = map.source.size();
  j["target_classes"] = map.target.size();
  Json rows = Json::array();
  for (const auto &row : map.matrix) {
    Json r = Json::array();
    for (const Int &v : row) r.push_back(json_int(v));
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Json json_check_report(const CheckReport &report) {
  Json j;
  j["claim"] = report.claim;
  j["status"] = to_string(report.status);
  if (!report.witness.empty()) j["witness"] = report.witness;
  Json values = Json::object();
  for (const auto &[k, v] : report.values) values[k] = v;
  j["computed_values"] = std::move(values);
  return j;
}

Json json_seminil(const SeminilResult &result) {
  Json j;
  j["value"] = result.value;
  Json fails = Json::array();
  for (const auto &f : result.certificate) {
    Json e;
    e["subgroup"] = f.subgroup_id;
    e["count"] = f.count;
    fails.push_back(std::move(e));
  }
  j["certificate"] = std::move(fails);
  return j;
}

} // namespace pbr
