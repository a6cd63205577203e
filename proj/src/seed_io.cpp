#include "clusterseed/seed_io.hpp"

#include <map>
#include <sstream>

namespace clusterseed {

using nlohmann::json;

namespace {

const char* role_name(Role r)
{
  switch (r) {
  case Role::Face: return "face";
  case Role::Edge: return "edge";
  case Role::Diagonal: return "diagonal";
  }
  return "?";
}

Role role_from(const std::string& s)
{
  if (s == "face")
    return Role::Face;
  if (s == "edge")
    return Role::Edge;
  if (s == "diagonal")
    return Role::Diagonal;
  throw SeedError("unknown role '" + s + "'");
}

struct LabelTable {
  std::map<const Label*, int> ids;
  json rows = json::array();

  int add(const LabelPtr& l)
  {
    if (auto it = ids.find(l.get()); it != ids.end())
      return it->second;
    json row;
    if (l->kind == Label::Kind::Atomic) {
      row["atomic"] = l->descriptor;
      if (l->node >= 0) {
        row["node"] = l->node;
        row["occurrence"] = l->occurrence;
        row["prefix"] = l->prefix;
      }
      if (!l->flag_order.empty()) {
        row["flags"] = l->flag_order;
        row["degrees"] = l->degrees;
      }
      if (l->sign_ambiguous)
        row["sign_ambiguous"] = true;
    } else {
      auto mono = [&](const Monomial& m) {
        json a = json::array();
        for (const auto& [x, e] : m)
          a.push_back({add(x), e});
        return a;
      };
      row["exchange"] = l->vertex;
      row["plus"] = mono(l->plus);
      row["minus"] = mono(l->minus);
      row["den"] = add(l->denominator);
    }
    int id = static_cast<int>(rows.size());
    rows.push_back(row);
    ids[l.get()] = id;
    return id;
  }
};

} // namespace

json seed_to_json(const Seed& s, const RootDatum* rd)
{
  json j;
  if (rd)
    j["kind"] = rd->kind_name();
  LabelTable labels;
  json vs = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex& x = s.v[i];
    json jv;
    jv["id"] = i;
    jv["name"] = x.name;
    jv["tag"] = {{"node", x.tag.node},
                 {"occurrence", x.tag.occurrence},
                 {"role", role_name(x.tag.role)},
                 {"triangle", x.tag.triangle}};
    jv["frozen"] = x.frozen;
    jv["d"] = x.d;
    json ws = json::array();
    for (const auto& w : x.weights) {
      json coords = json::array();
      for (const auto& c : w)
        coords.push_back(c.get_str());
      ws.push_back(coords);
    }
    jv["weights"] = ws;
    if (x.label)
      jv["label"] = labels.add(x.label);
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  j["b2"] = s.b2;
  j["labels"] = labels.rows;
  return j;
}

std::string seed_kind(const json& j) { return j.value("kind", std::string()); }

Seed seed_from_json(const json& j)
{
  Seed s;
  std::vector<LabelPtr> labels;
  if (j.contains("labels")) {
    for (const auto& row : j.at("labels")) {
      if (row.contains("atomic")) {
        LabelPtr l;
        if (row.contains("flags"))
          l = make_wedge(row.at("atomic").get<std::string>(), row.at("flags").get<std::vector<int>>(),
                         row.at("degrees").get<std::vector<int>>());
        else
          l = make_atomic(row.at("atomic").get<std::string>(), row.value("node", -1),
                          row.value("occurrence", -1), row.value("prefix", Word{}));
        if (row.value("sign_ambiguous", false)) {
          auto c = std::make_shared<Label>(*l);
          c->sign_ambiguous = true;
          l = c;
        }
        if (row.contains("flags") && row.contains("node")) {
          auto c = std::make_shared<Label>(*l);
          c->node = row.at("node");
          c->occurrence = row.at("occurrence");
          c->prefix = row.at("prefix").get<Word>();
          l = c;
        }
        labels.push_back(l);
      } else {
        auto mono = [&](const json& a) {
          Monomial m;
          for (const auto& p : a)
            m.emplace_back(labels.at(p.at(0).get<std::size_t>()), p.at(1).get<int>());
          return m;
        };
        labels.push_back(make_exchange(row.at("exchange").get<std::string>(), mono(row.at("plus")),
                                       mono(row.at("minus")), labels.at(row.at("den").get<std::size_t>())));
      }
    }
  }
  for (const auto& jv : j.at("vertices")) {
    Vertex x;
    x.name = jv.at("name").get<std::string>();
    if (jv.contains("tag")) {
      const auto& t = jv.at("tag");
      x.tag.node = t.value("node", -1);
      x.tag.occurrence = t.value("occurrence", -1);
      x.tag.role = role_from(t.value("role", std::string("face")));
      x.tag.triangle = t.value("triangle", -1);
    }
    x.frozen = jv.value("frozen", false);
    x.d = jv.value("d", 1);
    for (const auto& w : jv.value("weights", json::array())) {
      Weight wt;
      for (const auto& c : w)
        wt.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
      x.weights.push_back(wt);
    }
    if (jv.contains("label"))
      x.label = labels.at(jv.at("label").get<std::size_t>());
    s.v.push_back(std::move(x));
  }
  s.b2 = j.at("b2").get<std::vector<std::vector<int>>>();
  check_invariants(s);
  return s;
}

std::string format_weights(const RootDatum& rd, const std::vector<Weight>& ws)
{
  std::string out;
  for (std::size_t p = 0; p < ws.size(); ++p) {
    if (p)
      out += " | ";
    out += format_weight(rd, ws[p]);
  }
  return out;
}

std::string to_dot(const Seed& s, const RootDatum* rd)
{
  std::ostringstream os;
  os << "digraph seed {\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex& x = s.v[i];
    std::string label = x.name;
    if (rd && s.has_weights())
      label += "\\n" + format_weights(*rd, x.weights);
    os << "  v" << i << " [label=\"" << label << "\", shape=" << (x.d > 1 ? "circle" : "point")
       << (x.frozen ? ", style=dashed" : "") << "];\n";
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s.b2[i][j] <= 0)
        continue;
      // arrow j -> i
      int unit2 = 2 * arrow_unit(s.v[i].d, s.v[j].d);
      int full = s.b2[i][j] / unit2;
      bool half = s.b2[i][j] % unit2 != 0;
      for (int t = 0; t < full; ++t)
        os << "  v" << j << " -> v" << i << ";\n";
      if (half)
        os << "  v" << j << " -> v" << i << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_arrows(const Seed& s, const RootDatum* rd)
{
  std::ostringstream os;
  for (const auto& x : s.v) {
    os << "vertex " << x.name << " d=" << x.d << (x.frozen ? " frozen" : "");
    if (rd && !x.weights.empty())
      os << " : " << format_weights(*rd, x.weights);
    os << "\n";
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s.b2[i][j] <= 0)
        continue;
      int unit2 = 2 * arrow_unit(s.v[i].d, s.v[j].d);
      int full = s.b2[i][j] / unit2;
      int rest = s.b2[i][j] % unit2;
      for (int t = 0; t < full; ++t)
        os << s.v[j].name << " -> " << s.v[i].name << "\n";
      if (rest * 2 == unit2)
        os << s.v[j].name << " ~> " << s.v[i].name << "\n";
      else if (rest != 0)
        os << s.v[j].name << " -[" << s.b2[i][j] << "/2]-> " << s.v[i].name << "\n";
    }
  }
  return os.str();
}

} // namespace clusterseed
