#include "comb/serialize.hpp"

#include <limits>

#include "comb/dsl/parser.hpp"
#include "comb/error.hpp"

namespace comb {

namespace {

Json labels_json(const Object& o, std::uint64_t index) {
  Json out = Json::array();
  for (auto& l : o.element_labels(index)) out.push_back(l);
  return out;
}

std::vector<std::string> labels_from_json(const Json& j) {
  return j.get<std::vector<std::string>>();
}

Backend backend_from_json(const Json& j) {
  auto name = j.at("backend").get<std::string>();
  auto b = backend_from_name(name);
  if (!b) fail(ErrorKind::Syntax, "unknown backend '" + name + "'");
  return *b;
}

Json cartesian_point(const Object& o, std::uint64_t index) {
  auto labels = o.element_labels(index);
  if (labels.empty()) return "*";
  if (labels.size() == 1) return labels.front();
  return labels_json(o, index);
}

}  // namespace

Json to_json(const Rational& r) {
  Json j;
  j["num"] = numerator_string(r);
  j["den"] = denominator_string(r);
  return j;
}

Rational rational_from_json(const Json& j) {
  Integer num = parse_integer(j.at("num").get<std::string>());
  Integer den = parse_integer(j.at("den").get<std::string>());
  if (den <= 0) fail(ErrorKind::Syntax, "rational with non-positive denominator");
  return Rational(num, den);
}

Json to_json(const Integer& i) {
  if (i >= std::numeric_limits<std::int64_t>::min() &&
      i <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(i);
  }
  return i.str();
}

Json to_json(const Object& o) {
  Json j;
  j["backend"] = std::string(backend_name(o.backend()));
  if (!is_finite(o.backend())) {
    j["arity"] = o.arity();
    return j;
  }
  Json factors = Json::array();
  for (const auto& f : o.factors()) {
    Json set;
    set["name"] = f->name;
    set["labels"] = f->labels;
    factors.push_back(std::move(set));
  }
  j["factors"] = std::move(factors);
  return j;
}

Object object_from_json(const Json& j) {
  const auto backend = backend_from_json(j);
  if (!is_finite(backend)) return Object::integers(j.at("arity").get<std::size_t>());
  Object out = Object::unit(backend);
  for (const auto& f : j.at("factors")) {
    out = tensor(out, Object::finite(backend, f.at("name").get<std::string>(),
                                     labels_from_json(f.at("labels"))));
  }
  return out;
}

Json to_json(const Morphism& f) {
  Json j;
  j["backend"] = std::string(backend_name(f.backend()));
  j["domain"] = to_json(f.domain());
  j["codomain"] = to_json(f.codomain());
  switch (f.backend()) {
    case Backend::FinFn: {
      Json table = Json::array();
      const auto& image = f.image();
      for (std::uint64_t i = 0; i < image.size(); ++i) {
        table.push_back(Json::array({labels_json(f.domain(), i),
                                     labels_json(f.codomain(), image[i])}));
      }
      j["table"] = std::move(table);
      break;
    }
    case Backend::FinStoch: {
      Json matrix = Json::array();
      const auto& rows = f.rows();
      for (std::uint64_t i = 0; i < rows.size(); ++i) {
        for (const auto& [col, p] : rows[i]) {
          Json entry;
          entry["row"] = labels_json(f.domain(), i);
          entry["col"] = labels_json(f.codomain(), col);
          entry["p"] = to_json(p);
          matrix.push_back(std::move(entry));
        }
      }
      j["matrix"] = std::move(matrix);
      break;
    }
    case Backend::BigFn:
      j["term"] = f.to_string();
      break;
  }
  return j;
}

Morphism morphism_from_json(const Json& j) {
  const auto backend = backend_from_json(j);
  if (backend == Backend::BigFn) {
    auto f = Morphism::big(dsl::parse_bigfn_term(j.at("term").get<std::string>()));
    if (!(f.domain() == object_from_json(j.at("domain"))) ||
        !(f.codomain() == object_from_json(j.at("codomain")))) {
      fail(ErrorKind::Type, "bigfn term does not match its declared typing");
    }
    return f;
  }
  auto dom = object_from_json(j.at("domain"));
  auto cod = object_from_json(j.at("codomain"));
  if (backend == Backend::FinFn) {
    std::vector<std::uint64_t> image(dom.cardinality(), std::numeric_limits<std::uint64_t>::max());
    for (const auto& entry : j.at("table")) {
      auto in = dom.element_index(labels_from_json(entry.at(0)));
      image[in] = cod.element_index(labels_from_json(entry.at(1)));
    }
    for (auto v : image) {
      if (v == std::numeric_limits<std::uint64_t>::max()) {
        fail(ErrorKind::Type, "function table is not total");
      }
    }
    return Morphism::table(std::move(dom), std::move(cod), std::move(image));
  }
  std::vector<StochRow> rows(dom.cardinality());
  for (const auto& entry : j.at("matrix")) {
    auto r = dom.element_index(labels_from_json(entry.at("row")));
    auto c = cod.element_index(labels_from_json(entry.at("col")));
    rows[r].emplace_back(c, rational_from_json(entry.at("p")));
  }
  return Morphism::stochastic(std::move(dom), std::move(cod), std::move(rows));
}

Json to_json(const FiniteComb& c) {
  Json j;
  j["backend"] = std::string(backend_name(c.backend()));
  j["open"] = c.open();
  auto objects = [](const std::vector<Object>& os) {
    Json arr = Json::array();
    for (const auto& o : os) arr.push_back(to_json(o));
    return arr;
  };
  j["inputs"] = objects(c.inputs());
  j["outputs"] = objects(c.outputs());
  j["memories"] = objects(c.memories());
  Json pieces = Json::array();
  for (const auto& p : c.pieces()) pieces.push_back(to_json(p));
  j["pieces"] = std::move(pieces);
  return j;
}

FiniteComb finite_comb_from_json(const Json& j) {
  auto objects = [](const Json& arr) {
    std::vector<Object> out;
    for (const auto& o : arr) out.push_back(object_from_json(o));
    return out;
  };
  std::vector<Morphism> pieces;
  for (const auto& p : j.at("pieces")) pieces.push_back(morphism_from_json(p));
  return FiniteComb::make(objects(j.at("inputs")), objects(j.at("outputs")),
                          objects(j.at("memories")), std::move(pieces),
                          j.at("open").get<bool>());
}

Json to_json(const FiniteCausalForm& cf) {
  Json j;
  j["backend"] = std::string(backend_name(cf.backend));
  Json stages = Json::array();
  for (std::size_t n = 0; n < cf.maps.size(); ++n) {
    Json s;
    s["stage"] = n;
    s["map"] = to_json(cf.maps[n]);
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  return j;
}

Json state_value_json(const Morphism& state) {
  if (!state.domain().is_unit()) fail(ErrorKind::Type, "not a state");
  if (state.backend() == Backend::BigFn) {
    auto values = state.apply(std::vector<Integer>{});
    if (values.size() == 1) return to_json(values.front());
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
  }
  return cartesian_point(state.codomain(), state.apply(0));
}

Json to_json(const StateFamily& sf) {
  Json out = Json::array();
  if (sf.backend != Backend::FinStoch) {
    for (std::size_t n = 0; n < sf.values.size(); ++n) {
      Json rec;
      rec["stage"] = n;
      rec["value"] = state_value_json(sf.values[n]);
      out.push_back(std::move(rec));
    }
    return out;
  }
  Object joint = Object::unit(Backend::FinStoch);
  for (std::size_t n = 0; n < sf.distributions.size(); ++n) {
    joint = tensor(joint, sf.outputs[n]);
    Json support = Json::array();
    for (const auto& [outcome, p] : sf.distributions[n]) {
      support.push_back(Json::array({labels_json(joint, outcome), to_json(p)}));
    }
    Json rec;
    rec["stage"] = n;
    rec["support"] = std::move(support);
    out.push_back(std::move(rec));
  }
  return out;
}

Json trace_json(const Behavior& b) {
  Json out = Json::array();
  if (b.backend == Backend::BigFn) {
    fail(ErrorKind::Unsupported, "bigfn traces need unit inputs; integer inputs are unbounded");
  }
  for (std::size_t n = 0; n < b.stages.size(); ++n) {
    const auto& h = b.stages[n];
    const auto rows = h.domain().cardinality();
    for (std::uint64_t i = 0; i < rows; ++i) {
      Json rec;
      rec["stage"] = n;
      rec["inputs"] = labels_json(h.domain(), i);
      if (b.backend == Backend::FinFn) {
        rec["outputs"] = labels_json(h.codomain(), h.apply(i));
      } else {
        Json support = Json::array();
        for (const auto& [outcome, p] : h.row(i)) {
          support.push_back(Json::array({labels_json(h.codomain(), outcome), to_json(p)}));
        }
        rec["joint_distribution"] = std::move(support);
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace comb
