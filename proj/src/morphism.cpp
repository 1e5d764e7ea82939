#include "comb/morphism.hpp"

#include <map>
#include <random>

#include "comb/error.hpp"

namespace comb {

namespace {

constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 24;

std::uint64_t table_size(const Object& domain) {
  auto n = domain.cardinality();
  if (n > kMaxTableEntries) {
    fail(ErrorKind::ResourceLimit,
         "domain " + domain.to_string() + " has " + std::to_string(n) +
             " elements; tables are limited to 2^24 rows");
  }
  return n;
}

std::string typing(const Morphism& f) {
  return f.domain().to_string() + " -> " + f.codomain().to_string();
}

void same_backend(const Morphism& a, const Morphism& b, const char* op) {
  if (a.backend() != b.backend()) {
    fail(ErrorKind::BackendMismatch,
         std::string(op) + " of a " + std::string(backend_name(a.backend())) +
             " morphism with a " + std::string(backend_name(b.backend())) +
             " morphism");
  }
}

std::string tuple_text(std::span<const Integer> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].str();
  }
  return out + ")";
}

std::string row_text(const Object& cod, const StochRow& row) {
  std::string out = "{";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += cod.element_name(row[i].first) + ":" + to_string(row[i].second);
  }
  return out + "}";
}

}  // namespace

std::vector<std::vector<Integer>> probe_points(std::size_t arity,
                                               const ProbeGrid& grid) {
  const long width = grid.high - grid.low + 1;
  if (width <= 0) fail(ErrorKind::Usage, "empty probe grid");
  // Count with saturation.
  std::uint64_t count = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < arity; ++i) {
    if (count > grid.max_points / static_cast<std::uint64_t>(width)) {
      exhaustive = false;
      break;
    }
    count *= static_cast<std::uint64_t>(width);
  }
  std::vector<std::vector<Integer>> points;
  if (exhaustive && count <= grid.max_points) {
    points.reserve(count);
    std::vector<long> digits(arity, grid.low);
    for (std::uint64_t p = 0; p < count; ++p) {
      points.emplace_back(digits.begin(), digits.end());
      for (std::size_t k = arity; k-- > 0;) {
        if (++digits[k] <= grid.high) break;
        digits[k] = grid.low;
      }
    }
    return points;
  }
  std::mt19937_64 rng(grid.seed ^ (0x9e3779b97f4a7c15ULL * (arity + 1)));
  std::uniform_int_distribution<long> dist(grid.low, grid.high);
  points.reserve(grid.max_points);
  for (std::size_t p = 0; p < grid.max_points; ++p) {
    std::vector<Integer> point(arity);
    for (auto& v : point) v = dist(rng);
    points.push_back(std::move(point));
  }
  return points;
}

Morphism::Morphism()
    : payload_(std::make_shared<const Payload>(std::vector<std::uint64_t>{0})) {}

Morphism::Morphism(Object domain, Object codomain,
                   std::shared_ptr<const Payload> p)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      payload_(std::move(p)) {}

Morphism Morphism::table(Object domain, Object codomain,
                         std::vector<std::uint64_t> image) {
  if (domain.backend() != Backend::FinFn || codomain.backend() != Backend::FinFn) {
    fail(ErrorKind::BackendMismatch, "function tables live in finfn");
  }
  if (image.size() != table_size(domain)) {
    fail(ErrorKind::Type, "table for " + domain.to_string() + " -> " +
                              codomain.to_string() + " needs " +
                              std::to_string(domain.cardinality()) +
                              " entries, got " + std::to_string(image.size()));
  }
  const auto n = codomain.cardinality();
  for (auto v : image) {
    if (v >= n) {
      fail(ErrorKind::Type, "table entry out of range for " + codomain.to_string());
    }
  }
  return Morphism(std::move(domain), std::move(codomain),
                  std::make_shared<const Payload>(std::move(image)));
}

Morphism Morphism::from_function(
    Object domain, Object codomain,
    const std::function<std::uint64_t(std::uint64_t)>& fn) {
  std::vector<std::uint64_t> image(table_size(domain));
  for (std::uint64_t i = 0; i < image.size(); ++i) image[i] = fn(i);
  if (domain.backend() == Backend::FinStoch) {
    return deterministic(std::move(domain), std::move(codomain), image);
  }
  return table(std::move(domain), std::move(codomain), std::move(image));
}

Morphism Morphism::stochastic(Object domain, Object codomain,
                              std::vector<StochRow> rows) {
  if (domain.backend() != Backend::FinStoch ||
      codomain.backend() != Backend::FinStoch) {
    fail(ErrorKind::BackendMismatch, "stochastic matrices live in finstoch");
  }
  if (rows.size() != table_size(domain)) {
    fail(ErrorKind::Type, "matrix for " + domain.to_string() + " -> " +
                              codomain.to_string() + " needs " +
                              std::to_string(domain.cardinality()) + " rows");
  }
  const auto n = codomain.cardinality();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational sum = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].first >= n) fail(ErrorKind::Type, "matrix column out of range");
      if (k && row[k].first == row[k - 1].first) {
        fail(ErrorKind::Type, "matrix row " + domain.element_name(r) +
                                  " lists a column twice");
      }
      if (row[k].second < 0) {
        fail(ErrorKind::Type, "negative probability in row " + domain.element_name(r));
      }
      sum += row[k].second;
    }
    if (sum != 1) {
      fail(ErrorKind::Type, "row " + domain.element_name(r) + " of " +
                                domain.to_string() + " -> " + codomain.to_string() +
                                " sums to " + comb::to_string(sum) + ", not 1");
    }
  }
  return Morphism(std::move(domain), std::move(codomain),
                  std::make_shared<const Payload>(std::move(rows)));
}

Morphism Morphism::deterministic(Object domain, Object codomain,
                                 std::span<const std::uint64_t> image) {
  std::vector<StochRow> rows(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    rows[i].emplace_back(image[i], Rational(1));
  }
  return stochastic(std::move(domain), std::move(codomain), std::move(rows));
}

Morphism Morphism::big(bigfn::Expr expr) {
  auto dom = Object::integers(expr->domain);
  auto cod = Object::integers(expr->codomain);
  return Morphism(std::move(dom), std::move(cod),
                  std::make_shared<const Payload>(std::move(expr)));
}

const std::vector<std::uint64_t>& Morphism::image() const {
  if (auto* p = std::get_if<std::vector<std::uint64_t>>(payload_.get())) return *p;
  fail(ErrorKind::Unsupported, "not a finfn morphism");
}

const std::vector<StochRow>& Morphism::rows() const {
  if (auto* p = std::get_if<std::vector<StochRow>>(payload_.get())) return *p;
  fail(ErrorKind::Unsupported, "not a finstoch morphism");
}

const bigfn::Expr& Morphism::expr() const {
  if (auto* p = std::get_if<bigfn::Expr>(payload_.get())) return *p;
  fail(ErrorKind::Unsupported, "not a bigfn morphism");
}

std::uint64_t Morphism::apply(std::uint64_t element) const {
  return image().at(element);
}

const StochRow& Morphism::row(std::uint64_t element) const {
  return rows().at(element);
}

std::vector<Integer> Morphism::apply(std::span<const Integer> input) const {
  return bigfn::evaluate(*expr(), input);
}

std::string Morphism::to_string() const {
  switch (backend()) {
    case Backend::BigFn: return bigfn::print(*expr());
    case Backend::FinFn: {
      std::string out = "{";
      const auto& img = image();
      for (std::uint64_t i = 0; i < img.size(); ++i) {
        if (i) out += ", ";
        out += domain_.element_name(i) + " -> " + codomain_.element_name(img[i]);
      }
      return out + "}";
    }
    case Backend::FinStoch: {
      std::string out = "{";
      const auto& rs = rows();
      for (std::uint64_t i = 0; i < rs.size(); ++i) {
        if (i) out += "; ";
        out += domain_.element_name(i) + " -> " + row_text(codomain_, rs[i]);
      }
      return out + "}";
    }
  }
  return {};
}

bool equal(const Morphism& a, const Morphism& b, const ProbeGrid& grid) {
  return !first_difference(a, b, grid).has_value();
}

std::optional<std::string> first_difference(const Morphism& a,
                                            const Morphism& b,
                                            const ProbeGrid& grid) {
  if (a.backend() != b.backend()) return "backends differ";
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    return "typings differ: " + typing(a) + " vs " + typing(b);
  }
  switch (a.backend()) {
    case Backend::FinFn: {
      const auto& x = a.image();
      const auto& y = b.image();
      if (&x == &y) return std::nullopt;
      for (std::uint64_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
          return "input " + a.domain().element_name(i) + ": " +
                 a.codomain().element_name(x[i]) + " vs " +
                 a.codomain().element_name(y[i]);
        }
      }
      return std::nullopt;
    }
    case Backend::FinStoch: {
      const auto& x = a.rows();
      const auto& y = b.rows();
      if (&x == &y) return std::nullopt;
      for (std::uint64_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
          return "input " + a.domain().element_name(i) + ": " +
                 row_text(a.codomain(), x[i]) + " vs " +
                 row_text(a.codomain(), y[i]);
        }
      }
      return std::nullopt;
    }
    case Backend::BigFn: {
      if (a.expr() == b.expr()) return std::nullopt;
      for (const auto& p : probe_points(a.domain().arity(), grid)) {
        auto u = a.apply(p);
        auto v = b.apply(p);
        if (u != v) {
          return "input " + tuple_text(p) + ": " + tuple_text(u) + " vs " +
                 tuple_text(v);
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  same_backend(g, f, "composition");
  if (!(f.codomain() == g.domain())) {
    fail(ErrorKind::Type, "cannot compose: codomain " + f.codomain().to_string() +
                              " of the first map does not match domain " +
                              g.domain().to_string() + " of the second");
  }
  switch (f.backend()) {
    case Backend::FinFn: {
      const auto& fi = f.image();
      const auto& gi = g.image();
      std::vector<std::uint64_t> out(fi.size());
      for (std::size_t i = 0; i < fi.size(); ++i) out[i] = gi[fi[i]];
      return Morphism::table(f.domain(), g.codomain(), std::move(out));
    }
    case Backend::FinStoch: {
      const auto& fr = f.rows();
      std::vector<StochRow> out(fr.size());
      std::map<std::uint64_t, Rational> acc;
      for (std::size_t i = 0; i < fr.size(); ++i) {
        if (fr[i].size() == 1) {
          out[i] = g.row(fr[i].front().first);
          continue;
        }
        acc.clear();
        for (const auto& [k, p] : fr[i]) {
          for (const auto& [j, q] : g.row(k)) acc[j] += p * q;
        }
        out[i].assign(acc.begin(), acc.end());
      }
      return Morphism::stochastic(f.domain(), g.codomain(), std::move(out));
    }
    case Backend::BigFn:
      return Morphism::big(bigfn::compose(g.expr(), f.expr()));
  }
  fail(ErrorKind::Unsupported, "unknown backend");
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  same_backend(f, g, "tensor");
  switch (f.backend()) {
    case Backend::FinFn: {
      auto dom = tensor(f.domain(), g.domain());
      auto cod = tensor(f.codomain(), g.codomain());
      const auto& fi = f.image();
      const auto& gi = g.image();
      const auto gc = g.codomain().cardinality();
      std::vector<std::uint64_t> out;
      out.reserve(table_size(dom));
      for (auto a : fi) {
        for (auto b : gi) out.push_back(a * gc + b);
      }
      return Morphism::table(std::move(dom), std::move(cod), std::move(out));
    }
    case Backend::FinStoch: {
      auto dom = tensor(f.domain(), g.domain());
      auto cod = tensor(f.codomain(), g.codomain());
      const auto gc = g.codomain().cardinality();
      std::vector<StochRow> out;
      out.reserve(table_size(dom));
      for (const auto& fr : f.rows()) {
        for (const auto& gr : g.rows()) {
          StochRow row;
          row.reserve(fr.size() * gr.size());
          for (const auto& [a, p] : fr) {
            for (const auto& [b, q] : gr) row.emplace_back(a * gc + b, p * q);
          }
          out.push_back(std::move(row));
        }
      }
      return Morphism::stochastic(std::move(dom), std::move(cod), std::move(out));
    }
    case Backend::BigFn:
      return Morphism::big(bigfn::tensor(f.expr(), g.expr()));
  }
  fail(ErrorKind::Unsupported, "unknown backend");
}

Morphism identity(const Object& x) {
  if (x.backend() == Backend::BigFn) return Morphism::big(bigfn::id(x.arity()));
  return Morphism::from_function(x, x, [](std::uint64_t i) { return i; });
}

Morphism swap(const Object& x, const Object& y) {
  if (x.backend() != y.backend()) {
    fail(ErrorKind::BackendMismatch, "swap across backends");
  }
  if (x.backend() == Backend::BigFn) {
    return Morphism::big(bigfn::swap(x.arity(), y.arity()));
  }
  const auto nx = x.cardinality();
  const auto ny = y.cardinality();
  return Morphism::from_function(tensor(x, y), tensor(y, x), [=](std::uint64_t i) {
    return (i % ny) * nx + i / ny;
  });
}

Morphism copy(const Object& x) {
  switch (x.backend()) {
    case Backend::FinStoch:
      fail(ErrorKind::Unsupported,
           "finstoch is semicartesian: copying is not a natural structure there");
    case Backend::BigFn: return Morphism::big(bigfn::copy(x.arity()));
    case Backend::FinFn: {
      const auto n = x.cardinality();
      return Morphism::from_function(x, tensor(x, x),
                                     [=](std::uint64_t i) { return i * n + i; });
    }
  }
  fail(ErrorKind::Unsupported, "unknown backend");
}

Morphism discard(const Object& x) {
  if (x.backend() == Backend::BigFn) return Morphism::big(bigfn::discard(x.arity()));
  return Morphism::from_function(x, Object::unit(x.backend()),
                                 [](std::uint64_t) { return std::uint64_t{0}; });
}

Morphism apply_to_state(const Morphism& f, const Morphism& s) {
  if (!s.domain().is_unit()) {
    fail(ErrorKind::Type, "a state must have the unit as domain, got " +
                              s.domain().to_string());
  }
  return compose(f, s);
}

Morphism compose_chain(std::initializer_list<Morphism> in_order) {
  if (in_order.size() == 0) fail(ErrorKind::Usage, "empty composition chain");
  auto it = in_order.begin();
  Morphism out = *it;
  for (++it; it != in_order.end(); ++it) out = compose(*it, out);
  return out;
}

Morphism project_left(const Object& left, const Object& right) {
  return tensor(identity(left), discard(right));
}

Morphism project_right(const Object& left, const Object& right) {
  return tensor(discard(left), identity(right));
}

Morphism pair(const Morphism& f, const Morphism& g) {
  if (!(f.domain() == g.domain())) {
    fail(ErrorKind::Type, "pairing needs a common domain: " +
                              f.domain().to_string() + " vs " + g.domain().to_string());
  }
  return compose(tensor(f, g), copy(f.domain()));
}

bool is_row_stochastic(const Morphism& f) {
  if (f.backend() != Backend::FinStoch) return false;
  for (const auto& row : f.rows()) {
    Rational sum = 0;
    for (const auto& [c, p] : row) {
      if (p < 0) return false;
      sum += p;
    }
    if (sum != 1) return false;
  }
  return true;
}

}  // namespace comb
