#include "comb/delay_feedback.hpp"

#include "comb/error.hpp"

namespace comb {

ObjectFamily delay_family(const ObjectFamily& x) {
  std::vector<Object> prefix;
  prefix.reserve(x.prefix().size() + 1);
  prefix.push_back(Object::unit(x.backend()));
  prefix.insert(prefix.end(), x.prefix().begin(), x.prefix().end());
  return ObjectFamily(std::move(prefix), x.tail());
}

StreamComb delay_comb(const StreamComb& f) {
  const auto backend = f.backend();
  auto memory = [f, backend](std::size_t n) {
    return n == 0 ? Object::unit(backend) : f.memory(n - 1);
  };
  auto piece = [f, backend](std::size_t n) {
    return n == 0 ? identity(Object::unit(backend)) : f.piece(n - 1);
  };
  return StreamComb(delay_family(f.inputs()), delay_family(f.outputs()), memory, piece);
}

StreamComb feedback(const ObjectFamily& carrier, const ObjectFamily& passenger_in,
                    const ObjectFamily& passenger_out, const StreamComb& f) {
  if (carrier.backend() != f.backend()) {
    fail(ErrorKind::BackendMismatch, "feedback carrier lives in another backend");
  }
  const auto expected_in = tensor(delay_family(carrier), passenger_in);
  const auto expected_out = tensor(carrier, passenger_out);
  if (auto n = first_mismatch(f.inputs(), expected_in)) {
    fail(ErrorKind::FamilyShape,
         "feedback over " + carrier.to_string() + " needs inputs delay X (x) A; at index " +
             std::to_string(*n) + " the comb takes " + f.inputs()[*n].to_string() +
             " instead of " + expected_in[*n].to_string());
  }
  if (auto n = first_mismatch(f.outputs(), expected_out)) {
    fail(ErrorKind::FamilyShape,
         "feedback over " + carrier.to_string() + " needs outputs X (x) B; at index " +
             std::to_string(*n) + " the comb gives " + f.outputs()[*n].to_string() +
             " instead of " + expected_out[*n].to_string());
  }
  // Strict tensors make M_n (x) (delay X)_{n+1} (x) A_{n+1} literally the
  // domain M_n (x) X_n (x) A_{n+1} of the next piece, and f_0 already has
  // domain A_0, so every piece is reused as is.
  auto memory = [f, carrier](std::size_t n) { return tensor(f.memory(n), carrier[n]); };
  auto piece = [f](std::size_t n) { return f.piece(n); };
  return StreamComb(passenger_in, passenger_out, memory, piece);
}

StreamComb feedback(const ObjectFamily& carrier, const StreamComb& f) {
  auto a = strip_prefix(f.inputs(), delay_family(carrier));
  if (!a) {
    fail(ErrorKind::FamilyShape, "the input family " + f.inputs().to_string() +
                                     " does not factor as delay " + carrier.to_string() +
                                     " (x) A");
  }
  auto b = strip_prefix(f.outputs(), carrier);
  if (!b) {
    fail(ErrorKind::FamilyShape, "the output family " + f.outputs().to_string() +
                                     " does not factor as " + carrier.to_string() +
                                     " (x) B");
  }
  return feedback(carrier, *a, *b, f);
}

}  // namespace comb
