#include "orbitforge/rings.hpp"

#include <stdexcept>

namespace orbitforge {

std::string model_name(Model m) { return m == Model::rational ? "rat" : "trig"; }

Model parse_model(const std::string& s) {
  if (s == "rat" || s == "rational") return Model::rational;
  if (s == "trig" || s == "trigonometric") return Model::trig;
  throw std::invalid_argument("unknown model '" + s + "'");
}

namespace {

RingPtr with_params(std::vector<std::string> head, bool laurent) {
  for (const auto& p : parameter_names()) head.push_back(p);
  return make_ring(std::move(head), laurent);
}

}  // namespace

const RingPtr& coordinate_ring(Model m) {
  static const RingPtr x = with_params({"x1", "x2", "x3", "x4"}, false);
  static const RingPtr v = with_params({"v1", "v2", "v3", "v4"}, true);
  return m == Model::rational ? x : v;
}

const RingPtr& tau_ring(Model m) {
  static const RingPtr r = with_params({"t2", "t6", "t8", "t12"}, false);
  static const RingPtr t = with_params({"t1", "t2", "t3", "t4"}, false);
  return m == Model::rational ? r : t;
}

std::vector<std::size_t> parameter_indices(const RingPtr& ring) {
  std::vector<std::size_t> idx;
  for (const auto& p : parameter_names()) {
    if (auto i = ring->find(p)) idx.push_back(*i);
  }
  return idx;
}

}  // namespace orbitforge
