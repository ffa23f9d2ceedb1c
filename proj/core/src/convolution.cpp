#include "starban/convolution.hpp"

#include <stdexcept>

namespace starban::convolution {

using starcomp::tensor_obj;

std::string to_string(const Card& c) {
  if (c.infinite) return "countable";
  return "finite:" + std::to_string(c.count);
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw std::overflow_error("factorial: 64-bit overflow above 20");
  std::uint64_t out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

GroupoidProfile braid_profile() {
  GroupoidProfile p;
  p.name = "braid";
  p.hom_card = [](std::size_t m, std::size_t n) {
    if (m != n) return Card::finite(0);
    if (n <= 1) return Card::finite(1);
    return Card::countable();
  };
  return p;
}

GroupoidProfile symmetric_profile() {
  GroupoidProfile p;
  p.name = "symmetric";
  p.hom_card = [](std::size_t m, std::size_t n) {
    if (m != n) return Card::finite(0);
    return Card::finite(factorial(n));
  };
  return p;
}

GroupoidProfile profile_by_name(const std::string& name) {
  if (name == "braid") return braid_profile();
  if (name == "symmetric") return symmetric_profile();
  throw std::invalid_argument("unknown groupoid profile: " + name);
}

CompletedObj DimFunctor::at(std::size_t degree) const {
  auto it = support.find(degree);
  return it == support.end() ? CompletedObj::fin(0) : it->second;
}

void DimFunctor::set(std::size_t degree, const CompletedObj& value) {
  if (value == CompletedObj::fin(0))
    support.erase(degree);
  else
    support[degree] = value;
}

std::size_t DimFunctor::top_degree() const {
  return support.empty() ? 0 : support.rbegin()->first;
}

std::string to_string(const DimFunctor& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [degree, obj] : f.support) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(degree) + " -> " + starcomp::to_string(obj);
  }
  return out + "}";
}

CompletedObj copower(const Card& c, const CompletedObj& d) {
  if (!c.infinite) {
    if (c.count == 0) return CompletedObj::fin(0);
    if (d.infinite) return CompletedObj::inf();
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(c.count, d.dim, &out))
      throw std::overflow_error("copower: dimension overflow");
    return CompletedObj::fin(out);
  }
  if (!d.infinite && d.dim == 0) return CompletedObj::fin(0);
  return CompletedObj::inf();
}

CompletedObj direct_sum(const CompletedObj& a, const CompletedObj& b) {
  if (a.infinite || b.infinite) return CompletedObj::inf();
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a.dim, b.dim, &out))
    throw std::overflow_error("direct_sum: dimension overflow");
  return CompletedObj::fin(out);
}

DimFunctor convolve(const DimFunctor& f, const DimFunctor& g,
                    const GroupoidProfile& p, std::size_t max_degree) {
  DimFunctor out;
  for (std::size_t l = 0; l <= max_degree; ++l) {
    CompletedObj acc = CompletedObj::fin(0);
    for (const auto& [m, fm] : f.support)
      for (const auto& [n, gn] : g.support)
        acc = direct_sum(acc, copower(p.hom_card(m + n, l), tensor_obj(fm, gn)));
    out.set(l, acc);
  }
  return out;
}

DimFunctor unit_functor(const GroupoidProfile& p, std::size_t max_degree) {
  DimFunctor out;
  for (std::size_t l = 0; l <= max_degree; ++l)
    out.set(l, copower(p.hom_card(0, l), CompletedObj::fin(1)));
  return out;
}

DimFunctor pointwise_tensor(const DimFunctor& f, const DimFunctor& g) {
  DimFunctor out;
  for (const auto& [degree, obj] : f.support)
    out.set(degree, tensor_obj(obj, g.at(degree)));
  return out;
}

}  // namespace starban::convolution
