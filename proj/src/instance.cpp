#include "triding/instance.hpp"

#include <fstream>
#include <sstream>

namespace triding {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw InstanceError(2, what); }
[[noreturn]] void unresolved(const std::string& what) { throw InstanceError(4, what); }

Matrix parse_matrix(const PrimeField& f, const Json& j, std::size_t cols_if_empty,
                    const std::string& where) {
  auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
  try {
    return Matrix::from_rows(f, rows, cols_if_empty);
  } catch (const std::invalid_argument& e) {
    invalid(where + ": " + e.what());
  }
}

Side parse_side(const Json& j, const std::string& where) {
  const auto s = j.get<std::string>();
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw InstanceError(3, where + ": side must be \"left\" or \"right\"");
}

Algebra parse_algebra(const PrimeField& f, const Json& j, const std::string& name) {
  const std::string where = "algebra '" + name + "'";
  auto one = j.at("one").get<std::vector<std::int64_t>>();
  const std::size_t n = one.size();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != n)
    invalid(where + ": identity has " + std::to_string(n) + " coordinates, dim is " +
            std::to_string(j.at("dim").get<std::size_t>()));
  Vec onev(n);
  for (std::size_t i = 0; i < n; ++i) onev[i] = f.reduce(one[i]);
  if (j.contains("structure")) {
    auto c = j.at("structure").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    Vec flat(n * n * n, 0);
    if (c.size() != n) invalid(where + ": structure tensor has the wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i].size() != n) invalid(where + ": structure tensor has the wrong shape");
      for (std::size_t k = 0; k < n; ++k) {
        if (c[i][k].size() != n) invalid(where + ": structure tensor has the wrong shape");
        for (std::size_t l = 0; l < n; ++l) flat[(i * n + k) * n + l] = f.reduce(c[i][k][l]);
      }
    }
    return Algebra(f, n, std::move(flat), std::move(onev));
  }
  std::vector<Product> products;
  for (const auto& p : j.at("products")) {
    auto v = p.get<std::vector<std::int64_t>>();
    if (v.size() != 3 && v.size() != 4)
      throw InstanceError(3, where + ": a product is [i, j, k] or [i, j, k, coefficient]");
    for (std::size_t t = 0; t < 3; ++t)
      if (v[t] < 0 || static_cast<std::size_t>(v[t]) >= n)
        invalid(where + ": product index out of range");
    products.push_back({static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]),
                        static_cast<std::size_t>(v[2]), v.size() == 4 ? f.reduce(v[3]) : Scalar(1)});
  }
  return algebra_from_products(f, n, one, products);
}

std::vector<Matrix> parse_actions(const PrimeField& f, const Json& j, std::size_t count,
                                  std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != count)
    invalid(where + ": expected " + std::to_string(count) + " action matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    Matrix m = parse_matrix(f, j[i], dim, where);
    if (m.rows() != dim || m.cols() != dim)
      invalid(where + ": action matrix " + std::to_string(i) + " is not " + std::to_string(dim) +
              "x" + std::to_string(dim));
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t inferred_dim(const Json& j, const char* key) {
  if (j.contains("dim")) return j.at("dim").get<std::size_t>();
  if (j.contains(key) && !j.at(key).empty()) return j.at(key)[0].size();
  return 0;
}

}  // namespace

std::string Instance::ring_name(const RingPtr& r) const {
  for (const auto& n : rings.order)
    if (rings.at(n) == r) return n;
  return "?";
}

std::string Instance::algebra_name(const AlgebraPtr& a) const {
  for (const auto& n : algebras.order)
    if (algebras.at(n) == a) return n;
  for (const auto& n : rings.order)
    if (rings.at(n)->t == a) return n;
  return "?";
}

namespace {

class Loader {
 public:
  explicit Loader(const Json& doc) : doc_(doc) {}

  Instance load() {
    if (!doc_.is_object()) throw InstanceError(3, "instance file must be a JSON object");
    auto p = doc_.at("field").get<std::uint64_t>();
    if (!is_prime(p) || p >= (1u << 31)) invalid("field: " + std::to_string(p) + " is not a supported prime");
    inst_.field = PrimeField(p);
    section("algebras", [&](const std::string& n, const Json& j) { algebra(n, j); });
    section("bimodules", [&](const std::string& n, const Json& j) { bimodule(n, j); });
    section("rings", [&](const std::string& n, const Json& j) { ring(n, j); });
    section("modules", [&](const std::string& n, const Json& j) { module(n, j); });
    section("triples", [&](const std::string& n, const Json& j) { triple(n, j); });
    section("families", [&](const std::string& n, const Json& j) { family(n, j); });
    if (doc_.contains("tasks")) {
      if (!doc_.at("tasks").is_array()) throw InstanceError(3, "tasks must be an array");
      inst_.tasks = doc_.at("tasks");
    }
    return std::move(inst_);
  }

 private:
  template <typename F>
  void section(const char* key, F&& f) {
    if (!doc_.contains(key)) return;
    const Json& s = doc_.at(key);
    if (!s.is_object()) throw InstanceError(3, std::string(key) + " must be an object");
    for (const auto& [name, j] : s.items()) {
      if (!j.is_object())
        throw InstanceError(3, std::string(key) + " entry '" + name + "' must be an object");
      f(name, j);
    }
  }

  AlgebraPtr algebra_ref(const std::string& name, const std::string& where) {
    if (inst_.algebras.has(name)) return inst_.algebras.at(name);
    if (inst_.rings.has(name)) return inst_.rings.at(name)->t;
    unresolved(where + ": unknown algebra '" + name + "'");
  }

  void algebra(const std::string& name, const Json& j) {
    Algebra a = parse_algebra(inst_.field, j, name);
    if (auto v = a.validate()) invalid("algebra '" + name + "': " + *v);
    inst_.algebras.add(name, make_algebra(std::move(a)));
  }

  void bimodule(const std::string& name, const Json& j) {
    const std::string where = "bimodule '" + name + "'";
    if (j.contains("regular")) {
      inst_.bimodules.add(name, Bimodule::regular(algebra_ref(j.at("regular").get<std::string>(), where)));
      return;
    }
    AlgebraPtr b = algebra_ref(j.at("left").get<std::string>(), where);
    AlgebraPtr a = algebra_ref(j.at("right").get<std::string>(), where);
    const std::size_t dim = inferred_dim(j, "left_action");
    std::vector<Matrix> la, ra;
    if (dim == 0 && !j.contains("left_action")) {
      Bimodule z = Bimodule::zero(b, a);
      inst_.bimodules.add(name, std::move(z));
      return;
    }
    la = parse_actions(inst_.field, j.at("left_action"), b->dim(), dim, where + " left action");
    ra = parse_actions(inst_.field, j.at("right_action"), a->dim(), dim, where + " right action");
    Bimodule u(b, a, std::move(la), std::move(ra));
    if (auto v = u.validate()) invalid(where + ": " + *v);
    inst_.bimodules.add(name, std::move(u));
  }

  void ring(const std::string& name, const Json& j) {
    const std::string where = "ring '" + name + "'";
    AlgebraPtr a = algebra_ref(j.at("a").get<std::string>(), where);
    AlgebraPtr b = algebra_ref(j.at("b").get<std::string>(), where);
    const auto un = j.at("u").get<std::string>();
    if (!inst_.bimodules.has(un)) unresolved(where + ": unknown bimodule '" + un + "'");
    try {
      inst_.rings.add(name, build_ring(a, b, inst_.bimodules.at(un)));
    } catch (const std::invalid_argument& e) {
      invalid(where + ": " + e.what());
    }
  }

  const Module& module_ref(const std::string& name, const std::string& where) {
    if (!inst_.modules.has(name)) unresolved(where + ": unknown module '" + name + "'");
    return inst_.modules.at(name);
  }

  void module(const std::string& name, const Json& j) {
    const std::string where = "module '" + name + "'";
    if (j.contains("dual")) {
      inst_.modules.add(name, dual_module(module_ref(j.at("dual").get<std::string>(), where)));
      return;
    }
    if (j.contains("regular")) {
      AlgebraPtr alg = algebra_ref(j.at("regular").get<std::string>(), where);
      inst_.modules.add(name, Module::regular(alg, parse_side(j.at("side"), where)));
      return;
    }
    AlgebraPtr alg = algebra_ref(j.at("algebra").get<std::string>(), where);
    Side side = parse_side(j.at("side"), where);
    const std::size_t dim = inferred_dim(j, "action");
    if (!j.contains("action")) {
      if (dim != 0) invalid(where + ": action matrices missing");
      inst_.modules.add(name, Module::zero(alg, side));
      return;
    }
    Module m(alg, side, parse_actions(inst_.field, j.at("action"), alg->dim(), dim, where));
    if (auto v = m.validate()) invalid(where + ": " + *v);
    inst_.modules.add(name, std::move(m));
  }

  void triple(const std::string& name, const Json& j) {
    const std::string where = "triple '" + name + "'";
    if (j.contains("dual")) {
      const auto src = j.at("dual").get<std::string>();
      if (inst_.left_triples.has(src))
        add_right(name, dual_triple(inst_.left_triples.at(src)));
      else if (inst_.right_triples.has(src))
        add_left(name, dual_triple(inst_.right_triples.at(src)));
      else
        unresolved(where + ": unknown triple '" + src + "'");
      return;
    }
    const auto rn = j.at("ring").get<std::string>();
    if (!inst_.rings.has(rn)) unresolved(where + ": unknown ring '" + rn + "'");
    const RingPtr& r = inst_.rings.at(rn);
    const Module& first = module_ref(j.at("first").get<std::string>(), where);
    const Module& second = module_ref(j.at("second").get<std::string>(), where);
    try {
      if (j.contains("functor")) {
        const auto fn = j.at("functor").get<std::string>();
        if (fn == "p")
          add_left(name, functor_p(r, first, second));
        else if (fn == "h")
          add_left(name, functor_h(r, first, second));
        else
          throw InstanceError(3, where + ": functor must be \"p\" or \"h\"");
        return;
      }
      Side side = parse_side(j.at("side"), where);
      if (side == Side::left) {
        const std::size_t rows = second.dim(), cols = tensor_over(r->u, first).module.dim();
        add_left(name, make_left_triple(r, first, second, phi(j, rows, cols, where)));
      } else {
        const std::size_t rows = first.dim(), cols = tensor_over_right(second, r->u).module.dim();
        add_right(name, make_right_triple(r, first, second, phi(j, rows, cols, where)));
      }
    } catch (const ModuleMismatch& e) {
      invalid(where + ": " + e.what());
    }
  }

  Matrix phi(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.contains("phi") || (j.at("phi").empty() && (rows == 0 || cols == 0)))
      return Matrix(inst_.field, rows, cols);
    Matrix m = parse_matrix(inst_.field, j.at("phi"), cols, where + " phi");
    if (m.rows() != rows || m.cols() != cols)
      invalid(where + ": phi is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
              ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    return m;
  }

  void add_left(const std::string& name, LeftTriple t) {
    if (auto v = validate(t)) invalid("triple '" + name + "': " + *v);
    inst_.left_triples.add(name, std::move(t));
    inst_.triple_order.push_back(name);
  }

  void add_right(const std::string& name, RightTriple t) {
    if (auto v = validate(t)) invalid("triple '" + name + "': " + *v);
    inst_.right_triples.add(name, std::move(t));
    inst_.triple_order.push_back(name);
  }

  void family(const std::string& name, const Json& j) {
    const std::string where = "family '" + name + "'";
    Family fam;
    fam.ring = j.at("ring").get<std::string>();
    if (!inst_.rings.has(fam.ring)) unresolved(where + ": unknown ring '" + fam.ring + "'");
    const RingPtr& r = inst_.rings.at(fam.ring);
    fam.side = parse_side(j.at("side"), where);
    fam.a = j.value("a", std::vector<std::string>{});
    fam.b = j.value("b", std::vector<std::string>{});
    fam.t = j.at("t").get<std::vector<std::string>>();
    auto check_modules = [&](const std::vector<std::string>& names, const AlgebraPtr& alg) {
      for (const auto& n : names) {
        const Module& m = module_ref(n, where);
        if (m.side() != fam.side || !same_algebra(m.algebra(), alg))
          invalid(where + ": module '" + n + "' is over the wrong algebra or side");
      }
    };
    check_modules(fam.a, r->a);
    check_modules(fam.b, r->b);
    for (const auto& n : fam.t) {
      const bool left = inst_.left_triples.has(n), right = inst_.right_triples.has(n);
      if (!left && !right) unresolved(where + ": unknown triple '" + n + "'");
      if (left != (fam.side == Side::left)) invalid(where + ": triple '" + n + "' has the wrong side");
      const RingPtr& tr = left ? inst_.left_triples.at(n).ring : inst_.right_triples.at(n).ring;
      if (tr != r) invalid(where + ": triple '" + n + "' is over another ring");
    }
    if (fam.t.empty()) invalid(where + ": no triples");
    inst_.families.add(name, std::move(fam));
  }

  const Json& doc_;
  Instance inst_;
};

}  // namespace

Instance load_instance(const Json& doc) {
  try {
    return Loader(doc).load();
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(3, std::string("malformed instance: ") + e.what());
  }
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(3, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(3, std::string("parse error: ") + e.what());
  }
  return load_instance(doc);
}

}  // namespace triding
