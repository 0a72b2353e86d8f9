#ifndef TRIDING_INSTANCE_HPP
#define TRIDING_INSTANCE_HPP

// JSON instance files and the commands that run over them.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "triding/dinghom.hpp"

namespace triding {

/// Carries the command-line exit code: 2 invalid object, 3 parse error,
/// 4 unresolved reference or missing objects.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

template <typename T>
struct Named {
  std::vector<std::string> order;
  std::map<std::string, T> items;

  void add(const std::string& name, T value) {
    if (items.count(name)) throw InstanceError(3, "duplicate name '" + name + "'");
    order.push_back(name);
    items.emplace(name, std::move(value));
  }
  bool has(const std::string& name) const { return items.count(name) != 0; }
  const T& at(const std::string& name) const { return items.at(name); }
};

struct Family {
  std::string ring;
  Side side;
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::vector<std::string> t;
};

struct Instance {
  PrimeField field{2};
  Named<AlgebraPtr> algebras;
  Named<Bimodule> bimodules;
  Named<RingPtr> rings;
  Named<Module> modules;
  Named<LeftTriple> left_triples;
  Named<RightTriple> right_triples;
  Named<Family> families;
  std::vector<std::string> triple_order;  // left and right triples in file order
  Json tasks = Json::array();

  std::string ring_name(const RingPtr& r) const;
  std::string algebra_name(const AlgebraPtr& a) const;
};

/// Builds and validates every object; throws InstanceError.
Instance load_instance(const Json& doc);
Instance load_instance_file(const std::string& path);

/// Options shared by the commands.
struct RunOptions {
  bool timings = false;
};

using Records = std::vector<Json>;

Records run_analyze(Engine& engine, const Instance& inst, const RunOptions& opt = {});
/// Theorem ids: 3.4 3.8 3.9 4.4 4.8 4.9 cor3.5 cor4.5 lem3.1 lem3.2 lem3.7 lem4.1 lem4.2 lem4.7.
/// Throws InstanceError(4) when the file has nothing to check.
Records run_verify(Engine& engine, const Instance& inst, const std::string& theorem,
                   const RunOptions& opt = {});
/// Random left and right triples over `ring`, each checked against 3.4/3.8 or 4.4/4.8.
Records run_fuzz(Engine& engine, const Instance& inst, const std::string& ring, std::uint64_t seed,
                 std::size_t count, std::size_t max_dim, const RunOptions& opt = {});

const std::vector<std::string>& theorem_ids();

/// 1 if any record failed; 5 if there were records and all were inconclusive; else 0.
int verify_exit_code(const Records& records);

}  // namespace triding

#endif
