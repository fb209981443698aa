#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "tzero/characters.hpp"

namespace tzero {

/// Exact generalized Bernoulli numbers keyed by (n, character label).
///
/// On-disk format, one record per line after a version header:
///
///     # tzero-bernoulli-cache v1
///     <n>\t<label>\t<numerator>/<denominator>
///
/// Records are written in key order, so load followed by save reproduces the
/// file byte for byte.
class BernoulliCache {
 public:
  static constexpr const char* kHeader = "# tzero-bernoulli-cache v1";

  std::optional<mpq_class> find(int n, const std::string& label) const;
  void insert(int n, const std::string& label, const mpq_class& value);
  std::size_t size() const { return entries_.size(); }

  /// Looks up B_{n,chi}, computing and storing it on a miss.
  mpq_class get_or_compute(int n, const DirichletCharacter& chi);

  static BernoulliCache read(std::istream& in);
  void write(std::ostream& out) const;
  static BernoulliCache load(const std::string& path);
  void save(const std::string& path) const;

 private:
  std::map<std::pair<int, std::string>, mpq_class> entries_;
};

}  // namespace tzero
