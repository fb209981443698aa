#include "tzero/bernoulli_cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tzero {

std::optional<mpq_class> BernoulliCache::find(int n, const std::string& label) const {
  auto it = entries_.find({n, label});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void BernoulliCache::insert(int n, const std::string& label, const mpq_class& value) {
  if (label.find_first_of("\t\n") != std::string::npos)
    throw std::invalid_argument("BernoulliCache: label contains a tab or newline");
  mpq_class v = value;
  v.canonicalize();
  entries_[{n, label}] = v;
}

mpq_class BernoulliCache::get_or_compute(int n, const DirichletCharacter& chi) {
  const std::string label = chi.primitive().label();
  if (auto hit = find(n, label)) return *hit;
  mpq_class v = gen_bernoulli_rational(n, chi);
  insert(n, label, v);
  return v;
}

BernoulliCache BernoulliCache::read(std::istream& in) {
  BernoulliCache cache;
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::runtime_error("BernoulliCache: missing or unsupported version header");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw std::runtime_error("BernoulliCache: empty record on line " + std::to_string(lineno));
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw std::runtime_error("BernoulliCache: malformed record on line " + std::to_string(lineno));
    const std::string n_str = line.substr(0, t1);
    const std::string label = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string value = line.substr(t2 + 1);
    const auto slash = value.find('/');
    if (slash == std::string::npos)
      throw std::runtime_error("BernoulliCache: value is not numerator/denominator on line " +
                               std::to_string(lineno));
    mpz_class num, den;
    if (num.set_str(value.substr(0, slash), 10) != 0 || den.set_str(value.substr(slash + 1), 10) != 0 ||
        den <= 0)
      throw std::runtime_error("BernoulliCache: bad rational on line " + std::to_string(lineno));
    std::size_t used = 0;
    const int n = std::stoi(n_str, &used);
    if (used != n_str.size()) throw std::runtime_error("BernoulliCache: bad index on line " + std::to_string(lineno));
    mpq_class q(num, den);
    q.canonicalize();
    if (q.get_num() != num || q.get_den() != den)
      throw std::runtime_error("BernoulliCache: non-canonical rational on line " + std::to_string(lineno));
    cache.insert(n, label, q);
  }
  return cache;
}

void BernoulliCache::write(std::ostream& out) const {
  out << kHeader << '\n';
  for (const auto& [key, value] : entries_)
    out << key.first << '\t' << key.second << '\t' << value.get_num().get_str() << '/'
        << value.get_den().get_str() << '\n';
}

BernoulliCache BernoulliCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("BernoulliCache: cannot open " + path);
  return read(in);
}

void BernoulliCache::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("BernoulliCache: cannot write " + path);
  write(out);
}

}  // namespace tzero
