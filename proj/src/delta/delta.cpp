#include "lieinner/delta/delta.hpp"

#include <stdexcept>

namespace lieinner {

namespace {

struct FamilyName {
  Family family;
  const char* name;
  std::size_t fixed_rank;
};

constexpr FamilyName kFamilies[] = {
    {Family::A, "A", 0},  {Family::B, "B", 0},  {Family::C, "C", 0},  {Family::D, "D", 0},  {Family::E6, "E6", 6},
    {Family::E7, "E7", 7}, {Family::E8, "E8", 8}, {Family::F4, "F4", 4}, {Family::G2, "G2", 2},
};

const FamilyName& info(Family f) {
  for (const auto& x : kFamilies)
    if (x.family == f) return x;
  throw std::invalid_argument("unknown family");
}

std::vector<Scalar> ints(std::initializer_list<int> xs) { return std::vector<Scalar>(xs.begin(), xs.end()); }

// Simply-laced chain 1 - 2 - ... - m.
void chain(Matrix& c, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i + 1 < to; ++i) c(i, i + 1) = c(i + 1, i) = -1;
}

}  // namespace

std::string to_string(Family f) { return info(f).name; }

Family parse_family(const std::string& name) {
  for (const auto& x : kFamilies)
    if (name == x.name) return x.family;
  throw std::invalid_argument("unknown root system family: " + name);
}

RootType RootType::make(Family family, std::size_t rank) {
  const auto& fi = info(family);
  if (fi.fixed_rank != 0) {
    if (rank != fi.fixed_rank) throw std::invalid_argument(std::string(fi.name) + " has fixed rank");
    return {family, rank};
  }
  std::size_t min = family == Family::A ? 1 : family == Family::B ? 3 : family == Family::C ? 2 : 4;
  if (rank < min)
    throw std::invalid_argument(std::string(fi.name) + " needs rank >= " + std::to_string(min));
  return {family, rank};
}

RootType RootType::parse(const std::string& family, std::size_t rank) {
  Family f = parse_family(family);
  if (rank == 0 && info(f).fixed_rank != 0) rank = info(f).fixed_rank;
  return make(f, rank);
}

bool RootType::is_classical() const {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

std::string to_string(const RootType& t) {
  if (!t.is_classical()) return to_string(t.family);
  return to_string(t.family) + std::to_string(t.rank);
}

Weight::Weight(RootType t, std::vector<std::int64_t> c) : type(t), coords(std::move(c)) {
  if (coords.size() != type.rank) throw std::invalid_argument("weight length does not match the rank");
}

Weight Weight::zero(RootType t) { return Weight(t, std::vector<std::int64_t>(t.rank, 0)); }

Weight Weight::fundamental(RootType t, std::size_t i) {
  if (i >= t.rank) throw std::out_of_range("fundamental weight index out of range");
  Weight w = zero(t);
  w.coords[i] = 1;
  return w;
}

bool Weight::is_dominant() const {
  for (auto c : coords)
    if (c < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& other) const {
  if (!(type == other.type)) throw std::invalid_argument("weights of different types");
  Weight w = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] += other.coords[i];
  return w;
}

Matrix cartan_matrix(const RootType& t) {
  const std::size_t m = t.rank;
  Matrix c(m, m);
  for (std::size_t i = 0; i < m; ++i) c(i, i) = 2;
  switch (t.family) {
    case Family::A: chain(c, 0, m); break;
    case Family::B:
      chain(c, 0, m);
      c(m - 2, m - 1) = -2;  // alpha_m short
      break;
    case Family::C:
      chain(c, 0, m);
      c(m - 1, m - 2) = -2;  // alpha_m long
      break;
    case Family::D:
      chain(c, 0, m - 1);
      c(m - 3, m - 1) = c(m - 1, m - 3) = -1;
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // 1 - 3 - 4 - 5 - ... with 2 attached to 4.
      c(0, 2) = c(2, 0) = -1;
      c(1, 3) = c(3, 1) = -1;
      chain(c, 2, m);
      break;
    case Family::F4:
      chain(c, 0, 4);
      c(1, 2) = -2;
      break;
    case Family::G2:
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
  }
  return c;
}

Weight simple_root(const RootType& t, std::size_t j) {
  if (j >= t.rank) throw std::out_of_range("simple root index out of range");
  Matrix c = cartan_matrix(t);
  std::vector<std::int64_t> coords(t.rank);
  for (std::size_t k = 0; k < t.rank; ++k) coords[k] = c(j, k).get_num().get_si();
  return Weight(t, std::move(coords));
}

DeltaVector delta_table(const RootType& t) {
  const std::size_t m = t.rank;
  std::vector<Scalar> p;
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 1; i <= m; ++i) p.push_back(static_cast<long>(std::min(i, m + 1 - i)));
      break;
    case Family::B:
      for (std::size_t i = 1; i < m; ++i) p.push_back(static_cast<long>(i));
      p.push_back(static_cast<long>(m / 2));
      break;
    case Family::C:
      for (std::size_t i = 1; i <= m; ++i) p.push_back(static_cast<long>(i));
      break;
    case Family::D: {
      for (std::size_t i = 1; i + 2 <= m; ++i) p.push_back(static_cast<long>(i));
      const long k = static_cast<long>(m / 2);
      if (m % 2 == 0) {
        p.push_back(k - 1);
        p.push_back(k);
      } else {
        p.push_back(k);
        p.push_back(k);
      }
      break;
    }
    case Family::E6: p = ints({2, 2, 3, 4, 3, 2}); break;
    case Family::E7: p = ints({2, 2, 3, 4, 3, 2, 1}); break;
    case Family::E8: p = ints({4, 5, 7, 10, 8, 6, 4, 2}); break;
    case Family::F4: p = ints({2, 3, 2, 1}); break;
    case Family::G2: p = ints({1, 2}); break;
  }
  return {t, std::move(p)};
}

Scalar delta_of_weight(const Weight& w) {
  auto table = delta_table(w.type);
  Scalar s = 0;
  for (std::size_t i = 0; i < w.coords.size(); ++i) s += Scalar(static_cast<long>(w.coords[i])) * table.values[i];
  return s;
}

Scalar delta_of_simple_root(const RootType& t, std::size_t j) { return delta_of_weight(simple_root(t, j)); }

std::vector<Scalar> delta_of_simple_roots(const RootType& t) {
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < t.rank; ++j) out.push_back(delta_of_simple_root(t, j));
  return out;
}

std::string to_string(ModuleClass c) {
  switch (c) {
    case ModuleClass::Trivial: return "trivial";
    case ModuleClass::Diagonal: return "diagonal";
    case ModuleClass::NonDiagonal: return "non_diagonal";
  }
  return "unknown";
}

Scalar delta_of_module(const Weight& highest) {
  if (!highest.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  return delta_of_weight(highest);
}

ModuleClassification classify_module(const Weight& highest) {
  Scalar d = delta_of_module(highest);
  ModuleClass k = d == 0 ? ModuleClass::Trivial : d == 1 ? ModuleClass::Diagonal : ModuleClass::NonDiagonal;
  return {d, k, highest.type.rank > 10};
}

}  // namespace lieinner
