#include "cyclab/io.hpp"

#include <fstream>
#include <sstream>

#include "cyclab/errors.hpp"

namespace cyclab {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

Index index_from_json(const Json& j, Index bound, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<Index>(v) >= bound) bad(where, "index " + std::to_string(v) + " out of range");
  return static_cast<Index>(v);
}

Index size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

Rational fraction_from_json(const Json& num, const Json& den, const std::string& where) {
  Integer p = integer_from_json(num, where + "/num");
  Integer q = integer_from_json(den, where + "/den");
  if (q == 0) bad(where, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational coordinate_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, where));
  if (!j.is_string()) bad(where, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    bad(where, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Json coordinate_to_json(const Rational& q) {
  if (q.get_den() == 1 && fits_int64(q.get_num())) return to_int64(q.get_num());
  return to_string(q);
}

std::vector<std::string> names_from_json(const Json& j, Index dim, const std::string& where) {
  auto it = j.find("basis");
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_array() || it->size() != dim) bad(where + "/basis", "expected " + std::to_string(dim) + " names");
  std::vector<std::string> out;
  for (const auto& n : *it) {
    if (!n.is_string()) bad(where + "/basis", "names must be strings");
    out.push_back(n.get<std::string>());
  }
  return out;
}

std::vector<StructureConstant> table_from_json(const Json& rows, Index dim, const std::string& where) {
  if (!rows.is_array()) bad(where, "expected an array of [i, j, k, num, den]");
  std::vector<StructureConstant> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string at = where + "/" + std::to_string(r);
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != 5) bad(at, "expected [i, j, k, num, den]");
    out.push_back({index_from_json(row[0], dim, at), index_from_json(row[1], dim, at), index_from_json(row[2], dim, at),
                   fraction_from_json(row[3], row[4], at)});
  }
  return out;
}

Json table_to_json(const std::vector<StructureConstant>& table) {
  Json rows = Json::array();
  for (const auto& s : table)
    rows.push_back({s.i, s.j, s.k, integer_to_json(s.value.get_num()), integer_to_json(s.value.get_den())});
  return rows;
}

Json matrix_to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (Index col = 0; col < m.cols(); ++col)
    for (const auto& e : m.col(col))
      entries.push_back({e.index, col, integer_to_json(e.value.get_num()), integer_to_json(e.value.get_den())});
  return entries;
}

SparseMatrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array()) bad(where, "expected [[r, c, num, den], ...]");
  std::vector<Triplet> trips;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const auto& row = j[e];
    const std::string here = where + "/" + std::to_string(e);
    if (!row.is_array() || row.size() != 4) bad(here, "expected [r, c, num, den]");
    trips.push_back({index_from_json(row[0], rows, here), index_from_json(row[1], cols, here),
                     fraction_from_json(row[2], row[3], here)});
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(trips));
}

Json names_to_json(const std::vector<std::string>& names) {
  if (names.empty()) return nullptr;
  return names;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json integer_to_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer z;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || z.set_str(s, 10) != 0) bad(where, "malformed integer \"" + s + "\"");
    return z;
  }
  bad(where, "expected an integer");
}

Json to_json(const ChainComplex& c) {
  Json dims = Json::object();
  Json diffs = Json::object();
  for (int n = 0; n <= c.top(); ++n) dims[std::to_string(n)] = c.dim(n);
  for (int n = 1; n <= c.top(); ++n) diffs[std::to_string(n)] = matrix_to_json(c.d(n));
  return {{"dims", dims}, {"differentials", diffs}, {"bounded", c.bounded()}};
}

ChainComplex complex_from_json(const Json& j) {
  const std::string where = "complex";
  const auto& dj = member(j, "dims", where);
  if (!dj.is_object()) bad(where + "/dims", "expected an object keyed by degree");
  std::vector<Index> dims(dj.size());
  for (std::size_t n = 0; n < dims.size(); ++n) {
    auto it = dj.find(std::to_string(n));
    if (it == dj.end()) bad(where + "/dims", "degrees must be 0.." + std::to_string(dims.size() - 1));
    dims[n] = size_from_json(*it, where + "/dims/" + std::to_string(n));
  }
  const auto& diffs = member(j, "differentials", where);
  if (!diffs.is_object()) bad(where + "/differentials", "expected an object keyed by degree");
  for (const auto& [key, value] : diffs.items()) {
    (void)value;
    std::size_t pos = 0;
    long n = -1;
    try {
      n = std::stol(key, &pos);
    } catch (const std::exception&) {
    }
    if (pos != key.size() || n < 1 || static_cast<std::size_t>(n) >= dims.size())
      bad(where + "/differentials", "bad degree \"" + key + "\"");
  }
  std::vector<SparseMatrix> ds;
  for (std::size_t n = 1; n < dims.size(); ++n) {
    const std::string at = where + "/differentials/" + std::to_string(n);
    auto it = diffs.find(std::to_string(n));
    ds.push_back(it == diffs.end() ? SparseMatrix(dims[n - 1], dims[n]) : matrix_from_json(*it, dims[n - 1], dims[n], at));
  }
  bool bounded = true;
  if (auto it = j.find("bounded"); it != j.end()) {
    if (!it->is_boolean()) bad(where + "/bounded", "expected a boolean");
    bounded = it->get<bool>();
  }
  return ChainComplex(std::move(dims), std::move(ds), bounded);
}

Json to_json(const Algebra& a) {
  Json unit = nullptr;
  if (a.unital()) {
    unit = Json::array();
    for (Index i = 0; i < a.dim(); ++i) unit.push_back(coordinate_to_json(a.unit().at(i)));
  }
  return {{"dim", a.dim()}, {"basis", names_to_json(a.names())}, {"mult", table_to_json(a.table())}, {"unit", unit}};
}

Algebra algebra_from_json(const Json& j) {
  const std::string where = "algebra";
  const Index dim = size_from_json(member(j, "dim", where), where + "/dim");
  auto names = names_from_json(j, dim, where);
  auto table = table_from_json(member(j, "mult", where), dim, where + "/mult");
  std::optional<SparseVector> unit;
  if (auto it = j.find("unit"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != dim) bad(where + "/unit", "expected " + std::to_string(dim) + " coordinates");
    std::vector<Entry> entries;
    for (Index i = 0; i < dim; ++i) {
      Rational v = coordinate_from_json((*it)[i], where + "/unit/" + std::to_string(i));
      if (!is_zero(v)) entries.push_back({i, v});
    }
    unit = SparseVector::from_entries(std::move(entries));
  }
  return Algebra(dim, table, std::move(unit), std::move(names));
}

Json to_json(const LieAlgebra& g) {
  return {{"dim", g.dim()}, {"basis", names_to_json(g.names())}, {"bracket", table_to_json(g.table())}};
}

LieAlgebra lie_from_json(const Json& j) {
  const std::string where = "lie";
  const Index dim = size_from_json(member(j, "dim", where), where + "/dim");
  auto names = names_from_json(j, dim, where);
  auto table = table_from_json(member(j, "bracket", where), dim, where + "/bracket");
  return LieAlgebra(dim, table, std::move(names));
}

Json to_json(const FinitePrecosheaf& p) {
  const auto& m = p.model();
  Json dims = Json::object();
  for (Index u = 0; u < m.open_count(); ++u) dims[std::to_string(u)] = p.dim(u);
  Json ext = Json::array();
  for (const auto& [uv, map] : p.maps()) ext.push_back({uv.first, uv.second, matrix_to_json(map)});
  return {{"points", m.points()},
          {"opens", m.opens()},
          {"cover", m.cover()},
          {"precosheaf", {{"dims", dims}, {"extensions", ext}}}};
}

CoverModel cover_from_json(const Json& j) {
  const std::string where = "cover";
  const Index points = size_from_json(member(j, "points", where), where + "/points");
  const auto& oj = member(j, "opens", where);
  if (!oj.is_array()) bad(where + "/opens", "expected a list of point lists");
  std::vector<PointSet> opens;
  for (std::size_t u = 0; u < oj.size(); ++u) {
    const std::string at = where + "/opens/" + std::to_string(u);
    if (!oj[u].is_array()) bad(at, "expected a list of points");
    PointSet s;
    for (const auto& x : oj[u]) s.push_back(index_from_json(x, points, at));
    opens.push_back(std::move(s));
  }
  const auto& cj = member(j, "cover", where);
  if (!cj.is_array()) bad(where + "/cover", "expected a list of open ids");
  std::vector<Index> cover;
  for (const auto& c : cj) cover.push_back(index_from_json(c, opens.size(), where + "/cover"));
  return CoverModel(points, std::move(opens), std::move(cover));
}

FinitePrecosheaf precosheaf_from_json(const Json& j) {
  auto model = std::make_shared<CoverModel>(cover_from_json(j));
  const std::string where = "cover/precosheaf";
  const auto& pj = member(j, "precosheaf", "cover");
  const auto& dj = member(pj, "dims", where);
  if (!dj.is_object()) bad(where + "/dims", "expected an object keyed by open id");
  std::vector<Index> dims(model->open_count());
  for (Index u = 0; u < dims.size(); ++u) {
    auto it = dj.find(std::to_string(u));
    if (it == dj.end()) bad(where + "/dims", "missing open " + std::to_string(u));
    dims[u] = size_from_json(*it, where + "/dims/" + std::to_string(u));
  }
  if (dj.size() != dims.size()) bad(where + "/dims", "entries for unknown opens");
  std::map<std::pair<Index, Index>, SparseMatrix> maps;
  const auto& ej = member(pj, "extensions", where);
  if (!ej.is_array()) bad(where + "/extensions", "expected [[from, to, matrix], ...]");
  for (std::size_t e = 0; e < ej.size(); ++e) {
    const std::string at = where + "/extensions/" + std::to_string(e);
    const auto& row = ej[e];
    if (!row.is_array() || row.size() != 3) bad(at, "expected [from, to, matrix]");
    const Index u = index_from_json(row[0], dims.size(), at), v = index_from_json(row[1], dims.size(), at);
    if (u == v || !model->subset(u, v)) bad(at, "not a strict inclusion of opens");
    if (maps.count({u, v})) bad(at, "inclusion listed twice");
    maps[{u, v}] = matrix_from_json(row[2], dims[v], dims[u], at + "/matrix");
  }
  try {
    return FinitePrecosheaf(model, std::move(dims), std::move(maps));
  } catch (const ShapeError& e) {
    bad(where, e.what());
  }
}

}  // namespace cyclab
