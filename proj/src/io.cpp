#include "modrep/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace modrep {
namespace {

using nlohmann::json;

std::string located(const std::string& path, const std::string& text, size_t byte,
                    const std::string& msg) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(located(path, text, e.byte, e.what()));
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

const json& field(const std::string& path, const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

long int_at(const std::string& path, const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(path, what + " must be an integer");
  return j.get<long>();
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar entry_from_json(const std::string& path, const Ring& r, const json& j) {
  switch (r.kind) {
    case RingKind::GFp: {
      long v = int_at(path, j, "gf(p) entry");
      unsigned p = r.char_p();
      return ff_scalar(r, static_cast<uint8_t>(((v % p) + p) % p));
    }
    case RingKind::GFpk: {
      if (!j.is_array() || j.size() != 2) fail(path, "extension-field entry must be [a,b]");
      unsigned p = r.char_p();
      long a = int_at(path, j[0], "entry digit"), b = int_at(path, j[1], "entry digit");
      uint8_t av = static_cast<uint8_t>(((a % p) + p) % p);
      uint8_t bv = static_cast<uint8_t>(((b % p) + p) % p);
      return ff_scalar(r, static_cast<uint8_t>(av + bv * p));
    }
    case RingKind::Int:
      return Scalar{r, mpz_class(int_at(path, j, "integer entry"))};
    case RingKind::Rat: {
      if (j.is_number_integer()) return Scalar{r, mpq_class(j.get<long>())};
      if (!j.is_string()) fail(path, "rational entry must be an integer or a \"p/q\" string");
      try {
        return Scalar{r, parse_rational(j.get<std::string>())};
      } catch (const std::exception& e) {
        fail(path, std::string("bad rational: ") + e.what());
      }
    }
    case RingKind::ZSqrtMinus2: {
      if (!j.is_array() || j.size() != 2) fail(path, "Z[sqrt(-2)] entry must be [a,b]");
      return Scalar{r, ZS2{mpz_class(int_at(path, j[0], "entry")),
                           mpz_class(int_at(path, j[1], "entry"))}};
    }
  }
  fail(path, "unknown ring");
}

json entry_to_json(const Scalar& s) {
  switch (s.ring.kind) {
    case RingKind::GFp:
      return static_cast<long>(std::get<uint8_t>(s.v));
    case RingKind::GFpk: {
      unsigned p = s.ring.char_p();
      uint8_t v = std::get<uint8_t>(s.v);
      return json::array({v % p, v / p});
    }
    case RingKind::Int: {
      const mpz_class& z = std::get<mpz_class>(s.v);
      if (!z.fits_slong_p()) throw std::runtime_error("write: integer entry too large");
      return z.get_si();
    }
    case RingKind::Rat: {
      const mpq_class& q = std::get<mpq_class>(s.v);
      if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case RingKind::ZSqrtMinus2: {
      const ZS2& z = std::get<ZS2>(s.v);
      if (!z.a.fits_slong_p() || !z.b.fits_slong_p())
        throw std::runtime_error("write: entry too large");
      return json::array({z.a.get_si(), z.b.get_si()});
    }
  }
  throw std::runtime_error("write: unknown ring");
}

// A signed permutation row pattern: exactly one +-1 per row over Z.
std::optional<json> signed_perm_json(const Matrix& m) {
  if (m.ring().kind != RingKind::Int || m.rows() != m.cols()) return std::nullopt;
  json triples = json::array();
  std::vector<bool> dst_seen(m.cols(), false);
  for (size_t r = 0; r < m.rows(); ++r) {
    size_t nonzero = 0, dst = 0;
    long sign = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      mpz_class z = std::get<mpz_class>(m.at(r, c).v);
      if (z == 0) continue;
      ++nonzero;
      if (z != 1 && z != -1) return std::nullopt;
      dst = c;
      sign = z.get_si();
    }
    if (nonzero != 1 || dst_seen[dst]) return std::nullopt;
    dst_seen[dst] = true;
    triples.push_back(json::array({r, dst, sign}));
  }
  return triples;
}

Matrix matrix_from_json(const std::string& path, const Ring& r, size_t dim, const json& j) {
  if (!j.is_array() || j.size() != dim) fail(path, "matrix must have " + std::to_string(dim) + " rows");
  Matrix m(r, dim, dim);
  for (size_t row = 0; row < dim; ++row) {
    const json& jr = j[row];
    if (!jr.is_array() || jr.size() != dim)
      fail(path, "matrix row must have " + std::to_string(dim) + " entries");
    for (size_t col = 0; col < dim; ++col) m.set(row, col, entry_from_json(path, r, jr[col]));
  }
  return m;
}

Matrix signed_perm_from_json(const std::string& path, const Ring& r, size_t dim, const json& j) {
  if (!j.is_array() || j.size() != dim)
    fail(path, "signed_perm must list " + std::to_string(dim) + " triples");
  std::vector<size_t> index(dim, dim);
  std::vector<int> sign(dim, 0);
  std::vector<bool> src_seen(dim, false);
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 3) fail(path, "signed_perm entries must be [src,dst,sign]");
    long src = int_at(path, t[0], "src"), dst = int_at(path, t[1], "dst"),
         sg = int_at(path, t[2], "sign");
    if (src < 0 || static_cast<size_t>(src) >= dim || dst < 0 || static_cast<size_t>(dst) >= dim)
      fail(path, "signed_perm index out of range");
    if (sg != 1 && sg != -1) fail(path, "signed_perm sign must be +-1");
    if (src_seen[src]) fail(path, "signed_perm repeats a source row");
    src_seen[src] = true;
    index[src] = static_cast<size_t>(dst);
    sign[src] = static_cast<int>(sg);
  }
  try {
    return sp_to_matrix(make_signed_perm(dim, index, sign), r);
  } catch (const std::exception& e) {
    fail(path, std::string("bad signed_perm: ") + e.what());
  }
}

}  // namespace

std::string ring_to_file_string(const Ring& r) {
  switch (r.kind) {
    case RingKind::GFp:
    case RingKind::GFpk:
      return "gf(" + std::to_string(r.q()) + ")";
    case RingKind::Int:
      return "Z";
    case RingKind::Rat:
      return "Q";
    case RingKind::ZSqrtMinus2:
      return "Z[sqrt(-2)]";
  }
  throw std::invalid_argument("ring_to_file_string: unknown ring");
}

Ring ring_from_file_string(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s == "Z[sqrt(-2)]") return zsqrtm2();
  if (s.rfind("gf(", 0) == 0 && s.back() == ')') {
    unsigned q = 0;
    for (size_t i = 3; i + 1 < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad field string: " + s);
      q = q * 10 + static_cast<unsigned>(s[i] - '0');
      if (q > 255) throw std::invalid_argument("field order out of range: " + s);
    }
    if (q == 4) return gf4();
    if (q == 9) return gf9();
    if (is_prime(q)) return gfp(q);
    throw std::invalid_argument("unsupported field order: " + s);
  }
  throw std::invalid_argument("unknown ring: " + s + " (expected gf(q), Z, Q, or Z[sqrt(-2)])");
}

Representation read_rep_file(const std::string& path) {
  json j = load_json(path);
  Ring r = [&] {
    const json& f = field(path, j, "field");
    if (!f.is_string()) fail(path, "field must be a string");
    try {
      return ring_from_file_string(f.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }();
  long dim_l = int_at(path, field(path, j, "dim"), "dim");
  if (dim_l <= 0) fail(path, "dim must be positive");
  size_t dim = static_cast<size_t>(dim_l);
  const json& gens_j = field(path, j, "generators");
  if (!gens_j.is_array() || gens_j.empty()) fail(path, "generators must be a nonempty array");

  std::vector<std::string> names;
  std::vector<Matrix> gens;
  for (const json& g : gens_j) {
    const json& name_j = field(path, g, "name");
    if (!name_j.is_string() || name_j.get<std::string>().empty())
      fail(path, "generator name must be a nonempty string");
    std::string name = name_j.get<std::string>();
    if (std::find(names.begin(), names.end(), name) != names.end())
      fail(path, "duplicate generator name '" + name + "'");
    names.push_back(name);
    bool has_matrix = g.contains("matrix"), has_sp = g.contains("signed_perm");
    if (has_matrix == has_sp)
      fail(path, "generator '" + name + "' needs exactly one of matrix or signed_perm");
    gens.push_back(has_matrix ? matrix_from_json(path, r, dim, g.at("matrix"))
                              : signed_perm_from_json(path, r, dim, g.at("signed_perm")));
  }
  try {
    return make_rep(std::move(names), std::move(gens));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

void write_rep_file(const std::string& path, const Representation& rep) {
  json j;
  j["field"] = ring_to_file_string(rep.ring);
  j["dim"] = rep.dim;
  json gens = json::array();
  for (size_t i = 0; i < rep.gens.size(); ++i) {
    json g;
    g["name"] = rep.gen_names[i];
    if (auto sp = signed_perm_json(rep.gens[i])) {
      g["signed_perm"] = *sp;
    } else {
      json rows = json::array();
      for (size_t r = 0; r < rep.dim; ++r) {
        json row = json::array();
        for (size_t c = 0; c < rep.dim; ++c) row.push_back(entry_to_json(rep.gens[i].at(r, c)));
        rows.push_back(row);
      }
      g["matrix"] = rows;
    }
    gens.push_back(g);
  }
  j["generators"] = gens;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::shared_ptr<const FiniteGroup> read_group_file(const std::string& path) {
  Representation rep = read_rep_file(path);
  try {
    return std::make_shared<const FiniteGroup>(enumerate_group(rep.gen_names, rep.gens));
  } catch (const std::exception& e) {
    throw ParseError(path + ": generators do not define a small finite group: " + e.what());
  }
}

RepCatalog read_catalog_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ParseError(dir + ": no .json files");
  RepCatalog cat;
  for (const auto& p : files) cat.push_back({p.stem().string(), read_rep_file(p.string())});
  return cat;
}

MassTable read_mass_file(const std::string& path) {
  json j = load_json(path);
  const json& arr = field(path, j, "particles");
  if (!arr.is_array() || arr.empty()) fail(path, "particles must be a nonempty array");
  MassTable t;
  for (const json& p : arr) {
    MassDatum d;
    const json& name = field(path, p, "name");
    if (!name.is_string()) fail(path, "particle name must be a string");
    d.name = name.get<std::string>();
    for (auto [key, dest] : {std::pair{"mass_mev", &d.value_mev}, {"sigma_mev", &d.sigma_mev}}) {
      const json& v = field(path, p, key);
      if (!v.is_string()) fail(path, d.name + ": " + key + " must be an exact decimal string");
      try {
        *dest = parse_decimal(v.get<std::string>());
      } catch (const std::exception& e) {
        fail(path, d.name + ": " + e.what());
      }
    }
    const json& src = field(path, p, "source");
    if (!src.is_string()) fail(path, d.name + ": source must be a string");
    d.source = src.get<std::string>();
    try {
      t.add(std::move(d));
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  return t;
}

MassIdentity read_identity_file(const std::string& path) {
  json j = load_json(path);
  MassIdentity id;
  const json& name = field(path, j, "name");
  if (!name.is_string()) fail(path, "name must be a string");
  id.name = name.get<std::string>();
  const json& terms = field(path, j, "terms");
  if (!terms.is_array()) fail(path, "terms must be an array");
  for (const json& t : terms) {
    MassTerm term;
    const json& particle = field(path, t, "particle");
    if (!particle.is_string()) fail(path, "term particle must be a string");
    term.particle = particle.get<std::string>();
    const json& coeff = field(path, t, "coeff");
    if (coeff.is_number_integer()) {
      term.coeff = mpq_class(coeff.get<long>());
    } else if (coeff.is_string()) {
      try {
        term.coeff = parse_rational(coeff.get<std::string>());
      } catch (const std::exception& e) {
        fail(path, term.particle + ": " + e.what());
      }
    } else {
      fail(path, "coeff must be an integer or a \"p/q\" string");
    }
    id.terms.push_back(std::move(term));
  }
  try {
    validate_identity(id);
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  return id;
}

}  // namespace modrep
