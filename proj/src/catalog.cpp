#include "grouplab/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

using Table = std::vector<std::vector<Elem>>;

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod_pow(long long base, long long exp, long long mod) {
  long long acc = 1 % mod;
  base %= mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
  }
  return static_cast<int>(acc);
}

Table cyclic_table(int n) {
  Table t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

// Elements 0..n-1 are rotations r^k, n..2n-1 are reflections s r^k.
Table dihedral_table(int n) {
  const int m = 2 * n;
  Table t(m, std::vector<Elem>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const bool ra = a < n, rb = b < n;
      const int i = a % n, j = b % n;
      if (ra && rb) {
        t[a][b] = (i + j) % n;
      } else if (ra && !rb) {
        t[a][b] = n + (j - i + n) % n;  // r^i * s r^j = s r^(j-i)
      } else if (!ra && rb) {
        t[a][b] = n + (i + j) % n;  // s r^i * r^j = s r^(i+j)
      } else {
        t[a][b] = (j - i + n) % n;  // s r^i * s r^j = r^(j-i)
      }
    }
  }
  return t;
}

// <a, b | a^(2n)=1, b^2=a^n, b a b^-1 = a^-1>; indices: a^k -> k,
// a^k b -> 2n+k. dicyclic(2) is the quaternion group Q8.
Table dicyclic_table(int n) {
  const int two_n = 2 * n;
  const int m = 4 * n;
  Table t(m, std::vector<Elem>(m));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const bool xa = x < two_n, ya = y < two_n;
      const int i = x % two_n, j = y % two_n;
      if (xa && ya) {
        t[x][y] = (i + j) % two_n;
      } else if (xa && !ya) {
        t[x][y] = two_n + (i + j) % two_n;  // a^i * a^j b = a^(i+j) b
      } else if (!xa && ya) {
        t[x][y] = two_n + (i - j + two_n) % two_n;  // a^i b * a^j = a^(i-j) b
      } else {
        t[x][y] = (i - j + n + two_n) % two_n;  // a^i b * a^j b = a^(i-j+n)
      }
    }
  }
  return t;
}

// Permutations in lexicographic order of their one-line notation, so the
// identity gets index 0. Product = apply right factor first.
Table permutation_table(const std::vector<std::vector<int>>& perms) {
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  Table t(m, std::vector<Elem>(m));
  const int n = static_cast<int>(perms[0].size());
  std::vector<int> prod(n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(prod);
    }
  }
  return t;
}

std::vector<std::vector<int>> all_permutations(int n, bool even_only) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (p[i] > p[j]) ++inversions;
        }
      }
      if (inversions % 2 != 0) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Vectors over F_p in little-endian digit order: index = sum d_i p^i.
Table elementary_abelian_table(int p, int k) {
  int m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  Table t(m, std::vector<Elem>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int x = a, y = b, pw = 1, s = 0;
      for (int i = 0; i < k; ++i) {
        s += (x % p + y % p) % p * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      t[a][b] = s;
    }
  }
  return t;
}

// Upper unitriangular 3x3 matrices over F_p, encoded (a,b,c) -> a + p b + p^2 c:
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'). Extraspecial of exponent p
// for odd p.
Table heisenberg_table(int p) {
  const int m = p * p * p;
  Table t(m, std::vector<Elem>(m));
  for (int x = 0; x < m; ++x) {
    const int a = x % p, b = x / p % p, c = x / (p * p);
    for (int y = 0; y < m; ++y) {
      const int a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
      const int na = (a + a2) % p;
      const int nb = (b + b2) % p;
      const int nc = (c + c2 + a * b2) % p;
      t[x][y] = na + p * nb + p * p * nc;
    }
  }
  return t;
}

// C_n x| C_m, generator of C_m acting as g -> g^k. Element (a,b) -> a + n b;
// (a,b)(a',b') = (a + a' k^b mod n, b + b' mod m).
Table semidirect_cyclic_table(int n, int m, int k) {
  const int sz = n * m;
  std::vector<int> k_pow(m);
  for (int b = 0; b < m; ++b) k_pow[b] = mod_pow(k, b, n);
  Table t(sz, std::vector<Elem>(sz));
  for (int x = 0; x < sz; ++x) {
    const int a = x % n, b = x / n;
    for (int y = 0; y < sz; ++y) {
      const int a2 = y % n, b2 = y / n;
      const int na = static_cast<int>((a + static_cast<long long>(a2) * k_pow[b]) % n);
      const int nb = (b + b2) % m;
      t[x][y] = na + n * nb;
    }
  }
  return t;
}

Table direct_product_table(const Table& ta, const Table& tb) {
  const int na = static_cast<int>(ta.size());
  const int nb = static_cast<int>(tb.size());
  const int m = na * nb;
  Table t(m, std::vector<Elem>(m));
  for (int x = 0; x < m; ++x) {
    const int xa = x % na, xb = x / na;
    for (int y = 0; y < m; ++y) {
      const int ya = y % na, yb = y / na;
      t[x][y] = ta[xa][ya] + na * tb[xb][yb];
    }
  }
  return t;
}

void require_params(const GroupSpec& spec, size_t count) {
  if (spec.parameters.size() != count) {
    throw GroupError(ErrorCode::InvalidSpec,
                     spec.str() + ": expected " + std::to_string(count) + " parameter(s)");
  }
}

long long spec_order(const GroupSpec& spec);

long long family_order(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::Cyclic: return spec.parameters[0];
    case GroupFamily::Dihedral: return 2LL * spec.parameters[0];
    case GroupFamily::Dicyclic: return 4LL * spec.parameters[0];
    case GroupFamily::Symmetric: return factorial(spec.parameters[0]);
    case GroupFamily::Alternating: return std::max<long long>(1, factorial(spec.parameters[0]) / 2);
    case GroupFamily::ElementaryAbelian: {
      long long m = 1;
      for (int i = 0; i < spec.parameters[1]; ++i) m *= spec.parameters[0];
      return m;
    }
    case GroupFamily::Heisenberg:
      return static_cast<long long>(spec.parameters[0]) * spec.parameters[0] * spec.parameters[0];
    case GroupFamily::SemidirectCyclic:
      return static_cast<long long>(spec.parameters[0]) * spec.parameters[1];
    case GroupFamily::DirectProduct: {
      long long m = 1;
      for (const auto& f : spec.factors) m *= spec_order(f);
      return m;
    }
    case GroupFamily::Imported: return -1;  // unknown until parsed
  }
  return -1;
}

long long spec_order(const GroupSpec& spec) { return family_order(spec); }

void check_spec(const GroupSpec& spec) {
  const auto bad = [&](const std::string& why) {
    return GroupError(ErrorCode::InvalidSpec, spec.str() + ": " + why);
  };
  switch (spec.family) {
    case GroupFamily::Cyclic:
      require_params(spec, 1);
      if (spec.parameters[0] < 1) throw bad("n must be >= 1");
      break;
    case GroupFamily::Dihedral:
      require_params(spec, 1);
      if (spec.parameters[0] < 1) throw bad("n must be >= 1");
      break;
    case GroupFamily::Dicyclic:
      require_params(spec, 1);
      if (spec.parameters[0] < 1) throw bad("n must be >= 1");
      break;
    case GroupFamily::Symmetric:
      require_params(spec, 1);
      if (spec.parameters[0] < 1 || spec.parameters[0] > 6) throw bad("n must be in 1..6");
      break;
    case GroupFamily::Alternating:
      require_params(spec, 1);
      if (spec.parameters[0] < 1 || spec.parameters[0] > 6) throw bad("n must be in 1..6");
      break;
    case GroupFamily::ElementaryAbelian:
      require_params(spec, 2);
      if (!is_prime(spec.parameters[0])) throw bad("p must be prime");
      if (spec.parameters[1] < 1) throw bad("k must be >= 1");
      break;
    case GroupFamily::Heisenberg:
      require_params(spec, 1);
      if (!is_prime(spec.parameters[0]) || spec.parameters[0] % 2 == 0 || spec.parameters[0] > 7) {
        throw bad("p must be an odd prime <= 7");
      }
      break;
    case GroupFamily::SemidirectCyclic: {
      require_params(spec, 3);
      const int n = spec.parameters[0], m = spec.parameters[1], k = spec.parameters[2];
      if (n < 1 || m < 1) throw bad("n and m must be >= 1");
      if (k < 0 || k >= n) throw bad("k must be in 0..n-1");
      if (mod_pow(k, m, n) != 1 % n) throw bad("k^m != 1 mod n (action must have order dividing m)");
      break;
    }
    case GroupFamily::DirectProduct:
      if (spec.factors.size() < 2) throw bad("direct product needs at least two factors");
      break;
    case GroupFamily::Imported:
      if (spec.source_path.empty()) throw bad("imported spec needs a file path");
      break;
  }
}

}  // namespace

std::string GroupSpec::str() const {
  const auto join_params = [&] {
    std::string s;
    for (size_t i = 0; i < parameters.size(); ++i) {
      s += (i ? "," : "") + std::to_string(parameters[i]);
    }
    return s;
  };
  switch (family) {
    case GroupFamily::Cyclic: return "cyclic:" + join_params();
    case GroupFamily::Dihedral: return "dihedral:" + join_params();
    case GroupFamily::Dicyclic: return "dicyclic:" + join_params();
    case GroupFamily::Symmetric: return "symmetric:" + join_params();
    case GroupFamily::Alternating: return "alternating:" + join_params();
    case GroupFamily::ElementaryAbelian: return "elementary_abelian:" + join_params();
    case GroupFamily::Heisenberg: return "heisenberg:" + join_params();
    case GroupFamily::SemidirectCyclic: return "semidirect_cyclic:" + join_params();
    case GroupFamily::DirectProduct: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i].str();
      return s;
    }
    case GroupFamily::Imported: return "file:" + source_path;
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& text) {
  const auto bad = [&](const std::string& why) {
    return GroupError(ErrorCode::InvalidSpec, "cannot parse group spec '" + text + "': " + why);
  };

  // Top-level '*' splits direct-product factors; family names and integer
  // parameters never contain one.
  if (text.find('*') != std::string::npos) {
    GroupSpec spec;
    spec.family = GroupFamily::DirectProduct;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '*')) {
      if (part.empty()) throw bad("empty product factor");
      spec.factors.push_back(GroupSpec::parse(part));
    }
    if (spec.factors.size() < 2) throw bad("direct product needs at least two factors");
    return spec;
  }

  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);

  GroupSpec spec;
  if (head == "file") {
    if (tail.empty()) throw bad("missing file path");
    spec.family = GroupFamily::Imported;
    spec.source_path = tail;
    return spec;
  }

  static const std::map<std::string, GroupFamily> kFamilies = {
      {"cyclic", GroupFamily::Cyclic},
      {"dihedral", GroupFamily::Dihedral},
      {"dicyclic", GroupFamily::Dicyclic},
      {"symmetric", GroupFamily::Symmetric},
      {"alternating", GroupFamily::Alternating},
      {"elementary_abelian", GroupFamily::ElementaryAbelian},
      {"heisenberg", GroupFamily::Heisenberg},
      {"semidirect_cyclic", GroupFamily::SemidirectCyclic},
  };
  const auto it = kFamilies.find(head);
  if (it == kFamilies.end()) throw bad("unknown family '" + head + "'");
  spec.family = it->second;

  std::stringstream ss(tail);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      spec.parameters.push_back(v);
    } catch (const std::exception&) {
      throw bad("bad integer parameter '" + tok + "'");
    }
  }
  check_spec(spec);
  return spec;
}

FiniteGroup construct(const GroupSpec& spec, int order_cap) {
  check_spec(spec);
  if (spec.family == GroupFamily::Imported) {
    return parse_cayley_file(spec.source_path);
  }
  const long long order = spec_order(spec);
  if (order > order_cap) {
    throw GroupError(ErrorCode::OrderCapExceeded,
                     spec.str() + " has order " + std::to_string(order) + " > cap " +
                         std::to_string(order_cap));
  }

  Table table;
  switch (spec.family) {
    case GroupFamily::Cyclic:
      table = cyclic_table(spec.parameters[0]);
      break;
    case GroupFamily::Dihedral:
      table = dihedral_table(spec.parameters[0]);
      break;
    case GroupFamily::Dicyclic:
      table = dicyclic_table(spec.parameters[0]);
      break;
    case GroupFamily::Symmetric:
      table = permutation_table(all_permutations(spec.parameters[0], false));
      break;
    case GroupFamily::Alternating:
      table = permutation_table(all_permutations(spec.parameters[0], true));
      break;
    case GroupFamily::ElementaryAbelian:
      table = elementary_abelian_table(spec.parameters[0], spec.parameters[1]);
      break;
    case GroupFamily::Heisenberg:
      table = heisenberg_table(spec.parameters[0]);
      break;
    case GroupFamily::SemidirectCyclic:
      table = semidirect_cyclic_table(spec.parameters[0], spec.parameters[1], spec.parameters[2]);
      break;
    case GroupFamily::DirectProduct: {
      table = Table{{0}};
      for (const auto& f : spec.factors) {
        const FiniteGroup g = construct(f, order_cap);
        Table ft(g.order(), std::vector<Elem>(g.order()));
        for (int a = 0; a < g.order(); ++a) {
          for (int b = 0; b < g.order(); ++b) ft[a][b] = g.mul(a, b);
        }
        table = direct_product_table(table, ft);
      }
      break;
    }
    case GroupFamily::Imported:
      break;  // handled above
  }
  return FiniteGroup::validate(table, spec.str());
}

namespace {

struct CayleyParser {
  std::istream& in;
  int line_no = 0;

  // Returns the next non-comment, non-blank line; false at EOF.
  bool next_content_line(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }
};

}  // namespace

FiniteGroup parse_cayley_text(const std::string& text, const std::string& name) {
  if (text.empty() || text.back() != '\n') {
    throw GroupError(ErrorCode::SyntaxError, name + ": missing trailing newline");
  }
  std::istringstream in(text);
  CayleyParser parser{in};

  std::string line;
  if (!parser.next_content_line(line)) {
    throw GroupError(ErrorCode::SyntaxError, name + ": empty file, expected 'order N'");
  }
  std::istringstream header(line);
  std::string keyword;
  long long n = -1;
  if (!(header >> keyword >> n) || keyword != "order" || !(header >> std::ws).eof() || n < 1) {
    throw GroupError(ErrorCode::SyntaxError,
                     name + " line " + std::to_string(parser.line_no) +
                         ": expected 'order N' with N >= 1");
  }

  Table table;
  table.reserve(static_cast<size_t>(n));
  for (long long r = 0; r < n; ++r) {
    if (!parser.next_content_line(line)) {
      throw GroupError(ErrorCode::OrderMismatch,
                       name + ": expected " + std::to_string(n) + " table rows, got " +
                           std::to_string(r));
    }
    std::istringstream row_in(line);
    std::vector<Elem> row;
    long long v;
    while (row_in >> v) {
      if (v < 0 || v >= n) {
        throw GroupError(ErrorCode::SyntaxError,
                         name + " line " + std::to_string(parser.line_no) + ": entry " +
                             std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
      }
      row.push_back(static_cast<Elem>(v));
    }
    if (!row_in.eof()) {
      throw GroupError(ErrorCode::SyntaxError,
                       name + " line " + std::to_string(parser.line_no) + ": non-integer token");
    }
    if (static_cast<long long>(row.size()) != n) {
      throw GroupError(ErrorCode::OrderMismatch,
                       name + " line " + std::to_string(parser.line_no) + ": row has " +
                           std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    table.push_back(std::move(row));
  }
  if (parser.next_content_line(line)) {
    throw GroupError(ErrorCode::OrderMismatch,
                     name + " line " + std::to_string(parser.line_no) +
                         ": trailing content after " + std::to_string(n) + " rows");
  }

  try {
    return FiniteGroup::validate(table, name);
  } catch (const GroupError& e) {
    throw GroupError(ErrorCode::ValidationError, name + ": " + e.what());
  }
}

FiniteGroup parse_cayley_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GroupError(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley_text(buf.str(), "file:" + path);
}

std::string serialize_cayley_text(const FiniteGroup& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "# " << g.name() << "\n";
  out << "order " << g.order() << "\n";
  for (int r = 0; r < g.order(); ++r) {
    for (int c = 0; c < g.order(); ++c) {
      if (c) out << ' ';
      out << g.mul(r, c);
    }
    out << "\n";
  }
  return out.str();
}

void serialize_cayley(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw GroupError(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  out << serialize_cayley_text(g);
  if (!out) {
    throw GroupError(ErrorCode::IoError, "write failed for '" + path + "'");
  }
}

std::vector<GroupSpec> odd_order_showcase() {
  return {
      GroupSpec::parse("cyclic:27"),
      GroupSpec::parse("elementary_abelian:3,3"),
      GroupSpec::parse("heisenberg:3"),
      GroupSpec::parse("semidirect_cyclic:7,3,2"),
      GroupSpec::parse("semidirect_cyclic:13,3,3"),
  };
}

std::vector<GroupSpec> default_scan_specs(int max_order) {
  std::vector<GroupSpec> specs;
  const auto add = [&](GroupSpec s) {
    if (spec_order(s) <= max_order) specs.push_back(std::move(s));
  };

  for (int n = 1; n <= max_order; ++n) add(GroupSpec{GroupFamily::Cyclic, {n}});
  for (int n = 3; 2 * n <= max_order; ++n) add(GroupSpec{GroupFamily::Dihedral, {n}});
  for (int n = 2; 4 * n <= max_order; ++n) add(GroupSpec{GroupFamily::Dicyclic, {n}});
  for (int n = 3; n <= 6 && factorial(n) <= max_order; ++n) {
    add(GroupSpec{GroupFamily::Symmetric, {n}});
  }
  for (int n = 4; n <= 6 && factorial(n) / 2 <= max_order; ++n) {
    add(GroupSpec{GroupFamily::Alternating, {n}});
  }
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int k = 2;; ++k) {
      long long m = 1;
      for (int i = 0; i < k; ++i) m *= p;
      if (m > max_order) break;
      add(GroupSpec{GroupFamily::ElementaryAbelian, {p, k}});
    }
  }
  for (int p : {3, 5, 7}) {
    if (static_cast<long long>(p) * p * p <= max_order) {
      add(GroupSpec{GroupFamily::Heisenberg, {p}});
    }
  }
  // Pinned nonabelian semidirect specimens; the family itself is unbounded.
  for (const char* s : {"semidirect_cyclic:7,3,2", "semidirect_cyclic:5,4,2",
                        "semidirect_cyclic:9,3,4"}) {
    add(GroupSpec::parse(s));
  }
  for (const auto& s : odd_order_showcase()) add(s);

  std::set<std::string> seen;
  std::vector<GroupSpec> unique;
  for (auto& s : specs) {
    if (seen.insert(s.str()).second) unique.push_back(std::move(s));
  }
  std::sort(unique.begin(), unique.end(), [](const GroupSpec& a, const GroupSpec& b) {
    const long long oa = spec_order(a), ob = spec_order(b);
    return oa != ob ? oa < ob : a.str() < b.str();
  });
  return unique;
}

}  // namespace grouplab
