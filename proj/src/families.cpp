#include "edim/families.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace edim {

namespace {

using Edges = std::vector<std::pair<int, int>>;
using Labels = std::vector<std::string>;

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(Errc::parameter_out_of_domain, what);
}

[[noreturn]] void spec_error(const std::string& what) {
  throw Error(Errc::parse_error, "family spec: " + what);
}

struct KindInfo {
  std::string_view name;
  FamilyKind kind;
  int params;  // -1 marks the nested two-part kinds
};

constexpr KindInfo kKinds[] = {
    {"path", FamilyKind::path, 1},
    {"cycle", FamilyKind::cycle, 1},
    {"complete", FamilyKind::complete, 1},
    {"bipartite", FamilyKind::complete_bipartite, 2},
    {"star", FamilyKind::star, 1},
    {"wheel", FamilyKind::wheel, 1},
    {"fan", FamilyKind::fan, 1},
    {"grid", FamilyKind::grid, 2},
    {"product", FamilyKind::cartesian_product, -1},
    {"torus", FamilyKind::torus, 2},
    {"hypercube", FamilyKind::hypercube, 1},
    {"circulant", FamilyKind::circulant, 2},
    {"join", FamilyKind::join, -1},
    {"broom", FamilyKind::broom, 2},
    {"familyF", FamilyKind::family_f, 3},
    {"grn", FamilyKind::g_rn, 2},
    {"gr", FamilyKind::g_r, 2},
    {"gprime", FamilyKind::g_prime, 2},
    {"gdprime", FamilyKind::g_double_prime, 2},
    {"figure1", FamilyKind::figure1, 0},
};

const KindInfo& kind_info(FamilyKind kind) {
  for (const auto& info : kKinds)
    if (info.kind == kind) return info;
  throw std::logic_error("unknown family kind");
}

long long parse_number(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    spec_error("bad number \"" + std::string(text) + "\"");
  return value;
}

/// Splits on commas at parenthesis depth zero.
std::vector<std::string_view> split_args(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

LabeledGraph make_labeled(int n, Edges edges, Labels labels) {
  Graph g(n, std::move(edges));
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels)
    if (!seen.insert(label).second)
      throw std::logic_error("duplicate vertex label " + label);
  return {std::move(g), std::move(labels)};
}

int want_int(long long value, const char* what) {
  if (value < -(1LL << 30) || value > (1LL << 30)) domain_error(std::string(what) + " out of range");
  return static_cast<int>(value);
}

LabeledGraph build_path(int n) {
  if (n < 1) domain_error("path requires n >= 1 (got n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_labeled(n, std::move(edges), std::move(labels));
}

LabeledGraph build_cycle(int n) {
  if (n < 3) domain_error("cycle requires n >= 3 (got n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_labeled(n, std::move(edges), std::move(labels));
}

LabeledGraph build_complete(int n) {
  if (n < 1) domain_error("complete requires n >= 1 (got n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_labeled(n, std::move(edges), std::move(labels));
}

LabeledGraph build_bipartite(int r, int t) {
  if (r < 1 || t < 1)
    domain_error("bipartite requires r, t >= 1 (got r=" + std::to_string(r) +
                 ", t=" + std::to_string(t) + ")");
  Edges edges;
  Labels labels;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j) edges.emplace_back(i, r + j);
  for (int i = 0; i < r; ++i) labels.push_back("a_" + std::to_string(i + 1));
  for (int j = 0; j < t; ++j) labels.push_back("b_" + std::to_string(j + 1));
  return make_labeled(r + t, std::move(edges), std::move(labels));
}

LabeledGraph build_star(int b) {
  if (b < 1) domain_error("star requires b >= 1 leaves (got b=" + std::to_string(b) + ")");
  Edges edges;
  Labels labels{"c"};
  for (int l = 1; l <= b; ++l) {
    edges.emplace_back(0, l);
    labels.push_back("l_" + std::to_string(l));
  }
  return make_labeled(b + 1, std::move(edges), std::move(labels));
}

// Hub last keeps rim ids 0..n-1 aligned with the cycle/path layouts.
LabeledGraph build_wheel(int n) {
  if (n < 3) domain_error("wheel requires n >= 3 (got n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
  for (int i = 0; i < n; ++i) labels.push_back("g_" + std::to_string(i + 1));
  labels.push_back("x");
  return make_labeled(n + 1, std::move(edges), std::move(labels));
}

LabeledGraph build_fan(int n) {
  if (n < 1) domain_error("fan requires n >= 1 (got n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
  for (int i = 0; i < n; ++i) labels.push_back("g_" + std::to_string(i + 1));
  labels.push_back("x");
  return make_labeled(n + 1, std::move(edges), std::move(labels));
}

LabeledGraph build_grid(int r, int t) {
  if (t < 2 || r < t)
    domain_error("grid requires r >= t >= 2 (got r=" + std::to_string(r) +
                 ", t=" + std::to_string(t) + ")");
  auto id = [t](int x, int y) { return x * t + y; };
  Edges edges;
  Labels labels;
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < t; ++y) {
      if (y + 1 < t) edges.emplace_back(id(x, y), id(x, y + 1));
      if (x + 1 < r) edges.emplace_back(id(x, y), id(x + 1, y));
    }
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < t; ++y)
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return make_labeled(r * t, std::move(edges), std::move(labels));
}

LabeledGraph build_product(const LabeledGraph& a, const LabeledGraph& b) {
  const int nb = b.graph.vertex_count();
  auto id = [nb](int va, int vb) { return va * nb + vb; };
  Edges edges;
  Labels labels;
  for (int va = 0; va < a.graph.vertex_count(); ++va)
    for (auto [x, y] : b.graph.edges()) edges.emplace_back(id(va, x), id(va, y));
  for (auto [x, y] : a.graph.edges())
    for (int vb = 0; vb < nb; ++vb) edges.emplace_back(id(x, vb), id(y, vb));
  for (int va = 0; va < a.graph.vertex_count(); ++va)
    for (int vb = 0; vb < nb; ++vb)
      labels.push_back("(" + a.labels[va] + "," + b.labels[vb] + ")");
  return make_labeled(a.graph.vertex_count() * nb, std::move(edges), std::move(labels));
}

LabeledGraph build_torus(int r, int t) {
  if (r < 3 || t < 3)
    domain_error("torus requires cycle sizes r, t >= 3 (got r=" + std::to_string(r) +
                 ", t=" + std::to_string(t) + ")");
  auto id = [t](int i, int j) { return i * t + j; };
  Edges edges;
  Labels labels;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j) {
      edges.emplace_back(id(i, j), id(i, (j + 1) % t));
      edges.emplace_back(id(i, j), id((i + 1) % r, j));
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j)
      labels.push_back("(a_" + std::to_string(i) + ",b_" + std::to_string(j) + ")");
  return make_labeled(r * t, std::move(edges), std::move(labels));
}

LabeledGraph build_hypercube(int k) {
  if (k < 1 || k > 20) domain_error("hypercube requires 1 <= n <= 20 (got n=" + std::to_string(k) + ")");
  const int n = 1 << k;
  Edges edges;
  Labels labels;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b) {
      int u = v ^ (1 << b);
      if (u > v) edges.emplace_back(v, u);
    }
  for (int v = 0; v < n; ++v) {
    std::string bits;
    for (int b = 0; b < k; ++b) bits += ((v >> b) & 1) ? '1' : '0';
    labels.push_back(bits);  // coordinate 1 printed first
  }
  return make_labeled(n, std::move(edges), std::move(labels));
}

LabeledGraph build_circulant(int n, int r) {
  if (n < 3 || r < 1 || 2 * r > n)
    domain_error("circulant requires n >= 3 and 1 <= 2r <= n (got n=" + std::to_string(n) +
                 ", r=" + std::to_string(r) + ")");
  Edges edges;
  Labels labels;
  std::unordered_set<long long> seen;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= r; ++j) {
      int a = i, b = (i + j) % n;
      if (a > b) std::swap(a, b);
      if (seen.insert(static_cast<long long>(a) * n + b).second) edges.emplace_back(a, b);
    }
  for (int i = 0; i < n; ++i) labels.push_back("v_" + std::to_string(i));
  return make_labeled(n, std::move(edges), std::move(labels));
}

LabeledGraph build_join(const LabeledGraph& a, const LabeledGraph& b) {
  const int na = a.graph.vertex_count();
  const int nb = b.graph.vertex_count();
  Edges edges;
  Labels labels;
  for (auto [u, v] : a.graph.edges()) edges.emplace_back(u, v);
  for (auto [u, v] : b.graph.edges()) edges.emplace_back(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
  for (const auto& l : a.labels) labels.push_back("l:" + l);
  for (const auto& l : b.labels) labels.push_back("r:" + l);
  return make_labeled(na + nb, std::move(edges), std::move(labels));
}

// Path handle first (its free end gets id 0), then the star center, then the
// star leaves: p_q - ... - p_1 - c - {l_1..l_r}.
LabeledGraph build_broom(int r, int n) {
  if (r < 2 || r > n - 2)
    domain_error("broom requires 2 <= r <= n-2 (got r=" + std::to_string(r) +
                 ", n=" + std::to_string(n) + ")");
  const int q = n - r - 1;  // handle length, >= 1
  Edges edges;
  Labels labels;
  for (int i = 0; i + 1 < q; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(q - 1, q);
  for (int l = 1; l <= r; ++l) edges.emplace_back(q, q + l);
  for (int i = 0; i < q; ++i) labels.push_back("p_" + std::to_string(q - i));
  labels.push_back("c");
  for (int l = 1; l <= r; ++l) labels.push_back("l_" + std::to_string(l));
  return make_labeled(n, std::move(edges), std::move(labels));
}

// Hub x joined to a matchings-block, then a path bridge to the center s of a
// star: x + a*K2, path of c vertices, star with b leaves. Order 2a+b+c+2.
LabeledGraph build_family_f(int a, int b, int c) {
  if (a < 1 || b < 2 || c < 0)
    domain_error("familyF requires a >= 1, b >= 2, c >= 0 (got a=" + std::to_string(a) +
                 ", b=" + std::to_string(b) + ", c=" + std::to_string(c) + ")");
  const int s = 2 * a + c + 1;
  Edges edges;
  Labels labels{"x"};
  for (int i = 1; i <= 2 * a; ++i) edges.emplace_back(0, i);
  for (int i = 0; i < a; ++i) {
    edges.emplace_back(2 * i + 1, 2 * i + 2);
    labels.push_back("k_" + std::to_string(i + 1) + "a");
    labels.push_back("k_" + std::to_string(i + 1) + "b");
  }
  int prev = 0;
  for (int p = 2 * a + 1; p <= 2 * a + c; ++p) {
    edges.emplace_back(prev, p);
    labels.push_back("p_" + std::to_string(p - 2 * a));
    prev = p;
  }
  edges.emplace_back(prev, s);
  labels.push_back("s");
  for (int l = 1; l <= b; ++l) {
    edges.emplace_back(s, s + l);
    labels.push_back("t_" + std::to_string(l));
  }
  return make_labeled(2 * a + b + c + 2, std::move(edges), std::move(labels));
}

// Hub x joined to r*K2 plus one extra degree-one vertex w; a path of
// n-2r-2 vertices hangs off w.
LabeledGraph build_g_rn(int r, int n) {
  if (r < 2 || n < 2 * r + 2)
    domain_error("grn requires r >= 2 and n >= 2r+2 (got r=" + std::to_string(r) +
                 ", n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels{"x"};
  for (int i = 1; i <= 2 * r + 1; ++i) edges.emplace_back(0, i);
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(2 * i + 1, 2 * i + 2);
    labels.push_back("k_" + std::to_string(i + 1) + "a");
    labels.push_back("k_" + std::to_string(i + 1) + "b");
  }
  labels.push_back("w");
  int prev = 2 * r + 1;
  for (int p = 2 * r + 2; p < n; ++p) {
    edges.emplace_back(prev, p);
    labels.push_back("p_" + std::to_string(p - 2 * r - 1));
    prev = p;
  }
  return make_labeled(n, std::move(edges), std::move(labels));
}

// Hub x joined to r*K2; a path of n-2r-1 vertices hangs off the last
// non-hub vertex.
LabeledGraph build_g_r(int r, int n) {
  if (r < 2 || n < 2 * r + 1)
    domain_error("gr requires r >= 2 and n >= 2r+1 (got r=" + std::to_string(r) +
                 ", n=" + std::to_string(n) + ")");
  Edges edges;
  Labels labels{"x"};
  for (int i = 1; i <= 2 * r; ++i) edges.emplace_back(0, i);
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(2 * i + 1, 2 * i + 2);
    labels.push_back("k_" + std::to_string(i + 1) + "a");
    labels.push_back("k_" + std::to_string(i + 1) + "b");
  }
  int prev = 2 * r;
  for (int p = 2 * r + 1; p < n; ++p) {
    edges.emplace_back(prev, p);
    labels.push_back("p_" + std::to_string(p - 2 * r));
    prev = p;
  }
  return make_labeled(n, std::move(edges), std::move(labels));
}

// Hub x joined to (2r-t+1)*K1 and (t-r)*K2, plus a pendant vertex on the
// last K1. Order t+3.
LabeledGraph build_g_prime(int r, int t) {
  if (r < 2 || t < r || t > 2 * r - 2)
    domain_error("gprime requires 2 <= r <= t <= 2r-2 (got r=" + std::to_string(r) +
                 ", t=" + std::to_string(t) + ")");
  const int q = 2 * r - t + 1;
  const int n = t + 3;
  Edges edges;
  Labels labels{"x"};
  for (int i = 1; i <= q + 2 * (t - r); ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= q; ++i) labels.push_back("s_" + std::to_string(i));
  for (int i = 0; i < t - r; ++i) {
    edges.emplace_back(q + 2 * i + 1, q + 2 * i + 2);
    labels.push_back("k_" + std::to_string(i + 1) + "a");
    labels.push_back("k_" + std::to_string(i + 1) + "b");
  }
  edges.emplace_back(q, n - 1);
  labels.push_back("p_1");
  return make_labeled(n, std::move(edges), std::move(labels));
}

// As gprime but without the pendant vertex. Order t+2.
LabeledGraph build_g_double_prime(int r, int t) {
  if (r < 2 || t < r || t > 2 * r - 2)
    domain_error("gdprime requires 2 <= r <= t <= 2r-2 (got r=" + std::to_string(r) +
                 ", t=" + std::to_string(t) + ")");
  const int q = 2 * r - t + 1;
  Edges edges;
  Labels labels{"x"};
  for (int i = 1; i <= q + 2 * (t - r); ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= q; ++i) labels.push_back("s_" + std::to_string(i));
  for (int i = 0; i < t - r; ++i) {
    edges.emplace_back(q + 2 * i + 1, q + 2 * i + 2);
    labels.push_back("k_" + std::to_string(i + 1) + "a");
    labels.push_back("k_" + std::to_string(i + 1) + "b");
  }
  return make_labeled(t + 2, std::move(edges), std::move(labels));
}

// 13-vertex graph whose vertex pairs are resolved by several 2-sets while no
// 2-set resolves all edge pairs.
LabeledGraph build_figure1() {
  const Edges label_edges = {{1, 2}, {2, 3}, {3, 6},  {6, 5},  {5, 4},  {4, 7},
                             {7, 8}, {8, 9}, {9, 11}, {11, 8}, {8, 10}, {10, 7},
                             {2, 5}, {5, 8}, {1, 4},  {6, 9},  {10, 12}, {11, 13}};
  Edges edges;
  for (auto [u, v] : label_edges) edges.emplace_back(u - 1, v - 1);
  Labels labels;
  for (int v = 1; v <= 13; ++v) labels.push_back(std::to_string(v));
  return make_labeled(13, std::move(edges), std::move(labels));
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) spec_error("empty spec");

  std::string_view head = text;
  std::string_view args;
  bool nested = false;
  if (auto paren = text.find('('); paren != std::string_view::npos) {
    if (text.back() != ')') spec_error("unbalanced parentheses in \"" + std::string(text) + "\"");
    head = text.substr(0, paren);
    args = text.substr(paren + 1, text.size() - paren - 2);
    nested = true;
  } else if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    args = text.substr(colon + 1);
  }

  const KindInfo* info = nullptr;
  for (const auto& k : kKinds)
    if (k.name == head) {
      info = &k;
      break;
    }
  if (!info) spec_error("unknown family \"" + std::string(head) + "\"");

  FamilySpec spec;
  spec.kind = info->kind;
  if (info->params < 0) {
    if (!nested) spec_error(std::string(head) + " takes two nested specs, e.g. " +
                            std::string(head) + "(path:3,cycle:4)");
    auto pieces = split_args(args);
    if (pieces.size() != 2) spec_error(std::string(head) + " takes exactly two nested specs");
    spec.parts.push_back(parse(pieces[0]));
    spec.parts.push_back(parse(pieces[1]));
    return spec;
  }
  if (nested) spec_error(std::string(head) + " does not take nested specs");
  if (info->params == 0) {
    if (!args.empty()) spec_error(std::string(head) + " takes no parameters");
    return spec;
  }
  if (args.empty()) spec_error(std::string(head) + " needs " + std::to_string(info->params) +
                               " parameter(s)");
  for (auto piece : split_args(args)) spec.params.push_back(parse_number(piece));
  if (static_cast<int>(spec.params.size()) != info->params)
    spec_error(std::string(head) + " takes " + std::to_string(info->params) +
               " parameter(s), got " + std::to_string(spec.params.size()));
  return spec;
}

std::string FamilySpec::to_string() const {
  const auto& info = kind_info(kind);
  std::string out(info.name);
  if (info.params < 0)
    return out + "(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

std::optional<int> LabeledGraph::find_label(std::string_view label) const {
  for (std::size_t id = 0; id < labels.size(); ++id)
    if (labels[id] == label) return static_cast<int>(id);
  return std::nullopt;
}

LabeledGraph make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path: return build_path(want_int(spec.params[0], "path n"));
    case FamilyKind::cycle: return build_cycle(want_int(spec.params[0], "cycle n"));
    case FamilyKind::complete: return build_complete(want_int(spec.params[0], "complete n"));
    case FamilyKind::complete_bipartite:
      return build_bipartite(want_int(spec.params[0], "bipartite r"),
                             want_int(spec.params[1], "bipartite t"));
    case FamilyKind::star: return build_star(want_int(spec.params[0], "star b"));
    case FamilyKind::wheel: return build_wheel(want_int(spec.params[0], "wheel n"));
    case FamilyKind::fan: return build_fan(want_int(spec.params[0], "fan n"));
    case FamilyKind::grid:
      return build_grid(want_int(spec.params[0], "grid r"), want_int(spec.params[1], "grid t"));
    case FamilyKind::cartesian_product:
      return build_product(make_family(spec.parts[0]), make_family(spec.parts[1]));
    case FamilyKind::torus:
      return build_torus(want_int(spec.params[0], "torus r"), want_int(spec.params[1], "torus t"));
    case FamilyKind::hypercube: return build_hypercube(want_int(spec.params[0], "hypercube n"));
    case FamilyKind::circulant:
      return build_circulant(want_int(spec.params[0], "circulant n"),
                             want_int(spec.params[1], "circulant r"));
    case FamilyKind::join:
      return build_join(make_family(spec.parts[0]), make_family(spec.parts[1]));
    case FamilyKind::broom:
      return build_broom(want_int(spec.params[0], "broom r"), want_int(spec.params[1], "broom n"));
    case FamilyKind::family_f:
      return build_family_f(want_int(spec.params[0], "familyF a"),
                            want_int(spec.params[1], "familyF b"),
                            want_int(spec.params[2], "familyF c"));
    case FamilyKind::g_rn:
      return build_g_rn(want_int(spec.params[0], "grn r"), want_int(spec.params[1], "grn n"));
    case FamilyKind::g_r:
      return build_g_r(want_int(spec.params[0], "gr r"), want_int(spec.params[1], "gr n"));
    case FamilyKind::g_prime:
      return build_g_prime(want_int(spec.params[0], "gprime r"),
                           want_int(spec.params[1], "gprime t"));
    case FamilyKind::g_double_prime:
      return build_g_double_prime(want_int(spec.params[0], "gdprime r"),
                                  want_int(spec.params[1], "gdprime t"));
    case FamilyKind::figure1: return build_figure1();
  }
  throw std::logic_error("unhandled family kind");
}

LabeledGraph realization_graph(int r, int t, int n) {
  if (r < 2) domain_error("realize requires r >= 2 (got r=" + std::to_string(r) + ")");
  if (t < r || t > 2 * r)
    domain_error("realize requires r <= t <= 2r (got r=" + std::to_string(r) +
                 ", t=" + std::to_string(t) + ")");
  if (t > n - 2)
    domain_error("realize requires t <= n-2 (got t=" + std::to_string(t) +
                 ", n=" + std::to_string(n) + ")");
  if (t == 2 * r) return build_g_rn(r, n);
  if (t == 2 * r - 1) return build_g_r(r, n);
  if (t <= n - 4) return build_family_f(t - r + 1, 2 * r - t, n - t - 4);
  if (t == n - 3) return build_g_prime(r, t);
  return build_g_double_prime(r, t);  // t == n-2
}

std::vector<int> hypercube_generator(int n) {
  if (n < 1 || n > 20) domain_error("hypercube generator requires 1 <= n <= 20");
  const int full = (1 << n) - 1;
  std::vector<int> out;
  for (int i = n - 2; i >= 0; --i) out.push_back(full ^ (1 << i));
  out.push_back(full);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> torus_generator(int r, int t) {
  if (r < 1 || t < 1) domain_error("torus generator requires r, t >= 1");
  return {0, 2 * t, r * (4 * t) + t};
}

}  // namespace edim
