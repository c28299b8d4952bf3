#include "longcycle/families.hpp"

#include <charconv>
#include <numeric>

namespace longcycle {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(std::string_view text) {
  auto number = [&](std::string_view part) {
    long long value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size())
      throw ParseError(static_cast<std::size_t>(part.data() - text.data()), "not a rational number");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(number(text), 1);
  const long long den = number(text.substr(slash + 1));
  if (den == 0) throw ParseError(slash + 1, "zero denominator");
  return Rational(number(text.substr(0, slash)), den);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Sharpness: return "sharpness";
    case Family::HjG1: return "hj-g1";
    case Family::HjG2: return "hj-g2";
    case Family::Ln: return "ln";
  }
  return "?";
}

std::string LabeledFamily::describe() const {
  std::string out = to_string(family);
  if (alpha) out += " alpha=" + alpha->str();
  out += " k=" + std::to_string(k);
  out += (family == Family::HjG2 ? " copies=" : " t=") + std::to_string(t);
  out += " n=" + std::to_string(graph.order());
  if (x) out += " x=" + std::to_string(*x);
  if (y) out += " y=" + std::to_string(*y);
  return out;
}

namespace {

void require_param(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

void require_capacity(long long n, const char* who) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::Capacity, std::string(who) + ": " + std::to_string(n) + " vertices exceeds capacity " +
                                         std::to_string(kMaxVertices));
  }
}

// Adds K_a v complement(K_b) at the end of b and returns its first vertex.
Vertex add_split_block(GraphBuilder& b, int a, int indep) {
  const Vertex first = b.order();
  for (int i = 0; i < a + indep; ++i) b.add_vertex();
  for (Vertex u = first; u < first + a; ++u) {
    for (Vertex v = u + 1; v < first + a; ++v) b.add_edge(u, v);
    for (Vertex w = first + a; w < first + a + indep; ++w) b.add_edge(u, w);
  }
  return first;
}

LabeledFamily split_family(Family fam, int a, int indep, int t) {
  LabeledFamily out;
  out.family = fam;
  out.t = t;
  GraphBuilder b;
  std::vector<Vertex> clique_sides;
  for (int i = 0; i < t; ++i) {
    const Vertex first = add_split_block(b, a, indep);
    for (Vertex v = first; v < first + a; ++v) clique_sides.push_back(v);
  }
  const Vertex x = b.add_vertex();
  const Vertex y = b.add_vertex();
  for (Vertex v : clique_sides) b.add_edge(x, v).add_edge(y, v);
  out.graph = b.build();
  out.x = x;
  out.y = y;
  return out;
}

}  // namespace

LabeledFamily gen_sharpness(int k, int t) {
  require_param(k >= 5 && k % 2 == 1, "gen_sharpness: k must be odd and at least 5");
  require_param(t >= 1, "gen_sharpness: t must be at least 1");
  require_capacity(static_cast<long long>(t) * (k - 1) + 2, "gen_sharpness");
  LabeledFamily out = split_family(Family::Sharpness, (k - 1) / 2, (k - 1) / 2, t);
  out.k = k;
  return out;
}

LabeledFamily gen_hj_g1(int k, int t) {
  require_param(k >= 3, "gen_hj_g1: k must be at least 3");
  require_param(t >= 1, "gen_hj_g1: t must be at least 1");
  require_capacity(2LL * k - 2 + t, "gen_hj_g1");
  const Graph rest = disjoint_union(complete_graph(2 * k - 4), Graph(t));
  LabeledFamily out;
  out.family = Family::HjG1;
  out.graph = join(complete_graph(2), rest);
  out.k = k;
  out.t = t;
  return out;
}

LabeledFamily gen_hj_g2(int k, int copies) {
  require_param(k >= 5 && k % 2 == 1, "gen_hj_g2: k must be odd and at least 5");
  require_param(copies >= 1, "gen_hj_g2: copies must be at least 1");
  require_capacity(k + 1 + static_cast<long long>(copies) * (k - 1), "gen_hj_g2");
  const int h = (k - 1) / 2;
  GraphBuilder b(complete_graph(k + 1));
  for (int i = 0; i < copies; ++i) {
    const Vertex first = add_split_block(b, h, h);
    for (Vertex v = first; v < first + h; ++v) b.add_edge(v, 0).add_edge(v, 1);
  }
  LabeledFamily out;
  out.family = Family::HjG2;
  out.graph = b.build();
  out.k = k;
  out.t = copies;
  return out;
}

LabeledFamily gen_ln_family(Rational alpha, int k, int t) {
  require_param(alpha.num > 0 && 2 * alpha.num <= alpha.den, "gen_ln_family: alpha must lie in (0, 1/2]");
  require_param(k >= 1 && t >= 1, "gen_ln_family: k and t must be positive");
  const long long scaled = alpha.num * (k - 1);
  require_param(scaled % alpha.den == 0, "gen_ln_family: alpha(k-1) is not an integer");
  const long long a = scaled / alpha.den;
  require_param(a >= 2, "gen_ln_family: alpha(k-1) must be at least 2");
  require_capacity(static_cast<long long>(t) * (k - 1) + 2, "gen_ln_family");
  LabeledFamily out = split_family(Family::Ln, static_cast<int>(a), k - 1 - static_cast<int>(a), t);
  out.k = k;
  out.alpha = alpha;
  return out;
}

FamilyClaims claimed(const LabeledFamily& f) {
  FamilyClaims c;
  const int n = f.graph.order();
  switch (f.family) {
    case Family::Sharpness:
      c.high_degree = (n - 2) / 2;
      c.longest_xy = f.k - 1;
      break;
    case Family::HjG1:
      c.high_degree = 2 * f.k - 2;
      c.circumference = 2 * f.k - 1;
      break;
    case Family::HjG2:
      c.high_degree = (n + f.k + 1) / 2;
      c.circumference = 2 * f.k - 1;
      break;
    case Family::Ln: {
      const long long a = f.alpha->num * (f.k - 1) / f.alpha->den;
      c.high_degree = static_cast<int>(f.alpha->num * (n - 2) / f.alpha->den);
      c.longest_xy = static_cast<int>(2 * a);
      break;
    }
  }
  return c;
}

}  // namespace longcycle
