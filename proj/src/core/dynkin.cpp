#include "core/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "core/errors.hpp"

namespace meshk0 {

std::string DynkinDiagram::name() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return f + std::to_string(n);
}

DynkinDiagram build_dynkin(Family family, int n) {
  DynkinDiagram g;
  g.family = family;
  g.n = n;
  switch (family) {
    case Family::A:
      if (n < 1) throw ParameterError("A_n requires n >= 1");
      for (int i = 1; i < n; ++i) g.arrows.emplace_back(i, i + 1);
      g.coxeter = n + 1;
      break;
    case Family::D:
      if (n < 4) throw ParameterError("D_n requires n >= 4");
      for (int i = 1; i < n - 2; ++i) g.arrows.emplace_back(i, i + 1);
      g.arrows.emplace_back(n - 2, n - 1);
      g.arrows.emplace_back(n - 2, n);
      g.coxeter = 2 * n - 2;
      break;
    case Family::E: {
      if (n < 6 || n > 8) throw ParameterError("E_n requires n in {6,7,8}");
      for (int i = 1; i < n - 1; ++i) g.arrows.emplace_back(i, i + 1);
      g.arrows.emplace_back(n - 3, n);
      static constexpr int kCoxeter[] = {12, 18, 30};
      g.coxeter = kCoxeter[n - 6];
      break;
    }
  }
  g.depths.assign(n, 0);
  for (const auto& [i, j] : g.arrows) g.depths[j - 1] = g.depths[i - 1] + 1;
  return g;
}

const char* type_name(MeshType type) {
  static constexpr const char* kNames[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
  return kNames[static_cast<int>(type)];
}

MeshTriple MeshTriple::make(Family family, int n, int l, int t) {
  MeshTriple m;
  m.delta_ = build_dynkin(family, n);
  if (l < 1) throw ParameterError("l must be positive");
  m.l_ = l;
  m.t_ = t;
  auto invalid = [&] {
    return ParameterError("no quiver Q_{" + m.delta_.name() + "," + std::to_string(l) + "," + std::to_string(t) + "}");
  };
  if (t == 1) {
    m.k_ = l;
    if (family == Family::A)
      m.type_ = MeshType::I;
    else if (family == Family::D)
      m.type_ = MeshType::IV;
    else
      m.type_ = n == 6 ? MeshType::VII : n == 7 ? MeshType::IX : MeshType::X;
  } else if (t == 2) {
    if (family == Family::A && n % 2 == 1 && l % 2 == 0) {
      m.type_ = MeshType::II;
      m.k_ = l / 2;
    } else if (family == Family::A && n % 2 == 0 && l % 2 == 1) {
      m.type_ = MeshType::III;
      m.k_ = (l + 1) / 2;
    } else if (family == Family::D && l % 2 == 0) {
      m.type_ = MeshType::V;
      m.k_ = l / 2;
    } else if (family == Family::E && n == 6 && l % 2 == 0) {
      m.type_ = MeshType::VIII;
      m.k_ = l / 2;
    } else {
      throw invalid();
    }
  } else if (t == 3) {
    if (family != Family::D || n != 4 || l % 3 != 0) throw invalid();
    m.type_ = MeshType::VI;
    m.k_ = l / 3;
  } else {
    throw invalid();
  }
  int base = m.type_ == MeshType::III ? 2 * m.k_ - 1 : m.k_;
  m.d_ = std::gcd(m.c(), base);
  m.r_ = m.c() / m.d_;
  m.q_ = base / m.d_;
  return m;
}

MeshTriple MeshTriple::parse(const std::string& text) {
  static const std::regex kSyntax(R"(\s*([ADE])(\d+):l=(\d+):t=(\d+)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, kSyntax)) throw ParseError("malformed triple '" + text + "'");
  Family family = match[1] == "A" ? Family::A : match[1] == "D" ? Family::D : Family::E;
  try {
    return make(family, std::stoi(match[2]), std::stoi(match[3]), std::stoi(match[4]));
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range in '" + text + "'");
  }
}

std::string MeshTriple::to_string() const {
  return delta_.name() + ":l=" + std::to_string(l_) + ":t=" + std::to_string(t_);
}

std::vector<MeshTriple> triple_grid(int nmax, int kmax) {
  std::vector<MeshTriple> out;
  auto add_family = [&](Family f, int n) {
    for (int k = 1; k <= kmax; ++k) {
      out.push_back(MeshTriple::make(f, n, k, 1));
      if (f == Family::A && n % 2 == 1) out.push_back(MeshTriple::make(f, n, 2 * k, 2));
      if (f == Family::A && n % 2 == 0) out.push_back(MeshTriple::make(f, n, 2 * k - 1, 2));
      if (f == Family::D) out.push_back(MeshTriple::make(f, n, 2 * k, 2));
      if (f == Family::D && n == 4) out.push_back(MeshTriple::make(f, n, 3 * k, 3));
      if (f == Family::E && n == 6) out.push_back(MeshTriple::make(f, n, 2 * k, 2));
    }
  };
  for (int n = 1; n <= nmax; ++n) add_family(Family::A, n);
  for (int n = 4; n <= nmax; ++n) add_family(Family::D, n);
  for (int n = 6; n <= 8; ++n) add_family(Family::E, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace meshk0
