#include "sdlcp/problems.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdlcp/detail/rng.hpp"

namespace sdlcp {

SdlcpProblem example1() {
  const Matrix a = {{17.25, -1.75, -1.75, -1.75, -1.75},
                    {-1.75, 16.25, -2.0, 0.0, 0.0},
                    {-1.75, -2.0, 16.25, -2.0, 0.0},
                    {-1.75, 0.0, -2.0, 16.25, -2.0},
                    {-1.75, 0.0, 0.0, -2.0, 16.25}};
  const SymmetricMatrix q = {{-9.25, 1.25, 1.25, 1.25, 1.25},
                             {1.25, -8.25, 1.5, 0.0, 0.0},
                             {1.25, 1.5, -8.25, 1.5, 0.0},
                             {1.25, 0.0, 1.5, -8.25, 1.5},
                             {1.25, 0.0, 0.0, 1.5, -8.25}};
  const SymmetricMatrix x_ref = {{0.0313, 0.0020, 0.0020, 0.0020, 0.0020},
                                 {0.0020, 0.0313, 0.0019, 0.0, 0.0},
                                 {0.0020, 0.0019, 0.0312, 0.0019, 0.0},
                                 {0.0020, 0.0, 0.0019, 0.0312, 0.0019},
                                 {0.0020, 0.0, 0.0, 0.0019, 0.0313}};
  SdlcpProblem p;
  p.name = "example1";
  p.n = 5;
  p.l = LinearTransformation::two_sided(a);
  p.q = q;
  p.x_start = 0.0620 * SymmetricMatrix::identity(5);
  p.x_ref = x_ref;
  return p;
}

SdlcpProblem example2() {
  const Matrix a = {{6.0, -1.0, 0.0, 0.0, 0.0},  {-0.1, 6.0, -1.0, 0.0, 0.0},
                    {0.0, -0.1, 6.0, -1.0, 0.0}, {0.0, 0.0, -0.1, 6.0, -1.0},
                    {0.0, 0.0, 0.0, -0.1, 6.0},  {0.0, 0.0, 0.0, 0.0, -0.1}};
  const Matrix b = {{1.0, 0.0, 0.0, 0.0, 0.0},    {-0.4, 1.0, 0.0, 0.0, 0.0},
                    {-0.4, -0.4, 1.0, 0.0, 0.0},  {-0.4, 0.0, -0.4, 1.0, 0.0},
                    {-0.4, 0.0, 0.0, -0.4, 1.0},  {-0.4, 0.0, 0.0, 0.0, -0.4}};
  const SymmetricMatrix x_ref = {{0.1639, -0.0215, -0.0342, -0.0328, -0.0300},
                                 {-0.0215, 0.1553, -0.0227, -0.0019, -0.0027},
                                 {-0.0342, -0.0227, 0.1558, -0.0194, 0.0014},
                                 {-0.0328, -0.0019, -0.0194, 0.1564, -0.0189},
                                 {-0.0300, -0.0027, 0.0014, -0.0189, 0.1598}};
  const Matrix at = a.transposed();
  SdlcpProblem p;
  p.name = "example2";
  p.n = 5;
  p.l = LinearTransformation::lyapunov(SymmetricMatrix::symmetrized(at * a));
  p.q = SymmetricMatrix::symmetrized(-0.5 * (at * b + b.transposed() * a));
  p.x_start = 0.2369 * SymmetricMatrix::identity(5);
  p.x_ref = x_ref;
  return p;
}

SdlcpProblem example3() {
  const Matrix a = {{-0.3157, 0.0330, 0.0603}, {-0.3274, -0.0158, 0.0625},
                    {-0.3569, 0.0787, 0.0563}, {-0.2994, 0.0301, 0.0496},
                    {-0.3243, -0.0048, 0.0715}, {-0.3447, 0.0736, 0.0545},
                    {-0.2417, 0.0709, 0.0522}, {-0.2063, -0.0099, 0.0233},
                    {-0.3285, 0.1585, 0.0979}, {-0.2484, 0.0878, 0.0622},
                    {-0.2196, 0.0023, 0.0280}, {-0.3148, 0.1506, 0.0922}};
  const Matrix b = {{-1.4257, 0.1528, 0.4398}, {-1.4024, -0.3092, 0.4187},
                    {-1.3766, 0.4366, 0.4197}, {-1.4274, 0.1424, 0.4353},
                    {-1.3994, -0.3095, 0.4206}, {-1.3716, 0.4285, 0.4193},
                    {-1.4269, 0.1581, 0.4335}, {-1.4015, 0.3229, 0.4214},
                    {-1.3767, -0.4189, 0.4333}, {-1.4257, 0.1515, 0.4358},
                    {-1.3989, 0.3276, 0.4217}, {-1.3724, 0.1454, 0.4356}};
  const Matrix at = a.transposed();
  const SymmetricMatrix g = SymmetricMatrix::symmetrized(at * a);
  const SymmetricMatrix g_inv = inv_pd(g);

  SdlcpProblem p;
  p.name = "example3";
  p.n = 3;
  p.l = LinearTransformation::lyapunov(g_inv);
  p.q = SymmetricMatrix::symmetrized(-0.5 * (g_inv.matrix() * (at * b) +
                                             (b.transposed() * a) * g_inv.matrix()));
  p.x_start = 30.0 * sqrt_pd(g);
  return p;
}

SdlcpProblem random_monotone(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random_monotone requires n >= 1");
  detail::Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);

  const auto random_pd = [&](double shift) {
    Matrix c(n, n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) c(i, j) = rng.uniform_sym();
    SymmetricMatrix s = SymmetricMatrix::symmetrized(c * c.transposed());
    s *= 1.0 / n;
    return s + shift * SymmetricMatrix::identity(n);
  };

  // A symmetric positive definite keeps L(X) = A X A^T monotone:
  // inner(U, L(U)) = ||A^{1/2} U A^{1/2}||_F^2.
  const SymmetricMatrix a = random_pd(0.2 + rng.uniform());

  SdlcpProblem p;
  p.name = "random:" + std::to_string(n) + ":" + std::to_string(seed);
  p.n = n;
  p.l = LinearTransformation::two_sided(a.matrix());
  const SymmetricMatrix x0 = random_pd(0.5);
  // y0 tracks inv(x0) so the start is both strictly feasible and reasonably
  // well centered under the trace rule
  const SymmetricMatrix y0 = inv_pd(x0) + 0.1 * random_pd(0.2);
  p.q = y0 - p.l.apply(x0);  // makes (x0, y0) strictly feasible by construction
  p.x_start = x0;
  return p;
}

ResidualReport residuals(const SdlcpProblem& p, const SymmetricMatrix& x,
                         const SymmetricMatrix& y) {
  if (x.dim() != p.n || y.dim() != p.n) {
    throw DimensionMismatch("residuals: iterate dimension does not match problem");
  }
  ResidualReport r{};
  r.feasibility = fro_norm(y - p.l.apply(x) - p.q);
  r.complementarity = inner(x, y);
  r.min_eig_x = min_eigenvalue(x);
  r.min_eig_y = min_eigenvalue(y);
  return r;
}

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); i++) {
    json row = json::array();
    for (int j = 0; j < m.cols(); j++) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParameterError("problem file: expected a matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; i++) {
    const auto& row = j.at(i);
    if (static_cast<int>(row.size()) != cols) {
      throw ParameterError("problem file: ragged matrix rows");
    }
    for (int jcol = 0; jcol < cols; jcol++) m(i, jcol) = row.at(jcol).get<double>();
  }
  return m;
}

SymmetricMatrix sym_from_json(const json& j) {
  return SymmetricMatrix::symmetrized(matrix_from_json(j));
}

const char* kind_name(LinearTransformation::Kind k) {
  switch (k) {
    case LinearTransformation::Kind::TwoSided: return "two_sided";
    case LinearTransformation::Kind::Lyapunov: return "lyapunov";
    case LinearTransformation::Kind::Custom: return "custom";
  }
  return "?";
}

}  // namespace

SdlcpProblem load_problem(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("problem file is not valid JSON: ") + e.what());
  }
  SdlcpProblem p;
  try {
    p.n = j.at("n").get<int>();
    p.name = j.value("name", "");
    const auto& t = j.at("transform");
    const std::string kind = t.at("kind").get<std::string>();
    const Matrix m = matrix_from_json(t.at("matrix"));
    if (kind == "two_sided") {
      p.l = LinearTransformation::two_sided(m);
    } else if (kind == "lyapunov") {
      p.l = LinearTransformation::lyapunov(SymmetricMatrix::symmetrized(m));
    } else if (kind == "custom") {
      p.l = LinearTransformation::custom(m);
    } else {
      throw ParameterError("problem file: unknown transform kind '" + kind + "'");
    }
    p.q = sym_from_json(j.at("q"));
    if (j.contains("x_start")) p.x_start = sym_from_json(j.at("x_start"));
    if (j.contains("x_ref")) p.x_ref = sym_from_json(j.at("x_ref"));
  } catch (const json::exception& e) {
    throw ParameterError(std::string("problem file is missing fields: ") + e.what());
  }
  if (p.l.dim() != p.n || p.q.dim() != p.n) {
    throw DimensionMismatch("problem file: transform/q dimension does not match n");
  }
  if (p.x_start) {
    if (p.x_start->dim() != p.n) throw DimensionMismatch("problem file: x_start dimension");
    if (!is_positive_definite(*p.x_start) ||
        !is_positive_definite(p.l.apply(*p.x_start) + p.q)) {
      throw InfeasibleStart("problem file: stored x_start is not strictly feasible");
    }
  }
  return p;
}

SdlcpProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open problem file '" + path + "'");
  return load_problem(in);
}

void save_problem(const SdlcpProblem& p, std::ostream& out) {
  json j;
  if (!p.name.empty()) j["name"] = p.name;
  j["n"] = p.n;
  j["transform"] = {{"kind", kind_name(p.l.kind())}, {"matrix", matrix_to_json(p.l.data())}};
  j["q"] = matrix_to_json(p.q.matrix());
  if (p.x_start) j["x_start"] = matrix_to_json(p.x_start->matrix());
  if (p.x_ref) j["x_ref"] = matrix_to_json(p.x_ref->matrix());
  out << j.dump(2) << "\n";
}

SdlcpProblem problem_by_name(const std::string& name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  if (name == "example3") return example3();
  if (name.rfind("random:", 0) == 0) {
    const auto rest = name.substr(7);
    const auto sep = rest.find(':');
    if (sep == std::string::npos) {
      throw ParameterError("random problem name must be random:<n>:<seed>");
    }
    try {
      const int n = std::stoi(rest.substr(0, sep));
      const std::uint64_t seed = std::stoull(rest.substr(sep + 1));
      return random_monotone(n, seed);
    } catch (const std::logic_error&) {
      throw ParameterError("cannot parse '" + name + "' as random:<n>:<seed>");
    }
  }
  return load_problem_file(name);
}

std::vector<std::string> builtin_problem_names() {
  return {"example1", "example2", "example3", "random:<n>:<seed>"};
}

}  // namespace sdlcp
