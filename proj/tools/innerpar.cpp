// innerpar: generate bodies, compute erosion curves, run verification suites.
#include "innerpar/erosion.hpp"
#include "innerpar/functionals.hpp"
#include "innerpar/generate.hpp"
#include "innerpar/io.hpp"
#include "innerpar/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace innerpar;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

struct Options {
  std::uint64_t seed = 1;
  int grid = 65;
  double tol = 1e-7;
  int dim = 0;
  std::string out;
};

// Writes to --out when given, otherwise to standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw GeometryError(ErrorKind::InvalidInput, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Vector parse_vector(const std::string& text) {
  std::vector<double> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw GeometryError(ErrorKind::InvalidInput, "bad coordinate list: " + text);
    }
  }
  if (c.size() < 2 || c.size() > 3) throw GeometryError(ErrorKind::InvalidInput, "vector needs 2 or 3 entries: " + text);
  Vector v(static_cast<int>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<int>(i)] = c[i];
  return v;
}

Body centered(const Body& k) { return translate(k, -k.centroid()); }

int cmd_gen(const Options& o, const std::string& kind, const std::vector<std::string>& args,
            const std::vector<std::string>& normals) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw GeometryError(ErrorKind::InvalidInput, "wrong number of arguments for gen " + kind);
  };
  auto integer = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw GeometryError(ErrorKind::InvalidInput, "integer expected: " + s);
  };
  const int dim = o.dim == 0 ? 2 : o.dim;

  Body body = [&] {
    if (kind == "box") {
      need(2, 3);
      std::vector<double> half;
      for (const auto& a : args) {
        const double w = parse_vector(a + ",0")[0];
        if (!(w > 0)) throw GeometryError(ErrorKind::InvalidInput, "box widths must be positive");
        half.push_back(w / 2.0);
      }
      return gen::box(half);
    }
    if (kind == "simplex") {
      need(0, 0);
      return gen::simplex(dim);
    }
    if (kind == "regular_polygon") {
      need(1, 1);
      const int m = integer(args[0]);
      if (m < 3) throw GeometryError(ErrorKind::InvalidInput, "regular_polygon needs m >= 3");
      return gen::regular_polygon(m);
    }
    if (kind == "random_hull") {
      need(1, 1);
      const int m = integer(args[0]);
      if (m < dim + 1) throw GeometryError(ErrorKind::InvalidInput, "random_hull needs m > dim");
      std::mt19937_64 rng(o.seed);
      return gen::random_hull(m, dim, rng);
    }
    if (kind == "circumscribed") {
      need(1, 1);
      const Body k = io::load_body(args[0]);
      std::vector<Vector> nu;
      for (const auto& n : normals) nu.push_back(parse_vector(n));
      return gen::circumscribed(k, nu);
    }
    throw GeometryError(ErrorKind::InvalidInput, "unknown body kind: " + kind);
  }();
  Sink sink(o.out);
  io::write_body(sink.stream(), body);
  return kPass;
}

int cmd_curve(const Options& o, const std::string& omega_file, const std::string& k_file) {
  const Body omega = io::load_body(omega_file);
  const Body k = centered(io::load_body(k_file));
  const CurveFamily family = curve_family(omega, k, o.grid);
  Sink sink(o.out);
  std::ostream& out = sink.stream();
  write_csv(out, family);
  char buf[64];
  std::snprintf(buf, sizeof buf, "# inradius=%.15g, incenter=", family.inradius);
  out << buf;
  for (int i = 0; i < family.incenter.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.15g", i ? " " : "", family.incenter[i]);
    out << buf;
  }
  out << '\n';
  return kPass;
}

int cmd_verify(const Options& o, const std::string& suite_name, double fault) {
  const auto suite = verify::parse_suite(suite_name);
  if (!suite) throw GeometryError(ErrorKind::InvalidInput, "unknown suite: " + suite_name);
  verify::Config config;
  config.seed = o.seed;
  config.grid_points = o.grid;
  config.tol_check = o.tol;
  config.dim = o.dim;
  config.perimeter_fault = fault;
  const verify::Report report = verify::run(*suite, config);
  Sink sink(o.out);
  report.print(sink.stream());
  if (!o.out.empty()) report.print(std::cout);
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_dist(const Options& o, const std::string& omega_file, const std::string& k_file,
             const std::string& points_file) {
  const Body omega = io::load_body(omega_file);
  const Body k = centered(io::load_body(k_file));
  const auto points = io::load_points(points_file, omega.dim());
  constexpr double band = 1e-8;
  Sink sink(o.out);
  std::ostream& out = sink.stream();
  out << (omega.dim() == 2 ? "x,y" : "x,y,z") << ",distance,flag\n";
  char buf[64];
  for (const Vector& x : points) {
    const double d = distance(omega, k, x);
    // The point must lie in the erosion just below d and outside the one just above.
    const auto below = inner_parallel(omega, k, std::max(0.0, d - band));
    const auto above = inner_parallel(omega, k, d + band);
    const bool ok = below && below->contains(x, 0.0) && !(above && above->contains(x, 0.0));
    for (int i = 0; i < x.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.15g,", x[i]);
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "%.15g,", d);
    out << buf << (ok ? "ok" : "mismatch") << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner parallel bodies, anisotropic perimeter and the isoperimetric quotient"};
  app.require_subcommand(1, 1);
  Options o;
  auto common = [&o](CLI::App* sub, bool with_grid) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--dim", o.dim, "dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
    sub->add_option("--out", o.out, "output file (default: standard output)");
    if (with_grid) {
      sub->add_option("--grid", o.grid, "grid points on [0, r)")->check(CLI::Range(8, 100000));
      sub->add_option("--tol", o.tol, "check tolerance")->check(CLI::PositiveNumber);
    }
  };

  std::string kind, omega_file, k_file, points_file, suite;
  std::vector<std::string> gen_args, normals;
  double fault = 1.0;

  auto* gen = app.add_subcommand("gen", "write a body file");
  gen->add_option("kind", kind, "box | simplex | regular_polygon | random_hull | circumscribed")->required();
  gen->add_option("args", gen_args, "box widths, vertex count, or the K body file");
  gen->add_option("--normal", normals, "facet normal for circumscribed, e.g. -1,0")->allow_extra_args(false);
  common(gen, false);

  auto* curve = app.add_subcommand("curve", "CSV of the erosion curve family");
  curve->add_option("omega", omega_file)->required();
  curve->add_option("k", k_file)->required();
  common(curve, true);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite,
                  "inequality | concavity | quotient | equality_cases | derivative | levelset | mixed | "
                  "inradius | euclidean | all")
      ->required();
  ver->add_option("--fault-perimeter", fault)->group("");
  common(ver, true);

  auto* dist = app.add_subcommand("dist", "anisotropic distance of points");
  dist->add_option("omega", omega_file)->required();
  dist->add_option("k", k_file)->required();
  dist->add_option("points", points_file)->required();
  common(dist, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, kind, gen_args, normals);
    if (*curve) return cmd_curve(o, omega_file, k_file);
    if (*ver) return cmd_verify(o, suite, fault);
    return cmd_dist(o, omega_file, k_file, points_file);
  } catch (const GeometryError& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::NumericalFailure ? kNumerical : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
}
