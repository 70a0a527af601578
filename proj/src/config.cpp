#include "crofton/config.hpp"

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "crofton/error.hpp"

namespace crofton {

namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error("bad-number", "cannot read '" + s + "' as a number");
  }
  if (trim(s.substr(used)) != "") throw Error("bad-number", "cannot read '" + s + "' as a number");
  return v;
}

// Splits "name[args]" into name and args.
std::pair<std::string, std::optional<std::string>> head_and_args(const std::string& text) {
  const std::string t = trim(text);
  const auto open = t.find('[');
  if (open == std::string::npos) return {t, std::nullopt};
  if (t.back() != ']') throw Error("bad-body", "unbalanced brackets in '" + t + "'");
  return {trim(t.substr(0, open)), t.substr(open + 1, t.size() - open - 2)};
}

ConvexBody parse_atom(const std::string& text) {
  const auto [name, args] = head_and_args(text);
  const auto radius = [&]() { return args ? to_double(*args) : 1.0; };
  if (name == "disk" || name == "ball" || name == "ball2") return ConvexBody::ball(2, radius());
  if (name == "ball3" || name == "sphere") return ConvexBody::ball(3, radius());
  if (!args) throw Error("bad-body", "'" + name + "' needs bracketed arguments");
  if (name == "ellipsoid") {
    if (args->find(';') == std::string::npos) {
      const std::vector<double> d = parse_numbers(*args);
      Mat q = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
      for (std::size_t i = 0; i < d.size(); ++i) q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
      return ConvexBody::ellipsoid(q);
    }
    return ConvexBody::ellipsoid(parse_columns(*args).transpose());
  }
  if (name == "segment") {
    const std::vector<double> v = parse_numbers(*args);
    return ConvexBody::segment(Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
  if (name == "zonotope") {
    const Mat g = parse_columns(*args);
    std::vector<Vec> gens;
    for (Eigen::Index j = 0; j < g.cols(); ++j) gens.push_back(g.col(j));
    return ConvexBody::zonotope(static_cast<int>(g.rows()), std::move(gens));
  }
  throw Error("bad-body", "unknown body '" + name + "'; supported: disk, ball, ball3, ellipsoid, segment, zonotope");
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split_list(text, ',')) out.push_back(to_double(p));
  return out;
}

Mat parse_columns(const std::string& text) {
  std::vector<std::vector<double>> cols;
  for (const auto& part : split_list(text, ';')) cols.push_back(parse_numbers(part));
  if (cols.empty()) return Mat();
  Mat m(static_cast<Eigen::Index>(cols.front().size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols.front().size()) throw Error("bad-number", "vectors in '" + text + "' differ in length");
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cols[j][i];
    }
  }
  return m;
}

ConvexBody parse_body(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    try {
      return body_from_json(nlohmann::json::parse(t));
    } catch (const nlohmann::json::exception& e) {
      throw Error("bad-json", e.what());
    }
  }
  std::vector<MinkowskiTerm> terms;
  for (const auto& part : split_list(t, '+')) {
    const auto star = part.find('*');
    if (star != std::string::npos && part.find('[') > star) {
      terms.push_back({to_double(part.substr(0, star)), parse_atom(part.substr(star + 1))});
    } else {
      terms.push_back({1.0, parse_atom(part)});
    }
  }
  if (terms.empty()) throw Error("bad-body", "empty body description");
  if (terms.size() == 1 && terms.front().coef == 1.0) return terms.front().body;
  return ConvexBody::sum(std::move(terms));
}

std::vector<ConvexBody> parse_bodies(const std::string& text) {
  std::vector<ConvexBody> out;
  for (const auto& part : split_list(text, ',')) out.push_back(parse_body(part));
  return out;
}

Region parse_region(const std::string& text, int dim) {
  const auto [name, args] = head_and_args(text);
  if (name == "unit-square") return Region::unit_cube(2);
  if (name == "unit-cube") return Region::unit_cube(dim > 0 ? dim : 3);
  if (name == "segment") {
    if (dim < 1) throw Error("bad-region", "segment region needs the ambient dimension");
    const double len = args ? to_double(*args) : 1.0;
    return Region::parallelotope(Vec::Zero(dim), len * Mat::Identity(dim, 1));
  }
  if (name == "parallelotope" && args) {
    const Mat cols = parse_columns(*args);
    if (cols.cols() < 2) throw Error("bad-region", "parallelotope needs an origin and at least one edge");
    return Region::parallelotope(cols.col(0), cols.rightCols(cols.cols() - 1));
  }
  throw Error("bad-region", "unknown region '" + text + "'; supported: unit-square, unit-cube, segment[L], "
                                                         "parallelotope[o;e1;..]");
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error("bad-config", e.what());
  }
  RunConfig c;
  try {
    c.mode = tree.get("run.mode", "");
    c.manifold = tree.get("run.manifold", "");
    const std::string spaces = tree.get("run.spaces", "");
    if (!trim(spaces).empty()) c.spaces = split_list(spaces, ',');
    c.identity = tree.get("run.identity", "");
    c.bodies = tree.get("run.bodies", "");
    c.region = tree.get("run.region", "");
    c.samples = static_cast<long>(tree.get<double>("params.samples", 0.0));
    c.seed = tree.get<std::uint64_t>("params.seed", 1);
    c.tol = tree.get<double>("params.tol", 0.0);
    c.quadrature = tree.get<int>("params.quadrature", 0);
    c.bandwidth = tree.get<int>("params.bandwidth", 0);
    c.workers = tree.get<int>("params.workers", 0);
    c.tangent_dims = tree.get("params.tangent_dims", "");
    c.theta = tree.get("params.theta", "");
    c.subspace = tree.get("params.subspace", "");
    c.coefficients = tree.get("params.coefficients", "");
    c.dim = tree.get<int>("params.dim", 0);
    c.invert = tree.get<bool>("params.invert", false);
    c.report = tree.get("output.report", "");
    c.csv = tree.get("output.csv", "");
  } catch (const pt::ptree_error& e) {
    throw Error("bad-config", e.what());
  }
  return c;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "[run]\n"
      << "mode = " << c.mode << "\n"
      << "manifold = " << c.manifold << "\n"
      << "spaces = " << join(c.spaces) << "\n"
      << "identity = " << c.identity << "\n"
      << "bodies = " << c.bodies << "\n"
      << "region = " << c.region << "\n"
      << "\n[params]\n"
      << "samples = " << c.samples << "\n"
      << "seed = " << c.seed << "\n"
      << "tol = " << c.tol << "\n"
      << "quadrature = " << c.quadrature << "\n"
      << "bandwidth = " << c.bandwidth << "\n"
      << "workers = " << c.workers << "\n"
      << "tangent_dims = " << c.tangent_dims << "\n"
      << "theta = " << c.theta << "\n"
      << "subspace = " << c.subspace << "\n"
      << "coefficients = " << c.coefficients << "\n"
      << "dim = " << c.dim << "\n"
      << "invert = " << (c.invert ? "true" : "false") << "\n"
      << "\n[output]\n"
      << "report = " << c.report << "\n"
      << "csv = " << c.csv << "\n";
  return out.str();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("bad-config", "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace crofton
