#include "crofton/normal_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "crofton/error.hpp"

namespace crofton {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t pick(const std::vector<double>& cdf, double r) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), r * cdf.back());
  return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

Vec line_direction_2d(double a) {
  Vec u(2);
  u << std::cos(a), std::sin(a);
  return u;
}

Vec line_direction_3d(double z, double phi) {
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  Vec u(3);
  u << r * std::cos(phi), r * std::sin(phi), z;
  return u;
}

}  // namespace

NormalMeasure1 NormalMeasure1::continuous(HarmonicGauge phi) {
  NormalMeasure1 m;
  m.dim_ = phi.dim;
  m.embedding_ = Mat::Identity(m.dim_, m.dim_);
  m.phi_ = std::move(phi);
  m.build_proposal();
  return m;
}

NormalMeasure1 NormalMeasure1::discrete(int dim, std::vector<DirectionAtom> atoms) {
  if (dim < 1 || dim > 3) throw Error("bad-dimension", "normal measures are implemented for dim V in 1..3");
  NormalMeasure1 m;
  m.dim_ = dim;
  m.embedding_ = Mat::Identity(dim, dim);
  for (auto& a : atoms) {
    if (a.direction.size() != dim) throw Error("dimension-mismatch", "atom direction has wrong length");
    if (!(a.mass >= 0.0)) throw Error("bad-coefficient", "atom masses must be non-negative");
    const double norm = a.direction.norm();
    if (norm == 0.0 || a.mass == 0.0) continue;
    m.atoms_.push_back({a.direction / norm, a.mass});
  }
  m.build_proposal();
  return m;
}

NormalMeasure1 NormalMeasure1::of_body(const ConvexBody& body, int bandwidth) {
  const int n = body.dim();
  if (n > 3) throw Error("bad-dimension", "normal measures are implemented for dim V in 1..3");
  const CanonicalSum canon = canonicalize(body).normalized();
  std::vector<DirectionAtom> atoms;
  for (const auto& v : canon.segments) atoms.push_back({v.normalized(), 2.0 * v.norm()});
  NormalMeasure1 m = discrete(n, std::move(atoms));
  if (!canon.ellipsoids.empty()) {
    CanonicalSum smooth;
    smooth.dim = n;
    smooth.ellipsoids = canon.ellipsoids;
    const int bw = bandwidth > 0 ? bandwidth : default_bandwidth(n);
    const HarmonicGauge width = project([&](const Vec& u) { return 2.0 * smooth.support(u); }, n, bw);
    m.phi_ = inverse_cosine_transform(width);
    m.build_proposal();
  }
  return m;
}

NormalMeasure1 NormalMeasure1::of_density(const GaugeDensity& density, int bandwidth) {
  if (density.degree() != 1) throw Error("dimension-mismatch", "normal measures carry 1-densities");
  if (density.harmonics()) return continuous(inverse_cosine_transform(*density.harmonics()));
  return of_body(density.bodies().front(), bandwidth);
}

NormalMeasure1 NormalMeasure1::embedded(const Mat& embedding) const {
  if (embedding.cols() != dim_) throw Error("dimension-mismatch", "embedding must have one column per dimension of V");
  require_orthonormal(embedding);
  NormalMeasure1 m = *this;
  m.embedding_ = embedding * embedding_;
  return m;
}

double NormalMeasure1::chi(const Vec& v) const {
  if (v.size() != ambient_dim()) throw Error("dimension-mismatch", "segment lives in the wrong space");
  const Vec own = embedding_.transpose() * v;
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.mass * std::abs(a.direction.dot(own));
  const double len = own.norm();
  if (phi_ && len > 0.0) acc += len * cosine_transform(*phi_)(own / len);
  return acc;
}

void NormalMeasure1::build_proposal() {
  cell_cdf_.clear();
  cell_prob_.clear();
  double continuous_mass = 0.0;
  if (phi_) {
    std::vector<double> mass;
    if (dim_ == 1) {
      cells_a_ = cells_b_ = 1;
      mass.push_back(std::abs(phi_->coeffs[0]));
    } else if (dim_ == 2) {
      cells_a_ = 720;
      cells_b_ = 1;
      for (int i = 0; i < cells_a_; ++i) mass.push_back(std::abs((*phi_)(line_direction_2d(kPi * (i + 0.5) / cells_a_))));
    } else {
      cells_a_ = 48;
      cells_b_ = 96;
      for (int i = 0; i < cells_a_; ++i) {
        for (int j = 0; j < cells_b_; ++j) {
          const Vec u = line_direction_3d((i + 0.5) / cells_a_, 2.0 * kPi * (j + 0.5) / cells_b_);
          mass.push_back(std::abs((*phi_)(u)));
        }
      }
    }
    double mean = 0.0;
    for (double x : mass) mean += x;
    mean /= static_cast<double>(mass.size());
    if (mean > 0.0) {
      continuous_mass = mean;
      double acc = 0.0;
      for (double x : mass) {
        const double p = x + 1e-3 * mean;
        cell_prob_.push_back(p);
        acc += p;
        cell_cdf_.push_back(acc);
      }
      for (auto& p : cell_prob_) p /= acc;
    }
  }
  atom_cdf_.clear();
  double atom_mass = 0.0;
  for (const auto& a : atoms_) {
    atom_mass += a.mass;
    atom_cdf_.push_back(atom_mass);
  }
  const double total = continuous_mass + atom_mass;
  continuous_prob_ = total > 0.0 ? continuous_mass / total : 0.0;
}

NormalMeasure1::Draw NormalMeasure1::draw(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Draw d;
  const double total_atoms = atom_cdf_.empty() ? 0.0 : atom_cdf_.back();
  if (continuous_prob_ == 0.0 && total_atoms == 0.0) {
    d.normal = embedding_.col(0);
    d.weight = 0.0;
    return d;
  }
  if (unit(rng) < continuous_prob_) {
    const std::size_t cell = pick(cell_cdf_, unit(rng));
    const double q = cell_prob_[cell] * static_cast<double>(cell_prob_.size());
    Vec u;
    if (dim_ == 1) {
      u = Vec::Constant(1, 1.0);
    } else if (dim_ == 2) {
      u = line_direction_2d(kPi * (static_cast<double>(cell) + unit(rng)) / cells_a_);
    } else {
      const std::size_t i = cell / cells_b_, j = cell % cells_b_;
      u = line_direction_3d((static_cast<double>(i) + unit(rng)) / cells_a_,
                            2.0 * kPi * (static_cast<double>(j) + unit(rng)) / cells_b_);
    }
    d.normal = embedding_ * u;
    d.weight = (*phi_)(u) / (continuous_prob_ * q);
    return d;
  }
  const std::size_t j = pick(atom_cdf_, unit(rng));
  d.normal = embedding_ * atoms_[j].direction;
  d.weight = total_atoms / (1.0 - continuous_prob_);
  return d;
}

}  // namespace crofton
