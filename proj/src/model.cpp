#include "ergm/model.hpp"

#include <sstream>
#include <stdexcept>

namespace ergm {

ErgmModel::ErgmModel(int n_vertices, std::vector<MotifSpec> motifs,
                     std::vector<double> beta)
    : n_(n_vertices), motifs_(std::move(motifs)), beta_(std::move(beta)) {
  if (n_ < 2) throw std::invalid_argument("model needs at least 2 vertices");
  if (motifs_.empty()) throw std::invalid_argument("model needs at least one motif");
  if (motifs_.front().shape() != MotifSpec::Shape::Edge)
    throw std::invalid_argument("the first motif must be the single edge");
  if (beta_.size() != motifs_.size())
    throw std::invalid_argument("beta length must match the motif count");
  scale_.reserve(motifs_.size());
  for (const auto& g : motifs_) {
    if (g.m > n_)
      throw std::invalid_argument("motif '" + g.to_string() +
                                  "' has more vertices than the model");
    scale_.push_back(std::pow(static_cast<double>(n_), g.m - 2));
  }
}

bool ErgmModel::is_monotone() const {
  for (std::size_t k = 1; k < beta_.size(); ++k)
    if (beta_[k] < 0.0) return false;
  return true;
}

void ErgmModel::check_graph(const Graph& x) const {
  if (x.order() != n_) throw std::invalid_argument("graph order does not match model");
}

double ErgmModel::log_weight(const Graph& x) const {
  check_graph(x);
  double lw = 0.0;
  for (std::size_t k = 0; k < motifs_.size(); ++k)
    lw += beta_[k] * static_cast<double>(count_motif(x, motifs_[k])) / scale_[k];
  return lw;
}

double ErgmModel::glauber_p1(const Graph& x, EdgeSlot e) const {
  check_graph(x);
  double z = 0.0;
  for (std::size_t k = 0; k < motifs_.size(); ++k)
    z += beta_[k] * static_cast<double>(change_statistic(x, motifs_[k], e)) / scale_[k];
  return logistic(z);
}

void ErgmModel::glauber_update_inplace(Graph& x, EdgeSlot e, double u) const {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("update variate u must lie in [0, 1]");
  const double p0 = 1.0 - glauber_p1(x, e);
  x.set_edge(e, !(u <= p0));  // the boundary u == p0 resolves to 0
}

Graph ErgmModel::glauber_update(const Graph& x, EdgeSlot e, double u) const {
  Graph out = x;
  glauber_update_inplace(out, e, u);
  return out;
}

std::string ErgmModel::id() const {
  std::ostringstream os;
  os << "n=" << n_ << " motifs=";
  for (std::size_t k = 0; k < motifs_.size(); ++k)
    os << (k ? "," : "") << motifs_[k].to_string();
  os << " beta=";
  os.precision(17);
  for (std::size_t k = 0; k < beta_.size(); ++k) os << (k ? "," : "") << beta_[k];
  return os.str();
}

}  // namespace ergm
