#include "adeweyl/cartan.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adeweyl {

namespace {

std::string coords_to_string(const std::vector<int64_t>& v) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
  out << ']';
  return out.str();
}

std::vector<int64_t> add_coords(const std::vector<int64_t>& a,
                                const std::vector<int64_t>& b,
                                int64_t sign) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("coordinate vectors of different rank");
  }
  std::vector<int64_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

}  // namespace

char series_letter(Series s) { return static_cast<char>(s); }

Series series_from_letter(char letter) {
  switch (letter) {
    case 'A':
    case 'a':
      return Series::A;
    case 'D':
    case 'd':
      return Series::D;
    case 'E':
    case 'e':
      return Series::E;
    default:
      throw std::invalid_argument(
          std::string("unsupported series '") + letter +
          "': only the simply laced series A, D, E are available");
  }
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int64_t c) { return c == 0; });
}

std::string Weight::to_string() const { return coords_to_string(coords_); }

Weight operator+(const Weight& a, const Weight& b) {
  return Weight(add_coords(a.coords_, b.coords_, 1));
}

Weight operator-(const Weight& a, const Weight& b) {
  return Weight(add_coords(a.coords_, b.coords_, -1));
}

bool RootElem::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int64_t c) { return c >= 0; });
}

int64_t RootElem::height() const {
  int64_t h = 0;
  for (int64_t c : coords_) h += c;
  return h;
}

bool RootElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int64_t c) { return c == 0; });
}

std::string RootElem::to_string() const { return coords_to_string(coords_); }

RootElem operator+(const RootElem& a, const RootElem& b) {
  return RootElem(add_coords(a.coords_, b.coords_, 1));
}

RootElem operator-(const RootElem& a, const RootElem& b) {
  return RootElem(add_coords(a.coords_, b.coords_, -1));
}

CartanDatum::CartanDatum(Series series, int rank)
    : series_(series), rank_(rank) {
  switch (series_) {
    case Series::A:
      if (rank < 1) {
        throw std::invalid_argument("series A requires rank >= 1");
      }
      for (int i = 0; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
      for (int i = 0; i < rank; ++i) minuscule_nodes_.push_back(i);
      break;
    case Series::D:
      if (rank < 4) {
        throw std::invalid_argument("series D requires rank >= 4");
      }
      for (int i = 0; i + 2 < rank; ++i) edges_.emplace_back(i, i + 1);
      edges_.emplace_back(rank - 3, rank - 1);
      minuscule_nodes_ = {0, rank - 2, rank - 1};
      break;
    case Series::E:
      if (rank < 6 || rank > 8) {
        throw std::invalid_argument("series E requires rank in {6, 7, 8}");
      }
      edges_.emplace_back(0, 2);
      edges_.emplace_back(1, 3);
      for (int i = 2; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
      if (rank == 6) minuscule_nodes_ = {0, 5};
      if (rank == 7) minuscule_nodes_ = {6};
      break;
  }
  std::sort(edges_.begin(), edges_.end());

  cartan_.assign(rank, std::vector<int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
  for (auto [i, j] : edges_) cartan_[i][j] = cartan_[j][i] = -1;

  // Exact inverse by Gauss-Jordan elimination over the rationals.
  std::vector<std::vector<Rational>> work(rank, std::vector<Rational>(2 * rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) work[i][j] = cartan_[i][j];
    work[i][rank + i] = 1;
  }
  for (int col = 0; col < rank; ++col) {
    int pivot = -1;
    for (int row = col; row < rank; ++row) {
      if (work[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("Cartan matrix is singular");
    std::swap(work[col], work[pivot]);
    Rational inv = Rational(1) / work[col][col];
    for (int j = 0; j < 2 * rank; ++j) work[col][j] *= inv;
    for (int row = 0; row < rank; ++row) {
      if (row == col || work[row][col] == 0) continue;
      Rational factor = work[row][col];
      for (int j = 0; j < 2 * rank; ++j) work[row][j] -= factor * work[col][j];
    }
  }
  cartan_inv_.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) cartan_inv_[i][j] = work[i][rank + j];
  }

  // Positive roots by closure: beta + alpha_i is a root exactly when
  // (beta, alpha_i) = -1 in a simply laced system.
  std::set<RootElem> roots;
  std::queue<RootElem> pending;
  for (int i = 0; i < rank; ++i) {
    std::vector<int64_t> e(rank, 0);
    e[i] = 1;
    RootElem simple{std::move(e)};
    roots.insert(simple);
    pending.push(simple);
  }
  while (!pending.empty()) {
    RootElem beta = pending.front();
    pending.pop();
    for (int i = 0; i < rank; ++i) {
      int64_t product = 0;
      for (int j = 0; j < rank; ++j) product += cartan_[i][j] * beta[j];
      if (product != -1) continue;
      std::vector<int64_t> next = beta.coords();
      next[i] += 1;
      RootElem candidate{std::move(next)};
      if (roots.insert(candidate).second) pending.push(candidate);
    }
  }
  positive_roots_.assign(roots.begin(), roots.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootElem& a, const RootElem& b) {
              if (a.height() != b.height()) return a.height() < b.height();
              return a.coords() < b.coords();
            });
}

std::string CartanDatum::name() const {
  return std::string(1, series_letter(series_)) + std::to_string(rank_);
}

Weight CartanDatum::zero_weight() const {
  return Weight(std::vector<int64_t>(rank_, 0));
}

Weight CartanDatum::fundamental_weight(int i) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("node index out of range");
  std::vector<int64_t> c(rank_, 0);
  c[i] = 1;
  return Weight(std::move(c));
}

Weight CartanDatum::rho() const {
  return Weight(std::vector<int64_t>(rank_, 1));
}

bool CartanDatum::is_dominant(const Weight& w) const {
  check_weight(w);
  for (int i = 0; i < rank_; ++i) {
    if (w[i] < 0) return false;
  }
  return true;
}

void CartanDatum::check_weight(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank_) {
    throw std::invalid_argument("weight has " + std::to_string(w.size()) +
                                " coordinates, expected " +
                                std::to_string(rank_) + " for " + name());
  }
}

void CartanDatum::check_root(const RootElem& a) const {
  if (static_cast<int>(a.size()) != rank_) {
    throw std::invalid_argument("root element has " + std::to_string(a.size()) +
                                " coordinates, expected " +
                                std::to_string(rank_) + " for " + name());
  }
}

Rational CartanDatum::pairing(const Weight& x, const Weight& y) const {
  check_weight(x);
  check_weight(y);
  Rational total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < rank_; ++j) {
      if (y[j] != 0) row += cartan_inv_[i][j] * y[j];
    }
    total += row * x[i];
  }
  return total;
}

int64_t CartanDatum::pairing(const Weight& x, const RootElem& a) const {
  check_weight(x);
  check_root(a);
  int64_t total = 0;
  for (int i = 0; i < rank_; ++i) total += x[i] * a[i];
  return total;
}

int64_t CartanDatum::pairing(const RootElem& a, const RootElem& b) const {
  check_root(a);
  check_root(b);
  int64_t total = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) total += a[i] * cartan_[i][j] * b[j];
  }
  return total;
}

std::vector<Rational> CartanDatum::weight_to_root_coords(const Weight& w) const {
  check_weight(w);
  std::vector<Rational> coords(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (w[j] != 0) coords[i] += cartan_inv_[i][j] * w[j];
    }
  }
  return coords;
}

std::optional<RootElem> CartanDatum::to_root_element(const Weight& w) const {
  std::vector<Rational> coords = weight_to_root_coords(w);
  std::vector<int64_t> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (!is_integral(coords[i])) return std::nullopt;
    out[i] = to_int64(numerator(coords[i]), "root coordinate");
  }
  return RootElem(std::move(out));
}

Weight CartanDatum::root_to_weight(const RootElem& a) const {
  check_root(a);
  std::vector<int64_t> out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) out[i] += cartan_[i][j] * a[j];
  }
  return Weight(std::move(out));
}

Weight CartanDatum::simple_reflection(int i, const Weight& w) const {
  check_weight(w);
  if (i < 0 || i >= rank_) throw std::invalid_argument("node index out of range");
  std::vector<int64_t> out = w.coords();
  int64_t c = w[i];
  for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[j][i];
  return Weight(std::move(out));
}

Weight CartanDatum::dominant_conjugate(const Weight& w) const {
  check_weight(w);
  std::vector<int64_t> cur = w.coords();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i) {
      if (cur[i] >= 0) continue;
      int64_t c = cur[i];
      for (int j = 0; j < rank_; ++j) cur[j] -= c * cartan_[j][i];
      changed = true;
      break;
    }
  }
  return Weight(std::move(cur));
}

std::vector<Weight> CartanDatum::weyl_orbit(const Weight& w,
                                            const Budget* budget) const {
  check_weight(w);
  std::set<Weight> seen;
  std::queue<Weight> pending;
  seen.insert(w);
  pending.push(w);
  while (!pending.empty()) {
    Weight cur = pending.front();
    pending.pop();
    if (budget != nullptr) budget->charge();
    for (int i = 0; i < rank_; ++i) {
      Weight next = simple_reflection(i, cur);
      if (seen.insert(next).second) pending.push(next);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<Weight> CartanDatum::dominant_weights_below(
    const Weight& lambda, const Budget* budget) const {
  if (!is_dominant(lambda)) {
    throw std::invalid_argument("dominant_weights_below requires a dominant weight");
  }
  // mu = lambda - sum c_i alpha_i with c >= 0; for dominant mu each c_i
  // is bounded by (lambda, omega_i), the i-th root coordinate of lambda.
  std::vector<Rational> root_coords = weight_to_root_coords(lambda);
  std::vector<int64_t> bound(rank_);
  for (int i = 0; i < rank_; ++i) {
    bound[i] = to_int64(rational_floor(root_coords[i]), "search bound");
    if (bound[i] < 0) bound[i] = 0;
  }

  struct Entry {
    int64_t height;
    Weight mu;
  };
  std::vector<Entry> found;
  std::vector<int64_t> c(rank_, 0);
  while (true) {
    if (budget != nullptr) budget->charge();
    std::vector<int64_t> mu(rank_);
    bool dominant = true;
    for (int j = 0; j < rank_ && dominant; ++j) {
      int64_t v = lambda[j];
      for (int k = 0; k < rank_; ++k) v -= cartan_[j][k] * c[k];
      if (v < 0) dominant = false;
      mu[j] = v;
    }
    if (dominant) {
      int64_t height = 0;
      for (int64_t v : c) height += v;
      found.push_back({height, Weight(std::move(mu))});
    }
    int pos = rank_ - 1;
    while (pos >= 0 && c[pos] == bound[pos]) {
      c[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++c[pos];
  }
  std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.mu < b.mu;
  });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.mu));
  return out;
}

}  // namespace adeweyl
