#include "snlab/corpus.hpp"

#include <algorithm>
#include <cctype>

#include "snlab/io.hpp"

namespace snlab {

std::string to_string(CorpusKind k) {
  switch (k) {
    case CorpusKind::real_diagonal: return "real-diagonal";
    case CorpusKind::conjugated_h: return "conjugated-H";
    case CorpusKind::hermitian: return "hermitian";
    case CorpusKind::random_dense: return "random-dense";
  }
  return "?";
}

CorpusKind parse_corpus_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "real-diagonal") return CorpusKind::real_diagonal;
  if (s == "conjugated-h") return CorpusKind::conjugated_h;
  if (s == "hermitian") return CorpusKind::hermitian;
  if (s == "random-dense") return CorpusKind::random_dense;
  throw DomainError("unknown corpus kind '" + std::string(text) + "'");
}

void CorpusSpec::validate() const {
  if (dim < 1 || dim > max_dim) throw DomainError("corpus dim must be in [1, 500]");
  if (count < 1 || count > max_count) throw DomainError("corpus count must be in [1, 100000]");
  if (!(kappa_cap >= 1.0)) throw DomainError("kappa cap must be >= 1");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

namespace {

double condition(const Eigen::MatrixXd& p) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
  const auto s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

std::vector<double> separated_reals(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double gap = 1e-3;
  for (;;) {
    std::vector<double> d(n);
    for (auto& v : d) v = u(rng);
    auto s = d;
    std::sort(s.begin(), s.end());
    bool ok = true;
    for (int k = 1; k < n; ++k) ok = ok && s[k] - s[k - 1] >= gap;
    if (ok) return d;
  }
}

}  // namespace

ComplexMatrix conjugated_h(int n, double cap, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto d = separated_reals(n, rng);
  Eigen::MatrixXd p;
  for (;;) {
    const Eigen::MatrixXd q1 = random_orthogonal(n, rng), q2 = random_orthogonal(n, rng);
    // Log-uniform singular values between 1 and a target condition number.
    const double target = std::pow(cap, u(rng));
    Eigen::VectorXd sig(n);
    for (int k = 0; k < n; ++k) sig(k) = n == 1 ? 1.0 : std::pow(target, static_cast<double>(k) / (n - 1));
    p = q1 * sig.asDiagonal() * q2.transpose();
    for (int j = 0; j < n; ++j) p.col(j).normalize();
    if (condition(p) <= cap * (1.0 - 1e-6)) break;
  }
  const Eigen::MatrixXd t = p * Eigen::Map<const Eigen::VectorXd>(d.data(), n).asDiagonal() * p.inverse();
  return t.cast<Complex>();
}

ComplexMatrix corpus_member(const CorpusSpec& spec, int k) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(k)));
  const int n = spec.dim;
  switch (spec.kind) {
    case CorpusKind::real_diagonal: {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      ComplexMatrix t = ComplexMatrix::Zero(n, n);
      for (int i = 0; i < n; ++i) t(i, i) = u(rng);
      return t;
    }
    case CorpusKind::conjugated_h: return conjugated_h(n, spec.kappa_cap, rng);
    case CorpusKind::hermitian: {
      std::normal_distribution<double> g;
      ComplexMatrix a(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = Complex(g(rng), g(rng));
      ComplexMatrix h = (a + a.adjoint()) * 0.5;
      // Exact Hermitian symmetry regardless of rounding in the sum.
      for (int i = 0; i < n; ++i) {
        h(i, i) = Complex(h(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) h(j, i) = std::conj(h(i, j));
      }
      return h;
    }
    case CorpusKind::random_dense: {
      std::normal_distribution<double> g;
      ComplexMatrix a(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = Complex(g(rng), g(rng)) / std::sqrt(2.0 * n);
      return a;
    }
  }
  throw DomainError("unknown corpus kind");
}

std::vector<ComplexMatrix> gen_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int k = 0; k < spec.count; ++k) out.push_back(corpus_member(spec, k));
  return out;
}

std::vector<std::filesystem::path> write_corpus(const CorpusSpec& spec, const std::filesystem::path& dir) {
  spec.validate();
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (int k = 0; k < spec.count; ++k) {
    const auto path = dir / (to_string(spec.kind) + "_" + std::to_string(spec.dim) + "_" + std::to_string(k) + ".json");
    write_text(path, matrix_to_json(corpus_member(spec, k)).dump() + "\n");
    paths.push_back(path);
  }
  return paths;
}

std::vector<SeqSample> gaussian_sequences(std::size_t count, std::size_t length, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<SeqSample> out;
  out.reserve(count);
  std::vector<double> v(length);
  for (std::size_t c = 0; c < count; ++c) {
    for (auto& x : v) x = g(rng);
    out.push_back(SeqSample::from_real(v));
  }
  return out;
}

std::vector<SeqSample> decaying_sequences(std::size_t count, std::size_t length, double beta_lo,
                                          double beta_hi, Rng& rng) {
  std::uniform_real_distribution<double> beta(beta_lo, beta_hi), amp(0.5, 1.0);
  std::vector<SeqSample> out;
  out.reserve(count);
  std::vector<double> v(length);
  for (std::size_t c = 0; c < count; ++c) {
    const double b = beta(rng);
    for (std::size_t k = 0; k < length; ++k) v[k] = amp(rng) * std::pow(static_cast<double>(k + 1), -b);
    out.push_back(SeqSample::from_real(v));
  }
  return out;
}

}  // namespace snlab
