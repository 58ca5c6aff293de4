#include "qschur/schur.hpp"

#include <filesystem>
#include <sstream>

#include "qschur/errors.hpp"
#include "qschur/json_io.hpp"
#include "qschur/parallel.hpp"

namespace qschur {

SchurElement SchurElement::basis(const MatrixIndex& A) {
  SchurElement x;
  x.add_term(A, IntPolynomial(1));
  return x;
}

void SchurElement::add_term(const MatrixIndex& A, const IntPolynomial& c) {
  if (c.is_zero()) return;
  IntPolynomial& slot = terms_[A];
  slot += c;
  if (slot.is_zero()) terms_.erase(A);
}

SchurElement& SchurElement::operator+=(const SchurElement& rhs) {
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& rhs) {
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

SchurElement SchurElement::scaled(const IntPolynomial& c) const {
  SchurElement out;
  if (c.is_zero()) return out;
  for (const auto& [a, coeff] : terms_) out.add_term(a, coeff * c);
  return out;
}

std::string SchurElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*e" << a.str();
  }
  return os.str();
}

SchurElement specialize0(const SchurElement& x) {
  SchurElement out;
  for (const auto& [a, c] : x.terms())
    out.add_term(a, IntPolynomial(c(BigInt(0))));
  return out;
}

SchurElement l_element(const Multisegment& S, int r) {
  SchurElement out;
  const int s = indec_count(S);
  if (s > r) return out;
  for (const MatrixIndex& d : diagonal_matrices(S.n(), r - s))
    out.add_term(S.matrix() + d, IntPolynomial(1));
  return out;
}

SchurElement e_generator(int n, int i, int r) {
  if (i < 1 || i > n - 1)
    throw PreconditionViolated("generator index out of range");
  return l_element(Multisegment::simple(n, i), r);
}

SchurElement unit_element(int n, int r) {
  return l_element(Multisegment(n), r);
}

SchurAlgebra::SchurAlgebra(int n, int r, SchurOptions options)
    : n_(n), r_(r), options_(std::move(options)) {
  if (n < 1 || r < 0) throw PreconditionViolated("need n >= 1 and r >= 0");
  if (options_.jobs <= 0) options_.jobs = resolve_jobs(0);
}

SchurAlgebra::~SchurAlgebra() {
  try {
    flush_cache();
  } catch (...) {
    // A failed cache write must not escape a destructor; the cache is a
    // pure accelerator and the next run recomputes.
  }
}

const std::vector<FlagChain>& SchurAlgebra::flags(const std::vector<int>& type,
                                                  std::uint32_t p) {
  const std::pair<std::vector<int>, std::uint32_t> key{type, p};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = flags_.find(key);
    if (it != flags_.end()) return it->second;
  }
  std::vector<FlagChain> computed = all_flags(type, p);
  std::lock_guard<std::mutex> lock(mutex_);
  return flags_.emplace(key, std::move(computed)).first->second;
}

const SchurAlgebra::Tally& SchurAlgebra::tally(
    const MatrixIndex& candidate, const std::vector<int>& middle_type,
    std::uint32_t p) {
  const std::tuple<MatrixIndex, std::vector<int>, std::uint32_t> key{
      candidate, middle_type, p};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tallies_.find(key);
    if (it != tallies_.end()) return it->second;
  }
  Tally computed =
      intermediate_position_tally(candidate, flags(middle_type, p));
  std::lock_guard<std::mutex> lock(mutex_);
  return tallies_.emplace(key, std::move(computed)).first->second;
}

std::vector<std::uint32_t> SchurAlgebra::prime_pool(int count) const {
  if (options_.primes.empty()) return first_primes(count);
  if (static_cast<int>(options_.primes.size()) < count)
    throw PreconditionViolated("prime pool too small for the degree bound");
  return {options_.primes.begin(), options_.primes.begin() + count};
}

SchurElement SchurAlgebra::compute_product(const MatrixIndex& A,
                                           const MatrixIndex& A2) {
  const std::vector<int> middle = co(A);
  int bound = 0;
  for (std::size_t i = 0; i < middle.size(); ++i)
    for (std::size_t j = i + 1; j < middle.size(); ++j)
      bound += middle[i] * middle[j];
  const auto primes = prime_pool(bound + 2);
  const std::vector<MatrixIndex> candidates =
      matrices_with_margins(ro(A), co(A2));
  std::vector<IntPolynomial> coeffs(candidates.size());
  parallel_for(candidates.size(), options_.jobs, [&](std::size_t idx) {
    const MatrixIndex& cand = candidates[idx];
    const std::pair<MatrixIndex, MatrixIndex> pos{A, A2};
    std::vector<PrimeSample> samples;
    for (int k = 0; k <= bound; ++k) {
      const Tally& t = tally(cand, middle, primes[k]);
      const auto it = t.find(pos);
      samples.push_back({primes[k], it == t.end() ? 0 : it->second});
    }
    IntPolynomial g = interpolate(samples, bound);
    const std::uint32_t extra = primes[bound + 1];
    const Tally& t = tally(cand, middle, extra);
    const auto it = t.find(pos);
    const std::uint64_t check = it == t.end() ? 0 : it->second;
    if (g(BigInt(extra)) != BigInt(check))
      throw NotPolynomial("validation prime disagrees for " + A.str() + " * " +
                          A2.str() + " at " + cand.str());
    coeffs[idx] = std::move(g);
  });
  SchurElement out;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx)
    out.add_term(candidates[idx], coeffs[idx]);
  return out;
}

std::string SchurAlgebra::cache_file() const {
  return options_.cache_dir + "/schur_n" + std::to_string(n_) + "_r" +
         std::to_string(r_) + ".json";
}

void SchurAlgebra::load_disk_cache() {
  if (disk_loaded_ || options_.cache_dir.empty()) return;
  disk_loaded_ = true;
  const std::string path = cache_file();
  if (!std::filesystem::exists(path)) return;
  const Json doc = read_json_file(path);
  for (const auto& [key, terms] : doc.items())
    disk_.emplace(key, schur_element_from_json(terms));
}

void SchurAlgebra::flush_cache() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!disk_dirty_ || options_.cache_dir.empty()) return;
  std::filesystem::create_directories(options_.cache_dir);
  Json doc = Json::object();
  for (const auto& [key, elem] : disk_) doc[key] = to_json(elem);
  write_json_file(cache_file(), doc);
  disk_dirty_ = false;
}

SchurElement SchurAlgebra::multiply(const MatrixIndex& A,
                                    const MatrixIndex& A2) {
  if (A.n() != n_ || A2.n() != n_)
    throw PreconditionViolated("matrix size does not match the algebra");
  if (A.sum() != r_ || A2.sum() != r_)
    throw PreconditionViolated("entry sum does not match the algebra");
  if (co(A) != ro(A2)) return {};
  const std::pair<MatrixIndex, MatrixIndex> key{A, A2};
  const std::string disk_key = A.str() + "|" + A2.str();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    load_disk_cache();
    auto dit = disk_.find(disk_key);
    if (dit != disk_.end()) {
      products_.emplace(key, dit->second);
      return dit->second;
    }
  }
  SchurElement result = compute_product(A, A2);
  std::lock_guard<std::mutex> lock(mutex_);
  products_.emplace(key, result);
  if (!options_.cache_dir.empty()) {
    disk_.emplace(disk_key, result);
    disk_dirty_ = true;
  }
  return result;
}

SchurElement SchurAlgebra::multiply(const SchurElement& x,
                                    const SchurElement& y) {
  SchurElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out += multiply(a, b).scaled(ca * cb);
  return out;
}

namespace {

/// The row h with B = diagonal + E_{h,h+1}; rejects anything else.
int elementary_row(const MatrixIndex& B) {
  int h = 0;
  for (int i = 1; i <= B.n(); ++i)
    for (int j = 1; j <= B.n(); ++j) {
      if (i == j || B.at(i, j) == 0) continue;
      if (h != 0 || j != i + 1 || B.at(i, j) != 1)
        throw PreconditionViolated(
            "left factor must be diagonal plus one unit at (h, h+1)");
      h = i;
    }
  if (h == 0)
    throw PreconditionViolated("left factor has no off-diagonal unit");
  return h;
}

}  // namespace

SchurElement SchurAlgebra::chevalley_left(const MatrixIndex& B,
                                          const MatrixIndex& A) const {
  if (B.n() != n_ || A.n() != n_ || B.sum() != r_ || A.sum() != r_)
    throw PreconditionViolated("factors do not match the algebra");
  const int h = elementary_row(B);
  if (co(B) != ro(A))
    throw PreconditionViolated("column sums of B must be the row sums of A");
  SchurElement out;
  for (int p = 1; p <= n_; ++p) {
    if (A.at(h + 1, p) == 0) continue;
    int exponent = 0;
    for (int j = p + 1; j <= n_; ++j) exponent += A.at(h, j);
    const IntPolynomial coeff = IntPolynomial::power(exponent) *
                                IntPolynomial::gaussian_integer(A.at(h, p) + 1);
    MatrixIndex target = A;
    target.add_at(h, p, 1);
    target.add_at(h + 1, p, -1);
    out.add_term(target, coeff);
  }
  return out;
}

SchurElement SchurAlgebra::chevalley_right(const MatrixIndex& A,
                                           const MatrixIndex& B) const {
  if (B.n() != n_ || A.n() != n_ || B.sum() != r_ || A.sum() != r_)
    throw PreconditionViolated("factors do not match the algebra");
  elementary_row(B);
  if (co(A) != ro(B))
    throw PreconditionViolated("column sums of A must be the row sums of B");
  // The antitranspose is an anti-automorphism of the structure constants
  // (transpose swaps the factors, index reversal is an automorphism), and
  // it maps diagonal-plus-unit-at-(h,h+1) matrices to matrices of the same
  // shape, so the right product is the reflected left product.
  const SchurElement left =
      chevalley_left(B.antitransposed(), A.antitransposed());
  SchurElement out;
  for (const auto& [key, coeff] : left.terms())
    out.add_term(key.antitransposed(), coeff);
  return out;
}

SchurElement SchurAlgebra::generator_times(int i, const SchurElement& x) const {
  SchurElement out;
  if (r_ < 1) return out;
  for (const MatrixIndex& d : diagonal_matrices(n_, r_ - 1)) {
    const MatrixIndex b = MatrixIndex::elementary(n_, i, i + 1) + d;
    const std::vector<int> cb = co(b);
    for (const auto& [a, c] : x.terms())
      if (ro(a) == cb) out += chevalley_left(b, a).scaled(c);
  }
  return out;
}

SchurElement SchurAlgebra::times_generator(const SchurElement& x, int i) const {
  SchurElement out;
  if (r_ < 1) return out;
  for (const MatrixIndex& d : diagonal_matrices(n_, r_ - 1)) {
    const MatrixIndex b = MatrixIndex::elementary(n_, i, i + 1) + d;
    const std::vector<int> rb = ro(b);
    for (const auto& [a, c] : x.terms())
      if (co(a) == rb) out += chevalley_right(a, b).scaled(c);
  }
  return out;
}

}  // namespace qschur
