#include "tanglerep/matrix.hpp"

#include <algorithm>

namespace tanglerep {

SVec sv_scale(const SVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SVec r;
  r.reserve(a.size());
  for (const auto& [i, x] : a) {
    Scalar y = x * c;
    if (!y.is_zero()) r.emplace_back(i, std::move(y));
  }
  return r;
}

SVec sv_neg(const SVec& a) {
  SVec r;
  r.reserve(a.size());
  for (const auto& [i, x] : a) r.emplace_back(i, -x);
  return r;
}

SVec sv_axpy(const SVec& a, const Scalar& c, const SVec& b) {
  if (c.is_zero() || b.empty()) return a;
  SVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      Scalar y = c * b[j].second;
      if (!y.is_zero()) r.emplace_back(b[j].first, std::move(y));
      ++j;
    } else {
      Scalar y = a[i].second + c * b[j].second;
      if (!y.is_zero()) r.emplace_back(a[i].first, std::move(y));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Scalar y = c * b[j].second;
    if (!y.is_zero()) r.emplace_back(b[j].first, std::move(y));
  }
  return r;
}

SVec sv_add(const SVec& a, const SVec& b) {
  SVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      r.push_back(b[j++]);
    } else {
      Scalar y = a[i].second + b[j].second;
      if (!y.is_zero()) r.emplace_back(a[i].first, std::move(y));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

bool sv_eq(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (!(a[i].second == b[i].second)) return false;
  }
  return true;
}

const Scalar* sv_get(const SVec& a, long idx) {
  auto it = std::lower_bound(a.begin(), a.end(), idx,
                             [](const auto& e, long k) { return e.first < k; });
  if (it == a.end() || it->first != idx) return nullptr;
  return &it->second;
}

long sv_complexity(const SVec& a) {
  long c = 0;
  for (const auto& [i, x] : a) c += x.complexity();
  return c;
}

SVec sv_kron(const SVec& a, const SVec& b, long width_b) {
  SVec r;
  r.reserve(a.size() * b.size());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Scalar z = x * y;
      if (!z.is_zero()) r.emplace_back(i * width_b + j, std::move(z));
    }
  return r;
}

// ---------------------------------------------------------------------------

Mat::Mat(long rows, long cols, Field f)
    : rows_(rows), cols_(cols), f_(std::move(f)), data_(rows) {}

Mat Mat::identity(long d, const Field& f) {
  Mat m(d, d, f);
  Scalar one = sc_one(f);
  for (long i = 0; i < d; ++i) m.data_[i].emplace_back(i, one);
  return m;
}

void Mat::set(long i, long j, const Scalar& v) {
  SVec& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, long k) { return e.first < k; });
  if (it != r.end() && it->first == j) {
    if (v.is_zero()) r.erase(it);
    else it->second = v;
  } else if (!v.is_zero()) {
    r.emplace(it, j, v);
  }
}

void Mat::add_to(long i, long j, const Scalar& v) {
  if (v.is_zero()) return;
  SVec& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, long k) { return e.first < k; });
  if (it != r.end() && it->first == j) {
    Scalar s = it->second + v;
    if (s.is_zero()) r.erase(it);
    else it->second = std::move(s);
  } else {
    r.emplace(it, j, v);
  }
}

Scalar Mat::at(long i, long j) const {
  const Scalar* p = sv_get(data_[i], j);
  return p ? *p : sc_zero(f_);
}

long Mat::nnz() const {
  long n = 0;
  for (const SVec& r : data_) n += static_cast<long>(r.size());
  return n;
}

bool Mat::is_zero() const {
  for (const SVec& r : data_)
    if (!r.empty()) return false;
  return true;
}

static void check_shapes(const Mat& a, const Mat& b, bool for_mul) {
  if (!a.field()->same(*b.field()))
    throw usage_error("cannot combine matrices over different fields");
  if (for_mul) {
    if (a.cols() != b.rows())
      throw usage_error("matrix product shape mismatch: " + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()));
  } else if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw usage_error("matrix sum shape mismatch");
  }
}

Mat operator+(const Mat& a, const Mat& b) {
  check_shapes(a, b, false);
  Mat c(a.rows_, a.cols_, a.f_);
  for (long i = 0; i < a.rows_; ++i) c.data_[i] = sv_add(a.data_[i], b.data_[i]);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_shapes(a, b, false);
  Mat c(a.rows_, a.cols_, a.f_);
  Scalar mone = -sc_one(a.f_);
  for (long i = 0; i < a.rows_; ++i) c.data_[i] = sv_axpy(a.data_[i], mone, b.data_[i]);
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  check_shapes(a, b, true);
  Mat c(a.rows_, b.cols_, a.f_);
  for (long i = 0; i < a.rows_; ++i) {
    SVec acc;
    for (const auto& [k, x] : a.data_[i]) acc = sv_axpy(acc, x, b.data_[k]);
    c.data_[i] = std::move(acc);
  }
  return c;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(rows_, cols_, f_);
  for (long i = 0; i < rows_; ++i) r.data_[i] = sv_scale(data_[i], c);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (long i = 0; i < rows_; ++i)
    if (!sv_eq(data_[i], o.data_[i])) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, f_);
  for (long i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i]) t.data_[j].emplace_back(i, x);
  return t; // rows fill in increasing column order, so each row stays sorted
}

SVec Mat::flatten() const {
  SVec v;
  v.reserve(static_cast<size_t>(nnz()));
  for (long i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i]) v.emplace_back(i * cols_ + j, x);
  return v;
}

Mat Mat::unflatten(const SVec& v, long rows, long cols, const Field& f) {
  Mat m(rows, cols, f);
  for (const auto& [k, x] : v) m.data_[k / cols].emplace_back(k % cols, x);
  return m;
}

SVec apply_row(const SVec& v, const Mat& m) {
  SVec acc;
  for (const auto& [k, x] : v) acc = sv_axpy(acc, x, m.row(k));
  return acc;
}

Mat kron(const Mat& a, const Mat& b) {
  if (!a.field()->same(*b.field()))
    throw usage_error("cannot combine matrices over different fields");
  Mat c(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (long i = 0; i < a.rows(); ++i) {
    if (a.row(i).empty()) continue;
    for (long k = 0; k < b.rows(); ++k) {
      if (b.row(k).empty()) continue;
      c.row_mut(i * b.rows() + k) = sv_kron(a.row(i), b.row(k), b.cols());
    }
  }
  return c;
}

Mat vstack(const std::vector<Mat>& parts) {
  if (parts.empty()) throw usage_error("vstack of nothing");
  long cols = parts[0].cols(), total = 0;
  for (const Mat& p : parts) {
    if (p.cols() != cols) throw usage_error("vstack column mismatch");
    total += p.rows();
  }
  Mat m(total, cols, parts[0].field());
  long at = 0;
  for (const Mat& p : parts)
    for (long i = 0; i < p.rows(); ++i) m.row_mut(at++) = p.row(i);
  return m;
}

} // namespace tanglerep
