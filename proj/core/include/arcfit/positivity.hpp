#ifndef ARCFIT_POSITIVITY_HPP
#define ARCFIT_POSITIVITY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "arcfit/errors.hpp"

namespace arcfit {

/// Shared dense-tensor indexing for multivariate coefficient arrays.
/// Layout is row-major with the last variable fastest.
inline std::size_t tensor_size(const std::vector<int>& degrees) {
  std::size_t n = 1;
  for (int d : degrees) n *= static_cast<std::size_t>(d + 1);
  return n;
}

inline std::size_t flat_index(const std::vector<int>& degrees,
                              const std::vector<int>& idx) {
  std::size_t f = 0;
  for (std::size_t v = 0; v < degrees.size(); ++v)
    f = f * static_cast<std::size_t>(degrees[v] + 1) + static_cast<std::size_t>(idx[v]);
  return f;
}

/// Advances a multi-index in row-major order; returns false after the last.
inline bool next_index(const std::vector<int>& degrees, std::vector<int>& idx) {
  for (std::size_t v = degrees.size(); v-- > 0;) {
    if (idx[v] < degrees[v]) {
      ++idx[v];
      return true;
    }
    idx[v] = 0;
  }
  return false;
}

/// Pascal-triangle binomials in the coefficient ring (exact for rationals).
template <typename T>
std::vector<std::vector<T>> binomial_table(int n) {
  std::vector<std::vector<T>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, T(0));
    c[i][0] = T(1);
    for (int j = 1; j <= i; ++j)
      c[i][j] = (j == i) ? T(1) : c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

/// Dense multivariate polynomial in the standard basis {prod x_v^{i_v}}.
template <typename T>
struct PolyMV {
  std::vector<int> degrees;
  std::vector<T> coeffs;

  PolyMV() = default;
  PolyMV(std::vector<int> deg, std::vector<T> cf)
      : degrees(std::move(deg)), coeffs(std::move(cf)) {
    if (coeffs.size() != tensor_size(degrees))
      throw InputError("polynomial coefficient count does not match its degrees");
  }

  static PolyMV constant(std::vector<int> deg, const T& value) {
    PolyMV p;
    p.degrees = std::move(deg);
    p.coeffs.assign(tensor_size(p.degrees), T(0));
    p.coeffs[0] = value;
    return p;
  }

  std::size_t arity() const { return degrees.size(); }

  T eval(const std::vector<T>& x) const {
    if (x.size() != arity()) throw InputError("evaluation point has wrong arity");
    std::vector<int> idx(arity(), 0);
    T acc(0);
    std::size_t f = 0;
    do {
      T term = coeffs[f];
      for (std::size_t v = 0; v < arity(); ++v)
        for (int k = 0; k < idx[v]; ++k) term = term * x[v];
      acc = acc + term;
      ++f;
    } while (next_index(degrees, idx));
    return acc;
  }
};

/// Embeds p into a wider variable space (extra trailing variables of the
/// given degrees, all unused).
template <typename T>
PolyMV<T> lift(const PolyMV<T>& p, const std::vector<int>& degrees) {
  if (degrees.size() < p.arity())
    throw InputError("lift target has fewer variables than the source");
  for (std::size_t v = 0; v < p.arity(); ++v)
    if (degrees[v] < p.degrees[v])
      throw InputError("lift target degree is smaller than the source degree");
  PolyMV<T> r;
  r.degrees = degrees;
  r.coeffs.assign(tensor_size(degrees), T(0));
  std::vector<int> idx(p.arity(), 0);
  std::size_t f = 0;
  do {
    std::vector<int> full(degrees.size(), 0);
    for (std::size_t v = 0; v < p.arity(); ++v) full[v] = idx[v];
    r.coeffs[flat_index(degrees, full)] = p.coeffs[f];
    ++f;
  } while (next_index(p.degrees, idx));
  return r;
}

template <typename T>
PolyMV<T> poly_add(const PolyMV<T>& a, const PolyMV<T>& b) {
  if (a.arity() != b.arity()) throw InputError("polynomial arity mismatch");
  std::vector<int> deg(a.arity());
  for (std::size_t v = 0; v < a.arity(); ++v)
    deg[v] = a.degrees[v] > b.degrees[v] ? a.degrees[v] : b.degrees[v];
  PolyMV<T> la = lift(a, deg), lb = lift(b, deg);
  for (std::size_t i = 0; i < la.coeffs.size(); ++i)
    la.coeffs[i] = la.coeffs[i] + lb.coeffs[i];
  return la;
}

template <typename T>
PolyMV<T> poly_scale(const PolyMV<T>& a, const T& s) {
  PolyMV<T> r = a;
  for (auto& c : r.coeffs) c = c * s;
  return r;
}

template <typename T>
PolyMV<T> poly_mul(const PolyMV<T>& a, const PolyMV<T>& b) {
  if (a.arity() != b.arity()) throw InputError("polynomial arity mismatch");
  PolyMV<T> r;
  r.degrees.resize(a.arity());
  for (std::size_t v = 0; v < a.arity(); ++v)
    r.degrees[v] = a.degrees[v] + b.degrees[v];
  r.coeffs.assign(tensor_size(r.degrees), T(0));
  std::vector<int> ia(a.arity(), 0);
  std::size_t fa = 0;
  do {
    std::vector<int> ib(b.arity(), 0);
    std::size_t fb = 0;
    do {
      std::vector<int> ir(r.degrees.size());
      for (std::size_t v = 0; v < r.degrees.size(); ++v) ir[v] = ia[v] + ib[v];
      r.coeffs[flat_index(r.degrees, ir)] =
          r.coeffs[flat_index(r.degrees, ir)] + a.coeffs[fa] * b.coeffs[fb];
      ++fb;
    } while (next_index(b.degrees, ib));
    ++fa;
  } while (next_index(a.degrees, ia));
  return r;
}

/// Substitutes the last variable of p by q (Horner). p's remaining
/// variables must be the leading variables of q's space; the result
/// lives in q's variable space.
template <typename T>
PolyMV<T> substitute_last(const PolyMV<T>& p, const PolyMV<T>& q) {
  if (p.arity() == 0) throw InputError("cannot substitute into a 0-ary polynomial");
  if (q.arity() + 1 < p.arity())
    throw InputError("substitution target has too few variables");
  const std::size_t keep = p.arity() - 1;
  const int dn = p.degrees.back();

  // Coefficient slice A_j over the kept variables, lifted into q's space.
  auto slice = [&](int j) {
    std::vector<int> deg(p.degrees.begin(), p.degrees.begin() + keep);
    PolyMV<T> s;
    s.degrees = deg;
    s.coeffs.assign(tensor_size(deg), T(0));
    std::vector<int> idx(keep, 0);
    std::size_t f = 0;
    do {
      std::vector<int> full(p.arity());
      for (std::size_t v = 0; v < keep; ++v) full[v] = idx[v];
      full[keep] = j;
      s.coeffs[f] = p.coeffs[flat_index(p.degrees, full)];
      ++f;
    } while (keep > 0 && next_index(s.degrees, idx));
    std::vector<int> qdeg(q.arity(), 0);
    for (std::size_t v = 0; v < keep; ++v) qdeg[v] = s.degrees[v];
    return lift(s, qdeg);
  };

  PolyMV<T> r = slice(dn);
  for (int j = dn - 1; j >= 0; --j) r = poly_add(poly_mul(r, q), slice(j));
  return r;
}

/// Polynomial in the basis {prod x_v^{i_v} (1-x_v)^{n_v-i_v}}; nonnegative
/// coefficients certify nonnegativity on the unit box.
template <typename T>
struct BForm {
  std::vector<int> degrees;
  std::vector<T> coeffs;

  T eval(const std::vector<T>& x) const {
    if (x.size() != degrees.size()) throw InputError("evaluation point has wrong arity");
    std::vector<int> idx(degrees.size(), 0);
    T acc(0);
    std::size_t f = 0;
    do {
      T term = coeffs[f];
      for (std::size_t v = 0; v < degrees.size(); ++v) {
        for (int k = 0; k < idx[v]; ++k) term = term * x[v];
        for (int k = 0; k < degrees[v] - idx[v]; ++k) term = term * (T(1) - x[v]);
      }
      acc = acc + term;
      ++f;
    } while (next_index(degrees, idx));
    return acc;
  }
};

/// Univariate transition: b_j = sum_{i<=j} C(n-i, j-i) a_i.
/// The matrix is lower triangular with binomial entries.
template <typename T>
BForm<T> std_to_bform(const std::vector<T>& a, int n) {
  if (a.size() != static_cast<std::size_t>(n) + 1)
    throw InputError("coefficient list length does not match the degree");
  auto binom = binomial_table<T>(n);
  BForm<T> b;
  b.degrees = {n};
  b.coeffs.assign(a.size(), T(0));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i)
      b.coeffs[j] = b.coeffs[j] + binom[n - i][j - i] * a[i];
  return b;
}

/// Tensor-product transition applied along every axis.
template <typename T>
BForm<T> std_to_bform_multi(const PolyMV<T>& p) {
  BForm<T> b;
  b.degrees = p.degrees;
  b.coeffs = p.coeffs;
  int maxdeg = 0;
  for (int d : p.degrees) maxdeg = d > maxdeg ? d : maxdeg;
  auto binom = binomial_table<T>(maxdeg);

  for (std::size_t axis = 0; axis < p.degrees.size(); ++axis) {
    const int n = p.degrees[axis];
    std::size_t inner = 1;  // stride of the axis
    for (std::size_t v = axis + 1; v < p.degrees.size(); ++v)
      inner *= static_cast<std::size_t>(p.degrees[v] + 1);
    const std::size_t outer = b.coeffs.size() / (inner * static_cast<std::size_t>(n + 1));
    std::vector<T> line(static_cast<std::size_t>(n) + 1);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        const std::size_t base = o * inner * static_cast<std::size_t>(n + 1) + i;
        for (int j = 0; j <= n; ++j) line[j] = b.coeffs[base + j * inner];
        for (int j = n; j >= 0; --j) {
          T acc(0);
          for (int k = 0; k <= j; ++k) acc = acc + binom[n - k][j - k] * line[k];
          b.coeffs[base + static_cast<std::size_t>(j) * inner] = acc;
        }
      }
    }
  }
  return b;
}

/// Sufficient nonnegativity certificate: all B-form coefficients >= 0.
/// Inconclusive carries the most negative coefficient and its index;
/// the polynomial may still be nonnegative (the test is one-sided).
template <typename T>
struct Certificate {
  bool certified = false;
  T min_coeff{};
  std::vector<int> index;
};

template <typename T>
Certificate<T> certify_nonneg(const BForm<T>& b) {
  Certificate<T> cert;
  cert.certified = true;
  if (b.coeffs.empty()) return cert;
  cert.min_coeff = b.coeffs[0];
  cert.index.assign(b.degrees.size(), 0);
  std::vector<int> idx(b.degrees.size(), 0);
  std::size_t f = 0;
  do {
    if (b.coeffs[f] < cert.min_coeff) {
      cert.min_coeff = b.coeffs[f];
      cert.index = idx;
    }
    if (b.coeffs[f] < T(0)) cert.certified = false;
    ++f;
  } while (next_index(b.degrees, idx));
  return cert;
}

/// JSON document for polynomial exchange:
/// {"degrees":[n1,...], "basis":"standard"|"bform", "coeffs":[...]}
/// with row-major coefficients, last variable fastest.
struct PolyDocument {
  std::vector<int> degrees;
  std::string basis;  // "standard" or "bform"
  std::vector<double> coeffs;
};

PolyDocument read_poly_json(std::istream& in);
void write_poly_json(std::ostream& out, const PolyDocument& doc);

PolyMV<double> to_poly(const PolyDocument& doc);
BForm<double> to_bform(const PolyDocument& doc);

}  // namespace arcfit

#endif  // ARCFIT_POSITIVITY_HPP
