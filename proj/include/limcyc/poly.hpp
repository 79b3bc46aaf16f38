#ifndef LIMCYC_POLY_HPP
#define LIMCYC_POLY_HPP

// Exact bivariate polynomial algebra: the representation of phi(x,y) and of
// everything derived from it (partials, radial derivative, divergence).
// Coefficients are doubles; canonical form stores no zero terms, so
// structural equality of the term maps is semantic equality.

#include <map>
#include <span>
#include <string>
#include <vector>

namespace limcyc {

// Threshold below which a coefficient is treated as a true arithmetic zero
// and dropped from the canonical form. Deliberately at the denormal floor:
// canonicalization never epsilon-prunes.
inline constexpr double kCoeffZero = 1e-300;

enum class Var { X, Y };

// Exponent pair of the monomial x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;
  int degree() const { return i + j; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic term order: total degree first, then ascending power
// of x. Fixes evaluation and serialization order for reproducibility.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.i < b.i;
  }
};

class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, double, GradedLexLess>;

  BivariatePoly() = default;

  static BivariatePoly constant(double c);
  static BivariatePoly variable(Var v);
  static BivariatePoly monomial(int i, int j, double coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  double coeff(int i, int j) const;
  // Sum of |coefficient| over all terms.
  double coeff_norm() const;

  void add_term(int i, int j, double coeff);

  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly operator-() const;
  BivariatePoly scaled(double s) const;
  BivariatePoly pow(int n) const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  // "c3*x^2*y - 1.5" style rendering in graded-lex order; "0" when zero.
  std::string to_string() const;

 private:
  TermMap terms_;
};

struct HomogeneousPart {
  int degree = 0;
  BivariatePoly poly;
};

// Dense univariate polynomial, coefficients ascending in degree. Trailing
// true-zero coefficients are trimmed; the zero polynomial is empty.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double leading_coeff() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double eval(double t) const;
  UnivariatePoly derivative() const;
  UnivariatePoly scaled(double s) const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  std::vector<double> coeffs_;
};

// Value of p at (x,y), summed in graded-lex term order (bit-reproducible).
double eval(const BivariatePoly& p, double x, double y);

// Exact formal partial derivative.
BivariatePoly partial(const BivariatePoly& p, Var var);

// S = x*dp/dx + y*dp/dy, the radial directional derivative times r.
BivariatePoly radial_derivative(const BivariatePoly& p);

// Split into homogeneous parts, ascending degree, zero parts omitted.
std::vector<HomogeneousPart> homogeneous_decompose(const BivariatePoly& p);

// Coefficients of r -> p(r cos(theta), r sin(theta)) as a polynomial in r.
UnivariatePoly restrict_to_ray(const BivariatePoly& p, double theta);

struct CircleExtrema {
  double min = 0.0;
  double max = 0.0;
  double argmin_theta = 0.0;
  double argmax_theta = 0.0;
};

// Extrema of p on the circle of radius r: n_theta samples (>= 64), the best
// candidates polished by safeguarded Newton in theta.
CircleExtrema circle_min_max(const BivariatePoly& p, double r, int n_theta);

// All radii r > r_min such that p vanishes identically on the circle of
// radius r. Found by reducing p modulo x^2+y^2-c with c symbolic and taking
// the common real roots of the coefficient polynomials in c.
// Throws std::domain_error for the zero polynomial.
std::vector<double> circle_divisor_radii(const BivariatePoly& p, double r_min);

// Number of distinct real roots of q in (0, +inf), via a Sturm sequence with
// sign evaluations at 0+ and +inf. Throws std::domain_error on the zero
// polynomial.
int sturm_count_positive_roots(const UnivariatePoly& q);

// Distinct real roots of q in the open interval (lo, hi), ascending, located
// by Sturm bisection and polished by Newton. Throws on the zero polynomial.
std::vector<double> real_roots_in(const UnivariatePoly& q, double lo, double hi);

}  // namespace limcyc

#endif  // LIMCYC_POLY_HPP
