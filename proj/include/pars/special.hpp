#pragma once

namespace pars {

// Upper regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a), a > 0.
double regularized_gamma_q(double a, double x);

// Survival function of a chi-square variable with `dof` degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

// Standard normal CDF.
double normal_cdf(double x);

// Kolmogorov distribution tail Q_KS(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_tail(double lambda);

}  // namespace pars
