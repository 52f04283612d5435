# 50-digit reference values frozen into the C++ tests. Run:
#   python3 theta_reference.py        (needs mpmath and scipy)
import mpmath as mp

mp.mp.dps = 50

T = (mp.mpf('0.57'), mp.mpf('0.19'), mp.mpf('0.19'), mp.mpf('0.05'))
LEVELS = 16
DELTA = 16

sigma = T[0] + T[1] - mp.mpf('0.5')
tau = (1 + 2 * sigma) / (1 - 2 * sigma)
lam = DELTA * (1 - 4 * sigma ** 2) ** (mp.mpf(LEVELS) / 2)

print("sigma  =", sigma)
print("tau    =", mp.nstr(tau, 22))
print("lambda =", mp.nstr(lam, 22))

# grid position of degree 100 (test_theory.cpp, high-precision reference)
theta_100 = mp.log(100 / lam) / mp.log(tau)
print("theta_100 =", mp.nstr(theta_100, 22))

# incident probability at the top slice: 2 * (1/2 + sigma)^levels
print("2*(0.76)^16 =", mp.nstr(2 * (mp.mpf('0.5') + sigma) ** LEVELS, 18))

# level-noise matrix at amplitude mu = +0.1 (test_noise.cpp)
mu = mp.mpf('0.1')
diag = T[0] + T[3]
print("noisy t1 =", mp.nstr(T[0] - 2 * mu * T[0] / diag, 18))
print("noisy t4 =", mp.nstr(T[3] - 2 * mu * T[3] / diag, 18))

# chi-squared upper 0.001 quantile at 255 degrees of freedom (acceptance)
try:
    from scipy.stats import chi2
    print("chi2 isf(0.001, 255) =", chi2.isf(0.001, 255))
except ImportError:
    print("chi2 isf(0.001, 255) = 330.51974363400586  (scipy not available)")
