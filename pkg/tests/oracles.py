"""Independent reference implementations and frozen oracle values.

Everything here is deliberately written without touching the package's
own code paths: p values come from high-precision numerical integration
of the t density (mpmath), t statistics from the plain textbook
formulas, and AUC from literal all-pairs counting. The frozen tables
below were produced by the mpmath oracle at 50 decimal digits; the
generator functions stay here so the numbers can be re-derived.
"""

from __future__ import annotations

import math

from mpmath import gamma, inf, mp, mpf, pi, quad, sqrt

mp.dps = 50


def t_density(u, df):
    df = mpf(df)
    c = gamma((df + 1) / 2) / (sqrt(df * pi) * gamma(df / 2))
    return c * (1 + u * u / df) ** (-(df + 1) / 2)


def quad_p_two_sided(t, df) -> float:
    """2 * integral of the t density over [|t|, inf)."""
    return float(2 * quad(lambda u: t_density(u, df), [mpf(abs(t)), inf]))


def quad_cdf(t, df) -> float:
    t = mpf(t)
    if t >= 0:
        return float(1 - quad(lambda u: t_density(u, df), [t, inf]))
    return float(quad(lambda u: t_density(u, df), [-inf, t]))


def _mean(xs):
    return sum(xs) / len(xs)


def _sample_var(xs):
    m = _mean(xs)
    return sum((x - m) ** 2 for x in xs) / (len(xs) - 1)


def textbook_welch(a, b) -> tuple[float, float]:
    """Welch t statistic and Welch-Satterthwaite df, straight off the page."""
    na, nb = len(a), len(b)
    va, vb = _sample_var(a), _sample_var(b)
    se2 = va / na + vb / nb
    t = (_mean(a) - _mean(b)) / math.sqrt(se2)
    df = se2**2 / ((va / na) ** 2 / (na - 1) + (vb / nb) ** 2 / (nb - 1))
    return t, df


def textbook_pooled(a, b) -> tuple[float, float]:
    na, nb = len(a), len(b)
    sp2 = ((na - 1) * _sample_var(a) + (nb - 1) * _sample_var(b)) / (na + nb - 2)
    t = (_mean(a) - _mean(b)) / math.sqrt(sp2 * (1 / na + 1 / nb))
    return t, float(na + nb - 2)


def brute_force_auc(scores, labels) -> float:
    """All-pairs count: wins plus half the ties over pos*neg pairs."""
    pos = [s for s, l in zip(scores, labels) if l == 1]
    neg = [s for s, l in zip(scores, labels) if l == 0]
    wins = sum(1 for p in pos for n in neg if p > n)
    ties = sum(1 for p in pos for n in neg if p == n)
    return (wins + 0.5 * ties) / (len(pos) * len(neg))


# Frozen spot values from quad_cdf.
CDF_ORACLE = [
    (2.0, 10, 0.96330598261462982),
    (-1.5, 3.7, 0.10679908460100677),
    (0.75, 1, 0.70483276469913345),
]

# Welch on the documented four-point pair; p frozen from quad_p_two_sided.
EXAMPLE_PAIR_A = (0.1, 0.2, 0.15, 0.25)
EXAMPLE_PAIR_B = (0.4, 0.5, 0.45, 0.55)
EXAMPLE_PAIR_P = 0.00059476497548625895

# 25 fixed sample pairs; p values frozen from quad_p_two_sided applied to
# the textbook statistic of each pair.
TTEST_ORACLE = [
    ((-3.2396, -2.2707, -0.5827, -0.8898, 0.7505, 0.283, -3.3999),
     (-2.0705, -2.3541, -0.7917, -1.6654, -1.6424, -0.8062),
     'pooled', 0.76708369942075242),
    ((4.1848, 4.2221, 2.3168, 2.3963, 5.9773, 3.6833, -0.8241, 4.1707, 4.01, 3.2167, 2.325, 5.0485),
     (-0.0814, 5.1649, 4.9841, 6.3354, 4.9746, 4.4746, 2.3049, 5.1297, 1.9868),
     'welch', 0.54428435342268883),
    ((-3.2496, -5.6343, -5.3767),
     (-3.9288, -4.6426, -7.0781, -3.2596, -6.3547, -3.9925, -5.4856, -4.9633, -6.4016, -5.4011, -4.2088),
     'welch', 0.73473177857923465),
    ((6.7171, 3.4567, 4.0191, 4.2368, 2.9037, 4.026, -0.4455, 3.1939, 4.5502),
     (5.882, 2.6074, 4.189, 8.7342, 3.3322, 8.7967, 6.7717),
     'welch', 0.087230334444316755),
    ((2.605, 2.7257, 2.3125, 3.8028, 1.5401, 2.7538, 1.7796, 2.2286, 2.4666, 1.3372, 0.9789),
     (1.701, 5.4704, 4.1855, 2.9621, 3.8421, 4.4725, 2.5121, 2.0584, 2.9467, 2.8268, 2.2392),
     'welch', 0.033786694385469946),
    ((0.7533, -4.1747, -1.8421),
     (-6.9712, -6.2187, -0.6584, -8.0927, -4.9888, -5.009),
     'pooled', 0.087714677153356679),
    ((-2.6576, -2.9785, -0.093, -3.8906, -2.0948, -1.476, 1.6521, -5.356, -1.3798, 1.487, -2.3495),
     (0.6277, -0.3594, -1.6143, -0.4462, 0.6382, -0.0577, 0.5936, 0.3186, -0.5647),
     'welch', 0.033101795338922079),
    ((3.8059, 1.1957, -0.0224),
     (-2.6009, 0.2692, -1.8875),
     'welch', 0.10187870948442042),
    ((2.6313, 1.082, 0.7176),
     (1.8747, 5.1667, 2.8729),
     'welch', 0.19865246520649705),
    ((5.6852, 3.8267, 4.6334, 5.6682, 3.8627, 5.7037, 5.4521, 2.7222, 1.1613),
     (4.7015, 3.7462, 4.5015, 4.4865, 4.5972, 3.9335, 3.7272, 5.1131, 4.0203),
     'welch', 0.98250009932259293),
    ((3.0537, -1.6389, 2.0632, 0.1464),
     (1.9336, 4.4203, 1.1448, 2.6973, 0.811, 6.0641, 4.5684),
     'pooled', 0.11646947002874037),
    ((-3.0512, 1.5603, -6.8581, -7.666, -2.1109, -4.531, -0.7764, -4.8502, 0.341, -4.8536, -6.4094, -2.8138),
     (-5.9887, -6.9976, -9.9185, -3.8928, -1.3282, -8.4583, -5.9506),
     'welch', 0.081504648785370505),
    ((-2.7121, -2.5297, -1.5511, -3.4006, -3.8997, -4.6441, -5.0703, -3.3288, -5.4214, -4.1598, -3.7744),
     (-4.8806, -4.0544, -5.9521, -4.2074),
     'welch', 0.087812177634786691),
    ((4.9098, 5.0671, 1.6759, 2.6539),
     (2.8617, 4.2891, 5.2048, 6.4071, 5.9028, 6.3966, 5.7558, 2.6977, 5.4168, 5.6609),
     'welch', 0.18064695376432167),
    ((-5.2079, -3.7344, -4.3744, -4.2547, -6.5907, -5.6185, -5.1908, 0.4041, -7.6541),
     (-4.1507, -3.22, -3.066, -3.3852, -4.0673, -3.5047, -3.7864, -3.2899, -4.1397, -3.915, -3.1076),
     'welch', 0.19045962601247277),
    ((-1.3127, -1.1309, -1.5568, 0.6719, 0.4766, -1.0656, 0.2131, 1.0464, 0.5827),
     (0.9289, 0.2275, 0.8374),
     'pooled', 0.17667619116027368),
    ((-1.6766, -0.9081, -0.6661, -1.3125, -2.6897, -2.5126, -1.0488),
     (-1.0848, -1.8493, -1.6356, -0.7916, -1.9536),
     'welch', 0.83096501346117325),
    ((-0.7813, -2.4725, -1.4368, -1.4674, -0.1544, -0.3844),
     (1.0218, 0.8042, 1.1088, 0.5632, 0.3313, -0.946),
     'welch', 0.006556526230740721),
    ((-3.3314, -5.0846, -0.9335, -1.509, -3.3828, -2.6864, 0.4258, -10.5936, -5.3639, -0.7182, -6.8305),
     (-5.418, -3.2916, -1.3559, -6.0102, -7.1671, -5.6743, -6.3207, -2.7684, -5.2674, -5.7452),
     'welch', 0.27533508962553829),
    ((2.0733, 4.3841, 4.9403, 0.5818, 6.2982),
     (0.2381, 4.1057, 7.6853, 7.6204, 7.0007, -3.8594),
     'welch', 0.94952736004817571),
    ((-0.155, 0.5052, 0.4251),
     (0.6641, -2.8702, -1.3255, -0.6142, 0.383, 3.7672, -1.093, -2.5014, 0.7569, 2.6677, -0.5666),
     'pooled', 0.79136764046270238),
    ((1.7669, 3.1397, 1.2754, -4.074, -2.5389),
     (1.3588, 3.3371, 1.265, 0.5741, -1.4391, -3.664, -0.3603, 0.565),
     'welch', 0.85773001591998464),
    ((-2.5724, 1.444, 0.4721),
     (-0.1003, 0.032, 0.1975, -0.5718, -0.1354, -0.0039, -0.0613, 0.6053, 0.4472),
     'welch', 0.84771176975105517),
    ((-4.1543, 1.6009, -3.0743, 2.5745),
     (-4.8891, -4.1417, -1.2026, -6.4667, -5.6175, -4.9975, -4.3538, -3.7867, -4.9861, -5.4617, -3.6399),
     'welch', 0.10831386337300097),
    ((-1.9393, 2.0725, -0.5605, 3.5248, 3.818, 5.5255, 1.6913, 6.3975, 5.6387, 2.6918, 1.3292),
     (2.7977, 5.4998, 5.0978, 5.1985, 3.9903, 4.5929, 4.2631, 4.8905, 3.0464, 6.6774),
     'welch', 0.049262143267289511),
]
