"""Named thresholds used by the experiments."""

import math

# lower bound on lambda1 of congruence arithmetic 2-orbifolds
SELBERG_LOWER = 3 / 16
# (1/4) * sqrt(3/16): the resulting coefficient on h for their 2-covers
RAMA_COEFF = math.sqrt(3) / 16
# constant in lambda1(M') >= c sqrt(lambda1(M)) h(M') for 2-covers
THEOREM_CONST = 1 / 4
