"""Shared test data: the worked-example game scripts and small generators.

The two scripts start from x[1,2]*x[2,3]*x[3,4] at n=4 and end at two
different pathless polynomials with the same d-image; GAME_SCRIPT is the
move sequence of the worked example and ALT_SCRIPT differs from it in the
order of the middle moves.
"""

import random

from subdivalg.poly import is_pathless, num_vars

GAME_START = "x[1,2]*x[2,3]*x[3,4]"

GAME_SCRIPT = """\
m=x[1,2]*x[2,3]*x[3,4] t=(1,2,3)
m=x[1,2]*x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[2,3]*x[3,4] t=(2,3,4)
m=x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[2,4]*x[3,4] t=(1,3,4)
"""

ALT_SCRIPT = """\
m=x[1,2]*x[2,3]*x[3,4] t=(1,2,3)
m=x[1,3]*x[2,3]*x[3,4] t=(1,3,4)
m=x[1,4]*x[2,3]*x[3,4] t=(2,3,4)
m=x[1,2]*x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[3,4] t=(1,3,4)
"""

# End states of the two scripts at beta=1, alpha=0, in canonical text form.
GAME_RESULT = (
    "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,2]*x[1,4]"
    " + x[1,3]*x[1,4]*x[2,4] + x[1,3]*x[1,4] + x[1,3]*x[2,3]*x[2,4]"
    " + x[1,3]*x[2,4] + x[1,4]*x[2,4]*x[3,4] + x[1,4]*x[2,4]"
    " + x[1,4]*x[3,4] + x[1,4]"
)

ALT_RESULT = (
    "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,2]*x[1,4]"
    " + x[1,3]*x[1,4]*x[2,3] + x[1,3]*x[1,4] + x[1,4]*x[2,3]*x[2,4]"
    " + x[1,4]*x[2,3] + x[1,4]*x[2,4]*x[3,4] + x[1,4]*x[2,4]"
    " + x[1,4]*x[3,4] + x[1,4]"
)

GAME_D_IMAGE = (
    "t[1]^3 + t[1]^2*t[2] + t[1]^2*t[3] + 2*t[1]^2 + t[1]*t[2]^2"
    " + t[1]*t[2]*t[3] + 2*t[1]*t[2] + t[1]*t[3] + t[1]"
)


def random_monomial(n: int, max_deg: int, rng: random.Random) -> tuple:
    width = num_vars(n)
    exps = [0] * width
    if width:
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(width)] += 1
    return tuple(exps)


def random_pathless_monomial(n: int, max_deg: int, rng: random.Random) -> tuple:
    while True:
        m = random_monomial(n, max_deg, rng)
        if is_pathless(m):
            return m
