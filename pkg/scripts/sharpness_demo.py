"""Show the univalence radius is sharp by colliding the extremal map.

Computes rho for a derivative-bound profile, then produces two points of
the slightly larger disk |z| < r that the extremal function maps to the
same value.  The collision residual should sit at roundoff level, for the
map itself and for its exponential.
"""

import argparse
import cmath
import sys

from polylandau import DerivAll, ExtremalSpec, collision_pair, deriv_radii, extremal_eval


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lambda0", type=float, default=2.0, help="bound on the leading derivative, > 1")
    parser.add_argument("--lambdas", type=float, nargs="*", default=[1.0], help="bounds for the conjugate-power components")
    parser.add_argument("-r", "--radius", type=float, default=0.5, help="disk radius to collide inside, rho < r <= 1")
    args = parser.parse_args(argv)

    profile = DerivAll(args.lambda0, tuple(args.lambdas))
    res = deriv_radii(profile)
    x1, x2 = collision_pair(profile, args.radius)
    spec = ExtremalSpec("deriv", profile=profile)
    v1, v2 = extremal_eval(spec, complex(x1)), extremal_eval(spec, complex(x2))

    print(f"profile: lambda0 = {profile.lambda0:g}, lambdas = {profile.lambdas}")
    print(f"rho = {res.rho:.15g}   sigma = {res.sigma:.15g}")
    print(f"collision points: x1 = {x1:.15g} (> rho), x2 = {x2:.15g} (< rho)")
    print(f"|F(x1) - F(x2)|          = {abs(v1 - v2):.3e}")
    print(f"|exp F(x1) - exp F(x2)|  = {abs(cmath.exp(v1) - cmath.exp(v2)):.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
