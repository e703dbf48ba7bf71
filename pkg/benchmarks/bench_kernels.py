"""Time the numba and numpy versions of every kernel on realistic inputs.

    python3 benchmarks/bench_kernels.py [--repeat 200]

Both versions are called directly, so the DAMARL_DISABLE_NUMBA flag has no
effect here. Each kernel is warmed up once (JIT compile) before timing and
the outputs of the two versions are compared.
"""

import argparse
import timeit

import numpy as np

from damarl import kernels
from damarl.game import DelaySpec, random_game, random_policies


def particle_inputs(rng, n=6):
    pos = rng.uniform(-1, 1, (n, 2))
    vel = rng.normal(0, 0.1, (n, 2))
    force = rng.normal(0, 1, (n, 2))
    radius = np.full(n, 0.15)
    flags = np.ones(n, dtype=np.bool_)
    return pos, vel, force, radius, flags


def damrp_inputs(rng):
    g = random_game(rng, 4, (3, 3), (2, 2))
    steps = (2, 1)
    pols = random_policies(rng, g, DelaySpec.zeros(steps))
    rows = [no * a**k for no, a, k in zip(g.n_obs, g.n_actions, steps)]
    pol = np.zeros((2, max(rows), 3))
    rew = np.zeros((2, g.n_states, 3))
    for i in range(2):
        pol[i, : rows[i]] = pols[i]
        rew[i] = g.rewards[i]
    return (g.joint_transition(), rew, np.stack(g.obs_map), pol, np.array(g.n_actions, dtype=np.int64),
            np.array(steps, dtype=np.int64))


def cases(rng):
    pos, vel, force, radius, flags = particle_inputs(rng)
    mass = np.ones(len(pos))
    speed = np.full(len(pos), np.inf)
    s = rng.uniform(-50, 40, 4)
    ang = np.deg2rad([0.0, 90.0, 180.0, 270.0])
    p = rng.normal(size=(128, 128))
    g = rng.normal(size=(128, 128))
    return {
        "contact_forces": lambda impl: impl(pos, radius, flags, flags, 100.0, 1e-3),
        "integrate_particles": lambda impl: impl(pos.copy(), vel.copy(), force, mass, flags, speed, 0.25, 0.1, 1.0),
        "collision_matrix": lambda impl: impl(pos, radius, flags),
        "route_positions": lambda impl: impl(s, np.cos(ang), np.sin(ang), 10.0, 2.0),
        "damrp_kernel": (lambda args: lambda impl: impl(*args))(damrp_inputs(rng)),
        "adam_update": lambda impl: impl(p.copy(), g, np.zeros_like(p), np.zeros_like(p), 0.01, 0.9, 0.999, 1e-8, 1.0),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if a is None:
        return b is None
    return np.allclose(a, b, atol=1e-10)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':22s} {'numba us':>10s} {'numpy us':>10s} {'speedup':>8s}  match")
    for name, call in cases(rng).items():
        fast = getattr(kernels, f"{name}_numba")
        slow = getattr(kernels, f"{name}_numpy")
        match = same(call(fast), call(slow))
        t_fast = min(timeit.repeat(lambda: call(fast), number=args.repeat, repeat=3)) / args.repeat * 1e6
        t_slow = min(timeit.repeat(lambda: call(slow), number=args.repeat, repeat=3)) / args.repeat * 1e6
        print(f"{name:22s} {t_fast:10.1f} {t_slow:10.1f} {t_slow / t_fast:8.2f}  {match}")


if __name__ == "__main__":
    main()
