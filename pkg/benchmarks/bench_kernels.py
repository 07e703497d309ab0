"""Time the numba kernels against their numpy twins on realistic shapes.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends are called explicitly, so the SKYTRACK_NO_JIT flag does not
matter here (with the flag set only the numpy column is printed).
"""
import argparse
import timeit

import numpy as np

from skytrack import kernels
from skytrack._accel import USE_NUMBA
from skytrack.geometry import generate_scene
from skytrack.nn import optim
from skytrack.observer import CameraModel, CameraPose, pixel_rays


def cases():
    scene = generate_scene(0, "Town")
    rays = pixel_rays(CameraPose((0.0, 0.0, 5.0), 0.3, 0.0), CameraModel(96, 54))
    origin = np.array([[0.0, 0.0, 5.0]])
    r = np.random.default_rng(0)
    img, tpl = r.random((54, 96)), r.random((16, 24))
    p, g = r.normal(size=200_000), r.normal(size=200_000)
    m, v = np.zeros_like(p), np.zeros_like(p)

    def cast(backend):
        return lambda: kernels.cast_rays(origin, rays, 1000.0, scene.box_min, scene.box_max,
                                         scene.box_ids, backend=backend)

    def ncc(backend):
        return lambda: kernels.ncc_map(img, tpl, backend=backend)

    def adam(backend):
        fn = optim._adamw_loop if backend == "numba" else optim._adamw_numpy
        return lambda: fn(p, g, m, v, 0.9999, 0.9, 0.999, 1e-4, 0.5, 1e-8)

    return {"cast_rays 96x54, 120 boxes": cast, "ncc_map 54x96 / 16x24": ncc,
            "adamw 200k params": adam}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if USE_NUMBA else [])
    print(f"{'kernel':30s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if USE_NUMBA else ""))
    for name, make in cases().items():
        times = []
        for b in backends:
            fn = make(b)
            fn()                                    # compile / warm caches
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3)
        row = f"{name:30s}" + "".join(f"{t:10.3f}ms" for t in times)
        if USE_NUMBA:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
