#!/usr/bin/env python3
"""Smoke test for the starlike_radii_py extension module.

Build the module first:

    cargo build -p starlike-radii-py --release

then run this script from the repository root:

    python3 python/smoke_test.py
"""

import json
import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO_ROOT / "target" / "release" / "libstarlike_radii_py.so",
        REPO_ROOT / "target" / "debug" / "libstarlike_radii_py.so",
        REPO_ROOT / "target" / "release" / "libstarlike_radii_py.dylib",
        REPO_ROOT / "target" / "debug" / "libstarlike_radii_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "extension not found; run `cargo build -p starlike-radii-py --release` first"
        )
    staging = Path(tempfile.mkdtemp(prefix="starlike_radii_py_"))
    shutil.copy2(built, staging / "starlike_radii_py.so")
    sys.path.insert(0, str(staging))
    import starlike_radii_py

    return starlike_radii_py


def approx(a, b, tol=1e-12):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    sr = load_module()

    # Bounds and their inverse.
    approx(sr.member_bound("t1", 0.4), 1.0, 1e-14)
    approx(sr.member_bound("t2", 1.0 / 3.0), 1.0, 1e-14)
    approx(sr.invert_member_bound("t1", 2.0 / 3.0), 4.0 / 13.0, 1e-14)
    r = 0.73
    approx(sr.invert_member_bound("t2", sr.member_bound("t2", r)), r, 1e-12)
    lo, hi = sr.growth_range("t2", 1.0 / 3.0)
    approx(lo, math.exp(-1.0) / 3.0, 1e-14)
    approx(hi, math.e / 3.0, 1e-14)

    # Schwarz maps and class members.
    m = sr.SchwarzMap(0.0, [0.5 + 0.0j])
    approx(abs(m.eval(0.2 + 0.0j) - (1.0 / 15.0)), 0.0, 1e-14)
    approx(abs(m.deriv(0.0j) - 0.5), 0.0, 1e-14)
    f2 = sr.ClassMember.extremal("t2")
    z = 0.1 + 0.2j
    expected = z * complex(math.e) ** (3 * z)
    assert abs(f2.eval(z) - expected) < 1e-12
    approx(abs(f2.log_derivative(0.0j) - 1.0), 0.0)
    f1 = sr.ClassMember("t1", sr.SchwarzMap.identity(), m, sr.SchwarzMap())
    assert abs(f1.eval(0.0j)) == 0.0

    # Regions.
    cardioid = sr.Region("cardioid")
    assert cardioid.contains(1.0 + 0.0j)
    assert not cardioid.contains(1.0 / 3.0 + 0.0j)
    approx(cardioid.inradius_about_one(), 2.0 / 3.0, 1e-8)
    approx(abs(cardioid.boundary_point(math.pi) - 1.0 / 3.0), 0.0, 1e-12)
    half = sr.Region("halfplane", alpha=0.5)
    assert half.disc_in_region(1.0 + 0.0j, 0.49)
    assert not half.disc_in_region(1.0 + 0.0j, 0.51)
    assert sr.disc_in_disc(1.0 + 0.0j, 0.3, 1.0 + 0.0j, 0.5)

    # Radii.
    approx(sr.closed_form_radius("t1", cardioid), 4.0 / 13.0, 1e-14)
    approx(sr.numeric_radius("t1", cardioid), 4.0 / 13.0, 1e-8)
    approx(sr.closed_form_radius("t2", sr.Region("lune")), (2.0 - math.sqrt(2.0)) / 3.0, 1e-14)
    radius, exactness = sr.janowski_radius("t1", 0.5, -0.5)
    approx(radius, 4.0 / 13.0, 1e-14)
    assert exactness == "exact"
    approx(sr.univalence_witness("t1"), -0.4, 1e-12)
    approx(sr.univalence_witness("t2"), -1.0 / 3.0, 1e-12)

    report = sr.radius_report("t1", sr.Region("exp"))
    approx(report["closed_form"], 0.296475, 1e-6)
    assert report["exactness"] == "exact"
    assert report["boundary_residual"] <= 1e-9
    witnesses = sr.sharpness_witnesses("t2", sr.Region("sine"))
    assert len(witnesses) == 2
    assert all(w["boundary_residual"] <= 1e-9 for w in witnesses)

    # Table and a quick verification run.
    rows = json.loads(sr.table("json"))
    assert len(rows) == 20
    assert all(row["radius_residual"] <= 1e-8 for row in rows)
    verdict = json.loads(sr.verify_json(suite="radii", samples=1))
    assert verdict["overall"] is True

    print("smoke test passed")


if __name__ == "__main__":
    main()
