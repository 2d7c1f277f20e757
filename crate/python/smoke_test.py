#!/usr/bin/env python3
"""Smoke test for the fpclass_py extension module.

Build the module first, then run this script from the repository root:

    cargo build -p fpclass-py
    python3 python/smoke_test.py

The script locates the built cdylib under target/, stages it under an
importable name, and exercises the bound API end to end.
"""

import importlib
import pathlib
import shutil
import sys
import sysconfig
import tempfile
from fractions import Fraction

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent


def stage_module() -> pathlib.Path:
    candidates = [
        REPO_ROOT / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libfpclass_py.so", "fpclass_py.so", "libfpclass_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not found; run `cargo build -p fpclass-py` first")
    staging = pathlib.Path(tempfile.mkdtemp(prefix="fpclass_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, staging / f"fpclass_py{suffix}")
    # A plain .so name also works for CPython on Linux.
    shutil.copy2(built, staging / "fpclass_py.so")
    return staging


def main() -> None:
    sys.path.insert(0, str(stage_module()))
    fp = importlib.import_module("fpclass_py")

    # Family constructors and the invariant report.
    spec = fp.FiberedMapSpec.theorem2(3)
    assert spec.genus == 2 and spec.fiber_rank == 2
    assert spec.fiber_matrix() == [[4, 3], [1, 1]]
    report = spec.analyze()
    assert report["fiber_lefschetz"] == -3
    assert report["fiber_nielsen"] == 3
    assert report["total_lefschetz"] == 6
    assert report["class_count"] == 1
    assert report["class_index_abs"] == 6

    # Arbitrary-precision parameters survive the boundary.
    m = 10**30
    big = fp.FiberedMapSpec.theorem1(m)
    assert big.analyze()["total_lefschetz"] == 2 * m

    # Fixed subgroup: congruence + forced fiber coordinate.
    sub = spec.fixed_subgroup()
    assert sub["lattice_index"] == 3
    assert sub["conditions"] == [([1, 0, 0, 0], 3)]
    assert sub["fiber_numerator"] == [[0, -3, 0, 0], [-1, 3, 0, 0]]
    assert sub["fiber_denominator"] == 3

    # Torus fixed-point oracle agrees with the Nielsen number.
    degenerate, points = fp.torus_fixed_points([[4, 3], [1, 1]])
    assert not degenerate and len(points) == 3
    for point in points:
        x = [Fraction(n, d) for n, d in point]
        image = [4 * x[0] + 3 * x[1], x[0] + x[1]]
        assert all((ix - xx).denominator == 1 for ix, xx in zip(image, x))

    # Explicit matrices and the spec-file parser give the same map.
    explicit = fp.FiberedMapSpec(2, [[1, 0, 0, 0], [0, 1, 0, 0]], [[4, 3], [1, 1]], "by hand")
    parsed = fp.FiberedMapSpec.parse(
        "genus = 2\nfiber_rank = 2\nretraction = 1 0 0 0 0 1 0 0\nfiber_matrix = 4 3 1 1\n"
    )
    assert explicit.analyze() == report and parsed.analyze() == report

    # Degenerate maps are refused, not reported as zero.
    identity_fiber = fp.FiberedMapSpec(2, [[0, 0, 0, 0]], [[1]], "identity fiber")
    assert identity_fiber.diagnostics()["degenerate"]
    try:
        identity_fiber.analyze()
    except ValueError as e:
        assert "nielsen-undefined-degenerate" in str(e)
    else:
        raise AssertionError("degenerate analyze must raise")

    # Merge witness between two labels, re-verified by twisted conjugation.
    witness = fp.verify_merge_witness(spec, [2, 1], [5, 4])
    assert witness is not None and witness["verified"]

    # ... and absence between genuinely distinct classes.
    split = fp.FiberedMapSpec(2, [[0, 0, 0, 0]], [[3]], "two classes")
    assert split.class_count() == 2
    assert fp.verify_merge_witness(split, [0], [1]) is None

    # Certificate table with recomputed validity.
    valid, rows = fp.bip_certificate("theorem2", 5)
    assert valid and len(rows) == 5
    assert [r["class_index_abs"] for r in rows] == [2, 4, 6, 8, 10]

    # Word parsing through the abelianization.
    assert fp.exponent_vector(2, "a1^3 b2^-1") == [3, 0, 0, -1]
    assert fp.exponent_vector(2, "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1") == [0, 0, 0, 0]

    # Smith normal form with the transformation contract.
    u, d, v = fp.smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]

    assert fp.fixed_surface_genus(7) == 8

    print("fpclass_py smoke test passed")


if __name__ == "__main__":
    main()
