"""Smoke test for the coring_lab extension module.

Build and run from the repository root:

    cargo build --release -p coring-lab-py
    cp target/release/libcoring_lab.so python/coring_lab.so
    python3 python/smoke_test.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import coring_lab  # noqa: E402


def main():
    a = coring_lab.Algebra.quadratic_field(2)
    assert a.dim == 2 and a.is_unital
    assert a.multiply(["0", "1"], ["0", "1"]) == ["2", "0"]
    assert all(passed for _, passed, _ in a.check())

    names = coring_lab.catalog_names()
    assert {"triv", "sw", "grp", "mat", "nonflat", "nonunital"} <= set(names)

    sw = coring_lab.Fixture.catalog("sw")
    assert sw.coring_dim("C") == 4
    doc = sw.galois("Sigma", "C")
    assert doc["summary"] == ["GALOIS: yes (can is 4×4 invertible)"], doc["summary"]

    grp = coring_lab.Fixture.catalog("grp")
    assert grp.galois("Sigma")["summary"] == ["GALOIS: no (rank 1 of 2)"]

    sigma, comodules, bmodules, morphisms = coring_lab.catalog_config("mat")
    mat = coring_lab.Fixture.from_json(coring_lab.catalog_json("mat"))
    report = mat.report(sigma, comodules, bmodules, morphisms)
    assert report["diagnostics"]["equivalence"] is True
    assert report["consistency"]["consistent"] is True

    broken = coring_lab.Fixture.from_json(coring_lab.catalog_json("grp-broken-counit"), strict=False)
    assert len(broken.warnings) == 1
    try:
        coring_lab.Fixture.from_json(coring_lab.catalog_json("grp-broken-counit"))
    except ValueError as e:
        assert "counit" in str(e)
    else:
        raise AssertionError("strict load accepted a broken counit")

    print(f"coring_lab {coring_lab.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
