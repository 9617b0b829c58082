"""Build the extension module, import it and exercise each binding.

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build() -> Path:
    subprocess.run(
        ["cargo", "build", "--release", "-p", "grrforge-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libgrrforge_py.so"
    out = Path(tempfile.mkdtemp()) / "grrforge.so"
    shutil.copy(lib, out)
    return out.parent


def main() -> None:
    sys.path.insert(0, str(build()))
    import grrforge as g

    assert g.ppd(2, 6) == []
    assert g.ppd(3, 4) == [5]
    assert g.factorize(360) == [(2, 3), (3, 2), (5, 1)]

    spec = g.GroupSpec("psl", 3, 3)
    assert str(spec) == "PSL_3(3)", str(spec)
    assert spec.order() == 5616
    assert spec.ppd_primes() == [13]
    assert spec.normalizer_order() == 39
    assert g.GroupSpec("psl", 2, 7).involution_lower_bound() == Fraction(49, 8)
    assert spec == g.GroupSpec("PSL", 3, 3)

    x = g.sample_ppd_element(spec, seed=3)
    assert x["order"] == 13
    y = g.sample_involution(spec, seed=3, mode="uniform")
    assert y["order"] == 2
    assert g.sample_ppd_element(spec, seed=3) == x

    v = g.grr_check(g.GroupSpec("psl", 2, 7), x_order=7, seed=2)
    assert v["is_grr"] is False and v["stabilizer_order"] > 1

    e = g.estimate(g.GroupSpec("psl", 2, 4), trials=400, seed=5)
    lo, hi = e["ci95"]
    assert e["trials"] == 400 and lo <= e["estimate"] <= hi

    try:
        g.GroupSpec("psl", 2, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("PSL_2(2) accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
