import json
import os
from pathlib import Path

import pytest

import nilsol
from nilsol import Algebra, Scalar

DATA = Path(os.environ.get("NILSOL_TEST_DATA", Path(__file__).parents[1] / "data"))


def test_scalar_arithmetic():
    r2 = Scalar.sqrt(2)
    assert r2 * r2 == 2
    assert str(Scalar("1/2") + r2) == "1/2 + sqrt(2)"
    assert (Scalar(1) - r2).sign() == -1
    assert float(Scalar("3/4")) == pytest.approx(0.75)


def test_heisenberg_chain():
    h = Algebra.parse((DATA / "heis3.alg").read_text())
    assert h.dim == 3
    assert [str(x) for x in h.pre_einstein()] == ["2/3", "2/3", "4/3"]
    ric = h.ricci()
    assert [str(ric[i][i]) for i in range(3)] == ["-1/2", "-1/2", "1/2"]
    c, phi = h.nilsoliton()
    assert c == Scalar("-3/2")
    assert [str(phi[i][i]) for i in range(3)] == ["1", "1", "2"]
    v = h.certify()
    assert v["outcome"] == "CERTIFIED_STANDARD"
    assert v["rule"] == "R1_pre_einstein"
    assert v["reverified"] is True


def test_catalog_and_split_only():
    assert "g550" in nilsol.catalog_names()
    g = Algebra.from_catalog("g550")
    assert g.certify()["outcome"] == "SPLIT_STANDARD_ONLY"
    assert Algebra.from_catalog("g220").nilsoliton() is None
    text = Algebra.from_catalog("quat34").text()
    assert Algebra.parse(text).text() == text


def test_errors():
    with pytest.raises(nilsol.InvalidAlgebra, match=r"\(e1, e2, e3\)"):
        Algebra.parse((DATA / "jacobi_bad.alg").read_text())
    with pytest.raises(nilsol.ParseError):
        Algebra.parse("algebra a\ndim x\n")


def test_cli_in_process():
    code, out, _ = nilsol.run(["pre-einstein", "rigid35", "--json"])
    assert code == 0
    assert json.loads(out)["command"] == "pre-einstein"
    assert nilsol.run(["nope"])[0] == 64
