import json

import pytest

from combhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("product", "M[EQSym]:1", "M[EQSym]:2,2"), "M:1,3,3 + M:2,2,3 + M:3,2,3"),
        (("product", "M[EQSym]:1", "1"), "M:1"),
        (("product", "phi[PhiSym]:12", "phi[PhiSym]:21"),
         "phi:1,2,4,3 + phi:1,3,4,2 + phi:1,4,2,3 + phi:3,2,4,1 + phi:4,2,1,3"),
        (("coproduct", "M[EQSym]:4,2,3,2,2,7,7"),
         "1 (x) M:4,2,3,2,2,7,7 + M:4,2,3,2,2 (x) M:2,2 + M:4,2,3,2,2,7,7 (x) 1"),
        (("coproduct", "--q", "q", "F[FQSym]:2,4,3,1"),
         "1 (x) F:2,4,3,1 + q*F:1 (x) F:3,2,1 + q^3*F:1,2 (x) F:2,1 + q^3*F:1,3,2 (x) F:1 + F:2,4,3,1 (x) 1"),
        (("coproduct", "M[EQSym]:"), "1 (x) 1"),
        (("convert", "phi[PhiSym]:21", "--to", "Sprime"), "Sprime:2,1"),
        (("convert", "Ssec[PhiSym]:2431", "--to", "phi"),
         "phi:2,3,4,1 + phi:2,4,1,3 + phi:2,4,3,1 + phi:3,4,2,1"),
        (("normal-form", "3,1,2"), "1,3,2 q^1"),
        (("dims", "CCQSym", "4"), "CCQSym dims: 1,2,5,14"),
        (("dims", "L(ESym)", "6"), "L(ESym) dims: 1,3,23,223,2800,42576"),
    ],
)
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_dims_esym(capsys):
    code, out, _ = run(capsys, "dims", "ESym", "5")
    assert code == 0
    assert out.splitlines()[0] == "ESym dims: 1,4,27,256,3125"


def test_specialized_q(capsys):
    code, out, _ = run(capsys, "coproduct", "--q", "1", "F[FQSym]:2,1")
    assert code == 0
    assert out == "1 (x) F:2,1 + F:1 (x) F:1 + F:2,1 (x) 1"


def test_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "product", "M[EQSym]:1", "M[EQSym]:1")
    assert code == 0
    assert json.loads(out) == {"algebra": "EQSym", "basis": "M", "terms": [{"coeff": "2", "key": "1,2"}]}
    code, out, _ = run(capsys, "normal-form", "--format", "json", "3,1,2")
    assert json.loads(out)["exponent"] == 1


@pytest.mark.parametrize("suite, degree", [("dims", "5"), ("hopf-axioms", "3")])
def test_verify(capsys, suite, degree):
    code, out, _ = run(capsys, "verify", suite, "--degree", degree)
    assert code == 0
    assert out.endswith("all checks passed")


@pytest.mark.parametrize(
    "argv, code",
    [
        (("product", "M[EQSym]:1", "phi[PhiSym]:1"), 2),
        (("product", "M[EQSym]:1,x", "1"), 3),
        (("product", "M[Nope]:1", "1"), 3),
        (("dims", "EQSym", "9"), 4),
        (("dims", "EQSym", "0"), 2),
        (("verify", "nonsense"), 2),
        (("convert", "M[EQSym]:1", "--to", "phi"), 2),
        (("frobnicate",), 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code
