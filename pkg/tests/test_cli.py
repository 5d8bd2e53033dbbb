"""CLI contract: JSON documents, exit codes, session persistence."""

import json

from henselian.cli import dispatch
from henselian.rings import parse_ring


def _run(capsys, argv):
    code = dispatch(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


def test_hensel_root_example(capsys):
    code, doc = _run(
        capsys, ["hensel", "root", "--ring", "PadicTrunc:7:3", "--poly", "[-7,1,1]"]
    )
    assert code == 0
    assert doc["result"]["root"] == 301
    assert doc["route"] == "newton-monic"
    assert doc["checks"]  # lifting commands always self-verify


def test_ring_split_examples(capsys):
    code, doc = _run(
        capsys, ["ring", "split", "--ring", "Zloc:5", "--elem", "[10,1]"]
    )
    assert code == 0
    assert doc["result"]["branch"] == "radical"
    code, doc = _run(
        capsys, ["ring", "split", "--ring", "Zloc:5", "--elem", "[3,2]"]
    )
    assert code == 0
    assert doc["result"]["branch"] == "unit"
    ring = parse_ring("Zloc:5")
    inv = ring.from_json(doc["result"]["inverse"])
    assert ring.element(3) * inv == ring.element(2)


def test_uda_build_example(capsys):
    code, doc = _run(capsys, ["uda", "build", "--ring", "Q", "--poly", "[-1,0,0,1]"])
    assert code == 0
    assert doc["result"]["rank"] == 6
    assert len(doc["result"]["basis"]) == 6


def test_uda_galois(capsys):
    code, doc = _run(
        capsys,
        [
            "uda",
            "galois",
            "--ring",
            "Q",
            "--poly",
            "[2,-3,1]",
            "--idem",
            "[-1,1]",
        ],
    )
    assert code == 0
    assert doc["result"]["subset"] == [0]
    assert len(doc["result"]["orbit"]) == 2
    assert doc["checks"]


def test_lift_fact_routes_agree(capsys):
    args = [
        "hensel",
        "lift-fact",
        "--ring",
        "PadicTrunc:7:3",
        "--poly",
        "[-2,0,1]",
        "--g0",
        "[-3,1]",
        "--h0",
        "[-4,1]",
    ]
    code, doc = _run(capsys, args)
    assert code == 0
    assert doc["result"]["g"] == [235, 1] and doc["result"]["h"] == [108, 1]
    assert doc["checks"]
    code2, doc2 = _run(capsys, args + ["--route", "quadratic"])
    assert code2 == 0 and doc2["result"] == doc["result"]


def test_lift_fact_nonmonic(capsys):
    code, doc = _run(
        capsys,
        [
            "hensel",
            "lift-fact",
            "--ring",
            "PadicTrunc:7:3",
            "--poly",
            "[-1,1,7]",
            "--g0",
            "[-1,1]",
            "--h0",
            "[1]",
        ],
    )
    assert code == 0
    assert doc["result"]["g"] == [251, 1]
    assert doc["result"]["h"] == [302, 7]
    assert doc["route"] == "nonmonic"


def test_algebra_decompose(capsys):
    code, doc = _run(
        capsys, ["algebra", "decompose", "--algebra", "Zmod:343 / [-2,0,1]"]
    )
    assert code == 0
    ranks = sorted(f["rank"] for f in doc["result"]["factors"])
    assert ranks == [1, 1]


def test_precondition_error_exit_2(capsys):
    code = dispatch(
        ["hensel", "root", "--ring", "PadicTrunc:7:3", "--poly", "[1,3,1]"]
    )
    out = capsys.readouterr().out.strip()
    doc = json.loads(out)
    assert code == 2
    assert doc["error"] == "PreconditionViolated"


def test_usage_error_exit_64(capsys):
    try:
        dispatch(["hensel", "root"])  # missing --poly
    except SystemExit as exc:
        assert exc.code == 64
    else:
        raise AssertionError("usage error did not exit")
    capsys.readouterr()


def test_tower_session_flow(tmp_path, capsys):
    session = str(tmp_path / "tower.json")
    code, doc = _run(capsys, ["tower", "new", "--ring", "Zloc:5", "--session", session])
    assert code == 0 and doc["result"]["steps"] == 0

    code, doc = _run(
        capsys, ["tower", "adjoin-root", "--session", session, "--poly", "[-5,1,1]"]
    )
    assert code == 0 and doc["result"]["steps"] == 1 and doc["result"]["rank"] == 2
    root = doc["result"]["root"]

    code, doc = _run(
        capsys,
        [
            "tower",
            "eval",
            "--session",
            session,
            "--target",
            "PadicTrunc:5:3",
            "--elem",
            json.dumps(root),
        ],
    )
    assert code == 0 and doc["result"]["value"] == 105

    code, doc = _run(
        capsys,
        ["tower", "eq", "--session", session, json.dumps(root), "0"],
    )
    assert code == 0 and doc["result"]["equal"] is False

    code, doc = _run(
        capsys, ["tower", "adjoin-ext", "--session", session, "--poly", "[-2,0,1]"]
    )
    assert code == 0
    assert doc["result"]["residue_field_size"] == 25


def test_tower_new_requires_session(capsys):
    code = dispatch(["tower", "new", "--ring", "Zloc:5"])
    capsys.readouterr()
    assert code == 64


def test_output_round_trip(capsys):
    # ring elements in outputs re-parse into equal canonical values
    code, doc = _run(
        capsys,
        [
            "hensel",
            "lift-fact",
            "--ring",
            "PadicTrunc:7:3",
            "--poly",
            "[-2,0,1]",
            "--g0",
            "[-3,1]",
            "--h0",
            "[-4,1]",
        ],
    )
    assert code == 0
    ring = parse_ring("PadicTrunc:7:3")
    g = [ring.from_json(c) for c in doc["result"]["g"]]
    h = [ring.from_json(c) for c in doc["result"]["h"]]
    from henselian.poly import Poly

    assert Poly(ring, g) * Poly(ring, h) == Poly(ring, [-2, 0, 1])
