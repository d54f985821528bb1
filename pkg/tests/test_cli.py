import json

import pytest

from waning.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_closure_exact_output(capsys):
    code, out, _ = run(
        capsys, "closure", "--f", '{"prefix":[5,5,5],"tail":0,"omega":0}'
    )
    assert code == 0
    assert out.strip() == '{"omega_prefix":0,"drops":[5,4,3]}'


def test_waning_check(capsys):
    code, out, _ = run(
        capsys, "waning-check", "--f", '{"prefix":[2,2],"tail":0,"omega":0}'
    )
    assert code == 0 and out.strip() == "false"
    code, out, _ = run(capsys, "waning-check", "--f", '{"const":"omega"}')
    assert code == 0 and out.strip() == "true"


def test_eval_omega_token(capsys):
    fn = '{"prefix":["omega",3],"tail":0,"omega":0}'
    assert run(capsys, "eval", "--f", fn, "--n", "0")[1].strip() == '"omega"'
    assert run(capsys, "eval", "--f", fn, "--n", "1")[1].strip() == "3"
    assert run(capsys, "eval", "--f", fn, "--n", "omega")[1].strip() == "0"


def test_compare_incomparable(capsys):
    code, out, _ = run(
        capsys,
        "compare",
        "--t1",
        '{"direct":{"const":"omega"}}',
        "--t2",
        '{"dual":{"const":"omega"}}',
    )
    assert code == 0 and out.strip() == "incomparable"


def test_join_mixed_families(capsys):
    code, out, _ = run(
        capsys,
        "join",
        "--t1",
        '{"direct":{"const":"omega"}}',
        "--t2",
        '{"dual":{"const":"omega"}}',
    )
    assert code == 0
    assert json.loads(out) == {"direct": {"omega_prefix": 0, "drops": []}}


def test_chain_below_roundtrip(capsys):
    code, out, _ = run(capsys, "chain", "--n", "2")
    assert code == 0
    code, out2, _ = run(capsys, "below", "--f", out.strip())
    assert code == 0
    assert len(json.loads(out2)) == 3


def test_member_descriptor(capsys):
    d = '{"U":{"f":{"omega_prefix":0,"drops":[]},"n":1,"X":[0]}}'
    assert run(capsys, "member", "--d", d, "--pb", "[[0,1]]")[1].strip() == "true"
    assert run(capsys, "member", "--d", d, "--pb", "[[1,0]]")[1].strip() == "false"


def test_member_wany_flags(capsys):
    code, out, _ = run(
        capsys, "member", "--n", "1", "--Ys", "[[0]]", "--pb", "[[2,3]]"
    )
    assert code == 0 and out.strip() == "true"


def test_subset_counterexample_exit(capsys, tmp_path):
    d1 = '{"U":{"f":{"omega_prefix":0,"drops":[]},"n":1,"X":[]}}'
    d2 = '{"U":{"f":{"omega_prefix":0,"drops":[]},"n":1,"X":[0]}}'
    out_file = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "subset", "--d1", d1, "--d2", d2, "--bound", "3", "--out", str(out_file)
    )
    assert code == 3
    assert "counterexample" in out
    doc = json.loads(out_file.read_text())
    assert doc["cases"] == 34 and doc["counterexamples"]


def test_subset_pass_exit(capsys):
    d1 = '{"U":{"f":{"omega_prefix":0,"drops":[]},"n":1,"X":[0]}}'
    d2 = '{"U":{"f":{"omega_prefix":0,"drops":[]},"n":1,"X":[]}}'
    code, out, _ = run(capsys, "subset", "--d1", d1, "--d2", d2, "--bound", "3")
    assert code == 0 and "pass" in out


def test_witness_order(capsys):
    code, out, _ = run(
        capsys,
        "witness",
        "--f",
        '{"omega_prefix":0,"drops":[]}',
        "--g",
        '{"omega_prefix":0,"drops":[1]}',
        "--r",
        "2",
    )
    assert code == 0
    assert json.loads(out) == {"n": 0, "b": 1, "h": [[2, 0]]}


def test_witness_cover(capsys):
    code, out, _ = run(
        capsys,
        "witness",
        "--kind",
        "cover",
        "--n",
        "0",
        "--pb",
        "[]",
        "--m",
        "[0,1,2,3,4,5,6,7,8,9]",
        "--dommiss",
    )
    assert code == 0
    assert json.loads(out) == [[0, 10]]


def test_witness_missing_flag_is_usage_error(capsys):
    code, _, err = run(capsys, "witness", "--kind", "order", "--r", "2")
    assert code == 2 and "needs" in err


def test_domain_error_exit(capsys):
    # dominating pair has no separating witness
    code, _, err = run(
        capsys,
        "witness",
        "--f",
        '{"omega_prefix":0,"drops":[1]}',
        "--g",
        '{"omega_prefix":0,"drops":[]}',
        "--r",
        "5",
    )
    assert code == 1 and "error" in err


def test_bad_json_is_usage_error(capsys):
    code, _, err = run(capsys, "closure", "--f", "{not json")
    assert code == 2 and "JSON" in err


def test_malformed_payload_is_usage_error(capsys):
    code, _, err = run(capsys, "member", "--d", '{"hit":5}', "--pb", "[]")
    assert code == 2
    code, _, err = run(capsys, "embed", "--poset", "/nonexistent/poset.json")
    assert code == 2


def test_usage_error_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_embed_and_hasse(capsys, tmp_path):
    poset = tmp_path / "poset.json"
    poset.write_text(
        '{"elements":["a","b"],"leq":[["a","a"],["b","b"],["a","b"]]}'
    )
    code, out, _ = run(capsys, "embed", "--poset", str(poset))
    assert code == 0
    mapping = json.loads(out)
    assert set(mapping) == {"a", "b"}
    f_a = json.dumps(mapping["a"], separators=(",", ":"))
    f_b = json.dumps(mapping["b"], separators=(",", ":"))
    code, out, _ = run(capsys, "hasse", "--f", f_a, "--f", f_b)
    assert code == 0
    assert out.count("->") == 1


def test_verify_census(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "census", "--jobs", "1")
    assert code == 0
    assert "census: pass" in out


def test_verify_continuity_small(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "continuity",
        "--bound",
        "4",
        "--seed",
        "1",
        "--sample",
        "5",
        "--jobs",
        "1",
    )
    assert code == 0 and "pass" in out


def test_round_trip_join_into_compare(capsys):
    code, joined, _ = run(
        capsys,
        "join",
        "--t1",
        '{"direct":{"omega_prefix":0,"drops":[5,1]}}',
        "--t2",
        '{"direct":{"omega_prefix":0,"drops":[3,2,1]}}',
    )
    assert code == 0
    code, out, _ = run(
        capsys, "compare", "--t1", joined.strip(), "--t2", joined.strip()
    )
    assert code == 0 and out.strip() == "equal"


def test_round_trip_witness_into_member(capsys):
    code, desc, _ = run(
        capsys,
        "witness",
        "--kind",
        "much-wan",
        "--f",
        '{"prefix":[5,5,5],"tail":0,"omega":0}',
        "--pb",
        "[[0,0]]",
        "--r",
        "1",
    )
    assert code == 0
    code, out, _ = run(capsys, "member", "--d", desc.strip(), "--pb", "[[0,0]]")
    assert code == 0 and out.strip() == "true"


def test_verify_writes_document(capsys, tmp_path):
    out_file = tmp_path / "doc.json"
    code, _, _ = run(
        capsys,
        "verify",
        "--suite",
        "remark",
        "--bound",
        "4",
        "--jobs",
        "1",
        "--out",
        str(out_file),
    )
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["suite"] == "remark" and doc["counterexamples"] == []
