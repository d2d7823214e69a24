"""Smoke test for the partition_lab extension module.

Build and install first:

    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/partition_lab-*.whl
    python python/smoke_test.py
"""

import partition_lab as pl


def main():
    lam = pl.ColoredPartition("8b,1b")
    assert str(lam) == "8b,1b"
    assert lam.weight == 9 and len(lam) == 2
    assert lam.stats()["n_even_parts"] == 1
    assert lam == pl.ColoredPartition.from_parts([(1, "b"), (8, "b")])

    assert str(pl.phi(lam)) == "4b,4b,1b"
    assert str(pl.phi(pl.phi(lam))) == "8b,1b"
    assert str(pl.theta(pl.ColoredPartition("5b,4b,3b,2g,2b"))) == "5b,4g,3b,2b,2g"

    gamma = pl.ColoredPartition("6g,6b,5b,4g,4b,3b,2g,2b,1b")
    merged = pl.pair_merge(gamma)
    assert str(merged) == "12b,8b,5b,4b,3b,1b"
    moved, fixed = pl.modular4_transform(merged)
    assert fixed is None
    assert pl.modular_diagram(moved) == ([8, 4], [9, 5], [7])
    assert pl.pair_split(moved) == pl.ColoredPartition("9b,7b,5b,4g,4b,2g,2b")

    gf_f = pl.family_gf("F", 30)
    assert [pl.count("F", n) for n in range(12)] == gf_f[:12]
    assert pl.count("F", 10) == 232
    assert pl.is_triangular(10) == 4 and pl.is_triangular(11) is None

    report = pl.check_identity("T11a", 20, "enum")
    assert report["all_pass"], report
    assert isinstance(report["per_n"][5]["lhs"], str)

    suite = pl.full_suite(12, 60)
    assert suite["schema_version"] == 1
    assert suite["identities_pass"]
    print(
        f"ok: {len(suite['identities'])} identity reports, "
        f"{len(suite['maps'])} map reports, maps_pass={suite['maps_pass']}"
    )


if __name__ == "__main__":
    main()
