import mglab


def test_version():
    assert mglab.__version__ == "0.1.0"


def test_ball_counts():
    b = mglab.ball("free:2", 2)
    assert b["vertex_count"] == 17
    assert mglab.ball("zmod:3", 5)["vertex_count"] == 3


def test_distance_z_vs_z7():
    d = mglab.distance("z", "zmod:7", cap=10)
    assert d["valuation"] == 6
    assert d["distance_lower"] == 0.015625
    assert d["exact"] is True


def test_trivial_words_z5():
    words = mglab.trivial_words("zmod:5", 5)
    assert words == ["e", "aaaaa", "a'a'a'a'a'"]


def test_word_norm():
    assert mglab.word_norm("zmod:5", "a^3", cap=10) == 2
    assert mglab.word_norm("free:2", "abab", cap=10) == 4


def test_convergence():
    rep = mglab.converge("z", 3, 4, rmax=4)
    stages = {row["R"]: row["stage"] for row in rep["rows"]}
    assert stages[4] == 2
    assert rep["monotone"] is True


def test_transfer_certificate():
    cert = mglab.transfer("t", modulus=3, length=4)["certificate"]
    assert cert["m"] == 1
    assert cert["stage"] == 2
    assert cert["verdict"] == "Confirmed"


def test_direct_finiteness():
    rep = mglab.direct_finiteness("z2", "s3")
    assert rep["element_count"] == 64
    assert rep["violations"] == []
    skew = mglab.direct_finiteness_crossed("frobenius")
    assert skew["element_count"] == 16
    assert skew["violations"] == []


def test_crossed_validation():
    assert mglab.crossed_validate("frobenius")["class"] == "Skew"
    assert mglab.crossed_validate("twisted-sign")["class"] == "Twisted"
    assert mglab.crossed_validate("defect-normalization")["valid"] is False


def test_decompose_preserves_products():
    rep = mglab.crossed_decompose("z2s3-c3")
    assert rep["pairs_preserved"] == rep["pairs_checked"] == 4096
    assert rep["quotient_class"] == "Skew"


def test_orders():
    row = mglab.verify_order_step(3, 3, 5)
    assert row["o_a"] == row["o_x"] == 5
    assert row["subgroup_equal"] is True
    sweep = mglab.slnp_orders(3, 3, 20)
    assert sweep["all_orders_equal"] and sweep["all_subgroups_equal"]
    assert sweep["x_pow_p_equals_a"] is True


def test_vanishing():
    rep = mglab.slnp_vanish(3, 3, q_max=15, samples=5, seed=1)
    assert rep["counterexamples"] == 0


def test_sanov_words():
    assert mglab.sanov_word([[5, 2], [2, 1]]) == "ab"
    assert mglab.sanov_word([[1, 0], [0, 1]]) == "e"
    assert mglab.sanov_word([[1, 1], [0, 1]]) is None


def test_presentations():
    free2 = (["a", "b"], [])
    am = mglab.amalgam(*free2, r=2)
    assert len(am["generators"]) == 4 and len(am["relators"]) == 2
    assert am["deficiency"] == 2
    hn = mglab.hnn(*free2, r=3)
    assert hn["deficiency"] == 2 + 1 - 3
    assert mglab.deficiency(["a", "b"], ["aba'b'"]) == 1
