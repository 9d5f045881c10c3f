import _mrsk as mrsk


def test_parse_and_format():
    assert mrsk.parse("[1,3]+[2,2]") == "[2,2]+[1,3]"
    assert mrsk.parse("[1,2]+d(1)") == "d(1)+[1,2]"
    assert mrsk.contragredient("[1,3]+[2,2]") == "[-2,-2]+[-3,-1]"


def test_mw():
    dagger, circ = mrsk.mw_step("[1,3]+[2,2]")
    assert dagger == "[2,3]+[2,2]"
    assert circ == (1, 1)
    assert mrsk.mw_involution("[1,3]+[2,2]") == "[3,3]+[2,2]+[2,2]+[1,1]"
    assert mrsk.mw_involution(mrsk.mw_involution("[1,4]+[2,2]+[3,3]")) == mrsk.parse(
        "[1,4]+[2,2]+[3,3]"
    )


def test_rsk_and_socle():
    tuple_ = mrsk.rsk("[1,3]+[2,2]")
    assert tuple_ == [[(2, 3)], [(1, 2)]]
    assert mrsk.rsk_inverse(tuple_) == "[2,2]+[1,3]"
    assert not mrsk.in_image([[(3, 3), (1, 2)], [(2, 3)], [(1, 2)]])
    assert mrsk.width("[1,3]+[2,2]") == 2
    p, q = mrsk.tableau_pair("[1,3]+[2,2]")
    assert p == [[2], [1]]
    assert q == [[3], [2]]
    assert mrsk.socle("[1,2]", [(2, 3)]) == "[2,2]+[1,3]"
    assert mrsk.socle_chain("[1,3]+[2,2]") == "[2,2]+[1,3]"


def test_ring():
    assert mrsk.ladder_class([(2, 3), (1, 2)]) == "z[2,3]*z[1,2] - z[2,2]*z[1,3]"
    assert mrsk.drs_check([1, 2], [2, 3], 4)


def test_words():
    u = [[1], [1, 2], [1, 2, 2], [2, 3, 3], [3, 4], [5, 6]]
    p, q = mrsk.crsk(u)
    assert p == [[1, 1, 1, 2], [2, 2, 2], [3, 3, 3], [4, 6], [5]]
    assert q == [[1, 2, 3, 3], [2, 3, 4], [4, 4, 5], [5, 6], [6]]
    data = mrsk.keys(p)
    assert data["right_weight"] == [3, 4, 3, 1, 0, 2]
    assert mrsk.is_flagged(u)
    assert mrsk.key_condition(u)
    assert not mrsk.is_flagged([[2]])
    assert mrsk.bruhat_leq([3, 4, 3, 1, 0, 2], [3, 4, 0, 3, 1, 2])


def test_suite():
    report = mrsk.run_suite("mw-involution", lo=1, hi=3, max_segments=3)
    assert report["failures"] == 0
    assert report["instances"] > 0
