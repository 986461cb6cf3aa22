from capg.position import EXTERNAL, AttackPosition


def test_external():
    assert EXTERNAL.is_external
    assert EXTERNAL.label == "attacker@internet"
    assert EXTERNAL == AttackPosition()
    assert EXTERNAL.to_dict() == {"machine": None, "user": None}


def test_name_is_display_only():
    svc = AttackPosition("m1", "u-bitbkt-svc", "u-bitbkt")
    assert svc == AttackPosition("m1", "u-bitbkt-svc")
    assert hash(svc) == hash(AttackPosition("m1", "u-bitbkt-svc"))
    assert svc.label == "u-bitbkt@m1"
    assert str(AttackPosition("m0", "root")) == "root@m0"


def test_dict_form():
    svc = AttackPosition("m1", "u-bitbkt-svc", "u-bitbkt")
    data = svc.to_dict()
    assert data == {
        "machine": "m1",
        "user": "u-bitbkt-svc",
        "name": "u-bitbkt",
    }
    assert AttackPosition.from_dict(data).label == "u-bitbkt@m1"
    assert AttackPosition.from_dict(EXTERNAL.to_dict()) == EXTERNAL


def test_external_sorts_first():
    positions = [
        AttackPosition("m0", "root"),
        EXTERNAL,
        AttackPosition("a", "z"),
    ]
    ordered = sorted(positions, key=lambda p: p.sort_key)
    assert ordered[0] == EXTERNAL
    assert ordered[1].machine == "a"
